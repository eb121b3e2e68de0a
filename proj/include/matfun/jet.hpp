#pragma once

#include <vector>

#include "matfun/complex_ops.hpp"

namespace matfun {

// Truncated Taylor expansion of a function at a point: coeffs[p] = f^(p)(center)/p!.
// Propagating these through arithmetic gives derivative values of composed
// functions without symbolic differentiation.
struct Jet {
    Complex center{};
    std::vector<Complex> coeffs;  // length = order + 1

    size_t order() const { return coeffs.size() - 1; }
    Complex value() const { return coeffs[0]; }

    // f^(p)(center), unscaled.
    Complex derivative(size_t p) const;

    // The independent variable x as a jet at `center`, truncated to `order`.
    static Jet variable(Complex center, size_t order);
    static Jet constant(Complex value, Complex center, size_t order);
};

Jet jet_add(const Jet& a, const Jet& b);
Jet jet_sub(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, Complex s);

// Requires b.value() != 0; callers are responsible for pole checks.
Jet jet_div(const Jet& a, const Jet& b);
Jet jet_reciprocal(const Jet& b);

Jet jet_exp(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);

// a^k by binary exponentiation; k >= 0.
Jet jet_pow(const Jet& a, unsigned k);

}  // namespace matfun
