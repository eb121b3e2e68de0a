#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "matfun/complex_ops.hpp"

namespace matfun {

// Dense univariate polynomial over the complex numbers, coefficients in
// ascending degree order. The zero polynomial is the empty sequence.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    // Validating constructor for boundary input: rejects NaN/Inf entries.
    static Polynomial from_coeffs(std::vector<Complex> coeffs);

    // Monic prod (x - root)^multiplicity. Empty input gives the constant 1.
    static Polynomial from_roots(const std::vector<std::pair<Complex, unsigned>>& roots);

    static Polynomial one() { return Polynomial({Complex{1.0}}); }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex leading() const { return coeffs_.back(); }
    double max_coeff_norm() const;

    Complex eval(Complex x) const;  // Horner
    Polynomial derivative(unsigned order = 1) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(Complex s) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial&) const = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

struct DivModResult {
    Polynomial quotient;
    Polynomial remainder;
};

// num = den * quotient + remainder, deg remainder < deg den.
// Throws DivisionByZeroPolynomial if den is zero.
DivModResult poly_divmod(const Polynomial& num, const Polynomial& den);

struct BezoutResult {
    Polynomial g;  // monic gcd
    Polynomial u;
    Polynomial v;  // u*a + v*b = g
};

// Extended Euclid over floating complex coefficients. A remainder whose norm
// falls below cutoff x running scale is treated as zero; the default cutoff
// is tolerances().gcd_cutoff.
BezoutResult poly_bezout(const Polynomial& a, const Polynomial& b, double cutoff = 0.0);

}  // namespace matfun
