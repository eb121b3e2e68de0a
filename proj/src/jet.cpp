#include "matfun/jet.hpp"

#include <cassert>

namespace matfun {

Complex Jet::derivative(size_t p) const {
    assert(p < coeffs.size());
    double factorial = 1.0;
    for (size_t k = 2; k <= p; ++k) factorial *= static_cast<double>(k);
    return coeffs[p] * factorial;
}

Jet Jet::variable(Complex center, size_t order) {
    Jet j{center, std::vector<Complex>(order + 1, Complex{0.0})};
    j.coeffs[0] = center;
    if (order >= 1) j.coeffs[1] = Complex{1.0};
    return j;
}

Jet Jet::constant(Complex value, Complex center, size_t order) {
    Jet j{center, std::vector<Complex>(order + 1, Complex{0.0})};
    j.coeffs[0] = value;
    return j;
}

Jet jet_add(const Jet& a, const Jet& b) {
    assert(a.coeffs.size() == b.coeffs.size());
    Jet out = a;
    for (size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
    return out;
}

Jet jet_sub(const Jet& a, const Jet& b) {
    assert(a.coeffs.size() == b.coeffs.size());
    Jet out = a;
    for (size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] -= b.coeffs[k];
    return out;
}

Jet jet_mul(const Jet& a, const Jet& b) {
    assert(a.coeffs.size() == b.coeffs.size());
    const size_t m = a.coeffs.size();
    Jet out{a.center, std::vector<Complex>(m, Complex{0.0})};
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; i + j < m; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

Jet jet_scale(const Jet& a, Complex s) {
    Jet out = a;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

Jet jet_div(const Jet& a, const Jet& b) {
    assert(a.coeffs.size() == b.coeffs.size());
    const size_t m = a.coeffs.size();
    Jet out{a.center, std::vector<Complex>(m, Complex{0.0})};
    for (size_t n = 0; n < m; ++n) {
        Complex acc = a.coeffs[n];
        for (size_t k = 1; k <= n; ++k) acc -= b.coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = cdiv(acc, b.coeffs[0]);
    }
    return out;
}

Jet jet_reciprocal(const Jet& b) {
    return jet_div(Jet::constant(Complex{1.0}, b.center, b.order()), b);
}

// For g = exp(a): g' = a' g, so n g_n = sum_{k=1..n} k a_k g_{n-k}.
Jet jet_exp(const Jet& a) {
    const size_t m = a.coeffs.size();
    Jet out{a.center, std::vector<Complex>(m, Complex{0.0})};
    out.coeffs[0] = std::exp(a.coeffs[0]);
    for (size_t n = 1; n < m; ++n) {
        Complex acc{0.0};
        for (size_t k = 1; k <= n; ++k)
            acc += static_cast<double>(k) * a.coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = acc / static_cast<double>(n);
    }
    return out;
}

namespace {

// sin and cos propagate as a coupled pair: s' = a' c, c' = -a' s.
void jet_sin_cos(const Jet& a, Jet& s, Jet& c) {
    const size_t m = a.coeffs.size();
    s = Jet{a.center, std::vector<Complex>(m, Complex{0.0})};
    c = Jet{a.center, std::vector<Complex>(m, Complex{0.0})};
    s.coeffs[0] = std::sin(a.coeffs[0]);
    c.coeffs[0] = std::cos(a.coeffs[0]);
    for (size_t n = 1; n < m; ++n) {
        Complex sa{0.0}, ca{0.0};
        for (size_t k = 1; k <= n; ++k) {
            const Complex t = static_cast<double>(k) * a.coeffs[k];
            sa += t * c.coeffs[n - k];
            ca += t * s.coeffs[n - k];
        }
        s.coeffs[n] = sa / static_cast<double>(n);
        c.coeffs[n] = -ca / static_cast<double>(n);
    }
}

}  // namespace

Jet jet_sin(const Jet& a) {
    Jet s, c;
    jet_sin_cos(a, s, c);
    return s;
}

Jet jet_cos(const Jet& a) {
    Jet s, c;
    jet_sin_cos(a, s, c);
    return c;
}

Jet jet_pow(const Jet& a, unsigned k) {
    Jet result = Jet::constant(Complex{1.0}, a.center, a.order());
    Jet base = a;
    while (k > 0) {
        if (k & 1u) result = jet_mul(result, base);
        k >>= 1u;
        if (k > 0) base = jet_mul(base, base);
    }
    return result;
}

}  // namespace matfun
