#include "matfun/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::from_coeffs(std::vector<Complex> coeffs) {
    for (const Complex& c : coeffs)
        if (!is_finite(c)) throw std::invalid_argument("polynomial coefficient is not finite");
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Complex, unsigned>>& roots) {
    Polynomial p = Polynomial::one();
    for (const auto& [root, multiplicity] : roots) {
        if (multiplicity < 1) throw std::invalid_argument("root multiplicity must be >= 1");
        const Polynomial factor({-root, Complex{1.0}});
        for (unsigned k = 0; k < multiplicity; ++k) p = p * factor;
    }
    return p;
}

double Polynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void Polynomial::trim() {
    const double cutoff = tolerances().trim * max_coeff_norm();
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cutoff) coeffs_.pop_back();
}

Complex Polynomial::eval(Complex x) const {
    Complex acc{0.0};
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
    std::vector<Complex> c = coeffs_;
    for (unsigned pass = 0; pass < order && !c.empty(); ++pass) {
        for (size_t k = 1; k < c.size(); ++k) c[k - 1] = c[k] * static_cast<double>(k);
        c.pop_back();
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0});
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex{0.0});
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (coeffs_.empty() || rhs.coeffs_.empty()) return {};
    std::vector<Complex> c(coeffs_.size() + rhs.coeffs_.size() - 1, Complex{0.0});
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> c = coeffs_;
    for (Complex& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const { return *this * Complex{-1.0}; }

DivModResult poly_divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw Error(ErrorKind::DivisionByZeroPolynomial, "division by the zero polynomial");
    if (num.degree() < den.degree()) return {{}, num};

    std::vector<Complex> rem = num.coeffs();
    const std::vector<Complex>& d = den.coeffs();
    const Complex lead = den.leading();
    std::vector<Complex> quot(num.coeffs().size() - d.size() + 1, Complex{0.0});

    for (size_t k = quot.size(); k-- > 0;) {
        const Complex q = cdiv(rem[k + d.size() - 1], lead);
        quot[k] = q;
        for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    rem.resize(d.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

BezoutResult poly_bezout(const Polynomial& a, const Polynomial& b, double cutoff) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_bezout: both inputs are zero");

    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::one(), u1{};
    Polynomial v0{}, v1 = Polynomial::one();

    double scale = std::max(a.max_coeff_norm(), b.max_coeff_norm());
    const double cutoff_base = cutoff > 0.0 ? cutoff : tolerances().gcd_cutoff;

    while (!r1.is_zero() && r1.max_coeff_norm() > cutoff_base * scale) {
        auto [q, r2] = poly_divmod(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
        scale = std::max(scale, r0.max_coeff_norm());
    }

    const Complex lead = r0.leading();
    const Complex inv_lead = cdiv(Complex{1.0}, lead);
    return {r0 * inv_lead, u0 * inv_lead, v0 * inv_lead};
}

}  // namespace matfun
