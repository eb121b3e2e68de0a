#include "matfun/function_spec.hpp"

#include <stdexcept>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

FunctionSpec FunctionSpec::rational(Polynomial num, Polynomial den) {
    if (den.is_zero())
        throw std::invalid_argument("rational function with zero denominator");
    return FunctionSpec(Rational{std::move(num), std::move(den)});
}

std::string FunctionSpec::name() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Exp>) return "exp";
            else if constexpr (std::is_same_v<T, Sin>) return "sin";
            else if constexpr (std::is_same_v<T, Cos>) return "cos";
            else if constexpr (std::is_same_v<T, Reciprocal>) return "reciprocal";
            else if constexpr (std::is_same_v<T, Power>) return "power(" + std::to_string(v.k) + ")";
            else if constexpr (std::is_same_v<T, Poly>) return "polynomial";
            else if constexpr (std::is_same_v<T, Rational>) return "rational";
            else return "exp(" + format_complex(v.t) + "*x)";
        },
        variant_);
}

std::optional<Polynomial> FunctionSpec::denominator() const {
    if (std::holds_alternative<Reciprocal>(variant_))
        return Polynomial({Complex{0.0}, Complex{1.0}});
    if (const auto* p = std::get_if<Power>(&variant_); p && p->k < 0) {
        std::vector<Complex> c(static_cast<size_t>(-p->k) + 1, Complex{0.0});
        c.back() = Complex{1.0};
        return Polynomial(std::move(c));  // x^|k|
    }
    if (const auto* r = std::get_if<Rational>(&variant_)) return r->den;
    return std::nullopt;
}

bool FunctionSpec::is_pole(Complex x) const {
    const auto den = denominator();
    if (!den) return false;
    const double pole_tol = tolerances().pole * (1.0 + std::abs(x));
    return std::abs(den->eval(x)) < pole_tol;
}

namespace {

Jet poly_at_jet(const Polynomial& p, const Jet& x) {
    Jet acc = Jet::constant(Complex{0.0}, x.center, x.order());
    const auto& c = p.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        acc = jet_mul(acc, x);
        acc.coeffs[0] += c[k];
    }
    return acc;
}

[[noreturn]] void throw_pole(const FunctionSpec& f, Complex center) {
    throw Error(ErrorKind::PoleAtNode,
                f.name() + " has a pole at " + format_complex(center));
}

}  // namespace

Jet jet_of(const FunctionSpec& f, Complex center, unsigned order) {
    if (f.is_pole(center)) throw_pole(f, center);
    const Jet x = Jet::variable(center, order);
    return std::visit(
        [&](const auto& v) -> Jet {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FunctionSpec::Exp>) {
                return jet_exp(x);
            } else if constexpr (std::is_same_v<T, FunctionSpec::Sin>) {
                return jet_sin(x);
            } else if constexpr (std::is_same_v<T, FunctionSpec::Cos>) {
                return jet_cos(x);
            } else if constexpr (std::is_same_v<T, FunctionSpec::Reciprocal>) {
                return jet_reciprocal(x);
            } else if constexpr (std::is_same_v<T, FunctionSpec::Power>) {
                if (v.k >= 0) return jet_pow(x, static_cast<unsigned>(v.k));
                return jet_reciprocal(jet_pow(x, static_cast<unsigned>(-v.k)));
            } else if constexpr (std::is_same_v<T, FunctionSpec::Poly>) {
                return poly_at_jet(v.p, x);
            } else if constexpr (std::is_same_v<T, FunctionSpec::Rational>) {
                return jet_div(poly_at_jet(v.num, x), poly_at_jet(v.den, x));
            } else {
                return jet_exp(jet_scale(x, v.t));
            }
        },
        f.variant());
}

Complex eval(const FunctionSpec& f, Complex x) { return jet_of(f, x, 0).value(); }

}  // namespace matfun
