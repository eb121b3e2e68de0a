#include "matfun/json_io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace matfun {

namespace {

Complex complex_field(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a complex string");
    return parse_complex(j.get<std::string>());
}

unsigned multiplicity_field(const Json& j) {
    if (!j.is_number_unsigned() || j.get<unsigned>() < 1)
        throw std::invalid_argument("multiplicity must be a positive integer");
    return j.get<unsigned>();
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const Complex& c : p.coeffs()) arr.push_back(format_complex(c));
    return arr;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of complex strings");
    std::vector<Complex> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) coeffs.push_back(complex_field(entry));
    return Polynomial::from_coeffs(std::move(coeffs));
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(format_complex(m(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("matrix must be an object with a \"rows\" array");
    std::vector<std::vector<Complex>> rows;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Complex> r;
        r.reserve(row.size());
        for (const auto& entry : row) r.push_back(complex_field(entry));
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(rows);
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of complex strings");
    std::vector<Complex> v;
    v.reserve(j.size());
    for (const auto& entry : j) v.push_back(complex_field(entry));
    return v;
}

Json complex_vector_to_json(const std::vector<Complex>& v) {
    Json arr = Json::array();
    for (const Complex& c : v) arr.push_back(format_complex(c));
    return arr;
}

Json to_json(const SpectrumEstimate& s) {
    Json eigs = Json::array();
    for (size_t i = 0; i < s.count(); ++i)
        eigs.push_back(Json{{"value", format_complex(s.eigenvalues[i])},
                            {"multiplicity", s.multiplicities[i]}});
    Json out{{"eigenvalues", std::move(eigs)}, {"char_poly", to_json(s.char_poly)}};
    if (!s.warnings.empty()) out["warnings"] = s.warnings;
    return out;
}

SpectrumEstimate spectrum_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("eigenvalues") || !j["eigenvalues"].is_array())
        throw std::invalid_argument("spectrum must be an object with an \"eigenvalues\" array");
    SpectrumEstimate s;
    for (const auto& entry : j["eigenvalues"]) {
        s.eigenvalues.push_back(complex_field(entry.at("value")));
        s.multiplicities.push_back(multiplicity_field(entry.at("multiplicity")));
    }
    if (s.eigenvalues.empty()) throw std::invalid_argument("spectrum has no eigenvalues");
    if (j.contains("char_poly")) {
        s.char_poly = polynomial_from_json(j["char_poly"]);
    } else {
        std::vector<std::pair<Complex, unsigned>> roots;
        for (size_t i = 0; i < s.count(); ++i)
            roots.emplace_back(s.eigenvalues[i], s.multiplicities[i]);
        s.char_poly = Polynomial::from_roots(roots);
    }
    return s;
}

Json to_json(const InterpolationSpec& s) {
    Json nodes = Json::array();
    for (const auto& node : s.nodes()) {
        Json data = Json::array();
        double factorial = 1.0;
        for (size_t p = 0; p < node.data.size(); ++p) {
            if (p > 0) factorial *= static_cast<double>(p);
            data.push_back(format_complex(node.data[p] * factorial));
        }
        nodes.push_back(Json{{"lambda", format_complex(node.lambda)},
                             {"multiplicity", node.multiplicity},
                             {"data", std::move(data)}});
    }
    return Json{{"nodes", std::move(nodes)}};
}

InterpolationSpec interpolation_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw std::invalid_argument("interpolation spec must be an object with a \"nodes\" array");
    NodeList nodes;
    std::vector<std::vector<Complex>> raw;
    for (const auto& entry : j["nodes"]) {
        nodes.push_back({complex_field(entry.at("lambda")),
                         multiplicity_field(entry.at("multiplicity"))});
        raw.push_back(complex_vector_from_json(entry.at("data")));
        if (raw.back().size() != nodes.back().multiplicity)
            throw std::invalid_argument("node data length must equal multiplicity");
    }
    return InterpolationSpec::from_raw(nodes, raw);
}

Json to_json(const FunctionSpec& f) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FunctionSpec::Exp>) return Json{{"kind", "exp"}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Sin>) return Json{{"kind", "sin"}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Cos>) return Json{{"kind", "cos"}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Reciprocal>)
                return Json{{"kind", "reciprocal"}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Power>)
                return Json{{"kind", "power"}, {"k", v.k}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Poly>)
                return Json{{"kind", "polynomial"}, {"coeffs", to_json(v.p)}};
            else if constexpr (std::is_same_v<T, FunctionSpec::Rational>)
                return Json{{"kind", "rational"}, {"num", to_json(v.num)}, {"den", to_json(v.den)}};
            else
                return Json{{"kind", "scaled_exp"}, {"t", format_complex(v.t)}};
        },
        f.variant());
}

FunctionSpec function_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("function must be an object with a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "exp") return FunctionSpec::exp();
    if (kind == "sin") return FunctionSpec::sin();
    if (kind == "cos") return FunctionSpec::cos();
    if (kind == "reciprocal") return FunctionSpec::reciprocal();
    if (kind == "power") return FunctionSpec::power(j.at("k").get<int>());
    if (kind == "polynomial") return FunctionSpec::polynomial(polynomial_from_json(j.at("coeffs")));
    if (kind == "rational")
        return FunctionSpec::rational(polynomial_from_json(j.at("num")),
                                      polynomial_from_json(j.at("den")));
    if (kind == "scaled_exp") return FunctionSpec::scaled_exp(parse_complex(j.at("t").get<std::string>()));
    throw std::invalid_argument("unknown function kind '" + kind + "'");
}

Json to_json(const LinearODE& ode) {
    return Json{{"coeffs", complex_vector_to_json(ode.coeffs)}};
}

LinearODE ode_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("ODE must be an object with a \"coeffs\" array");
    LinearODE ode{complex_vector_from_json(j["coeffs"])};
    if (ode.coeffs.empty()) throw std::invalid_argument("ODE needs at least one coefficient");
    for (const Complex& c : ode.coeffs)
        if (!is_finite(c)) throw std::invalid_argument("ODE coefficient is not finite");
    return ode;
}

Json to_json(const SolutionBasis& basis) {
    Json terms = Json::array();
    Json rendered = Json::array();
    for (const auto& t : basis.terms) {
        terms.push_back(Json{{"lambda", format_complex(t.lambda)}, {"power", t.power}});
        rendered.push_back(render_term(t));
    }
    Json out{{"terms", std::move(terms)}, {"rendered", std::move(rendered)}};
    if (!basis.warnings.empty()) out["warnings"] = basis.warnings;
    return out;
}

Json to_json(const RemainderBound& bound) {
    return Json{{"x0", bound.x0},
                {"bound", bound.bound},
                {"actual_error", bound.actual_error},
                {"holds", bound.holds}};
}

Json to_json(const JordanForm& form) {
    Json blocks = Json::array();
    for (const auto& b : form.blocks)
        blocks.push_back(Json{{"lambda", format_complex(b.lambda)}, {"size", b.size}});
    return Json{{"blocks", std::move(blocks)},
                {"P", to_json(form.p)},
                {"J", to_json(form.j)},
                {"residual", form.residual}};
}

Json to_json(const ResolventIdentityReport& report) {
    return Json{{"partition", report.partition_residual},
                {"cross", report.cross_residual},
                {"idempotency", report.idempotency_residual},
                {"nilpotent", report.nilpotent_residual},
                {"tolerance", report.tolerance}};
}

Json to_json(const SpectralDecomposition& decomp, const ResolventIdentityReport& report) {
    Json resolvents = Json::array();
    for (const Matrix& m : decomp.resolvents) resolvents.push_back(to_json(m));
    Json nilpotents = Json::array();
    for (const Matrix& m : decomp.nilpotent_parts) nilpotents.push_back(to_json(m));
    return Json{{"spectrum", to_json(decomp.spectrum)},
                {"resolvents", std::move(resolvents)},
                {"nilpotent_parts", std::move(nilpotents)},
                {"identities", to_json(report)}};
}

}  // namespace matfun
