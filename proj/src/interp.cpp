#include "matfun/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

namespace {

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double node_separation_tol(const std::vector<InterpolationNode>& nodes) {
    double max_abs = 0.0;
    for (const auto& n : nodes) max_abs = std::max(max_abs, std::abs(n.lambda));
    return tolerances().node_sep * (1.0 + max_abs);
}

void check_distinct(const std::vector<InterpolationNode>& nodes) {
    const double sep = node_separation_tol(nodes);
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = i + 1; j < nodes.size(); ++j)
            if (std::abs(nodes[i].lambda - nodes[j].lambda) <= sep)
                throw Error(ErrorKind::NodesTooClose,
                            "nodes " + format_complex(nodes[i].lambda) + " and " +
                                format_complex(nodes[j].lambda) + " are within separation tolerance");
}

}  // namespace

InterpolationSpec InterpolationSpec::from_nodes(std::vector<InterpolationNode> nodes) {
    if (nodes.empty()) throw std::invalid_argument("interpolation spec needs at least one node");
    unsigned total = 0;
    for (const auto& n : nodes) {
        if (n.multiplicity < 1) throw std::invalid_argument("node multiplicity must be >= 1");
        if (n.data.size() != n.multiplicity)
            throw std::invalid_argument("node data length must equal multiplicity");
        for (const Complex& c : n.data)
            if (!is_finite(c)) throw std::invalid_argument("node data is not finite");
        if (!is_finite(n.lambda)) throw std::invalid_argument("node lambda is not finite");
        total += n.multiplicity;
    }
    check_distinct(nodes);

    InterpolationSpec spec;
    spec.nodes_ = std::move(nodes);
    spec.total_ = total;
    return spec;
}

InterpolationSpec InterpolationSpec::from_raw(const NodeList& nodes,
                                              const std::vector<std::vector<Complex>>& raw_data) {
    if (nodes.size() != raw_data.size())
        throw std::invalid_argument("node and data counts differ");
    std::vector<InterpolationNode> out(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) {
        out[j].lambda = nodes[j].lambda;
        out[j].multiplicity = nodes[j].multiplicity;
        out[j].data.resize(raw_data[j].size());
        for (size_t p = 0; p < raw_data[j].size(); ++p)
            out[j].data[p] = raw_data[j][p] / factorial(static_cast<unsigned>(p));
    }
    return from_nodes(std::move(out));
}

Polynomial HermiteNewtonForm::to_polynomial() const {
    if (coeffs.empty()) return {};
    Polynomial p({coeffs.back()});
    for (size_t k = coeffs.size() - 1; k-- > 0;) {
        p = p * Polynomial({-centers[k], Complex{1.0}}) + Polynomial({coeffs[k]});
    }
    return p;
}

HermiteNewtonForm hermite_newton_form(const InterpolationSpec& spec) {
    std::vector<InterpolationNode> nodes = spec.nodes();
    std::sort(nodes.begin(), nodes.end(), [](const InterpolationNode& a, const InterpolationNode& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
        return lex_less(a.lambda, b.lambda);
    });

    const unsigned n = spec.total_degree();
    std::vector<Complex> z(n);
    std::vector<size_t> owner(n);  // index into `nodes` for each z entry
    for (size_t j = 0, pos = 0; j < nodes.size(); ++j)
        for (unsigned r = 0; r < nodes[j].multiplicity; ++r, ++pos) {
            z[pos] = nodes[j].lambda;
            owner[pos] = j;
        }

    // dd[i][j] = divided difference f[z_i .. z_j]; confluent entries come
    // straight from the jet data.
    std::vector<std::vector<Complex>> dd(n, std::vector<Complex>(n, Complex{0.0}));
    for (unsigned i = 0; i < n; ++i) dd[i][i] = nodes[owner[i]].data[0];
    for (unsigned len = 1; len < n; ++len) {
        for (unsigned i = 0; i + len < n; ++i) {
            const unsigned j = i + len;
            if (owner[i] == owner[j]) {
                dd[i][j] = nodes[owner[i]].data[len];
            } else {
                dd[i][j] = cdiv(dd[i + 1][j] - dd[i][j - 1], z[j] - z[i]);
            }
        }
    }

    HermiteNewtonForm form;
    form.centers = std::move(z);
    form.coeffs.resize(n);
    for (unsigned k = 0; k < n; ++k) form.coeffs[k] = dd[0][k];
    return form;
}

namespace {

// Explicit product formula for simple nodes:
//   L = sum_j c_j prod_{i != j} (x - lambda_i)/(lambda_j - lambda_i).
Polynomial lagrange_simple(const InterpolationSpec& spec) {
    const auto& nodes = spec.nodes();
    Polynomial l;
    for (size_t j = 0; j < nodes.size(); ++j) {
        Polynomial basis = Polynomial::one();
        Complex denom{1.0};
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (i == j) continue;
            basis = basis * Polynomial({-nodes[i].lambda, Complex{1.0}});
            denom *= nodes[j].lambda - nodes[i].lambda;
        }
        l = l + basis * cdiv(nodes[j].data[0], denom);
    }
    return l;
}

void check_conditions(const Polynomial& l, const InterpolationSpec& spec) {
    double data_scale = 1.0;
    for (const auto& node : spec.nodes())
        for (size_t p = 0; p < node.data.size(); ++p)
            data_scale = std::max(data_scale,
                                  std::abs(node.data[p]) * factorial(static_cast<unsigned>(p)));

    const double tol = tolerances().interp_residual * data_scale;
    for (const auto& node : spec.nodes()) {
        for (unsigned m = 0; m < node.multiplicity; ++m) {
            const Complex want = node.data[m] * factorial(m);
            const Complex got = l.derivative(m).eval(node.lambda);
            if (std::abs(got - want) > tol)
                throw Error(ErrorKind::IllConditioned,
                            "interpolation residual " + format_double(std::abs(got - want)) +
                                " at node " + format_complex(node.lambda) + " order " +
                                std::to_string(m));
        }
    }
}

}  // namespace

Polynomial hermite_solve(const InterpolationSpec& spec) {
    if (spec.total_degree() > kMaxInterpolationNodes)
        throw Error(ErrorKind::Unsupported,
                    "total interpolation degree " + std::to_string(spec.total_degree()) +
                        " exceeds " + std::to_string(kMaxInterpolationNodes));

    const bool all_simple = std::all_of(spec.nodes().begin(), spec.nodes().end(),
                                        [](const InterpolationNode& n) { return n.multiplicity == 1; });
    Polynomial l = all_simple ? lagrange_simple(spec) : hermite_newton_form(spec).to_polynomial();
    check_conditions(l, spec);
    return l;
}

Polynomial hermite_from_function(const FunctionSpec& f, const NodeList& nodes) {
    std::vector<InterpolationNode> filled(nodes.size());
    for (size_t j = 0; j < nodes.size(); ++j) {
        if (nodes[j].multiplicity < 1) throw std::invalid_argument("node multiplicity must be >= 1");
        filled[j].lambda = nodes[j].lambda;
        filled[j].multiplicity = nodes[j].multiplicity;
        filled[j].data = jet_of(f, nodes[j].lambda, nodes[j].multiplicity - 1).coeffs;
    }
    return hermite_solve(InterpolationSpec::from_nodes(std::move(filled)));
}

Polynomial extend_one_point(const Polynomial& l0, const NodeList& existing, Complex new_node,
                            Complex target_value, unsigned target_order) {
    std::vector<std::pair<Complex, unsigned>> roots;
    roots.reserve(existing.size());
    for (const auto& n : existing) roots.emplace_back(n.lambda, n.multiplicity);
    const Polynomial w = Polynomial::from_roots(roots);

    const Polynomial wq = w.derivative(target_order);
    const Complex denom = wq.eval(new_node);
    const double scale =
        wq.max_coeff_norm() * std::pow(1.0 + std::abs(new_node), std::max(wq.degree(), 0));
    if (std::abs(denom) <= 1e-12 * (1.0 + scale))
        throw Error(ErrorKind::DegenerateCondition,
                    "the new condition does not determine the correction coefficient");

    const Complex c = cdiv(target_value - l0.derivative(target_order).eval(new_node), denom);
    return l0 + w * c;
}

namespace {

InterpolationSpec quotient_interpolation_data(const FunctionSpec& q, const NodeList& set,
                                              const Polynomial& divisor) {
    std::vector<InterpolationNode> filled(set.size());
    for (size_t j = 0; j < set.size(); ++j) {
        const unsigned order = set[j].multiplicity - 1;
        const Jet num = jet_of(q, set[j].lambda, order);
        const Jet den = jet_of(FunctionSpec::polynomial(divisor), set[j].lambda, order);
        filled[j].lambda = set[j].lambda;
        filled[j].multiplicity = set[j].multiplicity;
        filled[j].data = jet_div(num, den).coeffs;
    }
    return InterpolationSpec::from_nodes(std::move(filled));
}

Polynomial monic_from_nodelist(const NodeList& set) {
    std::vector<std::pair<Complex, unsigned>> roots;
    roots.reserve(set.size());
    for (const auto& n : set) roots.emplace_back(n.lambda, n.multiplicity);
    return Polynomial::from_roots(roots);
}

}  // namespace

Polynomial merge_union(const FunctionSpec& q, const NodeList& set1, const NodeList& set2) {
    if (set1.empty()) return hermite_from_function(q, set2);
    if (set2.empty()) return hermite_from_function(q, set1);

    double max_abs = 0.0;
    for (const auto& n : set1) max_abs = std::max(max_abs, std::abs(n.lambda));
    for (const auto& n : set2) max_abs = std::max(max_abs, std::abs(n.lambda));
    const double sep = tolerances().node_sep * (1.0 + max_abs);
    for (const auto& a : set1)
        for (const auto& b : set2)
            if (std::abs(a.lambda - b.lambda) <= sep)
                throw Error(ErrorKind::NodeCollision,
                            "node " + format_complex(a.lambda) + " appears in both sets");

    const Polynomial t1 = monic_from_nodelist(set1);
    const Polynomial t2 = monic_from_nodelist(set2);
    const Polynomial part1 = hermite_solve(quotient_interpolation_data(q, set1, t2));
    const Polynomial part2 = hermite_solve(quotient_interpolation_data(q, set2, t1));
    return part1 * t2 + part2 * t1;
}

Polynomial merge_union(const Polynomial& q, const NodeList& set1, const NodeList& set2) {
    return merge_union(FunctionSpec::polynomial(q), set1, set2);
}

Polynomial principal_resolvent(const NodeList& nodes, size_t i) {
    if (i >= nodes.size()) throw std::invalid_argument("resolvent index out of range");
    if (nodes.size() == 1) return Polynomial::one();

    std::vector<std::pair<Complex, unsigned>> other;
    other.reserve(nodes.size() - 1);
    for (size_t j = 0; j < nodes.size(); ++j)
        if (j != i) other.emplace_back(nodes[j].lambda, nodes[j].multiplicity);
    const Polynomial w = Polynomial::from_roots(other);

    const Complex lambda = nodes[i].lambda;
    const unsigned m = nodes[i].multiplicity;
    const Jet taylor = jet_reciprocal(jet_of(FunctionSpec::polynomial(w), lambda, m - 1));

    // expand sum_p taylor_p (x - lambda)^p into the monomial basis
    Polynomial t({taylor.coeffs.back()});
    for (size_t p = taylor.coeffs.size() - 1; p-- > 0;)
        t = t * Polynomial({-lambda, Complex{1.0}}) + Polynomial({taylor.coeffs[p]});

    return t * w;
}

RemainderBound remainder_bound_check(const FunctionSpec& f, const NodeList& nodes, Complex x0,
                                     double deriv_sup) {
    if (x0.imag() != 0.0)
        throw Error(ErrorKind::NonRealInput, "x0 must be real");
    for (const auto& n : nodes)
        if (n.lambda.imag() != 0.0)
            throw Error(ErrorKind::NonRealInput,
                        "node " + format_complex(n.lambda) + " must be real");
    if (deriv_sup < 0.0) throw std::invalid_argument("deriv_sup must be non-negative");

    unsigned n = 0;
    double product = 1.0;
    for (const auto& node : nodes) {
        n += node.multiplicity;
        product *= std::pow(std::abs(x0.real() - node.lambda.real()),
                            static_cast<double>(node.multiplicity));
    }

    const Polynomial l = hermite_from_function(f, nodes);
    const Complex diff = eval(f, x0) - l.eval(x0);

    RemainderBound out;
    out.x0 = x0.real();
    out.bound = deriv_sup / factorial(n) * product;
    out.actual_error = diff.real();
    out.holds = std::abs(out.actual_error) <= out.bound;
    return out;
}

double remainder_derivative_sup(const FunctionSpec& f, const NodeList& nodes, double x0,
                                unsigned samples) {
    double lo = x0, hi = x0;
    unsigned n = 0;
    for (const auto& node : nodes) {
        if (node.lambda.imag() != 0.0)
            throw Error(ErrorKind::NonRealInput,
                        "node " + format_complex(node.lambda) + " must be real");
        lo = std::min(lo, node.lambda.real());
        hi = std::max(hi, node.lambda.real());
        n += node.multiplicity;
    }
    if (samples < 2) samples = 2;

    double sup = 0.0;
    for (unsigned s = 0; s < samples; ++s) {
        const double t = lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(samples - 1);
        const Jet j = jet_of(f, Complex{t, 0.0}, n);
        sup = std::max(sup, std::abs(j.derivative(n)));
    }
    return sup;
}

}  // namespace matfun
