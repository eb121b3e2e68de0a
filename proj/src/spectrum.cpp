#include "matfun/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

NodeList SpectrumEstimate::node_list() const {
    NodeList nodes(eigenvalues.size());
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        nodes[i] = {eigenvalues[i], multiplicities[i]};
    return nodes;
}

unsigned SpectrumEstimate::max_multiplicity() const {
    unsigned m = 1;
    for (unsigned v : multiplicities) m = std::max(m, v);
    return m;
}

Polynomial characteristic_polynomial(const Matrix& a) {
    const size_t n = a.dim();
    if (n > 50)
        throw Error(ErrorKind::Unsupported,
                    "characteristic polynomial limited to n <= 50, got n = " + std::to_string(n));

    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1}) / (k+1).
    std::vector<Complex> coeffs(n + 1, Complex{0.0});
    coeffs[n] = Complex{1.0};
    Matrix m = a;
    for (size_t k = 1; k <= n; ++k) {
        Complex trace{0.0};
        for (size_t i = 0; i < n; ++i) trace += m(i, i);
        const Complex c = -trace / static_cast<double>(k);
        coeffs[n - k] = c;
        if (k < n) {
            for (size_t i = 0; i < n; ++i) m(i, i) += c;
            m = a * m;
        }
    }
    return Polynomial(std::move(coeffs));
}

namespace {

constexpr unsigned kAberthMaxIters = 200;

// Aberth-Ehrlich simultaneous iteration; p should be square-free for full
// accuracy, multiple roots still converge (linearly) into tight clusters.
// Besides the correction-size test, a root counts as converged when |p(z)|
// falls below the rounding noise floor of evaluating p at z; multiple roots
// stall there and cannot do better in fixed precision.
std::vector<Complex> aberth_roots(const Polynomial& p) {
    const int deg = p.degree();
    std::vector<Complex> z(static_cast<size_t>(deg));

    // initial guesses on a Cauchy-bound circle, asymmetric rotation
    const Complex lead = p.leading();
    double radius = 0.0;
    for (int k = 0; k < deg; ++k)
        radius = std::max(radius, std::abs(cdiv(p.coeffs()[static_cast<size_t>(k)], lead)));
    radius = 1.0 + radius;
    for (int j = 0; j < deg; ++j) {
        const double angle = 2.0 * M_PI * (static_cast<double>(j) + 0.25) / static_cast<double>(deg) + 0.4;
        z[static_cast<size_t>(j)] = radius * Complex{std::cos(angle), std::sin(angle)};
    }

    const auto noise_floor = [&](Complex at) {
        double s = 0.0, power = 1.0;
        const double az = std::abs(at);
        for (const Complex& c : p.coeffs()) {
            s += std::abs(c) * power;
            power *= az;
        }
        return 16.0 * 2.2e-16 * s;
    };

    const Polynomial dp = p.derivative();
    for (unsigned iter = 0; iter < kAberthMaxIters; ++iter) {
        double worst = 0.0;
        bool all_at_floor = true;
        for (size_t i = 0; i < z.size(); ++i) {
            const Complex pv = p.eval(z[i]);
            if (std::abs(pv) <= noise_floor(z[i])) continue;
            all_at_floor = false;
            Complex dv = dp.eval(z[i]);
            if (std::abs(dv) < 1e-300) dv = Complex{1e-300};
            const Complex newton = cdiv(pv, dv);
            Complex repulsion{0.0};
            for (size_t j = 0; j < z.size(); ++j)
                if (j != i) repulsion += cdiv(Complex{1.0}, z[i] - z[j]);
            const Complex correction = cdiv(newton, Complex{1.0} - newton * repulsion);
            z[i] -= correction;
            worst = std::max(worst, std::abs(correction) / (1.0 + std::abs(z[i])));
        }
        if (all_at_floor || worst < 1e-14) return z;
    }
    throw Error(ErrorKind::NoConvergence,
                "root iteration did not converge in " + std::to_string(kAberthMaxIters) + " steps");
}

std::vector<std::vector<size_t>> cluster_roots(const std::vector<Complex>& roots, double tol) {
    std::vector<std::vector<size_t>> clusters;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        std::vector<size_t> cluster{i};
        used[i] = true;
        // grow transitively
        for (size_t k = 0; k < cluster.size(); ++k) {
            for (size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[cluster[k]] - roots[j]) <= tol) {
                    cluster.push_back(j);
                    used[j] = true;
                }
            }
        }
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

// Largest q such that |p^(j)(x)| stays below a scale-relative cutoff for all
// j < q; the multiplicity of x as a root of p, numerically.
unsigned derivative_multiplicity(const Polynomial& p, Complex x, double tol_base) {
    const unsigned deg = static_cast<unsigned>(p.degree());
    const double scale =
        p.max_coeff_norm() * std::pow(1.0 + std::abs(x), static_cast<double>(p.degree()));
    unsigned q = 0;
    Polynomial d = p;
    while (q < deg) {
        if (std::abs(d.eval(x)) > tol_base * scale) break;
        ++q;
        d = d.derivative();
    }
    return std::max(q, 1u);
}

// Newton refinement of a multiplicity-m root as a simple root of p^(m-1).
Complex polish_root(const Polynomial& p, Complex x, unsigned multiplicity, double max_move) {
    const Polynomial target = p.derivative(multiplicity - 1);
    const Polynomial dtarget = target.derivative();
    Complex best = x;
    double best_val = std::abs(target.eval(x));
    for (int step = 0; step < 8; ++step) {
        const Complex dv = dtarget.eval(x);
        if (std::abs(dv) < 1e-300) break;
        x -= cdiv(target.eval(x), dv);
        const double val = std::abs(target.eval(x));
        if (val < best_val && std::abs(x - best) <= max_move) {
            best = x;
            best_val = val;
        }
    }
    return best;
}

}  // namespace

SpectrumEstimate find_roots_with_multiplicity(const Polynomial& p_in,
                                              std::optional<double> cluster_tol_override) {
    if (p_in.degree() < 1) throw std::invalid_argument("polynomial degree must be >= 1");
    const Polynomial p = p_in * cdiv(Complex{1.0}, p_in.leading());  // monic
    const unsigned n = static_cast<unsigned>(p.degree());

    SpectrumEstimate out;
    out.char_poly = p;

    // Square-free part via gcd with the derivative. The Euclidean cutoff is
    // escalated when the coefficient noise of p sits above the default: a
    // candidate gcd is accepted only if it divides both p and p' cleanly.
    Polynomial square_free = p;
    bool extracted = false;
    const Polynomial dp = p.derivative();
    for (const double cutoff : {tolerances().gcd_cutoff, 1e-9, 1e-8, 1e-7}) {
        const BezoutResult bez = poly_bezout(p, dp, cutoff);
        if (bez.g.degree() < 1) continue;
        auto [quot, rem] = poly_divmod(p, bez.g);
        if (quot.degree() < 1 || rem.max_coeff_norm() > 1e-6 * p.max_coeff_norm()) continue;
        if (poly_divmod(dp, bez.g).remainder.max_coeff_norm() > 1e-6 * dp.max_coeff_norm())
            continue;
        square_free = quot * cdiv(Complex{1.0}, quot.leading());
        extracted = true;
        break;
    }

    std::vector<Complex> roots = aberth_roots(square_free);

    double max_abs = 0.0;
    for (const Complex& r : roots) max_abs = std::max(max_abs, std::abs(r));
    const double cluster_tol =
        cluster_tol_override.value_or(tolerances().cluster * (1.0 + max_abs));

    const auto clusters = cluster_roots(roots, cluster_tol);

    std::vector<Complex> lambdas;
    std::vector<unsigned> mults;
    for (const auto& cluster : clusters) {
        Complex centroid{0.0};
        for (size_t idx : cluster) centroid += roots[idx];
        centroid /= static_cast<double>(cluster.size());

        const unsigned der_mult = derivative_multiplicity(p, centroid, tolerances().root_residual);
        unsigned mult = der_mult;
        if (!extracted && cluster.size() != der_mult) {
            // With no square-free extraction the cluster size is the direct
            // multiplicity observation; prefer it.
            mult = static_cast<unsigned>(cluster.size());
            out.warnings.push_back("multiplicity of " + format_complex(centroid) +
                                   ": derivative test gave " + std::to_string(der_mult) +
                                   ", cluster cardinality " + std::to_string(cluster.size()) +
                                   " wins");
        } else if (extracted && cluster.size() > 1) {
            out.warnings.push_back("square-free roots near " + format_complex(centroid) +
                                   " merged by cluster tolerance");
        }
        lambdas.push_back(centroid);
        mults.push_back(mult);
    }

    // force sum of multiplicities to deg p
    auto total = [&] { return std::accumulate(mults.begin(), mults.end(), 0u); };
    unsigned guard = 4 * n + 4;
    while (total() != n && guard-- > 0) {
        if (total() < n) {
            // raise where the next derivative is numerically smallest
            size_t best = 0;
            double best_val = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < lambdas.size(); ++i) {
                if (mults[i] >= n) continue;
                const double v = std::abs(p.derivative(mults[i]).eval(lambdas[i]));
                if (v < best_val) {
                    best_val = v;
                    best = i;
                }
            }
            ++mults[best];
        } else {
            // lower where the last claimed derivative is largest
            size_t best = 0;
            double best_val = -1.0;
            bool found = false;
            for (size_t i = 0; i < lambdas.size(); ++i) {
                if (mults[i] <= 1) continue;
                const double v = std::abs(p.derivative(mults[i] - 1).eval(lambdas[i]));
                if (v > best_val) {
                    best_val = v;
                    best = i;
                    found = true;
                }
            }
            if (!found) break;
            --mults[best];
        }
    }
    if (total() != n)
        throw Error(ErrorKind::InconsistentMultiplicities,
                    "multiplicities sum to " + std::to_string(total()) + ", expected " +
                        std::to_string(n));

    for (size_t i = 0; i < lambdas.size(); ++i)
        lambdas[i] = polish_root(p, lambdas[i], mults[i], 16.0 * cluster_tol + 1e-8);

    // deterministic order: descending multiplicity, then lexicographic (re, im)
    std::vector<size_t> order(lambdas.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (mults[a] != mults[b]) return mults[a] > mults[b];
        if (lambdas[a].real() != lambdas[b].real()) return lambdas[a].real() < lambdas[b].real();
        return lambdas[a].imag() < lambdas[b].imag();
    });
    for (size_t idx : order) {
        out.eigenvalues.push_back(lambdas[idx]);
        out.multiplicities.push_back(mults[idx]);
    }
    return out;
}

SpectrumEstimate spectrum_of(const Matrix& a, std::optional<double> cluster_tol) {
    return find_roots_with_multiplicity(characteristic_polynomial(a), cluster_tol);
}

}  // namespace matfun
