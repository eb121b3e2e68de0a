#include "matfun/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

Matrix generalized_eigenspace_basis(const Matrix& a, const SpectralDecomposition& decomp,
                                    size_t i) {
    if (i >= decomp.resolvents.size()) throw std::invalid_argument("eigenvalue index out of range");
    (void)a.dim();
    size_t rank = 0;
    Matrix basis = orthonormal_range(decomp.resolvents[i], tolerances().rank, &rank);
    if (rank != decomp.spectrum.multiplicities[i])
        throw Error(ErrorKind::RankMismatch,
                    "resolvent " + std::to_string(i) + " has numerical rank " +
                        std::to_string(rank) + ", expected multiplicity " +
                        std::to_string(decomp.spectrum.multiplicities[i]));
    return basis;
}

namespace {

// Unit-norm columns orthogonalized against `against` (modified Gram-Schmidt,
// two passes); returns the residual norm before normalization.
double orthogonalize(std::vector<Complex>& v, const std::vector<std::vector<Complex>>& against) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : against) {
            Complex dot{0.0};
            for (size_t i = 0; i < v.size(); ++i) dot += std::conj(q[i]) * v[i];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * q[i];
        }
    }
    double norm = 0.0;
    for (const Complex& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (Complex& x : v) x /= norm;
    return norm;
}

std::vector<Complex> matvec(const Matrix& m, const std::vector<Complex>& x) { return m * x; }

// One attempt at the grade-descending greedy construction. Candidate kernels
// can be mixed by a random rotation on retries.
std::vector<std::vector<Complex>> pick_heads(const Matrix& m_op,
                                             const std::vector<Matrix>& kernels,
                                             std::vector<unsigned>& head_grades,
                                             std::mt19937_64& rng, bool randomize) {
    const size_t m = m_op.rows();
    const size_t depth = kernels.size() - 1;  // kernels[g] = ker(M^g), g = 0..depth
    std::vector<std::vector<Complex>> heads;
    head_grades.clear();

    auto dim_ker = [&](size_t g) { return kernels[g].cols(); };

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (size_t g = depth; g >= 1; --g) {
        const size_t chains_ge_g = dim_ker(g) - dim_ker(g - 1);
        const size_t chains_ge_g1 = g < depth ? dim_ker(g + 1) - dim_ker(g) : 0;
        const size_t need = chains_ge_g - chains_ge_g1;

        // obstruction: ker(M^{g-1}) plus the grade-g vectors of longer chains
        std::vector<std::vector<Complex>> obstruction;
        for (size_t c = 0; c < kernels[g - 1].cols(); ++c)
            obstruction.push_back(kernels[g - 1].column(c));
        for (size_t h = 0; h < heads.size(); ++h) {
            std::vector<Complex> v = heads[h];
            for (unsigned step = 0; step < head_grades[h] - g; ++step) v = matvec(m_op, v);
            orthogonalize(v, obstruction);
            obstruction.push_back(std::move(v));
        }

        std::vector<std::vector<Complex>> candidates;
        for (size_t c = 0; c < kernels[g].cols(); ++c) candidates.push_back(kernels[g].column(c));
        if (randomize && candidates.size() > 1) {
            // mix candidates by random complex combinations
            std::vector<std::vector<Complex>> mixed(candidates.size(),
                                                    std::vector<Complex>(m, Complex{0.0}));
            for (auto& col : mixed)
                for (const auto& cand : candidates) {
                    const Complex w{gauss(rng), gauss(rng)};
                    for (size_t i = 0; i < m; ++i) col[i] += w * cand[i];
                }
            candidates = std::move(mixed);
        }

        for (size_t picked = 0; picked < need; ++picked) {
            double best_norm = -1.0;
            size_t best = 0;
            std::vector<Complex> best_vec;
            for (size_t c = 0; c < candidates.size(); ++c) {
                std::vector<Complex> v = candidates[c];
                const double norm = orthogonalize(v, obstruction);
                if (norm > best_norm) {
                    best_norm = norm;
                    best = c;
                    best_vec = std::move(v);
                }
            }
            if (best_norm < 1e-7) return {};  // dependent; caller retries
            candidates.erase(candidates.begin() + static_cast<long>(best));
            obstruction.push_back(best_vec);
            heads.push_back(std::move(best_vec));
            head_grades.push_back(static_cast<unsigned>(g));
        }
    }
    return heads;
}

}  // namespace

std::vector<Cycle> cycle_basis(const Matrix& a, Complex lambda, const Matrix& subspace) {
    const size_t n = a.dim();
    const size_t m = subspace.cols();
    if (subspace.rows() != n) throw Error(ErrorKind::DimensionMismatch, "subspace row count");
    if (m == 0) return {};

    // restrict A - lambda I to the subspace
    Matrix shifted = a;
    for (size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    const Matrix m_op = subspace.adjoint() * (shifted * subspace);

    // kernel filtration of the nilpotent restriction
    const double op_scale = std::max(1.0, m_op.frobenius_norm());
    std::vector<Matrix> kernels;
    kernels.push_back(Matrix(m, 0));  // ker(M^0)
    Matrix power = Matrix::identity(m);
    size_t depth = 0;
    for (size_t g = 1; g <= m; ++g) {
        power = power * m_op;
        const double cutoff = tolerances().rank * std::pow(op_scale, static_cast<double>(g));
        kernels.push_back(orthonormal_kernel(power, cutoff));
        if (kernels.back().cols() == m) {
            depth = g;
            break;
        }
    }
    if (depth == 0)
        throw Error(ErrorKind::DependentCycles,
                    "restriction of A - lambda I is not numerically nilpotent");
    kernels.resize(depth + 1);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::vector<std::vector<Complex>> heads;
    std::vector<unsigned> head_grades;
    for (int attempt = 0; attempt < 3; ++attempt) {
        heads = pick_heads(m_op, kernels, head_grades, rng, attempt > 0);
        if (!heads.empty() || m == 0) break;
    }
    if (heads.empty())
        throw Error(ErrorKind::DependentCycles, "could not select independent cycle heads");

    // chains generated in ambient coordinates so the superdiagonal relations
    // hold to rounding regardless of subspace invariance error
    std::vector<Cycle> cycles;
    for (size_t h = 0; h < heads.size(); ++h) {
        Cycle cycle;
        std::vector<Complex> v = subspace * heads[h];
        cycle.push_back(v);
        for (unsigned step = 1; step < head_grades[h]; ++step) {
            v = shifted * v;
            cycle.push_back(v);
        }
        // scale the whole chain so the closing eigenvector has unit norm
        double tail = 0.0;
        for (const Complex& x : cycle.back()) tail += std::norm(x);
        tail = std::sqrt(tail);
        if (tail < 1e-300)
            throw Error(ErrorKind::DependentCycles, "degenerate cycle tail");
        for (auto& vec : cycle)
            for (Complex& x : vec) x /= tail;
        cycles.push_back(std::move(cycle));
    }

    // final independence check on the union
    Matrix stacked(n, m);
    size_t col = 0;
    for (const Cycle& c : cycles)
        for (const auto& vec : c) stacked.set_column(col++, vec);
    if (col_piv_qr(stacked).rank(tolerances().rank) != m)
        throw Error(ErrorKind::DependentCycles, "cycle union is numerically dependent");

    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& x, const Cycle& y) { return x.size() > y.size(); });
    return cycles;
}

JordanForm jordan_form(const Matrix& a) {
    const size_t n = a.dim();
    if (n > 50)
        throw Error(ErrorKind::Unsupported, "jordan_form limited to n <= 50");

    const SpectralDecomposition decomp = resolvents_at_matrix(a);

    // eigenvalues in lexicographic order drive the block layout
    std::vector<size_t> order(decomp.spectrum.count());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        const Complex lx = decomp.spectrum.eigenvalues[x];
        const Complex ly = decomp.spectrum.eigenvalues[y];
        if (lx.real() != ly.real()) return lx.real() < ly.real();
        return lx.imag() < ly.imag();
    });

    JordanForm out;
    out.p = Matrix(n, n);
    out.j = Matrix(n, n);
    size_t col = 0;
    for (size_t idx : order) {
        const Complex lambda = decomp.spectrum.eigenvalues[idx];
        const Matrix basis = generalized_eigenspace_basis(a, decomp, idx);
        const std::vector<Cycle> cycles = cycle_basis(a, lambda, basis);
        for (const Cycle& cycle : cycles) {
            const size_t size = cycle.size();
            // columns listed from the end of the cycle: eigenvector first
            for (size_t k = 0; k < size; ++k) {
                out.p.set_column(col + k, cycle[size - 1 - k]);
                out.j(col + k, col + k) = lambda;
                if (k + 1 < size) out.j(col + k, col + k + 1) = Complex{1.0};
            }
            out.blocks.push_back({lambda, static_cast<unsigned>(size)});
            col += size;
        }
    }

    out.residual = (a * out.p - out.p * out.j).frobenius_norm();
    double cond = 0.0;
    try {
        cond = condition_estimate(out.p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularMatrix) throw;
        throw Error(ErrorKind::VerificationFailed, "basis-change matrix is numerically singular");
    }
    const double tol = tolerances().jordan * a.frobenius_norm() * cond;
    if (out.residual > tol)
        throw Error(ErrorKind::VerificationFailed,
                    "residual " + format_double(out.residual) + " exceeds " + format_double(tol));
    return out;
}

}  // namespace matfun
