#include "matfun/matrix_functions.hpp"

#include <algorithm>
#include <cmath>

#include "matfun/errors.hpp"
#include "matfun/tolerances.hpp"

namespace matfun {

Matrix poly_at_matrix(const Polynomial& p, const Matrix& a) {
    const size_t n = a.dim();
    Matrix acc(n, n);
    const auto& c = p.coeffs();
    for (size_t k = c.size(); k-- > 0;) {
        acc = acc * a;
        for (size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    return acc;
}

Matrix newton_at_matrix(const HermiteNewtonForm& form, const Matrix& a) {
    const size_t n = a.dim();
    Matrix acc(n, n);
    if (form.coeffs.empty()) return acc;
    for (size_t i = 0; i < n; ++i) acc(i, i) = form.coeffs.back();
    for (size_t k = form.coeffs.size() - 1; k-- > 0;) {
        Matrix shifted = a;
        for (size_t i = 0; i < n; ++i) shifted(i, i) -= form.centers[k];
        acc = acc * shifted;
        for (size_t i = 0; i < n; ++i) acc(i, i) += form.coeffs[k];
    }
    return acc;
}

namespace {

const SpectrumEstimate& ensure_spectrum(const Matrix& a,
                                        const std::optional<SpectrumEstimate>& given,
                                        std::optional<SpectrumEstimate>& storage) {
    if (given) return *given;
    storage = spectrum_of(a);
    return *storage;
}

void check_poles(const FunctionSpec& f, const SpectrumEstimate& spectrum) {
    for (const Complex& lambda : spectrum.eigenvalues)
        if (f.is_pole(lambda))
            throw Error(ErrorKind::PoleAtEigenvalue,
                        f.name() + " has a pole at eigenvalue " + format_complex(lambda));
}

}  // namespace

Matrix apply_function(const FunctionSpec& f, const Matrix& a,
                      const std::optional<SpectrumEstimate>& spectrum) {
    const size_t n = a.dim();
    if (const auto* poly = std::get_if<FunctionSpec::Poly>(&f.variant()))
        if (poly->p.degree() < static_cast<int>(n)) return poly_at_matrix(poly->p, a);

    std::optional<SpectrumEstimate> storage;
    const SpectrumEstimate& spec = ensure_spectrum(a, spectrum, storage);
    check_poles(f, spec);
    return poly_at_matrix(hermite_from_function(f, spec.node_list()), a);
}

InverseResult inverse_via_interp(const Matrix& a,
                                 const std::optional<SpectrumEstimate>& spectrum) {
    std::optional<SpectrumEstimate> storage;
    const SpectrumEstimate& spec = ensure_spectrum(a, spectrum, storage);
    for (const Complex& lambda : spec.eigenvalues)
        if (std::abs(lambda) < tolerances().pole * (1.0 + std::abs(lambda)))
            throw Error(ErrorKind::SingularMatrix, "0 is an eigenvalue");

    InverseResult out{apply_function(FunctionSpec::reciprocal(), a, spec), 0.0};
    out.residual = (a * out.inverse - Matrix::identity(a.dim())).frobenius_norm();
    return out;
}

Matrix matrix_exp(const Matrix& a, Complex t, const std::optional<SpectrumEstimate>& spectrum) {
    if (t == Complex{0.0}) return Matrix::identity(a.dim());
    return apply_function(FunctionSpec::scaled_exp(t), a, spectrum);
}

double matrix_identity_tol(const Matrix& a, const SpectrumEstimate& spectrum) {
    return tolerances().matrix_identity *
           std::pow(1.0 + a.frobenius_norm(), static_cast<double>(spectrum.max_multiplicity()));
}

SpectralDecomposition resolvents_at_matrix(const Matrix& a,
                                           const std::optional<SpectrumEstimate>& spectrum) {
    const size_t n = a.dim();
    std::optional<SpectrumEstimate> storage;
    SpectralDecomposition out;
    out.spectrum = ensure_spectrum(a, spectrum, storage);

    const NodeList nodes = out.spectrum.node_list();
    for (size_t i = 0; i < nodes.size(); ++i) {
        Matrix shifted = a;
        for (size_t d = 0; d < n; ++d) shifted(d, d) -= nodes[i].lambda;
        Matrix resolvent = poly_at_matrix(principal_resolvent(nodes, i), a);
        out.nilpotent_parts.push_back(shifted * resolvent);
        out.resolvents.push_back(std::move(resolvent));
    }

    const ResolventIdentityReport report = verify_resolvent_identities(out, a);
    if (!report.all_within_tolerance())
        throw Error(ErrorKind::IdentityCheckFailed,
                    "resolvent identity residual " + format_double(report.max_residual()) +
                        " exceeds " + format_double(report.tolerance) +
                        " (is the supplied spectrum correct?)");
    return out;
}

Matrix taylor_resolvent_apply(const FunctionSpec& f, const Matrix& a,
                              const SpectralDecomposition& decomp) {
    const size_t n = a.dim();
    check_poles(f, decomp.spectrum);

    Matrix acc(n, n);
    for (size_t i = 0; i < decomp.resolvents.size(); ++i) {
        const Complex lambda = decomp.spectrum.eigenvalues[i];
        const unsigned m = decomp.spectrum.multiplicities[i];
        const Jet jet = jet_of(f, lambda, m - 1);

        Matrix shifted = a;
        for (size_t d = 0; d < n; ++d) shifted(d, d) -= lambda;

        // Taylor polynomial of f at lambda_i evaluated at A, times L_i(A)
        Matrix taylor(n, n);
        Matrix power = Matrix::identity(n);
        for (unsigned p = 0; p < m; ++p) {
            if (p > 0) power = power * shifted;
            taylor = taylor + power * jet.coeffs[p];
        }
        acc = acc + taylor * decomp.resolvents[i];
    }
    return acc;
}

double ResolventIdentityReport::max_residual() const {
    return std::max(std::max(partition_residual, cross_residual),
                    std::max(idempotency_residual, nilpotent_residual));
}

ResolventIdentityReport verify_resolvent_identities(const SpectralDecomposition& decomp,
                                                    const Matrix& a) {
    const size_t n = a.dim();
    const size_t k = decomp.resolvents.size();
    ResolventIdentityReport report;
    report.tolerance = matrix_identity_tol(a, decomp.spectrum);

    Matrix sum(n, n);
    for (const Matrix& l : decomp.resolvents) sum = sum + l;
    report.partition_residual = (sum - Matrix::identity(n)).frobenius_norm();

    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            report.cross_residual =
                std::max(report.cross_residual,
                         (decomp.resolvents[i] * decomp.resolvents[j]).frobenius_norm());
        }
        report.idempotency_residual =
            std::max(report.idempotency_residual,
                     (decomp.resolvents[i] * decomp.resolvents[i] - decomp.resolvents[i])
                         .frobenius_norm());

        // (A - lambda_i I)^m_i L_i = (A - lambda_i I)^(m_i - 1) * nilpotent part
        Matrix shifted = a;
        for (size_t d = 0; d < n; ++d) shifted(d, d) -= decomp.spectrum.eigenvalues[i];
        Matrix power = decomp.nilpotent_parts[i];
        for (unsigned p = 1; p < decomp.spectrum.multiplicities[i]; ++p) power = shifted * power;
        report.nilpotent_residual = std::max(report.nilpotent_residual, power.frobenius_norm());
    }
    return report;
}

}  // namespace matfun
