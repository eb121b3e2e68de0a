#pragma once

#include <optional>

#include "matfun/function_spec.hpp"
#include "matfun/interp.hpp"
#include "matfun/matrix.hpp"
#include "matfun/spectrum.hpp"

namespace matfun {

// Horner evaluation p(A).
Matrix poly_at_matrix(const Polynomial& p, const Matrix& a);

// Newton-basis evaluation of an interpolation polynomial at A,
//   a_0 I + a_1 (A - z_0 I) + a_2 (A - z_0 I)(A - z_1 I) + ...
// Alternate route to poly_at_matrix(form.to_polynomial(), A) for conditioning
// comparisons.
Matrix newton_at_matrix(const HermiteNewtonForm& form, const Matrix& a);

// f(A) as L(A), where L interpolates f at the spectrum with multiplicities.
// The spectrum is computed when not supplied. Low-degree polynomials short-
// circuit to direct Horner evaluation. Throws PoleAtEigenvalue when f has a
// pole at an eigenvalue.
Matrix apply_function(const FunctionSpec& f, const Matrix& a,
                      const std::optional<SpectrumEstimate>& spectrum = std::nullopt);

struct InverseResult {
    Matrix inverse;
    double residual = 0.0;  // ||A * inverse - I||_F
};

// A^-1 = L(A) for L interpolating 1/x at the spectrum.
// Throws SingularMatrix when 0 is (numerically) an eigenvalue.
InverseResult inverse_via_interp(const Matrix& a,
                                 const std::optional<SpectrumEstimate>& spectrum = std::nullopt);

// exp(tA) by interpolating x -> exp(t x) at the eigenvalues of A.
// t = 0 returns the identity exactly.
Matrix matrix_exp(const Matrix& a, Complex t = Complex{1.0},
                  const std::optional<SpectrumEstimate>& spectrum = std::nullopt);

// Spectral projectors L_i(A) and their nilpotent parts (A - lambda_i I) L_i(A).
struct SpectralDecomposition {
    SpectrumEstimate spectrum;
    std::vector<Matrix> resolvents;
    std::vector<Matrix> nilpotent_parts;
};

// Residual tolerance for the resolvent operator identities:
// matrix_identity x (1 + |A|_F)^max multiplicity.
double matrix_identity_tol(const Matrix& a, const SpectrumEstimate& spectrum);

// Evaluates every principal resolvent polynomial at A and validates the
// operator identities; a failure (usually a wrong user-supplied spectrum)
// raises IdentityCheckFailed.
SpectralDecomposition resolvents_at_matrix(
    const Matrix& a, const std::optional<SpectrumEstimate>& spectrum = std::nullopt);

// f(A) by the resolvent route:
//   sum_i [ sum_{p < m_i} f^(p)(lambda_i)/p! (A - lambda_i I)^p ] L_i(A).
Matrix taylor_resolvent_apply(const FunctionSpec& f, const Matrix& a,
                              const SpectralDecomposition& decomp);

struct ResolventIdentityReport {
    double partition_residual = 0.0;    // ||sum L_i - I||_F
    double cross_residual = 0.0;        // max ||L_i L_j||_F, i != j
    double idempotency_residual = 0.0;  // max ||L_i^2 - L_i||_F
    double nilpotent_residual = 0.0;    // max ||(A - lambda_i I)^m_i L_i||_F
    double tolerance = 0.0;

    double max_residual() const;
    bool all_within_tolerance() const { return max_residual() <= tolerance; }
};

ResolventIdentityReport verify_resolvent_identities(const SpectralDecomposition& decomp,
                                                    const Matrix& a);

}  // namespace matfun
