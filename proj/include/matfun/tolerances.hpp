#pragma once

namespace matfun {

// Base tolerances for the library. Each consumer scales its base by a local
// problem-dependent factor (norms, data magnitudes, multiplicities); the bases
// themselves can be rescaled globally through scale_tolerances(), which is how
// the CLI applies MATFUN_TOL.
struct Tolerances {
    double pole = 1e-12;        // denominator-vanishing detection, x |(1 + |center|)
    double trim = 1e-12;        // trailing-coefficient trimming, x max |coeff|
    double gcd_cutoff = 1e-10;  // Euclidean remainder treated as zero, x running scale
    double node_sep = 1e-9;     // node distinctness, x (1 + max |lambda|)
    double interp_residual = 1e-6;  // post-hoc interpolation residual, x data scale
    double cluster = 1e-6;      // root clustering, x (1 + max |lambda|)
    double root_residual = 1e-6;    // derivative-vanishing multiplicity test
    double matrix_identity = 1e-8;  // resolvent identity residuals, x (1+|A|_F)^max m
    double rank = 1e-8;         // numerical rank cutoff, relative to largest pivot
    double jordan = 1e-6;       // Jordan residual, x |A|_F x cond(P)
};

Tolerances& tolerances();

// Multiplies every base tolerance of the global instance by `factor`.
void scale_tolerances(double factor);

}  // namespace matfun
