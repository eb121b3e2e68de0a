#pragma once

#include <vector>

#include "matfun/matrix.hpp"
#include "matfun/matrix_functions.hpp"

namespace matfun {

// Orthonormal basis of the range of resolvent i, i.e. of the generalized
// eigenspace for eigenvalue i. Throws RankMismatch when the numerical rank
// differs from the algebraic multiplicity.
Matrix generalized_eigenspace_basis(const Matrix& a, const SpectralDecomposition& decomp,
                                    size_t i);

// A cycle of generalized eigenvectors {v, (A - lambda I)v, ..., (A - lambda I)^{p-1} v},
// listed head first.
using Cycle = std::vector<std::vector<Complex>>;

// Cycles whose union is a basis of `subspace` (columns = orthonormal basis of
// a space annihilated by a power of A - lambda I). Built greedily from the
// highest nilpotency grade downward, orthogonalizing against lower grades.
// Throws DependentCycles if independence cannot be reached.
std::vector<Cycle> cycle_basis(const Matrix& a, Complex lambda, const Matrix& subspace);

struct JordanBlock {
    Complex lambda;
    unsigned size = 1;

    bool operator==(const JordanBlock&) const = default;
};

struct JordanForm {
    Matrix p;  // basis change, columns are cycles listed eigenvector first
    Matrix j;  // block diagonal
    std::vector<JordanBlock> blocks;  // sorted by (eigenvalue lex, size descending)
    double residual = 0.0;            // ||A P - P J||_F
};

// A = P J P^-1 assembled from resolvent projectors and cycle bases. The
// residual is checked against jordan tolerance x |A|_F x cond(P); a failure
// raises VerificationFailed.
JordanForm jordan_form(const Matrix& a);

}  // namespace matfun
