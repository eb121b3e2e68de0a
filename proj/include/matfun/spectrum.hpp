#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matfun/interp.hpp"
#include "matfun/matrix.hpp"
#include "matfun/polynomial.hpp"

namespace matfun {

// Eigenvalues with multiplicities, ordered by descending multiplicity then
// lexicographic (re, im). Multiplicities always sum to deg(char_poly).
struct SpectrumEstimate {
    std::vector<Complex> eigenvalues;
    std::vector<unsigned> multiplicities;
    Polynomial char_poly;  // monic, det(xI - A) convention
    std::vector<std::string> warnings;

    size_t count() const { return eigenvalues.size(); }
    NodeList node_list() const;
    unsigned max_multiplicity() const;
};

// Monic det(xI - A) by the Faddeev-LeVerrier recurrence. Square input with
// n <= 50 (the recurrence is O(n^4) and loses accuracy beyond desk scale).
Polynomial characteristic_polynomial(const Matrix& a);

// Roots with multiplicities: square-free part via gcd(p, p'), Aberth-Ehrlich
// on it, clustering at cluster_tol, derivative-vanishing multiplicity
// assignment adjusted to sum to deg p, and a Newton polish of each root on
// the (m-1)-th derivative.
SpectrumEstimate find_roots_with_multiplicity(const Polynomial& p,
                                              std::optional<double> cluster_tol = std::nullopt);

SpectrumEstimate spectrum_of(const Matrix& a,
                             std::optional<double> cluster_tol = std::nullopt);

}  // namespace matfun
