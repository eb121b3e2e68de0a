#pragma once

#include <string>
#include <vector>

#include "matfun/matrix.hpp"
#include "matfun/spectrum.hpp"

namespace matfun {

// y^(n) + a_{n-1} y^(n-1) + ... + a_0 y = 0, stored ascending: coeffs[k] = a_k.
struct LinearODE {
    std::vector<Complex> coeffs;

    size_t order() const { return coeffs.size(); }
};

// Companion matrix with state vector (y^(n-1), ..., y', y) top to bottom:
// first row (-a_{n-1}, ..., -a_0), ones on the subdiagonal.
Matrix companion(const LinearODE& ode);

// One basis function t^power * exp(lambda t).
struct SolutionTerm {
    Complex lambda;
    unsigned power = 0;
};

struct SolutionBasis {
    std::vector<SolutionTerm> terms;
    std::vector<std::string> warnings;  // propagated from the spectrum
};

std::string render_term(const SolutionTerm& term);  // e.g. "t^1 * exp(5t)"

// {t^p e^{lambda_i t} : 0 <= p < m_i} from the companion-matrix spectrum.
SolutionBasis general_solution_basis(const LinearODE& ode);

// y(t) = exp(tA) y0. For the scalar-ODE form, y0 follows the companion state
// ordering (highest derivative first).
std::vector<Complex> ivp_solve(const Matrix& a, const std::vector<Complex>& y0, double t);
std::vector<Complex> ivp_solve(const LinearODE& ode, const std::vector<Complex>& y0, double t);

}  // namespace matfun
