#include "matfun/ode.hpp"

#include <stdexcept>

#include "matfun/errors.hpp"
#include "matfun/matrix_functions.hpp"

namespace matfun {

Matrix companion(const LinearODE& ode) {
    const size_t n = ode.order();
    if (n < 1) throw std::invalid_argument("ODE order must be >= 1");
    Matrix a(n, n);
    for (size_t j = 0; j < n; ++j) a(0, j) = -ode.coeffs[n - 1 - j];
    for (size_t i = 1; i < n; ++i) a(i, i - 1) = Complex{1.0};
    return a;
}

std::string render_term(const SolutionTerm& term) {
    std::string exp_part;
    if (term.lambda == Complex{0.0}) {
        exp_part = "1";
    } else if (term.lambda == Complex{1.0}) {
        exp_part = "exp(t)";
    } else if (term.lambda == Complex{-1.0}) {
        exp_part = "exp(-t)";
    } else {
        const std::string c = format_complex(term.lambda);
        const bool needs_parens = c.find('+') != std::string::npos ||
                                  c.find('-', 1) != std::string::npos || c.back() == 'i';
        exp_part = "exp(" + (needs_parens ? "(" + c + ")" : c) + "t)";
    }
    if (term.power == 0) return exp_part;
    const std::string t_part = "t^" + std::to_string(term.power);
    if (exp_part == "1") return t_part;
    return t_part + " * " + exp_part;
}

SolutionBasis general_solution_basis(const LinearODE& ode) {
    const SpectrumEstimate spectrum = spectrum_of(companion(ode));
    SolutionBasis basis;
    basis.warnings = spectrum.warnings;
    for (size_t i = 0; i < spectrum.count(); ++i)
        for (unsigned p = 0; p < spectrum.multiplicities[i]; ++p)
            basis.terms.push_back({spectrum.eigenvalues[i], p});
    return basis;
}

std::vector<Complex> ivp_solve(const Matrix& a, const std::vector<Complex>& y0, double t) {
    if (y0.size() != a.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "initial state has length " + std::to_string(y0.size()) + ", expected " +
                        std::to_string(a.dim()));
    return matrix_exp(a, Complex{t}) * y0;
}

std::vector<Complex> ivp_solve(const LinearODE& ode, const std::vector<Complex>& y0, double t) {
    return ivp_solve(companion(ode), y0, t);
}

}  // namespace matfun
