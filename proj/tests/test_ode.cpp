#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matfun/errors.hpp"
#include "matfun/ode.hpp"
#include "oracles.hpp"

using matfun::Complex;
using matfun::LinearODE;
using matfun::Matrix;

namespace {

// y''' - 9y'' + 15y' + 25y = 0
const LinearODE kPaperOde{{Complex{25}, Complex{15}, Complex{-9}}};

double vec_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
    return std::sqrt(acc);
}

}  // namespace

TEST_CASE("companion matrix of the paper ODE") {
    const Matrix c = companion(kPaperOde);
    const Matrix want = Matrix::from_rows({{Complex{9}, Complex{-15}, Complex{-25}},
                                           {Complex{1}, Complex{0}, Complex{0}},
                                           {Complex{0}, Complex{1}, Complex{0}}});
    CHECK(c == want);  // exact layout
}

TEST_CASE("first-order companion is the scalar coefficient") {
    const Complex lambda{0.7, -0.2};
    const Matrix c = companion(LinearODE{{-lambda}});  // y' - lambda y = 0
    REQUIRE(c.rows() == 1);
    CHECK(c(0, 0) == lambda);
}

TEST_CASE("companion characteristic polynomial matches the ODE coefficients") {
    oracle::Rng rng(151);
    for (int rep = 0; rep < 20; ++rep) {
        const size_t n = 1 + rng() % 5;
        LinearODE ode;
        for (size_t i = 0; i < n; ++i) ode.coeffs.push_back(oracle::rand_complex(rng, 2.0));

        std::vector<Complex> monic = ode.coeffs;
        monic.push_back(Complex{1.0});
        const matfun::Polynomial want(std::move(monic));
        const matfun::Polynomial got = characteristic_polynomial(companion(ode));
        CHECK((got - want).max_coeff_norm() <= 1e-8 * std::max(1.0, want.max_coeff_norm()));
    }
}

TEST_CASE("solution basis of the paper ODE: exp(5t), t exp(5t), exp(-t)") {
    const auto basis = general_solution_basis(kPaperOde);
    REQUIRE(basis.terms.size() == 3);
    CHECK(std::abs(basis.terms[0].lambda - Complex{5.0}) < 1e-8);
    CHECK(basis.terms[0].power == 0);
    CHECK(std::abs(basis.terms[1].lambda - Complex{5.0}) < 1e-8);
    CHECK(basis.terms[1].power == 1);
    CHECK(std::abs(basis.terms[2].lambda - Complex{-1.0}) < 1e-8);
    CHECK(basis.terms[2].power == 0);

    CHECK(render_term(basis.terms[0]) == "exp(5t)");
    CHECK(render_term(basis.terms[1]) == "t^1 * exp(5t)");
}

TEST_CASE("oscillator and flat ODEs") {
    const auto osc = general_solution_basis(LinearODE{{Complex{1}, Complex{0}}});  // y'' + y = 0
    REQUIRE(osc.terms.size() == 2);
    CHECK(std::abs(osc.terms[0].lambda - Complex{0.0, -1.0}) < 1e-9);
    CHECK(std::abs(osc.terms[1].lambda - Complex{0.0, 1.0}) < 1e-9);

    const auto flat = general_solution_basis(LinearODE{{Complex{0}, Complex{0}}});  // y'' = 0
    REQUIRE(flat.terms.size() == 2);
    CHECK(std::abs(flat.terms[0].lambda) < 1e-12);
    CHECK(flat.terms[0].power == 0);
    CHECK(flat.terms[1].power == 1);
    CHECK(render_term(flat.terms[0]) == "1");
    CHECK(render_term(flat.terms[1]) == "t^1");
}

TEST_CASE("ivp basics") {
    const std::vector<Complex> y0{Complex{0}, Complex{0}, Complex{1}};
    CHECK(vec_distance(ivp_solve(kPaperOde, y0, 0.0), y0) == 0.0);

    // scalar y' = lambda y
    const Complex lambda{0.3, 0.8};
    const auto scalar = ivp_solve(LinearODE{{-lambda}}, {Complex{1.0}}, 2.0);
    CHECK(std::abs(scalar[0] - std::exp(lambda * 2.0)) < 1e-10);

    CHECK_THROWS_AS(ivp_solve(kPaperOde, {Complex{1.0}}, 1.0), matfun::Error);
}

TEST_CASE("paper IVP matches an RK4 integration") {
    const std::vector<Complex> y0{Complex{0}, Complex{0}, Complex{1}};
    const Matrix a = companion(kPaperOde);
    for (const double t : {0.1, 0.5, 1.0}) {
        const auto direct = ivp_solve(kPaperOde, y0, t);
        const auto stepped = oracle::rk4(a, y0, t, 1e-4);
        double scale = 0.0;
        for (const auto& v : stepped) scale = std::max(scale, std::abs(v));
        CHECK(vec_distance(direct, stepped) <= 1e-6 * std::max(1.0, scale));
    }
}

TEST_CASE("semigroup property of the flow") {
    oracle::Rng rng(157);
    for (int rep = 0; rep < 10; ++rep) {
        LinearODE ode;
        const size_t n = 2 + rng() % 3;
        for (size_t i = 0; i < n; ++i) ode.coeffs.push_back(oracle::rand_complex(rng, 1.0));
        std::vector<Complex> y0(n);
        for (auto& v : y0) v = oracle::rand_complex(rng, 1.0);

        const double t1 = 0.4, t2 = 0.7;
        const auto chained = ivp_solve(ode, ivp_solve(ode, y0, t1), t2);
        const auto whole = ivp_solve(ode, y0, t1 + t2);
        double scale = 0.0;
        for (const auto& v : whole) scale = std::max(scale, std::abs(v));
        CHECK(vec_distance(chained, whole) <= 1e-7 * std::max(1.0, scale));
    }
}

TEST_CASE("each basis term satisfies the ODE, checked through jets") {
    oracle::Rng rng(163);
    for (int rep = 0; rep < 10; ++rep) {
        LinearODE ode;
        const size_t n = 2 + rng() % 3;
        for (size_t i = 0; i < n; ++i)
            ode.coeffs.push_back(Complex{std::round(oracle::rand_complex(rng, 3.0).real())});
        const auto basis = general_solution_basis(ode);

        for (const auto& term : basis.terms) {
            // u(t) = t^p e^{lambda t}; derivatives via jet arithmetic
            std::vector<Complex> tpow(term.power + 1, Complex{0.0});
            tpow.back() = Complex{1.0};
            const auto poly_part = matfun::FunctionSpec::polynomial(matfun::Polynomial(tpow));
            const auto exp_part = matfun::FunctionSpec::scaled_exp(term.lambda);

            for (int s = 0; s < 16; ++s) {
                const Complex ts{-1.5 + 0.2 * s, 0.0};
                const matfun::Jet u = jet_mul(jet_of(poly_part, ts, static_cast<unsigned>(n)),
                                              jet_of(exp_part, ts, static_cast<unsigned>(n)));
                Complex residual = u.derivative(n);
                double scale = std::abs(residual);
                for (size_t k = 0; k < n; ++k) {
                    const Complex d = u.derivative(k);
                    residual += ode.coeffs[k] * d;
                    scale = std::max(scale, std::abs(d));
                }
                CHECK(std::abs(residual) <= 1e-7 * std::max(1.0, scale));
            }
        }
    }
}

TEST_CASE("wronskian of the basis at t = 0 is nonsingular") {
    oracle::Rng rng(167);
    for (int rep = 0; rep < 10; ++rep) {
        LinearODE ode;
        const size_t n = 2 + rng() % 3;
        for (size_t i = 0; i < n; ++i)
            ode.coeffs.push_back(Complex{std::round(oracle::rand_complex(rng, 2.0).real()),
                                         std::round(oracle::rand_complex(rng, 1.0).real())});
        const auto basis = general_solution_basis(ode);
        REQUIRE(basis.terms.size() == n);

        // W[j][k] = (d/dt)^j term_k at t = 0
        Matrix w(n, n);
        for (size_t k = 0; k < n; ++k) {
            std::vector<Complex> tpow(basis.terms[k].power + 1, Complex{0.0});
            tpow.back() = Complex{1.0};
            const matfun::Jet u =
                jet_mul(jet_of(matfun::FunctionSpec::polynomial(matfun::Polynomial(tpow)),
                               Complex{0.0}, static_cast<unsigned>(n - 1)),
                        jet_of(matfun::FunctionSpec::scaled_exp(basis.terms[k].lambda),
                               Complex{0.0}, static_cast<unsigned>(n - 1)));
            for (size_t j = 0; j < n; ++j) w(j, k) = u.derivative(j);
        }
        // scale columns to unit norm before taking the determinant
        for (size_t k = 0; k < n; ++k) {
            double norm = 0.0;
            for (size_t j = 0; j < n; ++j) norm += std::norm(w(j, k));
            norm = std::sqrt(norm);
            for (size_t j = 0; j < n; ++j) w(j, k) /= norm;
        }
        CHECK(std::abs(determinant(w)) > 1e-8);
    }
}
