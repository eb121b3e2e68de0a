#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "matfun/json_io.hpp"
#include "oracles.hpp"

using matfun::Complex;
using matfun::Json;

TEST_CASE("polynomial json round trip keeps coefficients bit-exact") {
    oracle::Rng rng(191);
    for (int rep = 0; rep < 50; ++rep) {
        const matfun::Polynomial p = oracle::rand_poly(rng, static_cast<int>(rng() % 9));
        const matfun::Polynomial back = matfun::polynomial_from_json(matfun::to_json(p));
        REQUIRE(back.coeffs().size() == p.coeffs().size());
        for (size_t i = 0; i < p.coeffs().size(); ++i) CHECK(back.coeffs()[i] == p.coeffs()[i]);
    }
}

TEST_CASE("matrix json matches the documented shape") {
    const Json j = Json::parse(R"({"rows":[["9","-15","-25"],["1","0","0"],["0","1","0"]]})");
    const matfun::Matrix a = matfun::matrix_from_json(j);
    CHECK(a(0, 0) == Complex{9.0});
    CHECK(a(2, 1) == Complex{1.0});
    CHECK(matfun::to_json(a) == j);

    CHECK_THROWS_AS(matfun::matrix_from_json(Json::parse(R"({"rows":[["1","2"],["3"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matfun::matrix_from_json(Json::parse(R"({"rows":[["1","bad"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matfun::matrix_from_json(Json::parse(R"([1,2])")), std::invalid_argument);
}

TEST_CASE("interpolation spec json uses raw derivative values") {
    const Json j = Json::parse(
        R"({"nodes":[{"lambda":"5","multiplicity":2,"data":["0.2","-0.04"]},
                     {"lambda":"-1","multiplicity":1,"data":["-1"]}]})");
    const auto spec = matfun::interpolation_spec_from_json(j);
    REQUIRE(spec.nodes().size() == 2);
    CHECK(spec.total_degree() == 3);
    // internal storage is jet-scaled, identical here because orders are 0 and 1
    CHECK(spec.nodes()[0].data[1] == Complex{-0.04});

    // second derivative entries get divided by 2!
    const auto spec2 = matfun::interpolation_spec_from_json(Json::parse(
        R"({"nodes":[{"lambda":"0","multiplicity":3,"data":["1","0","4"]}]})"));
    CHECK(spec2.nodes()[0].data[2] == Complex{2.0});

    CHECK(matfun::to_json(spec) == j);  // writer emits raw values again

    CHECK_THROWS_AS(matfun::interpolation_spec_from_json(Json::parse(
                        R"({"nodes":[{"lambda":"5","multiplicity":2,"data":["1"]}]})")),
                    std::invalid_argument);
}

TEST_CASE("spectrum json round trip and char_poly reconstruction") {
    const Json j = Json::parse(
        R"({"eigenvalues":[{"value":"5","multiplicity":2},{"value":"-1","multiplicity":1}]})");
    const auto s = matfun::spectrum_from_json(j);
    REQUIRE(s.count() == 2);
    CHECK(s.eigenvalues[0] == Complex{5.0});
    CHECK(s.multiplicities[0] == 2);
    // char_poly reconstructed from the roots when absent
    const matfun::Polynomial want({Complex{25}, Complex{15}, Complex{-9}, Complex{1}});
    CHECK((s.char_poly - want).max_coeff_norm() < 1e-12);

    const auto back = matfun::spectrum_from_json(matfun::to_json(s));
    CHECK(back.eigenvalues == s.eigenvalues);
    CHECK(back.multiplicities == s.multiplicities);

    CHECK_THROWS_AS(matfun::spectrum_from_json(Json::parse(R"({"eigenvalues":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matfun::spectrum_from_json(Json::parse(
            R"({"eigenvalues":[{"value":"1","multiplicity":0}]})")),
        std::invalid_argument);
}

TEST_CASE("function spec json round trip") {
    oracle::Rng rng(193);
    std::vector<matfun::FunctionSpec> funcs;
    funcs.push_back(matfun::FunctionSpec::exp());
    funcs.push_back(matfun::FunctionSpec::sin());
    funcs.push_back(matfun::FunctionSpec::cos());
    funcs.push_back(matfun::FunctionSpec::reciprocal());
    funcs.push_back(matfun::FunctionSpec::power(-3));
    funcs.push_back(matfun::FunctionSpec::polynomial(oracle::rand_poly(rng, 4)));
    funcs.push_back(matfun::FunctionSpec::rational(oracle::rand_poly(rng, 2),
                                                   oracle::rand_poly(rng, 3)));
    funcs.push_back(matfun::FunctionSpec::scaled_exp(Complex{0.5, -1.5}));

    for (const auto& f : funcs) {
        const auto back = matfun::function_spec_from_json(matfun::to_json(f));
        // same variant, same behavior at a probe point
        CHECK(back.variant().index() == f.variant().index());
        const Complex probe{1.7, 0.4};
        if (!f.is_pole(probe)) CHECK(eval(back, probe) == eval(f, probe));
    }

    CHECK_THROWS_AS(matfun::function_spec_from_json(Json::parse(R"({"kind":"log"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matfun::function_spec_from_json(Json::parse(R"("exp")")),
                    std::invalid_argument);
}

TEST_CASE("ode json") {
    const auto ode = matfun::ode_from_json(Json::parse(R"({"coeffs":["25","15","-9"]})"));
    REQUIRE(ode.order() == 3);
    CHECK(ode.coeffs[0] == Complex{25.0});
    CHECK(ode.coeffs[2] == Complex{-9.0});
    CHECK_THROWS_AS(matfun::ode_from_json(Json::parse(R"({"coeffs":[]})")), std::invalid_argument);
}
