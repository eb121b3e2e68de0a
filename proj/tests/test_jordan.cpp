#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "matfun/errors.hpp"
#include "matfun/jordan.hpp"
#include "oracles.hpp"

using matfun::Complex;
using matfun::Matrix;

namespace {

Matrix paper_a() {
    return Matrix::from_rows({{Complex{9}, Complex{-15}, Complex{-25}},
                              {Complex{1}, Complex{0}, Complex{0}},
                              {Complex{0}, Complex{1}, Complex{0}}});
}

Matrix jordan_block(Complex lambda, size_t size) {
    Matrix j(size, size);
    for (size_t i = 0; i < size; ++i) {
        j(i, i) = lambda;
        if (i + 1 < size) j(i, i + 1) = Complex{1.0};
    }
    return j;
}

}  // namespace

TEST_CASE("generalized eigenspaces of a diagonal matrix are coordinate spans") {
    Matrix d(3, 3);
    d(0, 0) = Complex{2.0};
    d(1, 1) = Complex{2.0};
    d(2, 2) = Complex{7.0};
    const auto decomp = resolvents_at_matrix(d);
    const Matrix b0 = generalized_eigenspace_basis(d, decomp, 0);
    REQUIRE(b0.cols() == 2);
    // the eigenvalue-2 space is spanned by e_0, e_1: third coordinate vanishes
    for (size_t c = 0; c < 2; ++c) CHECK(std::abs(b0(2, c)) < 1e-12);
}

TEST_CASE("paper matrix: eigenvalue-5 space is annihilated by (A - 5I)^2") {
    const Matrix a = paper_a();
    const auto decomp = resolvents_at_matrix(a);
    REQUIRE(decomp.spectrum.multiplicities[0] == 2);
    const Matrix basis = generalized_eigenspace_basis(a, decomp, 0);
    REQUIRE(basis.cols() == 2);

    Matrix shifted = a;
    for (size_t i = 0; i < 3; ++i) shifted(i, i) -= Complex{5.0};
    const Matrix annihilated = shifted * (shifted * basis);
    for (size_t c = 0; c < 2; ++c) {
        double norm = 0.0;
        for (size_t i = 0; i < 3; ++i) norm += std::norm(annihilated(i, c));
        CHECK(std::sqrt(norm) <= 1e-8);
    }
}

TEST_CASE("a full jordan block owns the whole space") {
    const Matrix j = jordan_block(Complex{1.0, -0.5}, 3);
    const auto decomp = resolvents_at_matrix(j);
    const Matrix basis = generalized_eigenspace_basis(j, decomp, 0);
    CHECK(basis.cols() == 3);
}

TEST_CASE("cycle structure of J2 + J1 with one eigenvalue") {
    Matrix a(3, 3);
    a(0, 0) = Complex{2.0};
    a(0, 1) = Complex{1.0};
    a(1, 1) = Complex{2.0};
    a(2, 2) = Complex{2.0};
    const auto decomp = resolvents_at_matrix(a);
    const Matrix basis = generalized_eigenspace_basis(a, decomp, 0);
    const auto cycles = cycle_basis(a, Complex{2.0}, basis);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].size() == 2);
    CHECK(cycles[1].size() == 1);
}

TEST_CASE("paper matrix at eigenvalue 5: one cycle of length 2") {
    const Matrix a = paper_a();
    const auto decomp = resolvents_at_matrix(a);
    const auto cycles = cycle_basis(a, Complex{5.0}, generalized_eigenspace_basis(a, decomp, 0));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].size() == 2);
}

TEST_CASE("diagonalizable subspaces give cycles of length 1") {
    Matrix d(3, 3);
    d(0, 0) = Complex{3.0};
    d(1, 1) = Complex{3.0};
    d(2, 2) = Complex{-1.0};
    const auto decomp = resolvents_at_matrix(d);
    const auto cycles = cycle_basis(d, Complex{3.0}, generalized_eigenspace_basis(d, decomp, 0));
    REQUIRE(cycles.size() == 2);
    for (const auto& c : cycles) CHECK(c.size() == 1);
}

TEST_CASE("jordan form of the paper matrix") {
    const auto form = jordan_form(paper_a());
    REQUIRE(form.blocks.size() == 2);
    // blocks ordered by eigenvalue (re, im) lexicographic
    CHECK(std::abs(form.blocks[0].lambda - Complex{-1.0}) < 1e-8);
    CHECK(form.blocks[0].size == 1);
    CHECK(std::abs(form.blocks[1].lambda - Complex{5.0}) < 1e-8);
    CHECK(form.blocks[1].size == 2);
    CHECK(form.residual <= 1e-8 * paper_a().frobenius_norm());
}

TEST_CASE("jordan form of simple fixtures") {
    Matrix d(3, 3);
    d(0, 0) = Complex{3.0};
    d(1, 1) = Complex{3.0};
    d(2, 2) = Complex{7.0};
    const auto diag_form = jordan_form(d);
    REQUIRE(diag_form.blocks.size() == 3);
    CHECK(diag_form.blocks[0].size == 1);
    CHECK(diag_form.blocks[1].size == 1);
    CHECK(diag_form.blocks[2].size == 1);
    CHECK(std::abs(diag_form.blocks[2].lambda - Complex{7.0}) < 1e-10);

    const Matrix nil = Matrix::from_rows({{Complex{0}, Complex{1}}, {Complex{0}, Complex{0}}});
    const auto nil_form = jordan_form(nil);
    REQUIRE(nil_form.blocks.size() == 1);
    CHECK(nil_form.blocks[0].size == 2);
    CHECK(std::abs(nil_form.blocks[0].lambda) < 1e-12);
}

TEST_CASE("block multiset recovery and reconstruction on random structured matrices") {
    oracle::Rng rng(173);
    int done = 0;
    while (done < 25) {
        const size_t n = 2 + rng() % 7;
        const auto gen = oracle::rand_jordan_structured(rng, n, 100.0);
        const auto form = jordan_form(gen.a);
        ++done;

        // recovered block multiset must match the constructed one exactly
        std::map<std::pair<std::pair<double, double>, unsigned>, int> want, got;
        for (const auto& [lambda, size] : gen.blocks)
            want[{{lambda.real(), lambda.imag()}, size}]++;
        for (const auto& b : form.blocks) {
            // snap the recovered eigenvalue to the half-integer lattice
            const Complex snapped{std::round(b.lambda.real() * 2.0) / 2.0,
                                  std::round(b.lambda.imag() * 2.0) / 2.0};
            got[{{snapped.real(), snapped.imag()}, b.size}]++;
        }
        CHECK(want == got);

        const Matrix reconstructed = form.p * form.j * gauss_inverse(form.p);
        CHECK((gen.a - reconstructed).frobenius_norm() <= 1e-6 * gen.a.frobenius_norm());
    }
}

TEST_CASE("the generalized eigenspaces jointly span the whole space") {
    oracle::Rng rng(179);
    for (int rep = 0; rep < 10; ++rep) {
        const size_t n = 3 + rng() % 5;
        const auto gen = oracle::rand_jordan_structured(rng, n, 50.0);
        const auto decomp = resolvents_at_matrix(gen.a);

        Matrix stacked(n, 0);
        for (size_t i = 0; i < decomp.spectrum.count(); ++i)
            stacked = stacked.with_columns(generalized_eigenspace_basis(gen.a, decomp, i));
        REQUIRE(stacked.cols() == n);
        CHECK(std::abs(determinant(stacked)) > 1e-8);  // columns are unit vectors
    }
}

TEST_CASE("jordan form verifies A P = P J columnwise") {
    oracle::Rng rng(181);
    for (int rep = 0; rep < 10; ++rep) {
        const auto gen = oracle::rand_jordan_structured(rng, 4 + rng() % 4, 60.0);
        const auto form = jordan_form(gen.a);

        // J is exactly block-Jordan: zeros elsewhere, ones on block superdiagonals
        size_t col = 0;
        for (const auto& block : form.blocks) {
            for (size_t k = 0; k < block.size; ++k) {
                CHECK(form.j(col + k, col + k) == block.lambda);
                if (k + 1 < block.size) CHECK(form.j(col + k, col + k + 1) == Complex{1.0});
            }
            col += block.size;
        }
        REQUIRE(col == gen.a.rows());

        for (size_t i = 0; i < form.j.rows(); ++i)
            for (size_t j = 0; j < form.j.cols(); ++j)
                if (form.j(i, j) != Complex{0.0}) CHECK((j == i || j == i + 1));
    }
}
