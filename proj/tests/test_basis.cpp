#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "orbispec/basis.hpp"
#include "orbispec/field.hpp"

using orbispec::BasisSpec;
using orbispec::enumerate_basis;
using orbispec::evaluate_mode;
using orbispec::GridField;
using orbispec::kPi;
using orbispec::ModeKind;
using orbispec::sample_mode_grid;
using orbispec::spectrum_inclusion_check;
using orbispec::SymmetricMode;
using orbispec::symmetrize;
using orbispec::torus_eigenvalue;

TEST_CASE("torus eigenvalues", "[basis]") {
    CHECK(torus_eigenvalue(0, 0, 12.0) == 0.0);
    CHECK(torus_eigenvalue(1, 0, 12.0) == Catch::Approx(kPi * kPi / 36.0).epsilon(1e-14));
    CHECK(torus_eigenvalue(2, 1, 12.0) ==
          Catch::Approx(kPi * kPi / 36.0 * 5.0).epsilon(1e-14));
}

TEST_CASE("symmetrize projects onto swap-symmetric fields", "[basis]") {
    const int n = 16;
    GridField f(12.0, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            f.at(i, j) = f.x_of(i); // sawtooth lift f(x, y) = x

    const GridField rf = symmetrize(f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            REQUIRE(rf.at(i, j) == 0.5 * (f.x_of(i) + f.x_of(j)));

    const GridField rrf = symmetrize(rf);
    REQUIRE(rrf.samples == rf.samples); // idempotent, symmetric input unchanged
}

TEST_CASE("basis enumeration starts with the constant mode", "[basis]") {
    const auto basis = enumerate_basis({12.0, 1});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].kind == ModeKind::Constant);
    CHECK(basis[0].eigenvalue == 0.0);
}

TEST_CASE("first distinct eigenvalue levels", "[basis]") {
    const auto basis = enumerate_basis({12.0, 40});
    std::set<long> levels;
    const double w2 = (2.0 * kPi / 12.0) * (2.0 * kPi / 12.0);
    for (const auto& m : basis) levels.insert(std::lround(m.eigenvalue / w2));
    std::vector<long> sorted(levels.begin(), levels.end());
    // c1^2 + c2^2 takes the values 0, 1, 2, 4, 5, ... (3 is not a sum of two squares)
    REQUIRE(sorted[0] == 0);
    REQUIRE(sorted[1] == 1);
    REQUIRE(sorted[2] == 2);
    REQUIRE(sorted[3] == 4);
    REQUIRE(sorted[4] == 5);
}

TEST_CASE("enumeration is consistent and ordered", "[basis]") {
    const auto basis = enumerate_basis({12.0, 300});
    REQUIRE(basis.size() == 300);
    CHECK(basis[0].eigenvalue == 0.0);
    CHECK(basis[1].eigenvalue > 0.0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        REQUIRE(basis[k].k == static_cast<int>(k));
        REQUIRE(basis[k].eigenvalue ==
                torus_eigenvalue(basis[k].c1, basis[k].c2, basis[k].gamma));
        REQUIRE(basis[k].c1 >= std::abs(basis[k].c2));
        if (k > 0) REQUIRE(basis[k].eigenvalue >= basis[k - 1].eigenvalue);
    }
    // prefix stability: a shorter enumeration is a prefix of a longer one
    const auto shorter = enumerate_basis({12.0, 120});
    for (std::size_t k = 0; k < shorter.size(); ++k) {
        REQUIRE(shorter[k].kind == basis[k].kind);
        REQUIRE(shorter[k].c1 == basis[k].c1);
        REQUIRE(shorter[k].c2 == basis[k].c2);
    }
}

TEST_CASE("modes are swap-symmetric and periodic", "[basis]") {
    const auto basis = enumerate_basis({12.0, 60});
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> coord(-6.0, 18.0);
    for (const auto& m : basis) {
        for (int trial = 0; trial < 20; ++trial) {
            const double x = coord(rng), y = coord(rng);
            const double v = evaluate_mode(m, x, y);
            REQUIRE(evaluate_mode(m, y, x) == Catch::Approx(v).margin(1e-12));
            REQUIRE(evaluate_mode(m, x + 12.0, y) == Catch::Approx(v).margin(1e-10));
        }
    }
}

TEST_CASE("constant mode is constant", "[basis]") {
    const auto basis = enumerate_basis({12.0, 1});
    const double v0 = evaluate_mode(basis[0], 0.0, 0.0);
    CHECK(v0 == Catch::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-14));
    CHECK(evaluate_mode(basis[0], 3.7, 9.1) == v0);
}

TEST_CASE("grid samples match pointwise evaluation", "[basis]") {
    const auto basis = enumerate_basis({12.0, 50});
    const int n = 24;
    for (const auto& m : basis) {
        const auto grid = sample_mode_grid(m, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double x = 12.0 * i / n, y = 12.0 * j / n;
                REQUIRE(grid[static_cast<std::size_t>(i) * n + j] ==
                        Catch::Approx(evaluate_mode(m, x, y)).margin(1e-12));
            }
    }
}

TEST_CASE("orthonormality under the orbifold inner product", "[basis]") {
    const auto basis = enumerate_basis({12.0, 80});
    const int n = 64;
    const double quad = 0.5 * (12.0 / n) * (12.0 / n);
    std::vector<std::vector<double>> grids;
    for (const auto& m : basis) grids.push_back(sample_mode_grid(m, n));
    double max_dev = 0.0;
    for (std::size_t a = 0; a < grids.size(); ++a)
        for (std::size_t b = a; b < grids.size(); ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < grids[a].size(); ++i) acc += grids[a][i] * grids[b][i];
            const double expected = (a == b) ? 1.0 : 0.0;
            max_dev = std::max(max_dev, std::fabs(quad * acc - expected));
        }
    REQUIRE(max_dev < 1e-10);
}

TEST_CASE("modes are fixed by the symmetrizer on the grid", "[basis]") {
    const auto basis = enumerate_basis({12.0, 40});
    const int n = 32;
    for (const auto& m : basis) {
        GridField f(12.0, n);
        f.samples = sample_mode_grid(m, n);
        const GridField rf = symmetrize(f);
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            REQUIRE(rf.samples[i] == Catch::Approx(f.samples[i]).margin(1e-14));
    }
}

TEST_CASE("spectrum inclusion check", "[basis]") {
    auto basis = enumerate_basis({12.0, 100});
    CHECK(spectrum_inclusion_check(basis, 12.0));
    CHECK(spectrum_inclusion_check(std::span<const SymmetricMode>{}, 12.0)); // vacuous
    basis[17].eigenvalue += 1e-3;
    CHECK_FALSE(spectrum_inclusion_check(basis, 12.0));
}
