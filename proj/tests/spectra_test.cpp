#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "pcover/covers.hpp"
#include "pcover/spectra.hpp"
#include "support/oracles.hpp"

using namespace pcover;

TEST(Jacobi, IdentityAndDiagonal) {
    const auto ev = symmetric_eigenvalues(RealMatrix::identity(5));
    for (double x : ev) EXPECT_DOUBLE_EQ(x, 1.0);

    RealMatrix d(3);
    d(0, 0) = -2;
    d(1, 1) = 5;
    d(2, 2) = 0.5;
    EXPECT_EQ(symmetric_eigenvalues(d), (std::vector<double>{5, 0.5, -2}));
}

TEST(Jacobi, CycleSpectra) {
    for (std::size_t n : {3U, 5U, 7U, 12U, 13U}) {
        const auto ev = symmetric_eigenvalues(adjacency_matrix(cycle_graph(n)));
        EXPECT_LT(oracle::max_abs_diff(ev, oracle::cycle_spectrum(n)), 1e-10) << n;
    }
}

TEST(Jacobi, HypercubeSpectrumIsBinomial) {
    const auto r = graph_spectrum(hypercube(5));
    ASSERT_EQ(r.clusters.size(), 6U);
    for (std::size_t k = 0; k <= 5; ++k) {
        EXPECT_NEAR(r.clusters[k].value, 5.0 - 2.0 * static_cast<double>(k), 1e-9);
        EXPECT_EQ(r.clusters[k].multiplicity, std::vector<std::size_t>({1, 5, 10, 10, 5, 1})[k]);
    }
}

TEST(Hermitian, SignedHypercubeSpectrum) {
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto a = cohen_tits_signing(d);
        HermitianMatrix m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.at(i, j);
        const auto r = hermitian_eigenvalues(m);
        ASSERT_EQ(r.clusters.size(), 2U) << d;
        EXPECT_NEAR(r.clusters[0].value, std::sqrt(double(d)), 1e-9);
        EXPECT_NEAR(r.clusters[1].value, -std::sqrt(double(d)), 1e-9);
        EXPECT_EQ(r.clusters[0].multiplicity, std::size_t{1} << (d - 1));
        EXPECT_EQ(r.clusters[1].multiplicity, std::size_t{1} << (d - 1));
    }
}

TEST(Hermitian, RandomMatricesAgreeWithBisection) {
    std::mt19937_64 rng(99);
    for (std::size_t n = 1; n <= 20; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto m = oracle::random_hermitian(n, rng);
            const auto r = hermitian_eigenvalues(m);
            const auto expected = oracle::bisection_eigenvalues(m);
            EXPECT_LT(oracle::max_abs_diff(r.eigenvalues, expected), 1e-8) << "n=" << n;

            double trace = 0;
            for (std::size_t i = 0; i < n; ++i) trace += m(i, i).real();
            EXPECT_NEAR(std::accumulate(r.eigenvalues.begin(), r.eigenvalues.end(), 0.0), trace, 1e-9);
        }
    }
}

TEST(Hermitian, RejectsNonHermitian) {
    HermitianMatrix m(2);
    m(0, 1) = {0, 1};
    m(1, 0) = {0, 1};
    EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
    HermitianMatrix d(1);
    d(0, 0) = {1, 0.5};
    EXPECT_THROW(hermitian_eigenvalues(d), std::invalid_argument);
}

TEST(Hermitian, InterlacingOnPrincipalSubmatrices) {
    std::mt19937_64 rng(4242);
    const std::size_t n = 16;
    const auto a = oracle::random_hermitian(n, rng);
    const auto full = hermitian_eigenvalues(a).eigenvalues;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        const std::size_t s = 1 + rng() % n;
        idx.resize(s);
        HermitianMatrix b(s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) b(i, j) = a(idx[i], idx[j]);
        const auto sub = hermitian_eigenvalues(b).eigenvalues;
        for (std::size_t i = 0; i < s; ++i) {
            EXPECT_LE(sub[i], full[i] + 1e-9);
            EXPECT_GE(sub[i], full[i + n - s] - 1e-9);
        }
    }
}

TEST(Clusters, ChainTolerance) {
    const auto r = SpectrumReport::from_eigenvalues({1.0, 1.0 + 5e-7, 1.0 + 9e-7, 2.0, -1.0}, "x");
    ASSERT_EQ(r.clusters.size(), 3U);
    EXPECT_EQ(r.clusters[0].multiplicity, 1U);
    EXPECT_EQ(r.clusters[1].multiplicity, 3U);
    EXPECT_EQ(r.clusters[2].multiplicity, 1U);
    EXPECT_EQ(r.source, "x");
}

TEST(IntegerBound, Snapping) {
    EXPECT_EQ(integer_degree_bound(2.0), 2);
    EXPECT_EQ(integer_degree_bound(2.0 + 1e-12), 2);
    EXPECT_EQ(integer_degree_bound(2.0 - 1e-12), 2);
    EXPECT_EQ(integer_degree_bound(2.0 + 1e-6), 3);
    EXPECT_EQ(integer_degree_bound(1.7321), 2);
    EXPECT_EQ(integer_degree_bound(-2.5), 0);
    EXPECT_EQ(integer_degree_bound(-1e-15), 0);
}

TEST(DegreeBound, TableIsMonotoneAndIndexedBySize) {
    const auto r = graph_spectrum(cycle_graph(7));
    const auto t = huang_degree_bound(r);
    ASSERT_EQ(t.rows.size(), 7U);
    EXPECT_EQ(t.rows.front().s, 7U);
    EXPECT_EQ(t.rows.back().s, 1U);
    EXPECT_NEAR(t.rows.front().bound, 2.0, 1e-12);
    for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_LE(t.rows[i].bound, t.rows[i - 1].bound);
    EXPECT_EQ(t.minimal_size_for_degree(2), 5U); // 1.247 at s = 6 and s = 5
    EXPECT_EQ(t.max_integer_bound(), 2);
    EXPECT_FALSE(t.minimal_size_for_degree(3).has_value());
}

TEST(DegreeBound, HypercubeSensitivity) {
    // Signed Q_d: any 2^{d-1}+1 vertices induce max degree >= sqrt(d).
    for (std::size_t d = 2; d <= 6; ++d) {
        const auto a = cohen_tits_signing(d);
        HermitianMatrix m(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.at(i, j);
        const auto t = huang_degree_bound(hermitian_eigenvalues(m));
        const std::size_t half = std::size_t{1} << (d - 1);
        EXPECT_EQ(t.minimal_size_for_degree(integer_degree_bound(std::sqrt(double(d)))), half + 1);
    }
}

TEST(RowModulus, BoundsSpectralRadius) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const auto m = oracle::random_hermitian(12, rng);
        const auto ev = hermitian_eigenvalues(m).eigenvalues;
        EXPECT_LE(std::max(std::abs(ev.front()), std::abs(ev.back())), max_row_modulus_sum(m) + 1e-12);
    }
}
