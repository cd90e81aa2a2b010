#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dopk/ensembles.hpp"

#include "testutil.hpp"

using namespace dopk;

namespace {

Grid<Rational> grid012() {
    return Grid<Rational>({Rational(0), Rational(1), Rational(2)});
}

WeightTable<Rational> uniform(const Grid<Rational>& g) {
    return WeightTable<Rational>(g, std::vector<Rational>(g.size(), Rational(1)));
}

using Subset = std::vector<std::size_t>;

} // namespace

TEST_CASE("matrix determinant and rank basics") {
    Matrix<Rational> a(2, 2);
    a(0, 0) = Rational(1);
    a(0, 1) = Rational(2);
    a(1, 0) = Rational(3);
    a(1, 1) = Rational(4);
    CHECK(det(a) == Rational(-2));
    CHECK(rank(a) == 2);
    CHECK(a.transposed()(0, 1) == Rational(3));

    Matrix<Rational> singular(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) singular(i, j) = Rational((long)(i + j));
    CHECK(det(singular) == Rational(0)); // rows are arithmetic progressions
    CHECK(rank(singular) == 2);

    // Permutation matrix: determinant is the signature.
    Matrix<Rational> perm(3, 3);
    perm(0, 1) = Rational(1);
    perm(1, 0) = Rational(1);
    perm(2, 2) = Rational(1);
    CHECK(det(perm) == Rational(-1));
    CHECK(det(Matrix<Rational>::identity(4)) == Rational(1));
    CHECK(det(Matrix<Rational>(0, 0)) == Rational(1)); // empty minor
    CHECK(perm.principal_submatrix({0, 2})(0, 1) == Rational(0));
}

TEST_CASE("colex enumeration order and ranks") {
    std::vector<Subset> seen;
    subsets::for_each_colex(3, 2, [&](const Subset& s) { seen.push_back(s); });
    CHECK(seen == std::vector<Subset>{{0, 1}, {0, 2}, {1, 2}});
    for (std::size_t r = 0; r < seen.size(); ++r) CHECK(subsets::colex_rank(seen[r]) == r);
    CHECK(subsets::binomial_u64(9, 4) == 126);
    CHECK(subsets::complement({0, 2}, 4) == Subset{1, 3});
}

TEST_CASE("two-point ensemble of the uniform weight on {0,1,2}") {
    const Grid<Rational> g = grid012();
    const SubsetMeasure<Rational> mu = ensemble(g, uniform(g), 2);
    CHECK(mu.support_size() == 3);
    CHECK(mu.prob({0, 1}) == Rational(1, 6)); // squared Vandermonde 1
    CHECK(mu.prob({0, 2}) == Rational(2, 3)); // squared Vandermonde 4
    CHECK(mu.prob({1, 2}) == Rational(1, 6));
}

TEST_CASE("singleton ensemble is proportional to the weight") {
    testutil::Rng rng(61);
    const Grid<Rational> g = testutil::random_grid(rng, 5);
    const WeightTable<Rational> w = testutil::random_weight(rng, g);
    Rational total(0);
    for (std::size_t k = 0; k < g.size(); ++k) total += w.value(k);
    const SubsetMeasure<Rational> mu = ensemble(g, w, 1);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(mu.prob({k}) == w.value(k) / total);
}

TEST_CASE("ensemble cardinality and budget limits") {
    const Grid<Rational> g = grid012();
    CHECK_THROWS_AS(ensemble(g, uniform(g), 0), std::invalid_argument);
    CHECK_THROWS_AS(ensemble(g, uniform(g), 3), std::invalid_argument); // m = M+1 rejected
    CHECK_THROWS_AS(ensemble(g, uniform(g), 2, 2), budget_exceeded_error);
}

TEST_CASE("complement measure relabels the worked example") {
    const Grid<Rational> g = grid012();
    const SubsetMeasure<Rational> mu = ensemble(g, uniform(g), 2);
    const SubsetMeasure<Rational> muc = complement_measure(mu);
    CHECK(muc.order() == 1);
    CHECK(muc.prob({2}) == Rational(1, 6));
    CHECK(muc.prob({1}) == Rational(2, 3));
    CHECK(muc.prob({0}) == Rational(1, 6));
}

TEST_CASE("complement is an involution and preserves uniformity") {
    testutil::Rng rng(62);
    const Grid<Rational> g = testutil::random_grid(rng, 6);
    const WeightTable<Rational> w = testutil::random_weight(rng, g);
    for (std::size_t m = 1; m <= g.max_degree(); ++m) {
        const SubsetMeasure<Rational> mu = ensemble(g, w, m);
        const SubsetMeasure<Rational> back = complement_measure(complement_measure(mu));
        mu.for_each([&](const Subset& A, const Rational& p) { CHECK(back.prob(A) == p); });
    }
    const std::size_t count = static_cast<std::size_t>(subsets::binomial_u64(6, 2));
    const SubsetMeasure<Rational> flat(g, 2,
                                       std::vector<Rational>(count, Rational(1, (long)count)));
    const SubsetMeasure<Rational> flat_c = complement_measure(flat);
    flat_c.for_each([&](const Subset&, const Rational& p) {
        CHECK(p == Rational(1, (long)flat_c.support_size()));
    });
}

TEST_CASE("brute-force correlations of the worked ensemble") {
    const Grid<Rational> g = grid012();
    const SubsetMeasure<Rational> mu = ensemble(g, uniform(g), 2);
    CHECK(correlation_bruteforce(mu, {0}) == Rational(5, 6)); // 1/6 + 2/3
    CHECK(correlation_bruteforce(mu, {1}) == Rational(1, 3));
    CHECK(correlation_bruteforce(mu, {0, 1, 2}) == Rational(0)); // |A| > m
    // Deterministic measure: full support has correlation one.
    std::vector<Rational> point_mass(3, Rational(0));
    point_mass[subsets::colex_rank({0, 2})] = Rational(1);
    const SubsetMeasure<Rational> delta(g, 2, point_mass);
    CHECK(correlation_bruteforce(delta, {0, 2}) == Rational(1));
    CHECK(correlation_bruteforce(delta, {1}) == Rational(0));
}

TEST_CASE("kernel edge orders: zero matrix and identity") {
    testutil::Rng rng(63);
    for (int trial = 0; trial < 6; ++trial) {
        const Grid<Rational> g = testutil::random_grid(rng, 1 + rng.uniform(1, 7));
        const WeightTable<Rational> w = testutil::random_weight(rng, g);
        const OrthoSystem<Rational> s = orthogonalize(g, w);
        const std::size_t n = g.size();
        const KernelMatrix<Rational> zero = kernel(s, 0);
        const KernelMatrix<Rational> full = kernel(s, n);
        CHECK(zero.entries == Matrix<Rational>(n, n));
        CHECK(full.entries == Matrix<Rational>::identity(n));
        CHECK_THROWS_AS(kernel(s, n + 1), std::invalid_argument);
    }
}

TEST_CASE("rank-one kernel of the uniform {0,1,2} system") {
    const Grid<Rational> g = grid012();
    const KernelMatrix<Rational> K = kernel(orthogonalize(g, uniform(g)), 1);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) CHECK(K.entries(j, k) == Rational(1, 3));
    CHECK(K.entries.trace() == Rational(1));
}

TEST_CASE("projection laws hold exactly for every constructed kernel") {
    testutil::Rng rng(64);
    for (int trial = 0; trial < 5; ++trial) {
        const Grid<Rational> g = testutil::random_grid(rng, 1 + rng.uniform(1, 7));
        const WeightTable<Rational> w = testutil::random_weight(rng, g);
        const OrthoSystem<Rational> s = orthogonalize(g, w);
        for (std::size_t m = 0; m <= g.size(); ++m) {
            const KernelMatrix<Rational> K = kernel(s, m);
            CHECK(K.entries * K.entries == K.entries);
            CHECK(K.entries.trace() == Rational((long)m));
            CHECK(rank(K.entries) == m);
            // Weighted symmetry: the underlying sum matrix is symmetric.
            for (std::size_t j = 0; j < g.size(); ++j)
                for (std::size_t k = j + 1; k < g.size(); ++k)
                    CHECK(K.entries(j, k) * w.value(k) == K.entries(k, j) * w.value(j));
        }
    }
}

TEST_CASE("symmetric form requires the float backend") {
    const Grid<Rational> g = grid012();
    const OrthoSystem<Rational> s = orthogonalize(g, uniform(g));
    CHECK_THROWS_AS(kernel(s, 1, KernelForm::Symmetric), std::invalid_argument);
}

TEST_CASE("symmetric float kernel: bitwise symmetry and minors match the exact form") {
    BigFloat::set_default_precision(256);
    testutil::Rng rng(65);
    const Grid<Rational> gq = testutil::random_grid(rng, 6);
    const WeightTable<Rational> wq = testutil::random_weight(rng, gq);
    const OrthoSystem<Rational> sq = orthogonalize(gq, wq);
    const WeightTable<BigFloat> w = convert_weight<BigFloat>(wq);
    const OrthoSystem<BigFloat> s = orthogonalize(w.grid(), w);
    const BigFloat tol(pow_int(Rational(10), -60));
    for (std::size_t m = 0; m <= gq.size(); ++m) {
        const KernelMatrix<BigFloat> Ks = kernel(s, m, KernelForm::Symmetric);
        const KernelMatrix<Rational> Kc = kernel(sq, m, KernelForm::Conjugated);
        for (std::size_t j = 0; j < gq.size(); ++j)
            for (std::size_t k = 0; k < gq.size(); ++k) CHECK(Ks.entries(j, k) == Ks.entries(k, j));
        for (std::size_t size = 1; size <= gq.size(); ++size) {
            subsets::for_each_colex(gq.size(), size, [&](const Subset& A) {
                const BigFloat sym = correlation_determinantal(Ks, A);
                const BigFloat conj(correlation_determinantal(Kc, A));
                BigFloat scale{1};
                if (scale < abs(sym)) scale = abs(sym);
                CHECK(abs(sym - conj) <= tol * scale);
            });
        }
    }
}

TEST_CASE("determinantal correlations equal brute force for both measures") {
    testutil::Rng rng(66);
    for (int trial = 0; trial < 4; ++trial) {
        const Grid<Rational> g = testutil::random_grid(rng, 2 + rng.uniform(0, 4));
        const WeightTable<Rational> w = testutil::random_weight(rng, g);
        const OrthoSystem<Rational> s = orthogonalize(g, w);
        for (std::size_t m = 1; m <= g.max_degree(); ++m) {
            const SubsetMeasure<Rational> mu = ensemble(g, w, m);
            const SubsetMeasure<Rational> muc = complement_measure(mu);
            const KernelMatrix<Rational> K = kernel(s, m);
            const KernelMatrix<Rational> Kc = complement_kernel(K);
            CHECK(Kc.order == g.size() - m);
            for (std::size_t size = 1; size <= std::min<std::size_t>(4, g.size()); ++size) {
                subsets::for_each_colex(g.size(), size, [&](const Subset& A) {
                    CHECK(correlation_determinantal(K, A) == correlation_bruteforce(mu, A));
                    CHECK(correlation_determinantal(Kc, A) == correlation_bruteforce(muc, A));
                });
            }
        }
    }
}

TEST_CASE("first correlation of the complement is 1 - K(k,k)") {
    const Grid<Rational> g = grid012();
    const WeightTable<Rational> w = uniform(g);
    const SubsetMeasure<Rational> muc = complement_measure(ensemble(g, w, 2));
    const KernelMatrix<Rational> K = kernel(orthogonalize(g, w), 2);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(Rational(1) - K.entries(k, k) == correlation_bruteforce(muc, {k}));
}

TEST_CASE("complementing the complete kernel gives the zero matrix") {
    const Grid<Rational> g = grid012();
    const OrthoSystem<Rational> s = orthogonalize(g, uniform(g));
    const KernelMatrix<Rational> full = kernel(s, 3);
    const KernelMatrix<Rational> none = complement_kernel(full);
    CHECK(none.entries == Matrix<Rational>(3, 3));
    const KernelMatrix<Rational> back = complement_kernel(none);
    CHECK(back.entries == full.entries);
    CHECK(back.order == full.order);
}

TEST_CASE("inclusion-exclusion ties base correlations to the complement") {
    testutil::Rng rng(67);
    const Grid<Rational> g = testutil::random_grid(rng, 6);
    const WeightTable<Rational> w = testutil::random_weight(rng, g);
    for (std::size_t m = 1; m <= g.max_degree(); ++m) {
        const SubsetMeasure<Rational> mu = ensemble(g, w, m);
        const SubsetMeasure<Rational> muc = complement_measure(mu);
        for (std::size_t size = 1; size <= 3; ++size) {
            subsets::for_each_colex(g.size(), size, [&](const Subset& A) {
                Rational alternating(0);
                for (std::size_t dsize = 0; dsize <= A.size(); ++dsize) {
                    subsets::for_each_colex(A.size(), dsize, [&](const Subset& pick) {
                        Subset D;
                        for (std::size_t idx : pick) D.push_back(A[idx]);
                        const Rational rho =
                            D.empty() ? Rational(1) : correlation_bruteforce(mu, D);
                        if (dsize % 2 == 0)
                            alternating += rho;
                        else
                            alternating -= rho;
                    });
                }
                CHECK(alternating == correlation_bruteforce(muc, A));
            });
        }
    }
}

TEST_CASE("measure identity between the weight and its dual") {
    const Grid<Rational> g = grid012();
    CHECK(verify_measure_identity(g, uniform(g), 1).pass());

    testutil::Rng rng(68);
    for (int trial = 0; trial < 8; ++trial) {
        const Grid<Rational> gg = testutil::random_grid(rng, 2 + rng.uniform(0, 6));
        const WeightTable<Rational> w = testutil::random_weight(rng, gg);
        for (std::size_t m = 1; m <= gg.max_degree(); ++m) {
            const VerificationReport r = verify_measure_identity(gg, w, m);
            CHECK(r.pass());
            CHECK(r.clauses().front().max_residual == "0");
        }
    }
    CHECK_THROWS_AS(verify_measure_identity(g, uniform(g), 3), std::invalid_argument);
}

TEST_CASE("kernel duality on the worked example, m = 1") {
    const DualPair<Rational> pair =
        dual_system(orthogonalize(grid012(), uniform(grid012())));
    const VerificationReport r = verify_kernel_duality(pair, 1);
    CHECK(r.pass());
    for (const ReportClause& c : r.clauses()) CHECK(c.max_residual == "0");
}

TEST_CASE("kernel duality across all orders on random instances") {
    testutil::Rng rng(69);
    for (int trial = 0; trial < 5; ++trial) {
        const Grid<Rational> g = testutil::random_grid(rng, 2 + rng.uniform(0, 4));
        const WeightTable<Rational> w = testutil::random_weight(rng, g);
        const DualPair<Rational> pair = dual_system(orthogonalize(g, w));
        for (std::size_t m = 0; m <= g.max_degree(); ++m) CHECK(verify_kernel_duality(pair, m).pass());
        CHECK_THROWS_AS(verify_kernel_duality(pair, g.size()), std::invalid_argument);
    }
}

TEST_CASE("kernel duality m = 0 pins completeness of the dual kernel") {
    const DualPair<Rational> pair =
        dual_system(orthogonalize(grid012(), uniform(grid012())));
    const VerificationReport r = verify_kernel_duality(pair, 0);
    CHECK(r.pass());
    CHECK(r.clauses().front().clause.find("completeness") != std::string::npos);
}

TEST_CASE("kernel duality flags a tampered pair") {
    DualPair<Rational> pair = dual_system(orthogonalize(grid012(), uniform(grid012())));
    // Q_0 enters every dual kernel of positive order.
    pair.dual.values[0][0] += Rational(1, 5);
    CHECK_FALSE(verify_kernel_duality(pair, 1).pass());
}

TEST_CASE("kernel duality on the float backend") {
    BigFloat::set_default_precision(256);
    testutil::Rng rng(70);
    const BigFloat tol(pow_int(Rational(10), -30));
    for (int trial = 0; trial < 3; ++trial) {
        const Grid<Rational> gq = testutil::random_grid(rng, 2 + rng.uniform(0, 5));
        const WeightTable<Rational> wq = testutil::random_weight(rng, gq);
        const WeightTable<BigFloat> w = convert_weight<BigFloat>(wq);
        const DualPair<BigFloat> pair = dual_system(orthogonalize(w.grid(), w));
        for (std::size_t m = 0; m <= gq.max_degree(); ++m)
            CHECK(verify_kernel_duality(pair, m, tol).pass());
    }
}
