#include <random>

#include <gtest/gtest.h>

#include "monoci/homology.hpp"
#include "monoci/invariants.hpp"
#include "oracles.hpp"

using namespace monoci;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

MonomialIdeal ideal(const RingContext& r, std::vector<std::vector<Exponent>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.emplace_back(std::move(g));
    return MonomialIdeal(r, ms);
}

const RingContext R3({"x", "y", "z"});

MonomialIdeal triangle() { return ideal(R3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

// Random squarefree ideal as the Stanley-Reisner ideal of random facets.
MonomialIdeal random_squarefree(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> facets(1, 4);
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 2);
    std::vector<FaceMask> fs(static_cast<std::size_t>(facets(rng)));
    for (auto& f : fs) f = mask(rng);
    auto k = SimplicialComplex::from_facets(static_cast<unsigned>(n), fs);
    std::vector<Monomial> gens;
    for (FaceMask s = 1; s < (FaceMask{1} << n); ++s) {
        if (k.contains(s)) continue;
        std::vector<Exponent> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = (s >> i) & 1u;
        gens.emplace_back(e);
    }
    return MonomialIdeal(RingContext::standard(n), gens);
}

}  // namespace

TEST(Rank, Examples) {
    EXPECT_EQ(rank(SparseMatrix::identity(3), QQ), 3u);
    EXPECT_EQ(rank(SparseMatrix(4, 5), QQ), 0u);
    EXPECT_EQ(rank(SparseMatrix::from_dense({{1, 2}, {2, 4}}), QQ), 1u);
    EXPECT_EQ(rank(SparseMatrix::from_dense({{1, 1}, {1, -1}}), FieldSpec::prime(2)), 1u);
    EXPECT_EQ(rank(SparseMatrix::from_dense({{1, 1}, {1, -1}}), QQ), 2u);
}

TEST(Rank, AgreesWithDenseOracle) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 7);
    for (int it = 0; it < 300; ++it) {
        std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
        std::vector<std::vector<std::int64_t>> d(r, std::vector<std::int64_t>(c));
        std::vector<std::vector<long long>> o(r, std::vector<long long>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                int v = entry(rng) * (entry(rng) > 0 ? 1 : 0);
                d[i][j] = v;
                o[i][j] = v;
            }
        EXPECT_EQ(rank(SparseMatrix::from_dense(d), QQ), oracle::dense_rank(o));
    }
}

TEST(Rank, LargeEntriesFallBackToBigIntegers) {
    const std::int64_t big = std::int64_t{1} << 40;
    auto m = SparseMatrix::from_dense({{big, big + 1, 3}, {big + 1, big, 5}, {2 * big + 1, 2 * big + 1, 8}});
    EXPECT_EQ(rank(m, QQ), 2u);
}

TEST(SimplicialComplex, VoidAndIrrelevant) {
    auto v = SimplicialComplex::void_complex(3), e = SimplicialComplex::irrelevant(3);
    EXPECT_TRUE(v.is_void());
    EXPECT_TRUE(e.is_irrelevant());
    EXPECT_TRUE(reduced_homology_ranks(v, QQ).empty());
    EXPECT_EQ(reduced_homology_ranks(e, QQ), (std::map<int, std::size_t>{{-1, 1}}));
    EXPECT_EQ(v.dimension(), -2);
    EXPECT_EQ(e.dimension(), -1);
    EXPECT_THROW(SimplicialComplex::from_faces(3, {0b011}), DomainError);
}

TEST(SimplicialComplex, ReducedHomologyExamples) {
    auto circle = SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
    auto h = reduced_homology_ranks(circle, QQ);
    EXPECT_EQ(h[0], 0u);
    EXPECT_EQ(h[1], 1u);
    auto points = SimplicialComplex::from_facets(2, {0b01, 0b10});
    EXPECT_EQ(reduced_homology_ranks(points, QQ)[0], 1u);
    auto full = SimplicialComplex::simplex(4);
    for (auto [d, r] : reduced_homology_ranks(full, QQ)) EXPECT_EQ(r, 0u) << d;
}

TEST(SimplicialComplex, Links) {
    auto circle = SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
    auto lk = circle.link(0b001);
    EXPECT_EQ(lk.facets(), (std::vector<FaceMask>{0b010, 0b100}));
    EXPECT_TRUE(circle.link(0b111).is_void());
    EXPECT_TRUE(circle.link(0b011).is_irrelevant());
}

TEST(SimplicialComplex, EulerCharacteristicMatchesHomology) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> count(1, 6);
    std::uniform_int_distribution<std::uint64_t> mask(1, 63);
    for (int it = 0; it < 200; ++it) {
        std::vector<FaceMask> fs(static_cast<std::size_t>(count(rng)));
        for (auto& f : fs) f = mask(rng);
        auto k = SimplicialComplex::from_facets(6, fs);
        for (const auto& field : {QQ, FieldSpec::prime(2)}) {
            std::int64_t alt = 0;
            for (auto [d, r] : reduced_homology_ranks(k, field))
                alt += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r);
            EXPECT_EQ(alt, k.reduced_euler_characteristic());
        }
        auto c = augmented_chain_complex(k, QQ);
        EXPECT_TRUE(c.boundary_squared_zero());
    }
}

TEST(ChainComplex, ShapeIsValidated) {
    EXPECT_THROW(ChainComplex(QQ, 0, {1, 1}, {}), DomainError);
    EXPECT_THROW(ChainComplex(QQ, 0, {1, 1}, {SparseMatrix(2, 1)}), DomainError);
    ChainComplex ok(QQ, 0, {1, 1}, {SparseMatrix::identity(1)});
    EXPECT_EQ(ok.homology_ranks(), (std::map<int, std::size_t>{{0, 0}, {1, 0}}));
}

TEST(Betti, TaylorExamples) {
    EXPECT_EQ(taylor_homology(triangle(), QQ), (BettiNumbers{{0, 1}, {1, 3}, {2, 2}}));
    EXPECT_EQ(taylor_homology(ideal(R3, {{1, 0, 0}}), QQ), (BettiNumbers{{0, 1}, {1, 1}}));
    EXPECT_EQ(taylor_homology(ideal(R3, {{1, 0, 0}, {0, 1, 0}}), QQ), (BettiNumbers{{0, 1}, {1, 2}, {2, 1}}));
    BettiOptions tight;
    tight.taylor_max_generators = 2;
    EXPECT_THROW(taylor_homology(triangle(), QQ, tight), ResourceError);
}

TEST(Betti, KoszulExamples) {
    RingContext r1({"x"});
    auto graded = koszul_betti(ideal(r1, {{2}}), QQ);
    EXPECT_EQ(graded.at({1, Monomial({2})}), 1u);
    EXPECT_EQ(graded.at({0, Monomial({0})}), 1u);
    EXPECT_EQ(total_betti(koszul_betti(triangle(), QQ)), (BettiNumbers{{0, 1}, {1, 3}, {2, 2}}));
    BettiOptions tight;
    tight.koszul_max_cells = 4;
    EXPECT_THROW(koszul_betti(triangle(), QQ, tight), ResourceError);
}

TEST(Betti, ParallelKoszulIsDeterministic) {
    auto a = power(triangle(), 3);
    BettiOptions many;
    many.jobs = 4;
    EXPECT_EQ(koszul_betti(a, QQ), koszul_betti(a, QQ, many));
}

TEST(Betti, TaylorAgreesWithKoszul) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(it % 3);
        auto a = oracle::random_ideal(rng, RingContext::standard(n), 3, 8);
        if (!a.is_proper_nonzero()) continue;
        EXPECT_EQ(taylor_homology(a, QQ), total_betti(koszul_betti(a, QQ))) << a.to_string();
    }
}

TEST(Betti, AgreesWithKoszulOnQuotientOracle) {
    std::mt19937_64 rng(9);
    int tested = 0;
    while (tested < 20) {
        auto a = oracle::random_ideal(rng, R3, 2, 4);
        if (!a.is_proper_nonzero()) continue;
        ++tested;
        auto expected = oracle::koszul_on_quotient_betti(a);
        EXPECT_EQ(taylor_homology(a, QQ), expected) << a.to_string();
        EXPECT_EQ(total_betti(koszul_betti(a, QQ)), expected) << a.to_string();
    }
}

TEST(LocalCohomology, Examples) {
    EXPECT_EQ(local_cohomology_nonvanishing(ideal(R3, {{1, 0, 0}}), QQ), (std::set<int>{2}));
    RingContext r2({"x", "y"});
    EXPECT_EQ(local_cohomology_nonvanishing(ideal(r2, {{1, 0}, {0, 1}}), QQ), (std::set<int>{0}));
    auto a27 = ideal(RingContext::standard(4), {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
    auto lc = local_cohomology_nonvanishing(a27, QQ);
    EXPECT_EQ(*lc.begin(), 1);
    EXPECT_EQ(*lc.rbegin(), 2);
    EXPECT_EQ(lc, oracle::local_cohomology_by_duality(a27));
    EXPECT_THROW(local_cohomology_nonvanishing(ideal(R3, {{2, 0, 0}}), QQ), DomainError);
}

TEST(LocalCohomology, AgreesWithLocalDualityAndAuslanderBuchsbaum) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 120; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(it % 5);
        auto a = random_squarefree(rng, n);
        if (!a.is_proper_nonzero()) continue;
        auto lc = local_cohomology_nonvanishing(a, QQ);
        if (a.mu() <= 10) EXPECT_EQ(lc, oracle::local_cohomology_by_duality(a)) << a.to_string();
        auto b = betti_numbers(a, QQ);
        EXPECT_EQ(*lc.begin(), static_cast<int>(n) - b.rbegin()->first) << a.to_string();
    }
}

TEST(Betti, FieldIndependentOnSmallSquarefree) {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 2 + static_cast<std::size_t>(it % 4);
        auto a = random_squarefree(rng, n);
        if (!a.is_proper_nonzero()) continue;
        auto q = betti_numbers(a, QQ);
        EXPECT_EQ(q, betti_numbers(a, FieldSpec::prime(2))) << a.to_string();
        EXPECT_EQ(q, betti_numbers(a, FieldSpec::prime(3))) << a.to_string();
    }
}
