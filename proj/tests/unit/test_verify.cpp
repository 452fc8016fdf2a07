#include <gtest/gtest.h>

#include "monoci/decomposition.hpp"
#include "monoci/dsl.hpp"
#include "monoci/verify.hpp"

using namespace monoci;

namespace {

MonomialIdeal ideal_of(const std::string& text) { return evaluate(parse(text)); }

const MonomialIdeal& planes() {
    static const MonomialIdeal a = ideal_of("ring x1, x2, x3, x4; (x1, x2) & (x3, x4)");
    return a;
}

const MonomialIdeal& triangle() {
    static const MonomialIdeal a = ideal_of("ring x, y, z; (x, y) & (y, z) & (x, z)");
    return a;
}

long long value(const CheckResult& r, const std::string& key) {
    for (const auto& [k, v] : r.values)
        if (k == key) return v;
    ADD_FAILURE() << "no value " << key << " in " << r.name;
    return -1;
}

}  // namespace

TEST(Verify, ChainExamples) {
    EXPECT_EQ(check_chain(planes()).verdict, Verdict::pass);
    EXPECT_EQ(check_chain(ideal_of("ring x, y, z; (x, y, z)")).verdict, Verdict::pass);
    VerifyOptions o;
    o.horizon = 2;
    o.jobs = 4;
    auto campaign = fuzz({.n = 5, .squarefree = true, .max_exponent = 1, .max_generators = 5, .seed = 1}, 50, o);
    for (const auto& r : campaign)
        if (r.name == "chain") EXPECT_EQ(r.verdict, Verdict::pass) << r.ideal.to_string() << " " << r.detail;
}

TEST(Verify, DgCriteriaExamples) {
    auto p = check_dg_criteria(planes());
    EXPECT_EQ(p.verdict, Verdict::pass) << p.detail;
    EXPECT_EQ(value(p, "dg"), 0);
    EXPECT_EQ(value(p, "sv_minimum"), 3);

    auto t = check_dg_criteria(triangle());
    EXPECT_EQ(t.verdict, Verdict::pass) << t.detail;
    EXPECT_EQ(value(t, "dg"), 1);
    EXPECT_EQ(value(t, "analytic_spread"), 3);
    EXPECT_EQ(value(t, "cd"), 2);

    auto ci = check_dg_criteria(ideal_of("ring x, y; (x, y)"));
    EXPECT_EQ(ci.verdict, Verdict::pass);
    EXPECT_EQ(value(ci, "dg"), 0);
}

TEST(Verify, PrimePowersExamples) {
    EXPECT_EQ(check_prime_powers(ideal_of("ring x, y, z; (x, y)")).verdict, Verdict::pass);
    EXPECT_EQ(check_prime_powers(ideal_of("ring x1, x2, x3, x4; (x1, x2, x3)")).verdict, Verdict::pass);
    auto na = check_prime_powers(ideal_of("ring x, y, z, w; (x, y)"));
    EXPECT_EQ(na.verdict, Verdict::not_applicable);
    EXPECT_EQ(value(na, "fgrade"), 2);
    EXPECT_EQ(check_prime_powers(ideal_of("ring x, y; (x, y)")).verdict, Verdict::not_applicable);
    EXPECT_EQ(check_prime_powers(triangle()).verdict, Verdict::not_applicable);
}

TEST(Verify, SquarefreeDualityExamples) {
    auto t = check_squarefree_duality(triangle());
    EXPECT_EQ(t.verdict, Verdict::pass) << t.detail;
    EXPECT_EQ(value(t, "depth"), value(t, "dim_quotient"));
    EXPECT_EQ(value(t, "height"), value(t, "cd"));
    auto p = check_squarefree_duality(planes());
    EXPECT_EQ(p.verdict, Verdict::pass);
    EXPECT_NE(value(p, "depth"), value(p, "dim_quotient"));
    EXPECT_NE(value(p, "height"), value(p, "cd"));
    EXPECT_EQ(check_squarefree_duality(ideal_of("ring x, y; (x, y)")).verdict, Verdict::pass);
    EXPECT_EQ(check_squarefree_duality(ideal_of("ring x, y; (x^2, y)")).verdict, Verdict::not_applicable);
}

TEST(Verify, DisjointPrimesExamples) {
    auto a = check_disjoint_primes(RingContext::standard(4), {{0, 1}, {2, 3}});
    EXPECT_EQ(a.verdict, Verdict::pass);
    EXPECT_EQ(value(a, "cd"), 3);
    auto b = check_disjoint_primes(RingContext::standard(5), {{0, 1}, {2, 3}, {4}});
    EXPECT_EQ(b.verdict, Verdict::pass);
    EXPECT_EQ(value(b, "cd"), 3);
    auto c = check_disjoint_primes(RingContext::standard(1), {{0}});
    EXPECT_EQ(value(c, "cd"), 1);
    EXPECT_THROW(check_disjoint_primes(RingContext::standard(3), {{0, 1}, {1, 2}}), DomainError);
    EXPECT_THROW(check_disjoint_primes(RingContext::standard(3), {}), DomainError);
}

TEST(Verify, FrobeniusExamples) {
    EXPECT_EQ(check_frobenius(ideal_of("ring x, y, z; (x*y, z)"), 2).verdict, Verdict::pass);
    auto t = check_frobenius(triangle(), 2);
    EXPECT_EQ(t.verdict, Verdict::pass);
    EXPECT_EQ(value(t, "depth_bracket"), 1);
    EXPECT_EQ(check_frobenius(ideal_of("ring x, y; (x)"), 5).verdict, Verdict::pass);
    EXPECT_THROW(check_frobenius(triangle(), 1), DomainError);
}

TEST(Verify, PaperExamplesAllPass) {
    auto results = run_paper_examples();
    EXPECT_FALSE(results.empty());
    for (const auto& r : results) EXPECT_EQ(r.verdict, Verdict::pass) << r.name << ": " << r.detail;
}

TEST(Verify, FuzzIsDeterministicAndOrdered) {
    RandomIdealSpec spec{.n = 4, .squarefree = true, .max_exponent = 1, .max_generators = 4, .seed = 42};
    EXPECT_TRUE(fuzz(spec, 0).empty());
    VerifyOptions one, four;
    four.jobs = 4;
    auto a = fuzz(spec, 100, one), b = fuzz(spec, 100, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].name, b[i].name);
        EXPECT_EQ(a[i].ideal, b[i].ideal);
        EXPECT_EQ(a[i].verdict, b[i].verdict);
        EXPECT_EQ(a[i].values, b[i].values);
    }
    EXPECT_FALSE(has_failures(a));
}

TEST(Verify, CheckersArePureAndReplayable) {
    RandomIdealSpec spec{.n = 3, .squarefree = false, .max_exponent = 3, .max_generators = 4, .seed = 7};
    for (const auto& r : fuzz(spec, 20)) {
        auto again = replay(r);
        EXPECT_EQ(again.verdict, r.verdict) << r.name;
        EXPECT_EQ(again.values, r.values) << r.name;
        EXPECT_EQ(again.detail, r.detail) << r.name;
    }
    auto dp = check_disjoint_primes(RingContext::standard(4), {{0, 1}, {2, 3}});
    EXPECT_EQ(replay(dp).values, dp.values);
}

TEST(Verify, RandomGeneratorRespectsBounds) {
    RandomIdealGenerator gen({.n = 3, .squarefree = false, .max_exponent = 2, .max_generators = 3, .seed = 5});
    for (int i = 0; i < 100; ++i) {
        auto a = gen.next();
        EXPECT_TRUE(a.is_proper_nonzero());
        EXPECT_LE(a.mu(), 3u);
        for (const auto& g : a.generators())
            for (auto e : g.exponents()) EXPECT_LE(e, 2u);
    }
    RandomIdealGenerator sf({.n = 5, .squarefree = true, .max_exponent = 1, .max_generators = 4, .seed = 5});
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(sf.next().is_squarefree());
    for (std::uint64_t bound : {1u, 2u, 7u}) EXPECT_LT(gen.below(bound), bound);
}
