// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "monoci/cli.hpp"
#include "monoci/decomposition.hpp"
#include "monoci/homology.hpp"
#include "monoci/invariants.hpp"
#include "monoci/verify.hpp"
#include "oracles.hpp"

using namespace monoci;

namespace {

// Wall-clock limits (seconds) and campaign sizes.
constexpr double c1_limit = 1.0;
constexpr double c2_limit = 5.0;
constexpr double c3_limit = 120.0;
constexpr double campaign_limit = 600.0;
constexpr int c3_families = 50;
constexpr int c4_ideals = 200;
constexpr int c5_pairs = 100;
constexpr int c5_oracle = 20;
constexpr int c6_ideals = 300;
constexpr int c7_ideals = 50;
constexpr int c8_ideals = 50;
constexpr unsigned c8_horizon = 8;

struct Outcome {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.push_back("");
    }
};

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<Exponent>> gens) {
    std::vector<Monomial> ms;
    for (auto& g : gens) ms.emplace_back(std::move(g));
    return MonomialIdeal(RingContext::standard(n), ms);
}

MonomialIdeal block_prime(const RingContext& ring, const std::vector<std::size_t>& block) {
    return MonomialIdeal::variables(ring, block);
}

Outcome triangle_fixture() {
    Outcome o;
    RingContext ring = RingContext::standard(3);
    auto xy = block_prime(ring, {0, 1}), yz = block_prime(ring, {1, 2}), xz = block_prime(ring, {0, 2});
    auto a = intersection(std::vector<MonomialIdeal>{xy, yz, xz});
    o.expect(equals(a, ideal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})), "generators (xy, xz, yz)");
    auto a2 = power(a, 2);
    o.expect(depth(a) == 1, "depth(a) = 1");
    o.expect(depth(a2) == 0, "depth(a^2) = 0");
    o.expect(formal_grade(a) == 1, "fgrade(a) = 1");
    o.expect(dg(a, 3).value == 1, "dg(a, horizon 3) = 1");
    auto cubes = ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    auto rhs = intersection(std::vector<MonomialIdeal>{power(xy, 2), power(yz, 2), power(xz, 2), cubes});
    o.expect(equals(a2, rhs), "a^2 = (x,y)^2 & (y,z)^2 & (x,z)^2 & (x^2,y^2,z^2)");
    Monomial xyz({1, 1, 1});
    o.expect(contains(symbolic_power(a, 2), xyz) && !contains(a2, xyz), "xyz in a^(2) but not a^2");
    return o;
}

Outcome planes_fixture() {
    Outcome o;
    RingContext ring = RingContext::standard(4);
    auto a = intersection(block_prime(ring, {0, 1}), block_prime(ring, {2, 3}));
    auto sv = schmitt_vogel_upper(a);
    o.expect(a.mu() == 4, "mu = 4");
    o.expect(height(a) == 2, "height = 2");
    o.expect(dim_quotient(a) == 2, "dim_quotient = 2");
    o.expect(cohomological_dimension(a) == 3, "cd = 3");
    o.expect(formal_grade(a) == 1, "fgrade = 1");
    o.expect(min_depth_powers(a, 3).value == 1, "min_depth_powers(horizon 3) = 1");
    o.expect(dg(a, 3).value == 0, "dg = 0");
    o.expect(analytic_spread(a) == 3, "analytic_spread = 3");
    o.expect(sv.upper == 3 && sv.lower == 3 && sv.certified, "ara certified = 3");
    return o;
}

Outcome disjoint_families() {
    Outcome o;
    std::mt19937_64 rng(20240404);
    for (int it = 0; it < c3_families; ++it) {
        std::size_t n = 1 + rng() % 8;
        std::size_t k = 1 + rng() % std::min<std::size_t>(4, n);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        // Cut a random prefix of the shuffled variables into k nonempty blocks.
        std::size_t used = k + rng() % (n - k + 1);
        std::vector<std::size_t> cuts;
        for (std::size_t i = 1; i < used; ++i) cuts.push_back(i);
        std::shuffle(cuts.begin(), cuts.end(), rng);
        cuts.resize(k - 1);
        std::sort(cuts.begin(), cuts.end());
        cuts.push_back(used);
        RingContext ring = RingContext::standard(n);
        std::vector<MonomialIdeal> primes;
        std::size_t total = 0, start = 0;
        std::string label;
        for (std::size_t end : cuts) {
            std::vector<std::size_t> block(order.begin() + static_cast<long>(start), order.begin() + static_cast<long>(end));
            std::sort(block.begin(), block.end());
            primes.push_back(block_prime(ring, block));
            label += primes.back().to_string();
            total += block.size();
            start = end;
        }
        auto a = intersection(primes);
        o.expect(cohomological_dimension(a) == total - k + 1, "cd of " + label);
        o.expect(dg(a, 3).value == 0, "dg of " + label);
    }
    return o;
}

Outcome squarefree_campaign() {
    Outcome o;
    RandomIdealGenerator gen({.n = 5, .squarefree = true, .max_exponent = 1, .max_generators = 5, .seed = 4242});
    std::mt19937_64 rng(4243);
    for (int it = 0; it < c4_ideals; ++it) {
        // Alternate ring sizes 2..5 through the generator and a direct draw.
        MonomialIdeal a = gen.next();
        if (it % 2) {
            std::size_t n = 2 + rng() % 4;
            do a = oracle::random_ideal(rng, RingContext::standard(n), 1, 5, true);
            while (!a.is_proper_nonzero());
        }
        std::size_t d = depth(a), ht = height(a), cd = cohomological_dimension(a);
        o.expect(formal_grade(a) == d, "fgrade = depth on " + a.to_string());
        o.expect((ht == cd) == (d == dim_quotient(a)), "ht = cd iff CM on " + a.to_string());
    }
    return o;
}

Outcome betti_oracles() {
    Outcome o;
    const FieldSpec q = FieldSpec::rationals();
    std::mt19937_64 rng(5150);
    for (int it = 0; it < c5_pairs; ++it) {
        std::size_t n = 1 + rng() % 4;
        auto a = oracle::random_ideal(rng, RingContext::standard(n), 3, 8);
        if (!a.is_proper_nonzero()) {
            --it;
            continue;
        }
        o.expect(taylor_homology(a, q) == total_betti(koszul_betti(a, q)), "Taylor = Koszul on " + a.to_string());
    }
    for (int it = 0; it < c5_oracle; ++it) {
        std::size_t n = 1 + rng() % 3;
        auto a = oracle::random_ideal(rng, RingContext::standard(n), 2, 4);
        if (!a.is_proper_nonzero()) {
            --it;
            continue;
        }
        o.expect(betti_numbers(a, q) == oracle::koszul_on_quotient_betti(a), "quotient oracle on " + a.to_string());
    }
    return o;
}

Outcome chain_campaign() {
    Outcome o;
    RandomIdealGenerator sf({.n = 4, .squarefree = true, .max_exponent = 1, .max_generators = 5, .seed = 606});
    RandomIdealGenerator gen({.n = 4, .squarefree = false, .max_exponent = 3, .max_generators = 5, .seed = 607});
    std::mt19937_64 rng(608);
    for (int it = 0; it < c6_ideals; ++it) {
        // Thirds: squarefree stream, general stream, ring size drawn per ideal.
        MonomialIdeal a = [&] {
            if (it % 3 == 0) return sf.next();
            if (it % 3 == 1) return gen.next();
            RingContext ring = RingContext::standard(1 + rng() % 4);
            for (;;) {
                auto b = oracle::random_ideal(rng, ring, 3, 5, rng() % 2 == 0);
                if (b.is_proper_nonzero()) return b;
            }
        }();
        const std::size_t n = a.num_variables();
        std::size_t ht = height(a), cd = cohomological_dimension(a), l = analytic_spread(a),
                    md = min_depth_powers(a, 3).value;
        auto sv = schmitt_vogel_upper(a);
        const std::string s = " on " + a.to_string();
        o.expect(ht <= cd && cd <= sv.upper && sv.upper <= a.mu(), "ht <= cd <= sv <= mu" + s);
        o.expect(cd <= l && l <= a.mu(), "cd <= l <= mu" + s);
        o.expect(md <= formal_grade(a), "min depth <= fgrade" + s);
        o.expect(l <= n - md, "l <= n - min depth" + s);
    }
    return o;
}

Outcome frobenius_suite() {
    Outcome o;
    std::mt19937_64 rng(707);
    for (int it = 0; it < c7_ideals; ++it) {
        std::size_t n = 1 + rng() % 4;
        auto a = oracle::random_ideal(rng, RingContext::standard(n), 2, 4, it % 2 == 0);
        if (!a.is_proper_nonzero()) {
            --it;
            continue;
        }
        for (unsigned q : {2u, 3u}) {
            auto bq = bracket_power(a, q), pq = power(a, q);
            const std::string s = " for q = " + std::to_string(q) + " on " + a.to_string();
            o.expect(equals(radical(bq), radical(pq)), "radical" + s);
            o.expect(contains_ideal(bq, power(a, static_cast<unsigned>(a.mu()) * q)) && contains_ideal(pq, bq),
                     "sandwich" + s);
            o.expect(depth(bq) == depth(a), "depth" + s);
        }
    }
    return o;
}

Outcome spread_cross_check() {
    Outcome o;
    auto witness = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto w = fiber_growth_oracle(witness, c8_horizon);
    o.expect(analytic_spread(witness) == 2 && w.stabilized && w.value == 2u, "(x^2, xy, y^3) -> 2");
    std::mt19937_64 rng(808);
    int compared = 0, drawn = 0;
    while (compared < c8_ideals && drawn < 20 * c8_ideals) {
        ++drawn;
        std::size_t n = 1 + rng() % 3;
        auto a = oracle::random_ideal(rng, RingContext::standard(n), 3, 4);
        if (!a.is_proper_nonzero()) continue;
        auto f = fiber_growth_oracle(a, c8_horizon);
        if (!f.stabilized) continue;
        ++compared;
        o.expect(f.value == analytic_spread(a), "Newton = fiber growth on " + a.to_string());
    }
    o.expect(compared == c8_ideals, "only " + std::to_string(compared) + " stabilized ideals");
    return o;
}

Outcome determinism() {
    Outcome o;
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::make_pair(code, out.str());
    };
    auto a = run({"verify-paper", "--json"});
    auto b = run({"verify-paper", "--json"});
    auto c = run({"verify-paper", "--json", "--jobs", "4"});
    auto d = run({"verify-paper", "--json", "--jobs", "2"});
    o.expect(a.first == 0, "verify-paper exit status");
    o.expect(!a.second.empty() && a.second == b.second, "identical across runs");
    o.expect(a.second == c.second && a.second == d.second, "identical across --jobs");
    return o;
}

struct Criterion {
    const char* label;
    double limit;
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1 triangle fixture", c1_limit, triangle_fixture},
        {"C2 two-planes fixture", c2_limit, planes_fixture},
        {"C3 disjoint variable-prime families", c3_limit, disjoint_families},
        {"C4 squarefree fgrade/CM campaign", campaign_limit, squarefree_campaign},
        {"C5 Betti oracle equivalence", campaign_limit, betti_oracles},
        {"C6 chain and Burch properties", campaign_limit, chain_campaign},
        {"C7 Frobenius suite", campaign_limit, frobenius_suite},
        {"C8 analytic spread cross-check", campaign_limit, spread_cross_check},
        {"C9 verify-paper determinism", campaign_limit, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && o.failures.empty() && secs < c.limit;
        failed += !ok;
        char line[256];
        std::snprintf(line, sizeof line, "%s %-40s %5zu checks %8.3f s (limit %.0f s)", ok ? "PASS" : "FAIL", c.label,
                      o.checked, secs, c.limit);
        std::cout << line << "\n";
        if (!error.empty()) std::cout << "     error: " << error << "\n";
        for (const auto& f : o.failures)
            if (!f.empty()) std::cout << "     " << f << "\n";
        if (o.failures.size() > 5) std::cout << "     ... " << o.failures.size() << " failures in total\n";
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
              << criteria.size() << "\n";
    return failed ? 1 : 0;
}
