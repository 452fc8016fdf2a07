#include "monoci/verify.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "monoci/decomposition.hpp"
#include "monoci/dsl.hpp"
#include "monoci/errors.hpp"
#include "monoci/homology.hpp"
#include "monoci/parallel.hpp"

namespace monoci {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::uncertified: return "uncertified";
    }
    return "?";
}

namespace {

using Values = std::vector<std::pair<std::string, long long>>;

long long ll(std::size_t v) { return static_cast<long long>(v); }

CheckResult make(std::string name, const MonomialIdeal& a, const VerifyOptions& o) {
    CheckResult r{.name = std::move(name), .verdict = Verdict::pass, .ideal = a, .horizon = o.horizon,
                  .q = 0, .blocks = {}, .values = {}, .detail = {}};
    return r;
}

// Records a failed condition; the detail lists every failed one.
void require(CheckResult& r, bool ok, const std::string& what) {
    if (ok) return;
    r.verdict = Verdict::fail;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += what;
}

ReportOptions report_options(const VerifyOptions& o) {
    ReportOptions ro;
    ro.horizon = o.horizon;
    ro.invariants = o.invariants;
    return ro;
}

CheckResult not_applicable(CheckResult r, std::string why) {
    r.verdict = Verdict::not_applicable;
    r.detail = std::move(why);
    return r;
}

}  // namespace

CheckResult check_chain(const MonomialIdeal& a, const VerifyOptions& options) {
    auto r = make("chain", a, options);
    auto rep = compute_report(a, report_options(options));
    r.values = {{"height", ll(rep.height)},         {"cd", ll(rep.cd)},
                {"ara_lower", ll(rep.ara.lower)},   {"ara_upper", ll(rep.ara.upper)},
                {"analytic_spread", ll(rep.analytic_spread)}, {"mu", ll(rep.mu)},
                {"depth", ll(rep.depth)},           {"proj_dim", ll(rep.proj_dim)},
                {"fgrade", ll(rep.fgrade)}};
    for (const auto& v : report_violations(rep)) require(r, false, v);
    return r;
}

CheckResult check_dg_criteria(const MonomialIdeal& a, const VerifyOptions& options) {
    auto r = make("dg-criteria", a, options);
    auto rep = compute_report(a, report_options(options));
    const std::size_t n = a.num_variables();
    const std::size_t dgv = rep.dg->value, md = rep.min_depth_powers->value;
    r.values = {{"dg", ll(dgv)},     {"height", ll(rep.height)}, {"cd", ll(rep.cd)},
                {"ara_upper", ll(rep.ara.upper)}, {"analytic_spread", ll(rep.analytic_spread)},
                {"min_depth_powers", ll(md)}, {"n", ll(n)}};
    if (dgv == 0) {
        bool cohom_ci = rep.height == rep.cd;
        bool stci = rep.ara.certified && rep.ara.upper == rep.height;
        if (cohom_ci && !stci) {
            r.verdict = Verdict::uncertified;
            r.detail = "ht = cd but the Schmitt-Vogel bound " + std::to_string(rep.ara.upper) +
                       " does not reach the height";
            return r;
        }
        // cd > ht forces ara > ht, so no witness of size ht may exist.
        if (!cohom_ci) {
            auto minimum = schmitt_vogel_minimum(a);
            if (minimum) r.values.emplace_back("sv_minimum", ll(*minimum));
            require(r, !minimum || *minimum > rep.height, "Schmitt-Vogel witness of size ht although cd > ht");
        }
        require(r, cohom_ci == stci, "ht = cd and set-theoretic complete intersection disagree");
        return r;
    }
    if (dgv == 1) {
        bool lhs = rep.analytic_spread + md != n;
        // ara is squeezed between cd and l, so cd = l forces ara = l.
        bool rhs = rep.cd == rep.analytic_spread;
        if (rep.ara.certified) rhs = rhs && rep.ara.upper == rep.analytic_spread;
        require(r, lhs == rhs, "l != n - min depth and cd = ara = l disagree");
        return r;
    }
    return not_applicable(r, "dg = " + std::to_string(dgv) + " is neither 0 nor 1");
}

CheckResult check_prime_powers(const MonomialIdeal& p, const VerifyOptions& options) {
    auto r = make("prime-powers", p, options);
    const std::size_t n = p.num_variables();
    if (!p.is_proper_nonzero() || !p.is_generated_by_variables())
        return not_applicable(r, "not a prime generated by variables");
    auto fg = formal_grade(p, options.invariants);
    r.values = {{"n", ll(n)}, {"height", ll(p.mu())}, {"fgrade", ll(fg)}};
    if (fg > 1) return not_applicable(r, "fgrade = " + std::to_string(fg) + " exceeds 1");
    // The conclusion l = n - 1 needs depth R/p^t > 0, false for the maximal ideal.
    if (p.mu() == n) return not_applicable(r, "p is the maximal ideal, where depth R/p^t = 0");
    for (unsigned t = 1; t <= options.horizon; ++t)
        require(r, symbolic_power(p, t) == power(p, t), "p^(" + std::to_string(t) + ") != p^" + std::to_string(t));
    auto l = analytic_spread(p, options.invariants);
    auto cd = cohomological_dimension(p, options.invariants);
    auto ht = height(p);
    auto sv = schmitt_vogel_upper(p, options.invariants);
    bool stci = sv.certified && sv.upper == ht;
    r.values.insert(r.values.end(), {{"analytic_spread", ll(l)}, {"cd", ll(cd)}, {"ara_upper", ll(sv.upper)},
                                     {"dim_quotient", ll(dim_quotient(p))}});
    require(r, l == n - 1, "l != n - 1");
    require(r, cd == n - 1, "cd != n - 1");
    if (l == n - 1 && ht == cd) require(r, stci, "l = n - 1 and ht = cd but no complete intersection witness");
    if (dim_quotient(p) == 1 && l == n - 1) require(r, stci, "one-dimensional with l = n - 1 but no witness");
    return r;
}

CheckResult check_squarefree_duality(const MonomialIdeal& a, const VerifyOptions& options) {
    auto r = make("squarefree-duality", a, options);
    if (!a.is_proper_nonzero() || !a.is_squarefree()) return not_applicable(r, "not a proper squarefree ideal");
    const std::size_t n = a.num_variables();
    auto lc = local_cohomology_nonvanishing(a, a.ring().field());
    std::set<long long> cd_set;
    for (int j : lc) cd_set.insert(ll(n) - j);
    auto pd = proj_dim(a, options.invariants);
    auto dep = depth(a, options.invariants);
    auto cd = cohomological_dimension(a, options.invariants);
    auto ht = height(a);
    auto dim = dim_quotient(a);
    auto fg = formal_grade(a, options.invariants);
    r.values = {{"max_cd_index", *cd_set.rbegin()}, {"min_cd_index", *cd_set.begin()}, {"proj_dim", ll(pd)},
                {"cd", ll(cd)}, {"height", ll(ht)}, {"depth", ll(dep)}, {"dim_quotient", ll(dim)},
                {"fgrade", ll(fg)}};
    require(r, *cd_set.rbegin() == ll(pd), "largest nonvanishing index differs from pd");
    require(r, *cd_set.begin() == ll(ht), "smallest nonvanishing index differs from ht");
    require(r, cd == pd, "cd != pd");
    require(r, fg == dep, "fgrade != depth");
    require(r, (ht == cd) == (dep == dim), "ht = cd and Cohen-Macaulay disagree");
    return r;
}

CheckResult check_disjoint_primes(const RingContext& ring, const std::vector<std::vector<std::size_t>>& blocks,
                                  const VerifyOptions& options) {
    if (blocks.empty()) throw DomainError("disjoint primes check needs at least one block");
    std::vector<bool> used(ring.num_variables(), false);
    std::vector<MonomialIdeal> primes;
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw DomainError("disjoint primes check needs nonempty blocks");
        for (auto i : b) {
            if (i >= ring.num_variables()) throw DomainError("block variable out of range");
            if (used[i]) throw DomainError("blocks must be pairwise disjoint");
            used[i] = true;
        }
        total += b.size();
        primes.push_back(MonomialIdeal::variables(ring, b));
    }
    auto ideal = intersection(primes);
    auto r = make("disjoint-primes", ideal, options);
    r.blocks = blocks;
    auto cd = cohomological_dimension(ideal, options.invariants);
    auto d = dg(ideal, options.horizon, options.invariants);
    const std::size_t expected = total - blocks.size() + 1;
    r.values = {{"k", ll(blocks.size())}, {"sum_r", ll(total)}, {"cd", ll(cd)}, {"expected_cd", ll(expected)},
                {"dg", ll(d.value)}};
    require(r, cd == expected, "cd != sum r_i - k + 1");
    require(r, d.value == 0, "dg != 0");
    return r;
}

CheckResult check_frobenius(const MonomialIdeal& a, unsigned q, const VerifyOptions& options) {
    if (q < 2) throw DomainError("Frobenius check needs q >= 2");
    auto r = make("frobenius", a, options);
    r.q = q;
    auto br = bracket_power(a, q);
    auto pq = power(a, q);
    require(r, radical(br) == radical(pq), "rad a^[q] != rad a^q");
    require(r, contains_ideal(br, power(a, static_cast<unsigned>(a.mu()) * q)), "a^(mu q) not inside a^[q]");
    require(r, contains_ideal(pq, br), "a^[q] not inside a^q");
    auto d = depth(a, options.invariants), db = depth(br, options.invariants);
    auto fg = formal_grade(a, options.invariants);
    auto dim = dim_quotient(a);
    r.values = {{"q", q}, {"depth", ll(d)}, {"depth_bracket", ll(db)}, {"fgrade", ll(fg)}, {"dim_quotient", ll(dim)}};
    require(r, d == db, "depth a^[q] != depth a");
    require(r, d <= fg && fg <= dim, "depth <= fgrade <= dim fails");
    return r;
}

CheckResult check_depth_bounds(const MonomialIdeal& a, const VerifyOptions& options) {
    auto r = make("depth-bounds", a, options);
    const std::size_t n = a.num_variables();
    auto md = min_depth_powers(a, options.horizon, options.invariants);
    auto fg = formal_grade(a, options.invariants);
    auto l = analytic_spread(a, options.invariants);
    auto d = depth(a, options.invariants);
    auto dim = dim_quotient(a);
    r.values = {{"min_depth_powers", ll(md.value)}, {"fgrade", ll(fg)}, {"analytic_spread", ll(l)},
                {"depth", ll(d)}, {"dim_quotient", ll(dim)}, {"n", ll(n)}};
    require(r, md.value <= fg, "min depth of powers exceeds fgrade");
    require(r, l + md.value <= n, "Burch: l > n - min depth");
    require(r, d <= fg && fg <= dim, "depth <= fgrade <= dim fails");
    return r;
}

// --- fixtures --------------------------------------------------------------

namespace {

struct Fixture {
    std::vector<CheckResult>& out;
    const VerifyOptions& options;

    void value(const std::string& name, const MonomialIdeal& a, long long got, long long want) {
        auto r = make(name, a, options);
        r.values = {{"got", got}, {"expected", want}};
        require(r, got == want, "expected " + std::to_string(want) + ", got " + std::to_string(got));
        out.push_back(std::move(r));
    }

    void truth(const std::string& name, const MonomialIdeal& a, bool ok) {
        auto r = make(name, a, options);
        r.values = {{"holds", ok ? 1 : 0}};
        require(r, ok, "does not hold");
        out.push_back(std::move(r));
    }

    void check(const std::string& prefix, CheckResult r) {
        r.name = prefix + ": " + r.name;
        if (r.verdict != Verdict::pass) require(r, false, "expected pass, got " + to_string(r.verdict));
        out.push_back(std::move(r));
    }
};

}  // namespace

std::vector<CheckResult> run_paper_examples(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    Fixture f{out, options};
    const auto& inv = options.invariants;

    // Triangle ideal (x,y) & (y,z) & (x,z).
    auto tri_prog = parse("ring x, y, z; (x, y) & (y, z) & (x, z)");
    const RingContext& r3 = tri_prog.ring;
    auto tri = evaluate(tri_prog);
    auto mono = [&](std::vector<Exponent> e) { return Monomial(std::move(e)); };
    auto var3 = [&](std::vector<std::size_t> idx) { return MonomialIdeal::variables(r3, idx); };
    f.truth("triangle: generators are xy, xz, yz", tri,
            tri == MonomialIdeal(r3, {mono({1, 1, 0}), mono({1, 0, 1}), mono({0, 1, 1})}));
    auto tri2 = power(tri, 2);
    auto cube = MonomialIdeal(r3, {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2})});
    f.truth("triangle: a^2 = (x,y)^2 & (y,z)^2 & (x,z)^2 & (x^2,y^2,z^2)", tri2,
            tri2 == intersection({power(var3({0, 1}), 2), power(var3({1, 2}), 2), power(var3({0, 2}), 2), cube}));
    f.truth("triangle: xyz not in (x^2,y^2,z^2)", cube, !contains(cube, mono({1, 1, 1})));
    f.truth("triangle: xyz in a^(2) but not in a^2", tri2,
            contains(symbolic_power(tri, 2), mono({1, 1, 1})) && !contains(tri2, mono({1, 1, 1})));
    f.value("triangle: irreducible components", tri, ll(irreducible_decomposition(tri).size()), 3);
    f.truth("triangle: minimal primes (x,y), (x,z), (y,z)", tri,
            minimal_primes(tri) == std::vector<MonomialIdeal>{var3({0, 1}), var3({0, 2}), var3({1, 2})});
    f.value("triangle: depth(a)", tri, ll(depth(tri, inv)), 1);
    f.value("triangle: depth(a^2)", tri2, ll(depth(tri2, inv)), 0);
    f.truth("triangle: a^2 has depth zero", tri2, has_depth_zero(tri2));
    f.truth("triangle: a has positive depth", tri, !has_depth_zero(tri));
    f.value("triangle: fgrade(a)", tri, ll(formal_grade(tri, inv)), 1);
    f.value("triangle: min depth of powers", tri, ll(min_depth_powers(tri, options.horizon, inv).value), 0);
    f.value("triangle: dg(a)", tri, ll(dg(tri, options.horizon, inv).value), 1);

    auto xyz = MonomialIdeal(r3, {mono({1, 1, 0}), mono({0, 0, 1})});
    f.truth("frobenius: rad((xy,z)^[2]) = rad((xy,z)^2)", xyz, radical(bracket_power(xyz, 2)) == radical(power(xyz, 2)));

    // Two planes (x1,x2) & (x3,x4).
    auto planes_prog = parse("ring x1, x2, x3, x4; (x1, x2) & (x3, x4)");
    auto planes = evaluate(planes_prog);
    const RingContext& r4 = planes_prog.ring;
    f.value("two planes: mu", planes, ll(planes.mu()), 4);
    f.truth("two planes: minimal primes (x1,x2), (x3,x4)", planes,
            minimal_primes(planes) ==
                std::vector<MonomialIdeal>{MonomialIdeal::variables(r4, {0, 1}), MonomialIdeal::variables(r4, {2, 3})});
    f.value("two planes: height", planes, ll(height(planes)), 2);
    f.value("two planes: dim R/a", planes, ll(dim_quotient(planes)), 2);
    f.value("two planes: cd", planes, ll(cohomological_dimension(planes, inv)), 3);
    f.value("two planes: fgrade", planes, ll(formal_grade(planes, inv)), 1);
    f.value("two planes: min depth of powers", planes, ll(min_depth_powers(planes, options.horizon, inv).value), 1);
    f.value("two planes: dg", planes, ll(dg(planes, options.horizon, inv).value), 0);
    f.value("two planes: analytic spread", planes, ll(analytic_spread(planes, inv)), 3);
    auto sv = schmitt_vogel_upper(planes, inv);
    f.value("two planes: Schmitt-Vogel upper bound", planes, ll(sv.upper), 3);
    f.truth("two planes: ara certified", planes, sv.certified && sv.lower == 3);
    std::vector<std::vector<Monomial>> witness{{mono({1, 0, 1, 0})},
                                               {mono({1, 0, 0, 1}), mono({0, 1, 1, 0})},
                                               {mono({0, 1, 0, 1})}};
    f.truth("two planes: witness {x1x3}, {x1x4, x2x3}, {x2x4}", planes, is_schmitt_vogel_partition(planes, witness));
    auto lc = local_cohomology_nonvanishing(planes, r4.field());
    f.value("two planes: least nonvanishing H^j_m", planes, *lc.begin(), 1);
    f.value("two planes: largest nonvanishing H^j_m", planes, *lc.rbegin(), 2);
    ReportOptions ro;
    ro.horizon = options.horizon;
    ro.invariants = inv;
    auto rep = report(planes, ro);
    f.value("two planes: report depth", planes, ll(rep.depth), 1);
    f.value("two planes: report proj_dim", planes, ll(rep.proj_dim), 3);
    f.truth("two planes: report ara [3, 3] certified", planes,
            rep.ara.lower == 3 && rep.ara.upper == 3 && rep.ara.certified);
    f.truth("two planes: not Cohen-Macaulay, not cohomologically a complete intersection", planes,
            !rep.flags.cohen_macaulay && !rep.flags.cohomologically_ci);
    f.check("two planes", check_chain(planes, options));
    f.check("two planes", check_dg_criteria(planes, options));
    f.check("two planes", check_squarefree_duality(planes, options));

    // Disjoint-primes formula.
    f.check("{x1,x2},{x3,x4}", check_disjoint_primes(r4, {{0, 1}, {2, 3}}, options));
    f.check("{x1,x2},{x3,x4},{x5}", check_disjoint_primes(RingContext::standard(5), {{0, 1}, {2, 3}, {4}}, options));
    f.check("{x1}", check_disjoint_primes(RingContext::standard(1), {{0}}, options));
    return out;
}

// --- campaigns -------------------------------------------------------------

RandomIdealGenerator::RandomIdealGenerator(const RandomIdealSpec& spec)
    : spec_(spec), ring_(RingContext::standard(spec.n)), engine_(spec.seed) {
    if (spec.n < 1 || spec.n > 16) throw DomainError("random ideals need 1 <= n <= 16");
    if (spec.max_generators < 1) throw DomainError("random ideals need at least one generator");
    if (!spec.squarefree && spec.max_exponent < 1) throw DomainError("random ideals need max exponent >= 1");
}

std::uint64_t RandomIdealGenerator::below(std::uint64_t bound) {
    // Rejection keeps the draw uniform and independent of the standard
    // library's distribution implementations.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return v % bound;
}

MonomialIdeal RandomIdealGenerator::next() {
    const std::size_t n = spec_.n;
    while (true) {
        std::vector<Monomial> gens;
        if (spec_.squarefree) {
            const FaceMask top = (FaceMask{1} << n) - 1;
            std::vector<FaceMask> facets(1 + below(spec_.max_generators));
            for (auto& f : facets) f = below(top + 1);
            auto k = SimplicialComplex::from_facets(static_cast<unsigned>(n), facets);
            for (FaceMask s = 1; s <= top; ++s) {
                if (k.contains(s)) continue;
                std::vector<Exponent> e(n);
                for (std::size_t i = 0; i < n; ++i) e[i] = (s >> i) & 1u;
                gens.emplace_back(e);
            }
        } else {
            std::size_t count = 1 + below(spec_.max_generators);
            while (gens.size() < count) {
                std::vector<Exponent> e(n);
                for (auto& x : e) x = static_cast<Exponent>(below(spec_.max_exponent + 1));
                Monomial m(e);
                if (!m.is_unit()) gens.push_back(m);
            }
        }
        MonomialIdeal a(ring_, gens);
        if (a.is_proper_nonzero()) return a;
    }
}

std::vector<CheckResult> fuzz(const RandomIdealSpec& spec, std::size_t count, const VerifyOptions& options) {
    RandomIdealGenerator gen(spec);
    std::vector<MonomialIdeal> ideals;
    for (std::size_t i = 0; i < count; ++i) ideals.push_back(gen.next());
    std::vector<std::vector<CheckResult>> per(count);
    VerifyOptions inner = options;
    inner.invariants.betti.jobs = 1;
    parallel_for(count, options.jobs, [&](std::size_t i) {
        const auto& a = ideals[i];
        auto& out = per[i];
        out.push_back(check_chain(a, inner));
        out.push_back(check_dg_criteria(a, inner));
        out.push_back(check_depth_bounds(a, inner));
        out.push_back(check_frobenius(a, 2, inner));
        out.push_back(check_squarefree_duality(a, inner));
        out.push_back(check_prime_powers(a, inner));
    });
    std::vector<CheckResult> all;
    for (auto& v : per)
        for (auto& r : v) all.push_back(std::move(r));
    return all;
}

CheckResult replay(const CheckResult& result, const VerifyOptions& options) {
    VerifyOptions o = options;
    o.horizon = result.horizon;
    const std::string& name = result.name;
    auto base = name.substr(name.rfind(": ") == std::string::npos ? 0 : name.rfind(": ") + 2);
    CheckResult r = [&] {
        if (base == "chain") return check_chain(result.ideal, o);
        if (base == "dg-criteria") return check_dg_criteria(result.ideal, o);
        if (base == "prime-powers") return check_prime_powers(result.ideal, o);
        if (base == "squarefree-duality") return check_squarefree_duality(result.ideal, o);
        if (base == "disjoint-primes") return check_disjoint_primes(result.ideal.ring(), result.blocks, o);
        if (base == "frobenius") return check_frobenius(result.ideal, result.q, o);
        if (base == "depth-bounds") return check_depth_bounds(result.ideal, o);
        throw DomainError("no checker named '" + name + "' to replay");
    }();
    r.name = name;
    return r;
}

bool has_failures(const std::vector<CheckResult>& results) {
    return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.verdict == Verdict::fail; });
}

}  // namespace monoci
