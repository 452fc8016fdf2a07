#include "monoci/invariants.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "lp.hpp"
#include "monoci/decomposition.hpp"

namespace monoci {

namespace {

void require_proper_nonzero(const MonomialIdeal& a, const char* op) {
    if (!a.is_proper_nonzero())
        throw DomainError(std::string(op) + " needs a proper nonzero ideal, got " + a.to_string());
}

}  // namespace

std::size_t proj_dim(const MonomialIdeal& a, const InvariantOptions& options) {
    require_proper_nonzero(a, "proj_dim");
    auto betti = betti_numbers(a, a.ring().field(), options.betti);
    std::size_t pd = 0;
    for (auto [i, r] : betti)
        if (r && i > 0) pd = std::max(pd, static_cast<std::size_t>(i));
    return pd;
}

std::size_t depth(const MonomialIdeal& a, const InvariantOptions& options) {
    std::size_t d = a.num_variables() - proj_dim(a, options);
    if (a.is_squarefree() && a.num_variables() <= 10) {
        auto lc = local_cohomology_nonvanishing(a, a.ring().field());
        if (lc.empty() || static_cast<std::size_t>(*lc.begin()) != d)
            throw InternalError("depth of " + a.to_string() + " disagrees between Betti and link homology");
    }
    return d;
}

std::size_t cohomological_dimension(const MonomialIdeal& a, const InvariantOptions& options) {
    require_proper_nonzero(a, "cohomological_dimension");
    return proj_dim(radical(a), options);
}

std::size_t formal_grade(const MonomialIdeal& a, const InvariantOptions& options) {
    return a.num_variables() - cohomological_dimension(a, options);
}

// --- Newton polyhedron -----------------------------------------------------

std::size_t NewtonPolyhedron::max_compact_dimension() const {
    std::size_t best = 0;
    for (const auto& f : compact_faces) best = std::max(best, f.dimension);
    return best;
}

namespace {

std::size_t affine_dimension(const std::vector<Monomial>& points, const std::vector<std::size_t>& subset) {
    if (subset.size() <= 1) return 0;
    const auto& base = points[subset.front()];
    SparseMatrix m(subset.size() - 1, base.size());
    for (std::size_t r = 1; r < subset.size(); ++r)
        for (std::size_t i = 0; i < base.size(); ++i) {
            auto diff = static_cast<std::int64_t>(points[subset[r]][i]) - static_cast<std::int64_t>(base[i]);
            if (diff) m.add(r - 1, i, diff);
        }
    return rank(m, FieldSpec::rationals());
}

// Smallest compact face containing `subset`, if any. Solves for a weight
// w >= 1 constant on the subset and minimal there, maximizing the number of
// other points kept strictly above the minimum.
std::optional<CompactFace> smallest_face_containing(const std::vector<Monomial>& points,
                                                    const std::vector<std::size_t>& subset) {
    using detail::Constraint;
    using detail::Relation;
    const std::size_t n = points.front().size();
    const auto& base = points[subset.front()];
    std::vector<bool> in_subset(points.size(), false);
    for (auto s : subset) in_subset[s] = true;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < points.size(); ++j)
        if (!in_subset[j]) others.push_back(j);

    // Variables: u_1..u_n (w = 1 + u), then one slack s_j per other point.
    detail::LinearProgram lp;
    lp.num_vars = n + others.size();
    lp.objective.assign(lp.num_vars, Rational(0));
    auto difference_row = [&](std::size_t j) {
        std::vector<Rational> row(lp.num_vars, Rational(0));
        Rational offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rational d = Rational(static_cast<std::int64_t>(points[j][i])) - Rational(static_cast<std::int64_t>(base[i]));
            row[i] = d;
            offset += d;
        }
        return std::pair{row, offset};
    };
    for (std::size_t k = 1; k < subset.size(); ++k) {
        auto [row, offset] = difference_row(subset[k]);
        lp.constraints.push_back(Constraint{row, Relation::equal, -offset});
    }
    for (std::size_t k = 0; k < others.size(); ++k) {
        auto [row, offset] = difference_row(others[k]);
        row[n + k] = -1;
        lp.constraints.push_back(Constraint{row, Relation::greater_equal, -offset});
        std::vector<Rational> cap(lp.num_vars, Rational(0));
        cap[n + k] = 1;
        lp.constraints.push_back(Constraint{cap, Relation::less_equal, Rational(1)});
        lp.objective[n + k] = 1;
    }
    auto solution = detail::solve(lp);
    if (solution.status != detail::LpStatus::optimal) return std::nullopt;

    CompactFace face;
    face.weight.resize(n);
    for (std::size_t i = 0; i < n; ++i) face.weight[i] = solution.x[i] + 1;
    auto value = [&](const Monomial& p) {
        Rational v = 0;
        for (std::size_t i = 0; i < n; ++i) v += face.weight[i] * static_cast<std::int64_t>(p[i]);
        return v;
    };
    Rational minimum = value(base);
    for (std::size_t j = 0; j < points.size(); ++j) {
        Rational v = value(points[j]);
        if (v < minimum) throw InternalError("Newton face weight does not minimize on its face");
        if (v == minimum) face.points.push_back(j);
    }
    face.dimension = affine_dimension(points, face.points);
    return face;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
    require_proper_nonzero(a, "newton_polyhedron");
    if (a.mu() > 64) throw ResourceError("Newton polyhedron face enumeration is limited to 64 generators");
    NewtonPolyhedron poly;
    poly.points = a.generators();

    std::set<std::vector<std::size_t>> seen;
    std::deque<CompactFace> queue;
    for (std::size_t j = 0; j < poly.points.size(); ++j) {
        auto f = smallest_face_containing(poly.points, {j});
        if (f && seen.insert(f->points).second) queue.push_back(std::move(*f));
    }
    while (!queue.empty()) {
        CompactFace face = std::move(queue.front());
        queue.pop_front();
        for (std::size_t j = 0; j < poly.points.size(); ++j) {
            if (std::binary_search(face.points.begin(), face.points.end(), j)) continue;
            auto grown = face.points;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), j), j);
            auto f = smallest_face_containing(poly.points, grown);
            if (f && seen.insert(f->points).second) queue.push_back(std::move(*f));
        }
        poly.compact_faces.push_back(std::move(face));
    }
    std::sort(poly.compact_faces.begin(), poly.compact_faces.end(), [](const CompactFace& x, const CompactFace& y) {
        return x.dimension != y.dimension ? x.dimension > y.dimension : x.points < y.points;
    });
    return poly;
}

std::size_t analytic_spread(const MonomialIdeal& a, const InvariantOptions& options) {
    require_proper_nonzero(a, "analytic_spread");
    const auto& gens = a.generators();
    bool single_degree = std::all_of(gens.begin(), gens.end(),
                                     [&](const Monomial& g) { return g.degree() == gens.front().degree(); });
    if (single_degree) {
        SparseMatrix m(gens.size(), a.num_variables());
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (std::size_t i = 0; i < a.num_variables(); ++i)
                if (gens[r][i]) m.add(r, i, gens[r][i]);
        std::size_t by_rank = rank(m, FieldSpec::rationals());
        if (gens.size() <= options.newton_crosscheck_max) {
            std::size_t by_faces = newton_polyhedron(a).max_compact_dimension() + 1;
            if (by_faces != by_rank)
                throw InternalError("analytic spread of " + a.to_string() + ": rank shortcut " +
                                    std::to_string(by_rank) + " vs compact faces " + std::to_string(by_faces));
        }
        return by_rank;
    }
    return newton_polyhedron(a).max_compact_dimension() + 1;
}

FiberGrowth fiber_growth_oracle(const MonomialIdeal& a, unsigned horizon) {
    require_proper_nonzero(a, "fiber_growth_oracle");
    FiberGrowth out;
    if (horizon < 4) return out;
    MonomialIdeal current = a;
    for (unsigned t = 1; t <= horizon; ++t) {
        if (t > 1) current = product(current, a);
        out.generator_counts.push_back(current.mu());
    }
    constexpr std::size_t window = 3;
    std::vector<std::int64_t> diffs(out.generator_counts.begin(), out.generator_counts.end());
    for (std::size_t degree = 0; degree < a.num_variables(); ++degree) {
        std::vector<std::int64_t> next;
        for (std::size_t k = 1; k < diffs.size(); ++k) next.push_back(diffs[k] - diffs[k - 1]);
        diffs = std::move(next);
        if (diffs.size() < window) return out;
        bool vanished = std::all_of(diffs.end() - window, diffs.end(), [](std::int64_t d) { return d == 0; });
        if (vanished) {
            out.value = degree + 1;
            out.stabilized = true;
            return out;
        }
    }
    return out;
}

// --- Schmitt-Vogel ---------------------------------------------------------

namespace {

// divisors[p][q]: mask of generators dividing g_p * g_q.
std::vector<std::vector<std::uint64_t>> product_divisors(const MonomialIdeal& a) {
    const auto& gens = a.generators();
    const std::size_t mu = gens.size();
    std::vector<std::vector<std::uint64_t>> table(mu, std::vector<std::uint64_t>(mu, 0));
    for (std::size_t p = 0; p < mu; ++p)
        for (std::size_t q = p + 1; q < mu; ++q) {
            Monomial prod = gens[p] * gens[q];
            std::uint64_t mask = 0;
            for (std::size_t r = 0; r < mu; ++r)
                if (gens[r].divides(prod)) mask |= std::uint64_t{1} << r;
            table[p][q] = table[q][p] = mask;
        }
    return table;
}

bool level_compatible(std::uint64_t level, std::uint64_t earlier,
                      const std::vector<std::vector<std::uint64_t>>& divisors) {
    for (std::uint64_t rest = level; rest; rest &= rest - 1) {
        auto p = static_cast<std::size_t>(std::countr_zero(rest));
        for (std::uint64_t more = rest & (rest - 1); more; more &= more - 1) {
            auto q = static_cast<std::size_t>(std::countr_zero(more));
            if ((divisors[p][q] & earlier) == 0) return false;
        }
    }
    return true;
}

std::vector<std::vector<Monomial>> levels_to_monomials(const MonomialIdeal& a, const std::vector<std::uint64_t>& levels) {
    std::vector<std::vector<Monomial>> out;
    for (auto mask : levels) {
        std::vector<Monomial> level;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            level.push_back(a.generators()[static_cast<std::size_t>(std::countr_zero(rest))]);
        out.push_back(std::move(level));
    }
    return out;
}

// Exhaustive: fewest levels with the first a singleton.
std::vector<std::uint64_t> exhaustive_levels(const MonomialIdeal& a) {
    const std::size_t mu = a.mu();
    const auto divisors = product_divisors(a);
    const std::uint64_t full = (std::uint64_t{1} << mu) - 1;
    constexpr std::uint32_t unknown = ~0u;
    // best[E] = levels still needed once E is covered; choice[E] = next level.
    std::vector<std::uint32_t> best(std::size_t{1} << mu, unknown);
    std::vector<std::uint64_t> choice(std::size_t{1} << mu, 0);
    best[full] = 0;
    // Masks with more bits depend only on supersets, so walk downward.
    for (std::uint64_t e = full; e-- > 1;) {
        std::uint64_t rest = full & ~e;
        std::uint32_t best_here = unknown;
        std::uint64_t chosen = 0;
        for (std::uint64_t s = rest; s; s = (s - 1) & rest) {
            if (best[e | s] == unknown || best[e | s] + 1 >= best_here) continue;
            if (!level_compatible(s, e, divisors)) continue;
            best_here = best[e | s] + 1;
            chosen = s;
        }
        best[e] = best_here;
        choice[e] = chosen;
    }
    std::uint32_t overall = unknown;
    std::uint64_t start = 0;
    for (std::size_t g = 0; g < mu; ++g) {
        std::uint64_t single = std::uint64_t{1} << g;
        if (best[single] != unknown && best[single] + 1 < overall) {
            overall = best[single] + 1;
            start = single;
        }
    }
    std::vector<std::uint64_t> levels{start};
    for (std::uint64_t e = start; e != full; e |= choice[e]) levels.push_back(choice[e]);
    return levels;
}

std::vector<std::uint64_t> greedy_levels(const MonomialIdeal& a) {
    const std::size_t mu = a.mu();
    const auto divisors = product_divisors(a);
    const std::uint64_t full = (std::uint64_t{1} << mu) - 1;
    std::vector<std::uint64_t> best;
    for (std::size_t g = 0; g < mu; ++g) {
        std::vector<std::uint64_t> levels{std::uint64_t{1} << g};
        std::uint64_t covered = levels.front();
        while (covered != full) {
            std::uint64_t level = 0;
            for (std::size_t p = 0; p < mu; ++p) {
                std::uint64_t bit = std::uint64_t{1} << p;
                if ((covered & bit) == 0 && level_compatible(level | bit, covered, divisors)) level |= bit;
            }
            levels.push_back(level);
            covered |= level;
        }
        if (best.empty() || levels.size() < best.size()) best = std::move(levels);
    }
    return best;
}

}  // namespace

bool is_schmitt_vogel_partition(const MonomialIdeal& a, const std::vector<std::vector<Monomial>>& levels) {
    if (levels.empty() || levels.front().size() != 1) return false;
    std::vector<Monomial> seen;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        const auto& level = levels[l];
        if (level.empty()) return false;
        for (std::size_t i = 0; i < level.size(); ++i)
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                Monomial prod = level[i] * level[j];
                bool covered = std::any_of(seen.begin(), seen.end(), [&](const Monomial& p) { return p.divides(prod); });
                if (!covered) return false;
            }
        seen.insert(seen.end(), level.begin(), level.end());
    }
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return sorted == a.generators();
}

std::optional<std::size_t> schmitt_vogel_minimum(const MonomialIdeal& a, std::size_t max_generators) {
    require_proper_nonzero(a, "schmitt_vogel_minimum");
    if (a.mu() > max_generators || a.mu() > 20) return std::nullopt;
    return exhaustive_levels(a).size();
}

AraBounds schmitt_vogel_upper(const MonomialIdeal& a, const InvariantOptions& options) {
    require_proper_nonzero(a, "schmitt_vogel_upper");
    if (a.mu() > 63) throw ResourceError("Schmitt-Vogel search is limited to 63 generators");
    auto levels = a.mu() <= options.sv_exhaustive_max ? exhaustive_levels(a) : greedy_levels(a);
    AraBounds bounds;
    bounds.lower = cohomological_dimension(a, options);
    bounds.upper = levels.size();
    bounds.witness = levels_to_monomials(a, levels);
    bounds.certified = bounds.lower == bounds.upper;
    if (!is_schmitt_vogel_partition(a, bounds.witness) || bounds.upper > a.mu())
        throw InternalError("Schmitt-Vogel search produced an invalid witness for " + a.to_string());
    return bounds;
}

// --- powers ----------------------------------------------------------------

HorizonValue min_depth_powers(const MonomialIdeal& a, unsigned horizon, const InvariantOptions& options) {
    require_proper_nonzero(a, "min_depth_powers");
    if (horizon < 1) throw DomainError("min_depth_powers needs horizon >= 1");
    HorizonValue out;
    out.horizon = horizon;
    out.value = a.num_variables();
    MonomialIdeal current = a;
    for (unsigned t = 1; t <= horizon; ++t) {
        if (t > 1) current = product(current, a);
        try {
            out.value = std::min(out.value, depth(current, options));
        } catch (const ResourceError& e) {
            throw ResourceError("depth of power " + std::to_string(t) + ": " + e.what());
        }
        if (out.value == 0) break;
    }
    return out;
}

HorizonValue dg(const MonomialIdeal& a, unsigned horizon, const InvariantOptions& options) {
    auto fg = formal_grade(a, options);
    auto md = min_depth_powers(a, horizon, options);
    if (md.value > fg)
        throw InternalError("min depth of powers exceeds the formal grade for " + a.to_string());
    return HorizonValue{fg - md.value, horizon, false};
}

// --- report ----------------------------------------------------------------

InvariantReport compute_report(const MonomialIdeal& a, const ReportOptions& options) {
    require_proper_nonzero(a, "report");
    const auto& inv = options.invariants;
    InvariantReport r{.ideal = a, .ara = {}, .dg = {}, .min_depth_powers = {}, .flags = {}, .notes = {}};
    r.mu = a.mu();
    r.height = height(a);
    r.dim_quotient = a.num_variables() - r.height;
    r.proj_dim = proj_dim(a, inv);
    r.depth = depth(a, inv);
    r.cd = cohomological_dimension(a, inv);
    r.fgrade = a.num_variables() - r.cd;
    r.analytic_spread = analytic_spread(a, inv);
    r.ara = schmitt_vogel_upper(a, inv);
    try {
        auto md = min_depth_powers(a, options.horizon, inv);
        r.min_depth_powers = md;
        r.dg = HorizonValue{r.fgrade >= md.value ? r.fgrade - md.value : 0, options.horizon, false};
        if (md.value > r.fgrade) r.notes.push_back("min depth of powers exceeds the formal grade");
    } catch (const ResourceError& e) {
        if (!options.allow_partial) throw;
        r.notes.push_back(std::string("powers skipped: ") + e.what());
    }
    r.flags.squarefree = a.is_squarefree();
    r.flags.cohen_macaulay = r.depth == r.dim_quotient;
    r.flags.cohomologically_ci = r.height == r.cd;
    r.flags.stci_certified = r.ara.certified && r.ara.upper == r.height;
    if (!r.flags.squarefree) r.notes.push_back("cd computed on the radical: cd(a) = pd(R/rad a)");
    if (r.min_depth_powers)
        r.notes.push_back("min depth of powers checked up to t = " + std::to_string(options.horizon) +
                          " (uncertified beyond)");
    return r;
}

std::vector<std::string> report_violations(const InvariantReport& r) {
    std::vector<std::string> bad;
    const std::size_t n = r.ideal.num_variables();
    if (r.mu != r.ideal.mu()) bad.push_back("mu");
    if (r.height > r.cd) bad.push_back("height <= cd");
    if (r.cd > r.ara.lower) bad.push_back("cd <= ara.lower");
    if (r.ara.lower > r.ara.upper) bad.push_back("ara.lower <= ara.upper");
    if (r.ara.upper > r.mu) bad.push_back("ara.upper <= mu");
    if (r.cd > r.analytic_spread) bad.push_back("cd <= analytic_spread");
    if (r.analytic_spread > r.mu) bad.push_back("analytic_spread <= mu");
    if (r.depth + r.proj_dim != n) bad.push_back("depth + proj_dim = n");
    if (r.fgrade + r.cd != n) bad.push_back("fgrade = n - cd");
    if (r.height + r.dim_quotient != n) bad.push_back("height + dim_quotient = n");
    if (r.flags.cohomologically_ci != (r.height == r.cd)) bad.push_back("cohomologically_ci flag");
    if (r.ara.certified != (r.ara.lower == r.ara.upper)) bad.push_back("ara certified flag");
    if (r.flags.stci_certified != (r.ara.certified && r.ara.upper == r.height)) bad.push_back("stci flag");
    if (r.min_depth_powers && r.min_depth_powers->value > r.fgrade) bad.push_back("min_depth_powers <= fgrade");
    return bad;
}

InvariantReport report(const MonomialIdeal& a, const ReportOptions& options) {
    auto r = compute_report(a, options);
    auto bad = report_violations(r);
    if (!bad.empty()) {
        std::string what = "report invariants violated for " + a.to_string() + ":";
        for (const auto& b : bad) what += " [" + b + "]";
        throw InternalError(what);
    }
    return r;
}

}  // namespace monoci
