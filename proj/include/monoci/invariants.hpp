#ifndef MONOCI_INVARIANTS_HPP
#define MONOCI_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monoci/homology.hpp"
#include "monoci/ideal.hpp"

namespace monoci {

using Rational = boost::multiprecision::cpp_rational;

struct InvariantOptions {
    BettiOptions betti;
    /// Above this many generators the Schmitt-Vogel search is greedy.
    std::size_t sv_exhaustive_max = 8;
    /// Above this many generators the single-degree rank shortcut is not
    /// cross-checked against the face enumeration.
    std::size_t newton_crosscheck_max = 12;
};

std::size_t proj_dim(const MonomialIdeal& a, const InvariantOptions& options = {});
/// n - proj_dim (Auslander-Buchsbaum).
std::size_t depth(const MonomialIdeal& a, const InvariantOptions& options = {});
/// proj_dim of R / rad(a); local cohomology only sees the radical.
std::size_t cohomological_dimension(const MonomialIdeal& a, const InvariantOptions& options = {});
/// n - cd for the Cohen-Macaulay ambient polynomial ring.
std::size_t formal_grade(const MonomialIdeal& a, const InvariantOptions& options = {});

/// Compact face of the Newton polyhedron conv(exponents) + R^n_{>=0}.
struct CompactFace {
    /// Strictly positive weight minimized exactly on `points`.
    std::vector<Rational> weight;
    /// Indices into the generator list, ascending.
    std::vector<std::size_t> points;
    std::size_t dimension = 0;
};

struct NewtonPolyhedron {
    std::vector<Monomial> points;
    /// Every compact face, sorted by (dimension descending, points).
    std::vector<CompactFace> compact_faces;
    std::size_t max_compact_dimension() const;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a);

/// 1 + the largest dimension of a compact face of the Newton polyhedron.
std::size_t analytic_spread(const MonomialIdeal& a, const InvariantOptions& options = {});

struct FiberGrowth {
    std::optional<std::size_t> value;
    bool stabilized = false;
    /// mu(a^t) for t = 1..horizon.
    std::vector<std::size_t> generator_counts;
};

/// Reads the degree of the Hilbert polynomial of the fiber cone off the
/// sequence mu(a^t), t <= horizon (horizon >= 4). Test oracle only.
FiberGrowth fiber_growth_oracle(const MonomialIdeal& a, unsigned horizon);

struct AraBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool certified = false;
    /// Witness levels P_0..P_r; the sum of the monomials of each level
    /// (with exponent one) gives one of the r+1 radical generators.
    std::vector<std::vector<Monomial>> witness;
};

/// Whether the levels satisfy the hypotheses of the Schmitt-Vogel lemma:
/// they partition the generators, |P_0| = 1, and any two distinct elements
/// of a level multiply into the ideal generated by an earlier level element.
bool is_schmitt_vogel_partition(const MonomialIdeal& a, const std::vector<std::vector<Monomial>>& levels);

/// Fewest Schmitt-Vogel levels: exhaustive up to sv_exhaustive_max
/// generators, greedy above. lower is set to cd(a).
AraBounds schmitt_vogel_upper(const MonomialIdeal& a, const InvariantOptions& options = {});
/// Exhaustive minimum number of levels, or nullopt if above `max_generators`.
std::optional<std::size_t> schmitt_vogel_minimum(const MonomialIdeal& a, std::size_t max_generators = 12);

struct HorizonValue {
    std::size_t value = 0;
    unsigned horizon = 0;
    /// Always false: no effective stabilization bound is available.
    bool certified = false;
};

/// min over 1 <= t <= horizon of depth R/a^t; stops early at zero.
HorizonValue min_depth_powers(const MonomialIdeal& a, unsigned horizon, const InvariantOptions& options = {});
/// formal_grade(a) - min_depth_powers(a, horizon).
HorizonValue dg(const MonomialIdeal& a, unsigned horizon, const InvariantOptions& options = {});

struct InvariantFlags {
    bool squarefree = false;
    bool cohen_macaulay = false;
    bool cohomologically_ci = false;
    bool stci_certified = false;
};

struct InvariantReport {
    MonomialIdeal ideal;
    std::size_t mu = 0;
    std::size_t height = 0;
    std::size_t dim_quotient = 0;
    std::size_t depth = 0;
    std::size_t proj_dim = 0;
    std::size_t cd = 0;
    std::size_t fgrade = 0;
    std::size_t analytic_spread = 0;
    AraBounds ara;
    /// Empty only in a partial report whose power computations ran out of
    /// resources.
    std::optional<HorizonValue> dg;
    std::optional<HorizonValue> min_depth_powers;
    InvariantFlags flags;
    /// Human-readable remarks (reductions applied, skipped pieces).
    std::vector<std::string> notes;
};

struct ReportOptions {
    unsigned horizon = 3;
    /// Return a report without the power-based fields instead of throwing
    /// when they exceed the resource bounds.
    bool allow_partial = false;
    InvariantOptions invariants;
};

/// Names of the report invariants that fail; empty when all hold.
std::vector<std::string> report_violations(const InvariantReport& r);

/// Every field computed independently; violations are not checked.
InvariantReport compute_report(const MonomialIdeal& a, const ReportOptions& options = {});
/// compute_report followed by report_violations; throws InternalError on
/// any violation.
InvariantReport report(const MonomialIdeal& a, const ReportOptions& options = {});

}  // namespace monoci

#endif
