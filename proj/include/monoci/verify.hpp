#ifndef MONOCI_VERIFY_HPP
#define MONOCI_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monoci/invariants.hpp"

namespace monoci {

enum class Verdict { pass, fail, not_applicable, uncertified };

std::string to_string(Verdict v);

/// Outcome of one checker run, with everything needed to run it again.
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    MonomialIdeal ideal;
    unsigned horizon = 0;
    /// Exponent for the Frobenius check, 0 otherwise.
    unsigned q = 0;
    /// Variable blocks for the disjoint-primes check, empty otherwise.
    std::vector<std::vector<std::size_t>> blocks;
    /// Invariant values involved, in a fixed order.
    std::vector<std::pair<std::string, long long>> values;
    std::string detail;
};

struct VerifyOptions {
    unsigned horizon = 3;
    InvariantOptions invariants;
    /// Worker threads for campaigns; results do not depend on it.
    unsigned jobs = 1;
};

/// ht <= cd <= ara <= l <= mu together with the other report invariants.
CheckResult check_chain(const MonomialIdeal& a, const VerifyOptions& options = {});

/// dg = 0: (ht = cd) iff a is a set-theoretic complete intersection.
/// dg = 1: (l != n - min depth) iff cd = ara = l. Not applicable otherwise.
/// Uncertified when the Schmitt-Vogel bound cannot decide the first
/// equivalence.
CheckResult check_dg_criteria(const MonomialIdeal& a, const VerifyOptions& options = {});

/// For a prime generated by variables with fgrade <= 1: symbolic and
/// ordinary powers agree up to the horizon, l = cd = n - 1, and the
/// complete intersection conclusions hold.
CheckResult check_prime_powers(const MonomialIdeal& p, const VerifyOptions& options = {});

/// Squarefree a: the local cohomology indices H^i_a(R) != 0 are
/// n - { j : H^j_m(R/a) != 0 }, their maximum is pd, and cohomologically
/// complete intersection iff Cohen-Macaulay.
CheckResult check_squarefree_duality(const MonomialIdeal& a, const VerifyOptions& options = {});

/// I = intersection of the primes on disjoint variable blocks:
/// cd(I) = sum r_i - k + 1 and dg(I) = 0.
CheckResult check_disjoint_primes(const RingContext& ring, const std::vector<std::vector<std::size_t>>& blocks,
                                  const VerifyOptions& options = {});

/// a^{mu q} in a^[q] in a^q, equal radicals, depth(a^[q]) = depth(a) and
/// depth <= fgrade <= dim for a. Needs q >= 2.
CheckResult check_frobenius(const MonomialIdeal& a, unsigned q, const VerifyOptions& options = {});

/// min depth of powers <= fgrade, l <= n - min depth (Burch) and
/// depth <= fgrade <= dim.
CheckResult check_depth_bounds(const MonomialIdeal& a, const VerifyOptions& options = {});

/// Every fixed value from the two worked examples and the disjoint-primes
/// formula, one result per value.
std::vector<CheckResult> run_paper_examples(const VerifyOptions& options = {});

struct RandomIdealSpec {
    std::size_t n = 4;
    bool squarefree = true;
    unsigned max_exponent = 3;
    std::size_t max_generators = 5;
    std::uint64_t seed = 1;
};

/// Deterministic stream of proper nonzero ideals. Squarefree ideals are
/// Stanley-Reisner ideals of random facet sets.
class RandomIdealGenerator {
public:
    explicit RandomIdealGenerator(const RandomIdealSpec& spec);
    MonomialIdeal next();
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    RandomIdealSpec spec_;
    RingContext ring_;
    std::mt19937_64 engine_;
};

/// `count` ideals drawn per `spec`, every applicable checker on each, ordered
/// by ideal index then checker.
std::vector<CheckResult> fuzz(const RandomIdealSpec& spec, std::size_t count, const VerifyOptions& options = {});

/// Runs the named checker again on the stored inputs.
CheckResult replay(const CheckResult& result, const VerifyOptions& options = {});

/// Whether any result has a fail verdict.
bool has_failures(const std::vector<CheckResult>& results);

}  // namespace monoci

#endif
