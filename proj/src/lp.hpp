#ifndef MONOCI_SRC_LP_HPP
#define MONOCI_SRC_LP_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoci::detail {

using Rational = boost::multiprecision::cpp_rational;

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
};

/// maximize objective . x  subject to constraints, x >= 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Constraint> constraints;
    std::vector<Rational> objective;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational value;
};

/// Exact two-phase simplex with Bland's rule.
LpResult solve(const LinearProgram& lp);

}  // namespace monoci::detail

#endif
