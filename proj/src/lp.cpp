#include "lp.hpp"

#include <optional>
#include <stdexcept>

namespace monoci::detail {

namespace {

struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // excluding rhs
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;

    void pivot(std::size_t r, std::size_t c) {
        Rational p = a[r][c];
        for (auto& v : a[r]) v /= p;
        rhs[r] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Maximizes cost . x over columns with allowed[j]; false when unbounded.
    bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        while (true) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < cols && !entering; ++j) {
                if (!allowed[j]) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows; ++i)
                    if (a[i][j] != 0) reduced -= cost[basis[i]] * a[i][j];
                if (reduced > 0) entering = j;
            }
            if (!entering) return true;
            std::size_t c = *entering;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (a[i][c] <= 0) continue;
                Rational ratio = rhs[i] / a[i][c];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, c);
        }
    }
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
    const std::size_t m = lp.constraints.size();
    const std::size_t nv = lp.num_vars;

    std::size_t slack_count = 0;
    for (const auto& c : lp.constraints)
        if (c.relation != Relation::equal) ++slack_count;

    const std::size_t slack0 = nv;
    const std::size_t art0 = nv + slack_count;
    Tableau t;
    t.rows = m;
    t.cols = art0 + m;
    t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);

    std::size_t slack = slack0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        if (c.coeffs.size() != nv) throw std::invalid_argument("constraint width mismatch");
        Rational sign = c.rhs < 0 ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < nv; ++j) t.a[i][j] = sign * c.coeffs[j];
        if (c.relation == Relation::less_equal) t.a[i][slack++] = sign;
        else if (c.relation == Relation::greater_equal) t.a[i][slack++] = -sign;
        t.rhs[i] = sign * c.rhs;
        t.a[i][art0 + i] = 1;
        t.basis[i] = art0 + i;
    }

    std::vector<Rational> phase1(t.cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
    std::vector<bool> allowed(t.cols, true);
    t.optimize(phase1, allowed);

    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= art0) infeas += t.rhs[i];
    if (infeas != 0) return {};

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows;) {
        if (t.basis[i] < art0) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < art0 && !col; ++j)
            if (t.a[i][j] != 0) col = j;
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
            t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            --t.rows;
        }
    }
    for (std::size_t j = art0; j < t.cols; ++j) allowed[j] = false;

    std::vector<Rational> cost(t.cols, Rational(0));
    for (std::size_t j = 0; j < nv && j < lp.objective.size(); ++j) cost[j] = lp.objective[j];
    LpResult result;
    if (!t.optimize(cost, allowed)) {
        result.status = LpStatus::unbounded;
        return result;
    }
    result.status = LpStatus::optimal;
    result.x.assign(nv, Rational(0));
    for (std::size_t i = 0; i < t.rows; ++i)
        if (t.basis[i] < nv) result.x[t.basis[i]] = t.rhs[i];
    result.value = 0;
    for (std::size_t j = 0; j < nv && j < lp.objective.size(); ++j) result.value += lp.objective[j] * result.x[j];
    return result;
}

}  // namespace monoci::detail
