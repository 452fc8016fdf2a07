// Brute-force reference implementations used only by the tests. Nothing in
// here calls into the algorithms it is used to check.
#ifndef MONOCI_TESTS_ORACLES_HPP
#define MONOCI_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "monoci/ideal.hpp"

namespace oracle {

using monoci::Exponent;
using monoci::Monomial;
using monoci::MonomialIdeal;
using monoci::RingContext;

/// Every exponent vector of length n with total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

/// Every exponent vector componentwise <= top.
inline std::vector<Monomial> monomials_in_box(const Monomial& top) {
    std::vector<Monomial> out;
    std::vector<Exponent> e(top.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == top.size()) {
            out.emplace_back(e);
            return;
        }
        for (Exponent k = 0; k <= top[i]; ++k) {
            e[i] = k;
            rec(i + 1);
        }
        e[i] = 0;
    };
    rec(0);
    return out;
}

inline bool divides(const Monomial& u, const Monomial& m) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > m[i]) return false;
    return true;
}

/// Membership straight from the definition: some generator divides m.
inline bool member(const std::vector<Monomial>& gens, const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

inline bool member(const MonomialIdeal& a, const Monomial& m) { return member(a.generators(), m); }

inline std::vector<Monomial> divisors(const Monomial& m) {
    return monomials_in_box(m);
}

inline Monomial times(const Monomial& a, const Monomial& b) {
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return Monomial(e);
}

inline Monomial over(const Monomial& a, const Monomial& b) {
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
    return Monomial(e);
}

/// m in a*b iff m = u*v with u in a and v in b.
inline bool member_product(const MonomialIdeal& a, const MonomialIdeal& b, const Monomial& m) {
    for (const auto& u : divisors(m))
        if (member(a, u) && member(b, over(m, u))) return true;
    return false;
}

/// m in rad(a) iff m^k in a for k = largest exponent in a's generators.
inline bool member_radical(const MonomialIdeal& a, const Monomial& m) {
    Exponent k = 1;
    for (const auto& g : a.generators())
        for (auto e : g.exponents()) k = std::max(k, e);
    std::vector<Exponent> e(m.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] * k;
    return member(a, Monomial(e));
}

inline unsigned max_degree(const MonomialIdeal& a) {
    std::uint64_t d = 0;
    for (const auto& g : a.generators()) d = std::max(d, g.degree());
    return static_cast<unsigned>(d);
}

/// Random generator list with the given bounds (may contain redundancies).
inline std::vector<Monomial> random_generators(std::mt19937_64& rng, std::size_t n, unsigned max_exp,
                                               std::size_t max_gens, bool squarefree = false) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<unsigned> exp(0, squarefree ? 1 : max_exp);
    std::vector<Monomial> gens;
    std::size_t k = count(rng);
    while (gens.size() < k) {
        std::vector<Exponent> e(n);
        for (auto& x : e) x = exp(rng);
        Monomial m(e);
        if (!m.is_unit()) gens.push_back(m);
    }
    return gens;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, const RingContext& ring, unsigned max_exp,
                                  std::size_t max_gens, bool squarefree = false) {
    return MonomialIdeal(ring, random_generators(rng, ring.num_variables(), max_exp, max_gens, squarefree));
}

/// Exact rank over the rationals by cross-multiplying integer rows. Only
/// meant for the tiny matrices the oracle builds.
inline std::size_t dense_rank(std::vector<std::vector<long long>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long long f = m[r][c], p = m[rank][c];
            long long g = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                m[r][j] = p * m[r][j] - f * m[rank][j];
                g = std::gcd(g, m[r][j]);
            }
            if (g > 1)
                for (auto& v : m[r]) v /= g;
        }
        ++rank;
    }
    return rank;
}

/// Total Betti numbers of R/a from the Koszul complex of x_1..x_n tensored
/// with R/a, degree by degree: in multidegree b, K_i has basis e_tau (|tau|
/// = i) with x^{b - tau} a standard monomial, and the differential sends
/// e_tau (x) m to sum_j +-e_{tau - j} (x) x_j m, dropping terms in a.
inline std::map<int, std::size_t> koszul_on_quotient_betti(const MonomialIdeal& a) {
    const std::size_t n = a.num_variables();
    Monomial top = a.lcm_of_generators();
    std::vector<Exponent> shifted(n);
    for (std::size_t i = 0; i < n; ++i) shifted[i] = top[i] + 1;
    std::map<int, std::size_t> total;
    for (const auto& b : monomials_in_box(Monomial(shifted))) {
        std::vector<std::vector<std::uint32_t>> basis(n + 1);
        for (std::uint32_t tau = 0; tau < (1u << n); ++tau) {
            bool fits = true;
            std::vector<Exponent> rest(n);
            for (std::size_t i = 0; i < n && fits; ++i) {
                Exponent t = (tau >> i) & 1u;
                if (b[i] < t) fits = false;
                else rest[i] = b[i] - t;
            }
            if (!fits || member(a, Monomial(rest))) continue;
            basis[static_cast<std::size_t>(__builtin_popcount(tau))].push_back(tau);
        }
        std::vector<std::size_t> ranks(n + 2, 0);  // ranks[i] = rank of d_i : K_i -> K_{i-1}
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& src = basis[i];
            const auto& dst = basis[i - 1];
            if (src.empty() || dst.empty()) continue;
            std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
            for (std::size_t c = 0; c < src.size(); ++c) {
                int position = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!((src[c] >> j) & 1u)) continue;
                    std::uint32_t face = src[c] & ~(1u << j);
                    auto it = std::find(dst.begin(), dst.end(), face);
                    if (it != dst.end())
                        m[static_cast<std::size_t>(it - dst.begin())][c] = position % 2 == 0 ? 1 : -1;
                    ++position;
                }
            }
            ranks[i] = dense_rank(m);
        }
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t h = basis[i].size() - ranks[i] - ranks[i + 1];
            if (h) total[static_cast<int>(i)] += h;
        }
    }
    return total;
}

/// Indices j with Ext^j_R(R/a, R) != 0. In multidegree -b the dual Taylor
/// complex has basis the generator subsets F with b | lcm(F), and every
/// coboundary coefficient is +-1; b ranges over the box [0, lcm].
inline std::set<int> ext_nonvanishing(const MonomialIdeal& a) {
    const auto& gens = a.generators();
    const std::size_t n = a.num_variables(), mu = gens.size();
    std::vector<Monomial> lcms(std::size_t{1} << mu, Monomial::unit(n));
    for (std::uint32_t f = 1; f < lcms.size(); ++f) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctz(f));
        const Monomial& rest = lcms[f & (f - 1)];
        std::vector<Exponent> e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = std::max(rest[i], gens[low][i]);
        lcms[f] = Monomial(e);
    }
    std::set<int> out;
    for (const auto& b : monomials_in_box(a.lcm_of_generators())) {
        std::vector<std::vector<std::uint32_t>> cells(mu + 1);
        for (std::uint32_t f = 0; f < lcms.size(); ++f)
            if (divides(b, lcms[f])) cells[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
        // ranks[i] = rank of the coboundary C^i -> C^{i+1}; C^i = subsets of size i.
        std::vector<std::size_t> ranks(mu + 2, 0);
        for (std::size_t i = 0; i < mu; ++i) {
            const auto& src = cells[i];
            const auto& dst = cells[i + 1];
            if (src.empty() || dst.empty()) continue;
            std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
            for (std::size_t r = 0; r < dst.size(); ++r) {
                int position = 0;
                for (std::size_t j = 0; j < mu; ++j) {
                    if (!((dst[r] >> j) & 1u)) continue;
                    auto it = std::find(src.begin(), src.end(), dst[r] & ~(1u << j));
                    if (it != src.end()) m[r][static_cast<std::size_t>(it - src.begin())] = position % 2 ? -1 : 1;
                    ++position;
                }
            }
            ranks[i] = dense_rank(m);
        }
        for (std::size_t i = 0; i <= mu; ++i) {
            std::size_t before = i == 0 ? 0 : ranks[i - 1];
            if (cells[i].size() > ranks[i] + before) out.insert(static_cast<int>(i));
        }
    }
    return out;
}

/// { j : H^j_m(R/a) != 0 } from ext_nonvanishing by graded local duality.
inline std::set<int> local_cohomology_by_duality(const MonomialIdeal& a) {
    std::set<int> out;
    for (int j : ext_nonvanishing(a)) out.insert(static_cast<int>(a.num_variables()) - j);
    return out;
}

}  // namespace oracle

#endif
