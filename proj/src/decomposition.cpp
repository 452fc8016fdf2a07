#include "monoci/decomposition.hpp"

#include <algorithm>
#include <set>

namespace monoci {

IrreducibleComponent::IrreducibleComponent(RingContext ring, std::map<std::size_t, Exponent> bounds)
    : ring_(std::move(ring)), bounds_(std::move(bounds)) {
    if (bounds_.empty()) throw DomainError("irreducible component needs a nonempty support");
    for (auto [i, e] : bounds_) {
        if (i >= ring_.num_variables()) throw DomainError("component variable out of range");
        if (e == 0) throw DomainError("component exponent bounds must be positive");
    }
}

std::vector<std::size_t> IrreducibleComponent::support() const {
    std::vector<std::size_t> s;
    for (auto [i, e] : bounds_) s.push_back(i);
    return s;
}

MonomialIdeal IrreducibleComponent::ideal() const {
    std::vector<Monomial> gens;
    for (auto [i, e] : bounds_) gens.push_back(Monomial::variable(ring_.num_variables(), i, e));
    return MonomialIdeal(ring_, std::move(gens));
}

MonomialIdeal IrreducibleComponent::radical() const {
    return MonomialIdeal::variables(ring_, support());
}

namespace {

using Bounds = std::map<std::size_t, Exponent>;

// gens is minimal. Splits x_i^e * h into the two coprime pieces until every
// generator is a pure power.
void split(const RingContext& ring, const std::vector<Monomial>& gens, std::set<Bounds>& out) {
    for (const auto& g : gens) {
        if (g.pure_power_variable()) continue;
        std::size_t i = 0;
        while (g[i] == 0) ++i;
        Monomial pure = Monomial::variable(g.size(), i, g[i]);
        Monomial rest = g.colon(pure);

        for (const Monomial* piece : {&pure, &rest}) {
            std::vector<Monomial> next;
            next.reserve(gens.size());
            for (const auto& h : gens)
                if (!(h == g)) next.push_back(h);
            next.push_back(*piece);
            split(ring, MonomialIdeal(ring, std::move(next)).generators(), out);
        }
        return;
    }
    Bounds b;
    for (const auto& g : gens) {
        auto i = *g.pure_power_variable();
        b[i] = g[i];
    }
    out.insert(std::move(b));
}

// (x_i^{c_i}) is contained in (x_i^{d_i}) iff supp c is inside supp d and
// d_i <= c_i on it.
bool component_contained(const Bounds& inner, const Bounds& outer) {
    for (auto [i, e] : inner) {
        auto it = outer.find(i);
        if (it == outer.end() || it->second > e) return false;
    }
    return true;
}

void require_proper_nonzero(const MonomialIdeal& a, const char* op) {
    if (a.is_zero()) throw DomainError(std::string(op) + ": the zero ideal is not allowed");
    if (a.is_unit()) throw DomainError(std::string(op) + ": the unit ideal is not allowed");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& a) {
    require_proper_nonzero(a, "irreducible_decomposition");
    std::set<Bounds> found;
    split(a.ring(), a.generators(), found);

    std::vector<Bounds> all(found.begin(), found.end());
    std::vector<IrreducibleComponent> result;
    for (std::size_t k = 0; k < all.size(); ++k) {
        bool redundant = false;
        for (std::size_t j = 0; j < all.size() && !redundant; ++j)
            redundant = j != k && component_contained(all[j], all[k]);
        if (!redundant) result.emplace_back(a.ring(), all[k]);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& a) {
    require_proper_nonzero(a, "minimal_primes");
    std::vector<MonomialIdeal> primes;
    for (const auto& c : irreducible_decomposition(radical(a))) primes.push_back(c.ideal());
    std::sort(primes.begin(), primes.end(), [](const MonomialIdeal& p, const MonomialIdeal& q) {
        return p.generators() > q.generators();
    });
    return primes;
}

std::size_t height(const MonomialIdeal& a) {
    std::size_t best = a.num_variables();
    for (const auto& p : minimal_primes(a)) best = std::min(best, p.mu());
    return best;
}

std::size_t dim_quotient(const MonomialIdeal& a) {
    return a.num_variables() - height(a);
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, unsigned t) {
    if (t == 0) throw DomainError("symbolic power exponent must be positive");
    if (!a.is_squarefree())
        throw DomainError("symbolic power requires a squarefree ideal, got " + a.to_string());
    require_proper_nonzero(a, "symbolic_power");
    if (t == 1) return a;
    std::vector<MonomialIdeal> powers;
    for (const auto& p : minimal_primes(a)) powers.push_back(power(p, t));
    return intersection(powers);
}

bool has_depth_zero(const MonomialIdeal& a) {
    require_proper_nonzero(a, "has_depth_zero");
    return !(saturate(a, MonomialIdeal::maximal(a.ring())) == a);
}

}  // namespace monoci
