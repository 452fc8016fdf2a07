#include "monoci/ideal.hpp"

#include <algorithm>
#include <functional>

namespace monoci {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.ring() == b.ring())) throw ContextMismatch();
}

// Generators sorted by degree never divide an earlier one of lower degree,
// so one forward pass against the kept list suffices.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
        auto dx = x.degree(), dy = y.degree();
        return dx != dy ? dx < dy : x < y;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>());
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
    for (const auto& g : generators) ring_.check(g);
    gens_ = minimal_generators(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(RingContext ring) {
    auto n = ring.num_variables();
    return MonomialIdeal(std::move(ring), {Monomial::unit(n)});
}

MonomialIdeal MonomialIdeal::variables(RingContext ring, const std::vector<std::size_t>& indices) {
    auto n = ring.num_variables();
    std::vector<Monomial> gens;
    for (auto i : indices) {
        if (i >= n) throw DomainError("variable index " + std::to_string(i) + " out of range");
        gens.push_back(Monomial::variable(n, i));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(RingContext ring) {
    std::vector<std::size_t> all(ring.num_variables());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return variables(std::move(ring), all);
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variables() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.degree() == 1; });
}

Monomial MonomialIdeal::lcm_of_generators() const {
    Monomial l = Monomial::unit(num_variables());
    for (const auto& g : gens_) l = l.lcm(g);
    return l;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += ring_.format(gens_[i]);
    }
    return out + ")";
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    return ring_ == other.ring_ && gens_ == other.gens_;
}

MonomialIdeal minimalize(const RingContext& ring, std::vector<Monomial> generators) {
    return MonomialIdeal(ring, std::move(generators));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.mu() * b.mu());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g * h);
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned n) {
    if (n == 0) throw DomainError("power exponent must be positive (use the unit ideal explicitly)");
    MonomialIdeal result = a;
    MonomialIdeal base = a;
    bool have_result = false;
    while (n > 0) {
        if (n & 1u) {
            result = have_result ? product(result, base) : base;
            have_result = true;
        }
        n >>= 1u;
        if (n > 0) base = product(base, base);
    }
    return result;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.mu() * b.mu());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersection(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) throw DomainError("intersection of an empty family is not defined here");
    MonomialIdeal result = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) result = intersection(result, ideals[i]);
    return result;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
    a.ring().check(m);
    std::vector<Monomial> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators()) gens.push_back(g.colon(m));
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    if (b.is_zero()) return MonomialIdeal::unit(a.ring());
    MonomialIdeal result = colon(a, b.generators().front());
    for (std::size_t i = 1; i < b.mu(); ++i) result = intersection(result, colon(a, b.generators()[i]));
    return result;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    MonomialIdeal current = a;
    while (true) {
        MonomialIdeal next = colon(current, b);
        if (next == current) return current;
        current = std::move(next);
    }
}

MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<Monomial> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators()) gens.push_back(g.support());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal bracket_power(const MonomialIdeal& a, unsigned q) {
    if (q == 0) throw DomainError("bracket power exponent must be positive");
    std::vector<Monomial> gens;
    gens.reserve(a.mu());
    for (const auto& g : a.generators()) gens.push_back(g.pow(q));
    return MonomialIdeal(a.ring(), std::move(gens));
}

bool contains(const MonomialIdeal& a, const Monomial& m) {
    a.ring().check(m);
    return std::any_of(a.generators().begin(), a.generators().end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    return std::all_of(b.generators().begin(), b.generators().end(),
                       [&](const Monomial& g) { return contains(a, g); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    return a.generators() == b.generators();
}

}  // namespace monoci
