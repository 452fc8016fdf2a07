#ifndef MONOCI_DECOMPOSITION_HPP
#define MONOCI_DECOMPOSITION_HPP

#include <map>
#include <vector>

#include "monoci/ideal.hpp"

namespace monoci {

/// Irreducible monomial ideal (x_i^{e_i} : i in support), all e_i >= 1.
class IrreducibleComponent {
public:
    /// Throws DomainError on an empty support or a zero bound.
    IrreducibleComponent(RingContext ring, std::map<std::size_t, Exponent> bounds);

    const RingContext& ring() const noexcept { return ring_; }
    const std::map<std::size_t, Exponent>& bounds() const noexcept { return bounds_; }
    std::vector<std::size_t> support() const;

    MonomialIdeal ideal() const;
    /// The prime generated by the support variables.
    MonomialIdeal radical() const;

    bool operator==(const IrreducibleComponent&) const = default;
    auto operator<=>(const IrreducibleComponent& other) const { return bounds_ <=> other.bounds_; }

private:
    RingContext ring_;
    std::map<std::size_t, Exponent> bounds_;
};

/// Irredundant irreducible decomposition, sorted. Throws DomainError for
/// the zero or unit ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& a);

/// Minimal primes, each generated by a set of variables; sorted.
std::vector<MonomialIdeal> minimal_primes(const MonomialIdeal& a);

std::size_t height(const MonomialIdeal& a);
/// Krull dimension of R/a, i.e. n - height(a).
std::size_t dim_quotient(const MonomialIdeal& a);

/// a^(t) for squarefree a: intersection of p^t over its minimal primes.
MonomialIdeal symbolic_power(const MonomialIdeal& a, unsigned t);

/// Whether the maximal ideal is associated to R/a, i.e. depth R/a = 0.
bool has_depth_zero(const MonomialIdeal& a);

}  // namespace monoci

#endif
