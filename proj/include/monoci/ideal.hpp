#ifndef MONOCI_IDEAL_HPP
#define MONOCI_IDEAL_HPP

#include <string>
#include <vector>

#include "monoci/ring.hpp"

namespace monoci {

/// A monomial ideal, stored as its unique minimal generating set sorted in
/// decreasing lexicographic order. Two ideals are equal iff their generator
/// lists are identical. The zero ideal has no generators; the unit ideal is
/// generated by 1.
class MonomialIdeal {
public:
    /// Minimalizes the given generators. Throws ContextMismatch if any
    /// generator has the wrong number of exponents.
    MonomialIdeal(RingContext ring, std::vector<Monomial> generators);

    static MonomialIdeal zero(RingContext ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(RingContext ring);
    /// (x_i : i in indices)
    static MonomialIdeal variables(RingContext ring, const std::vector<std::size_t>& indices);
    /// The homogeneous maximal ideal (x_1, ..., x_n).
    static MonomialIdeal maximal(RingContext ring);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t num_variables() const noexcept { return ring_.num_variables(); }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    /// Minimal number of generators.
    std::size_t mu() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }
    bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }
    bool is_squarefree() const noexcept;
    /// Every generator is a single variable.
    bool is_generated_by_variables() const noexcept;
    /// Componentwise maximum of the generators (the top of the lcm lattice).
    Monomial lcm_of_generators() const;

    /// "(x*y, x*z, y*z)"; the zero ideal prints as "(0)".
    std::string to_string() const;

    bool operator==(const MonomialIdeal& other) const;

private:
    RingContext ring_;
    std::vector<Monomial> gens_;
};

/// Removes divisibility-redundant generators. Throws ContextMismatch on
/// wrongly sized monomials.
MonomialIdeal minimalize(const RingContext& ring, std::vector<Monomial> generators);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^n for n >= 1 by repeated squaring; n == 0 throws DomainError.
MonomialIdeal power(const MonomialIdeal& a, unsigned n);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// Intersection of a nonempty list of ideals.
MonomialIdeal intersection(const std::vector<MonomialIdeal>& ideals);
/// (a : m)
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
/// (a : b) = intersection of (a : g) over the generators g of b.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// (a : b^infinity), iterating colon until stable.
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);
/// Frobenius-style bracket power a^[q] = (g^q : g minimal generator); q >= 1.
MonomialIdeal bracket_power(const MonomialIdeal& a, unsigned q);

bool contains(const MonomialIdeal& a, const Monomial& m);
/// b is a subset of a
bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace monoci

#endif
