#ifndef MONOCI_RING_HPP
#define MONOCI_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoci/errors.hpp"

namespace monoci {

/// Coefficient field: the rationals or a prime field GF(q).
class FieldSpec {
public:
    enum class Kind { rationals, prime };

    static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
    /// Throws DomainError unless q is prime.
    static FieldSpec prime(std::uint32_t q);
    /// Accepts "rational", "rationals", "Q" or "fp:<q>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
    /// 0 for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }
    /// "rational" or "fp:<q>"; round-trips through parse().
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint32_t modulus_;
};

bool is_prime(std::uint32_t q);

using Exponent = std::uint32_t;

/// Exponent vector of a monomial x^a. The length is the number of
/// variables of the ring the monomial is used in.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
    Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;
    /// Index of the single variable if this is a pure power x_i^e (e >= 1).
    std::optional<std::size_t> pure_power_variable() const noexcept;
    std::size_t support_size() const noexcept;

    /// this | other
    bool divides(const Monomial& other) const noexcept;

    Monomial operator*(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    /// m / gcd(m, d): the generator of ((m) : d).
    Monomial colon(const Monomial& d) const;
    /// Squarefree monomial on the support.
    Monomial support() const;
    Monomial pow(Exponent q) const;

    /// Lexicographic on the exponent vectors.
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exps_;
};

/// The ambient polynomial ring k[x_1..x_n]: variable names plus the field.
/// Cheap to copy; compared by value.
class RingContext {
public:
    explicit RingContext(std::vector<std::string> variables,
                         FieldSpec field = FieldSpec::rationals());

    /// Context with variables x1..xn.
    static RingContext standard(std::size_t n, FieldSpec field = FieldSpec::rationals());

    std::size_t num_variables() const noexcept { return data_->variables.size(); }
    const std::vector<std::string>& variables() const noexcept { return data_->variables; }
    const FieldSpec& field() const noexcept { return data_->field; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Same variables, different field.
    RingContext with_field(FieldSpec field) const;

    /// "x1*x3^2"; the unit monomial prints as "1".
    std::string format(const Monomial& m) const;

    /// Throws ContextMismatch unless m has one exponent per variable.
    void check(const Monomial& m) const;

    bool operator==(const RingContext& other) const;

private:
    struct Data {
        std::vector<std::string> variables;
        FieldSpec field;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace monoci

#endif
