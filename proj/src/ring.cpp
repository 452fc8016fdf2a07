#include "monoci/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

namespace monoci {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t q) {
    if (!is_prime(q)) throw DomainError("field modulus " + std::to_string(q) + " is not prime");
    return FieldSpec(Kind::prime, q);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "rational" || text == "rationals" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint32_t q = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return prime(q);
    }
    throw DomainError("unknown field '" + std::string(text) + "' (expected rational or fp:<q>)");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? std::string("rational") : "fp:" + std::to_string(modulus_);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
    std::vector<Exponent> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::optional<std::size_t> Monomial::pure_power_variable() const noexcept {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (found) return std::nullopt;
        found = i;
    }
    return found;
}

std::size_t Monomial::support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& d) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > d.exps_[i] ? exps_[i] - d.exps_[i] : 0;
    return Monomial(std::move(e));
}

Monomial Monomial::support() const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

Monomial Monomial::pow(Exponent q) const {
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] * q;
    return Monomial(std::move(e));
}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s.front());
    if (!std::isalpha(head) && s.front() != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

RingContext::RingContext(std::vector<std::string> variables, FieldSpec field) {
    if (variables.empty()) throw DomainError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!is_identifier(v)) throw DomainError("invalid variable name '" + v + "'");
        if (v == "ring") throw DomainError("'ring' is reserved and cannot name a variable");
        if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
    }
    data_ = std::make_shared<const Data>(Data{std::move(variables), field});
}

RingContext RingContext::standard(std::size_t n, FieldSpec field) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return RingContext(std::move(names), field);
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
    const auto& vars = data_->variables;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    return std::nullopt;
}

RingContext RingContext::with_field(FieldSpec field) const {
    return RingContext(data_->variables, field);
}

std::string RingContext::format(const Monomial& m) const {
    check(m);
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += data_->variables[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? std::string("1") : out;
}

void RingContext::check(const Monomial& m) const {
    if (m.size() != num_variables())
        throw ContextMismatch("monomial has " + std::to_string(m.size()) + " exponents, ring has " +
                              std::to_string(num_variables()) + " variables");
}

bool RingContext::operator==(const RingContext& other) const {
    return data_ == other.data_ ||
           (data_->variables == other.data_->variables && data_->field == other.data_->field);
}

}  // namespace monoci
