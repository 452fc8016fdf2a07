#ifndef MONOCI_DSL_HPP
#define MONOCI_DSL_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "monoci/ideal.hpp"

namespace monoci {

/// Syntax tree of an ideal expression. `&` is intersection.
struct IdealExpression {
    enum class Kind { literal, sum, product, intersection, power, bracket_power, symbolic_power };

    Kind kind = Kind::literal;
    /// Generators of a literal, as written (not minimalized).
    std::vector<Monomial> generators;
    std::shared_ptr<const IdealExpression> left;
    /// Second operand of a binary node.
    std::shared_ptr<const IdealExpression> right;
    /// Exponent of a power node.
    unsigned exponent = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Program {
    RingContext ring;
    std::shared_ptr<const IdealExpression> expr;
};

/// Parses `ring x, y; expr`. Throws ParseError with a 1-based position.
///
///   program := "ring" ident { "," ident } ";" expr
///   expr    := term { "&" term }
///   term    := atom { ("+" | "*") atom }
///   atom    := ( literal | "[" expr "]" ) [ "^" nat | "^[" nat "]" | "^(" nat ")" ]
///   literal := "(" monomial { "," monomial } ")"
///   monomial:= "1" | factor { "*" factor }      factor := ident [ "^" nat ]
///
/// `#` starts a comment running to the end of the line.
Program parse(std::string_view text, const FieldSpec& field = FieldSpec::rationals());

/// Folds the tree through the ideal operations. A symbolic power of a
/// non-squarefree ideal throws DomainError naming the position.
MonomialIdeal evaluate(const Program& program);
MonomialIdeal evaluate(const RingContext& ring, const IdealExpression& expr);

/// Canonical text; parse(print(p)) prints back to the same string.
std::string print(const Program& program);
std::string print(const RingContext& ring, const IdealExpression& expr);

}  // namespace monoci

#endif
