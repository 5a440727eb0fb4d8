#ifndef HOMSUPER_IDENTITY_HPP
#define HOMSUPER_IDENTITY_HPP

#include "homsuper/scalar.hpp"

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homsuper {

// Identity language
// -----------------
//
//   identity := expr '=' expr
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := RATIONAL term          scaled term (RATIONAL is p or p/q, p,q >= 0)
//             | '0'                    the zero expression
//             | sign term              Koszul sign factor
//             | product
//   sign     := 's(' psum ',' psum ')' (-1)^(left * right) over GF(2)
//   psum     := IDENT | '(' IDENT ('+' IDENT)* ')'
//   product  := atom ('*' atom)*       left associative
//   atom     := IDENT
//             | 'a(' expr ')' | 'a' DIGITS '(' expr ')'    alpha power
//             | '[' expr ',' expr ']'                      supercommutator slot
//             | '{' expr ',' expr ',' expr '}'             ternary slot
//             | 'cyc[' IDENT ',' IDENT ',' IDENT [';' sign+] ']' '(' expr ')'
//             | '(' expr ')'
//
// `a`, `a<digits>`, `s` and `cyc` are reserved. Variable parities are never
// written down; they come from whatever the variables are bound to.

enum class OpSlot { Star, Bracket, Brace };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Sum of variables whose parities are added mod 2.
struct ParitySum {
    std::vector<std::string> vars;
    bool operator==(const ParitySum&) const = default;
};

struct SignFactor {
    ParitySum left;
    ParitySum right;
    bool operator==(const SignFactor&) const = default;
};

struct ZeroNode {};
struct VariableNode {
    std::string name;
};
struct AlphaNode {
    unsigned power;
    ExprPtr operand;
};
struct ProductNode {
    OpSlot slot;  // Star or Bracket
    ExprPtr left;
    ExprPtr right;
};
struct TernaryNode {
    ExprPtr a;
    ExprPtr b;
    ExprPtr c;
};
struct ScaleNode {
    Scalar factor;
    ExprPtr operand;
};
struct SignNode {
    SignFactor sign;
    ExprPtr operand;
};
struct SumTerm {
    bool negated;
    ExprPtr expr;
};
struct SumNode {
    std::vector<SumTerm> terms;
};
/// Sum over the cyclic permutations (x,y,z), (y,z,x), (z,x,y). Leading signs
/// are evaluated after substitution.
struct CyclicNode {
    std::array<std::string, 3> vars;
    std::vector<SignFactor> leading;
    ExprPtr body;
};

struct Expr {
    std::variant<ZeroNode, VariableNode, AlphaNode, ProductNode, TernaryNode, ScaleNode, SignNode, SumNode, CyclicNode>
        node;
};

bool operator==(const Expr& a, const Expr& b);

struct Identity {
    ExprPtr lhs;
    ExprPtr rhs;
};

bool operator==(const Identity& a, const Identity& b);

// Builders, mostly for tests and the registry.
namespace ast {
ExprPtr zero();
ExprPtr var(std::string name);
ExprPtr alpha(unsigned power, ExprPtr operand);
ExprPtr star(ExprPtr l, ExprPtr r);
ExprPtr bracket(ExprPtr l, ExprPtr r);
ExprPtr brace(ExprPtr a, ExprPtr b, ExprPtr c);
ExprPtr scale(Scalar factor, ExprPtr operand);
ExprPtr sign(SignFactor s, ExprPtr operand);
ExprPtr sum(std::vector<SumTerm> terms);
ExprPtr cyclic(std::array<std::string, 3> vars, std::vector<SignFactor> leading, ExprPtr body);
} // namespace ast

Identity parse_identity(std::string_view text);
std::string print_identity(const Identity& identity);
std::string print_expr(const Expr& expr);

/// Operand variables in order of first appearance (lhs first).
std::vector<std::string> identity_variables(const Identity& identity);
bool uses_slot(const Identity& identity, OpSlot slot);
bool uses_signs(const Identity& identity);

} // namespace homsuper

#endif
