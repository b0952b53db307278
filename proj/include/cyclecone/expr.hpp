#pragma once

// A small expression language for cycle classes:
//
//   expr := term (('+'|'-') term)*
//   term := [rational '*'] gen
//   gen  := 'H{' int (',' int)* '}' | 'E' int | 'E{' int ',' int '}'
//         | ident '(' args ')' | ident
//
// Whitespace is insignificant; rationals are written 'p/q' or as integers.
// Named generators: Ws(s) for the divisor H_2+...+H_n - s E_1, the bare
// constants D1 and D2 on the four-point blowup of (P^1)^4, and
// phi(c_0,...,c_{n+r-1}) for the image of a coefficient vector under the
// divisor basis change.
//
// Parsing validates every index against the explicit (n, r) context; nothing
// is inferred from the expression itself.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cyclecone/chow.hpp"
#include "cyclecone/cycles.hpp"

namespace cyclecone {

struct GenH {
    std::vector<int> indices;  // sorted, distinct, each in 1..n
};
struct GenEDivisor {
    int j = 0;  // E j, the exceptional divisor
};
struct GenEPlane {
    int j = 0;  // E{j,k}, the k-plane class inside E_j
    int k = 0;
};
struct GenWs {
    int s = 0;
};
struct GenD1 {};
struct GenD2 {};
struct GenPhi {
    std::vector<Rat> coeffs;  // n+r coefficients over the source basis
};

using Generator =
    std::variant<GenH, GenEDivisor, GenEPlane, GenWs, GenD1, GenD2, GenPhi>;

struct ExprTerm {
    Rat coeff;  // sign folded in
    Generator gen;
};

struct ClassExpr {
    std::vector<ExprTerm> terms;
};

// Parse and validate against the context. Throws parse_error for syntax
// problems (with byte offset) and error for out-of-range or repeated indices.
ClassExpr parse_class_expr(const std::string& text, RingContext ctx);

// Canonical rendering; parse(print(parse(x))) == parse(x).
std::string print_class_expr(const ClassExpr& e);

// Evaluate as an element of the Chow ring (terms may mix degrees).
ChowElement eval_chow(const ClassExpr& e, RingContext ctx);

// Evaluate as a k-cycle class; every generator must be k-dimensional.
CycleClass eval_cycle(const ClassExpr& e, RingContext ctx, int k);

}  // namespace cyclecone
