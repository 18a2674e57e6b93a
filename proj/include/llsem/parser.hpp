#pragma once

#include "llsem/formula.hpp"
#include "llsem/proof.hpp"
#include "llsem/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace llsem {

/// Byte range [start, end) into the parsed input.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, SourceSpan span)
        : std::runtime_error(msg + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
          span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

/// Formula grammar:
///   formula := 'all' ident '.' formula | tensor ['-o' formula]
///   tensor  := unary {'*' unary}
///   unary   := '!' unary | ident | '1' | '(' formula ')'
Formula parse_formula(std::string_view text);

/// Proof s-expressions, one form per rule:
///   (ax F) (ex N P) (cut N P P) (tensor-r P P) (tensor-l N P) (lolli-r P)
///   (lolli-l N P P) (prom P) (der N P) (ctr N P) (weak N F P) (one-l N P)
///   (one-r) (all-r x P) (all-l N F W P)
/// Formula arguments are self-delimiting: an identifier, 1, !F, or a
/// parenthesised formula. `;` starts a line comment.
///
/// Conclusions are computed while parsing; a rule whose premises do not fit
/// its schema is reported as a ParseError spanning the offending form.
Proof parse_proof(std::string_view text);

/// Canonical text, one node per line. parse_proof(print_proof(p)) == p.
std::string print_proof(const Proof& p);

/// Coordinate list such as "[1/2, 0, 3]" or a row-major matrix
/// "[[1/1,1/1],[0/1,1/1]]"; nesting is flattened.
std::vector<Rational> parse_coords(std::string_view text);

/// One term of a ket expression: coeff * ket(base; args...).
struct KetLiteral {
    Rational coeff;
    std::vector<Rational> base;
    std::vector<std::vector<Rational>> args;
};

/// Linear combination of kets: `ket(P; v1, v2) + 2/3 * ket(Q)`.
std::vector<KetLiteral> parse_ket_expr(std::string_view text);

}  // namespace llsem
