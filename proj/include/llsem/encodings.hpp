#pragma once

#include "llsem/formula.hpp"
#include "llsem/proof.hpp"

#include <cstddef>
#include <string>

namespace llsem {

/// !E |- E for E = a -o a: the body of the Church numeral n.
///   n = 0   weakening over lolli-r of an axiom
///   n = 1   one dereliction
///   n >= 2  lolli-l chain, n derelictions, n-1 contractions
Proof church_body(std::size_t n, const Formula& a);
/// |- int_a
Proof church(std::size_t n, const Formula& a);

/// A, E^n |- A: a (x) f1 (x) ... (x) fn -> fn(...f1(a)); n >= 1.
Proof iterate_chain(std::size_t n, const Formula& a);

/// E, E |- E, sending f (x) g to g o f.
Proof comp(const Formula& a);
/// int_a, int_a |- int_a
Proof add(const Formula& a);
/// int_a |- int_a, multiplication by m.
Proof mult(std::size_t m, const Formula& a);
/// int_a |- a: n iterations of beta_prime (|- a -o a) applied to beta (|- a).
Proof rec(const Proof& beta, const Proof& beta_prime, const Formula& a);
/// int_{int_a} |- int_a, n -> m^n.
Proof exp(std::size_t m, const Formula& a);

/// |- int, the second-order numeral (forall-right over church(n, x)).
Proof church2(std::size_t n, const std::string& binder = "x");
/// int |- int, n -> m^n.
Proof exp2(std::size_t m, const std::string& binder = "x");
/// int |- int, n -> E(n) with E(0) = 1, E(n+1) = 2^E(n).
Proof hypexp(const std::string& binder = "x");

/// Tower function E above (saturates at SIZE_MAX).
std::size_t tower(std::size_t n);

}  // namespace llsem
