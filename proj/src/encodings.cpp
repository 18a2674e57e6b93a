#include "llsem/encodings.hpp"

#include <limits>
#include <stdexcept>

namespace llsem {

Proof iterate_chain(std::size_t n, const Formula& a) {
    if (n == 0) throw std::invalid_argument("iterate_chain: n must be positive");
    Proof p = mk_lolli_l(mk_axiom(a), mk_axiom(a), 0);
    for (std::size_t k = 1; k < n; ++k) p = mk_lolli_l(mk_axiom(a), p, 0);
    return p;
}

Proof church_body(std::size_t n, const Formula& a) {
    const Formula e = endo(a);
    if (n == 0) return mk_weak(mk_lolli_r(mk_axiom(a)), 0, Formula::bang(e));
    Proof p = mk_lolli_r(iterate_chain(n, a));
    for (std::size_t i = 0; i < n; ++i) p = mk_der(p, i);
    for (std::size_t i = 1; i < n; ++i) p = mk_ctr(p, 0);
    return p;
}

Proof church(std::size_t n, const Formula& a) { return mk_lolli_r(church_body(n, a)); }

Proof comp(const Formula& a) { return mk_lolli_r(iterate_chain(2, a)); }

Proof add(const Formula& a) {
    const Formula be = Formula::bang(endo(a));
    // !E, int_a, E |- E, then exchanged to the displayed !E, E, int_a |- E
    Proof p = mk_exchange(mk_lolli_l(mk_axiom(be), comp(a), 0), 1);
    p = mk_lolli_l(mk_axiom(be), p, 1);  // !E, !E, int_a, int_a |- E
    return mk_lolli_r(mk_ctr(p, 0));
}

Proof mult(std::size_t m, const Formula& a) {
    Proof p = mk_lolli_l(mk_prom(church_body(m, a)), mk_axiom(endo(a)), 0);
    return mk_lolli_r(p);
}

Proof rec(const Proof& beta, const Proof& beta_prime, const Formula& a) {
    Proof step = mk_lolli_l(beta, mk_axiom(a), 0);  // a -o a |- a
    return mk_lolli_l(mk_prom(beta_prime), step, 0);
}

Proof exp(std::size_t m, const Formula& a) {
    return rec(church(1, a), mk_lolli_r(mult(m, a)), int_on(a));
}

Proof church2(std::size_t n, const std::string& binder) {
    return mk_forall_r(church(n, Formula::var(binder)), binder);
}

Proof exp2(std::size_t m, const std::string& binder) {
    const Formula x = Formula::var(binder);
    Proof p = mk_forall_l(exp(m, x), 0, int_poly(binder), int_on(x));
    return mk_forall_r(p, binder);
}

Proof hypexp(const std::string& binder) {
    const Formula i = int_poly(binder);
    Proof step = mk_lolli_l(church2(1, binder), mk_axiom(i), 0);  // int -o int |- int
    Proof p = mk_lolli_l(mk_prom(mk_lolli_r(exp2(2, binder))), step, 0);
    return mk_forall_l(p, 0, i, i);
}

std::size_t tower(std::size_t n) {
    std::size_t e = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (e >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
        e = std::size_t{1} << e;
    }
    return e;
}

}  // namespace llsem
