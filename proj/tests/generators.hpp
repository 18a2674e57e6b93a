#pragma once

// Random kets and ket maps for coalgebra property checks.

#include "llsem/coalgebra.hpp"
#include "oracles.hpp"

#include <functional>
#include <random>
#include <string>

namespace gen {

using namespace llsem;

inline Vect random_vect(std::mt19937& rng, std::size_t dim) {
    Vect v(dim);
    for (auto& x : v) x = oracle::random_rational(rng);
    return v;
}

inline BangElem random_bang(std::mt19937& rng, std::size_t dim, std::size_t max_s) {
    BangElem out(dim);
    std::size_t terms = 1 + rng() % 2;
    for (std::size_t t = 0; t < terms; ++t) {
        std::size_t s = rng() % (max_s + 1);
        std::vector<std::size_t> args;
        for (std::size_t i = 0; i < s; ++i) args.push_back(rng() % dim);
        out += BangElem::basis_ket(Ket{random_vect(rng, dim), args}, oracle::random_rational(rng) + 4);
    }
    return out;
}

// Linear map !W -> k^target defined by pseudo-random images of basis kets.
inline KetMap random_phi(std::size_t target, unsigned salt) {
    return [target, salt](const Ket& k) {
        std::seed_seq seq{salt, static_cast<unsigned>(k.args.size()),
                          static_cast<unsigned>(std::hash<std::string>{}(to_string(k.base)) & 0xffff)};
        std::mt19937 rng(seq);
        for (auto a : k.args) rng.discard(a + 1);
        Vect v(target);
        for (auto& x : v) x = oracle::random_rational(rng);
        // phi kills kets with more than two arguments, like a Church body
        if (k.args.size() > 2) return zero_vect(target);
        return v;
    };
}

inline BangTensor lift_both(const KetMap& phi, std::size_t target, const BangTensor& t) {
    auto f = [&](const Ket& k) { return as_tensor(lift(phi, target, BangElem::basis_ket(k))); };
    return map_factor(map_factor(t, 0, f), 1, f);
}

inline BangTensor counit_factor(const Ket& k) {
    BangTensor s(std::vector<std::size_t>{});
    s.add({}, k.args.empty() ? 1 : 0);
    return s;
}

// The laws checked on one random element; returns the names of failed laws.
inline std::vector<std::string> coalgebra_law_failures(std::mt19937& rng, unsigned salt) {
    std::vector<std::string> failed;
    std::size_t dim = 1 + rng() % 3;
    BangElem x = random_bang(rng, dim, 4);
    BangTensor d = coproduct(x);
    auto delta = [](const Ket& k) { return coproduct(k); };
    if (!(map_factor(d, 0, delta) == map_factor(d, 1, delta))) failed.push_back("coassociativity");
    if (!(permute(d, {1, 0}) == d)) failed.push_back("cocommutativity");
    if (!(map_factor(d, 0, counit_factor) == as_tensor(x))) failed.push_back("left counit");
    if (!(map_factor(d, 1, counit_factor) == as_tensor(x))) failed.push_back("right counit");
    std::size_t target = 1 + rng() % 2;
    KetMap phi = random_phi(target, salt);
    BangElem lx = lift(phi, target, x);
    Vect direct = zero_vect(target);
    for (const auto& [k, c] : x.terms()) axpy(direct, c, phi(k));
    if (!(dereliction(lx) == direct)) failed.push_back("dereliction of the lift");
    if (!(coproduct(lx) == lift_both(phi, target, d))) failed.push_back("lift preserves the coproduct");
    if (!(counit(lx) == counit(x))) failed.push_back("lift preserves the counit");
    return failed;
}

}  // namespace gen
