#pragma once

#include "llsem/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace llsem {

/// Exact coordinate vector in k^n. Matrices are stored row-major.
using Vect = std::vector<Rational>;

Vect zero_vect(std::size_t dim);
Vect basis_vect(std::size_t dim, std::size_t i);
Vect& axpy(Vect& y, const Rational& a, const Vect& x);
std::string to_string(const Vect& v);

/// Basis element |e_i1, ..., e_is>_P of Sym_P(V). `args` is sorted; the
/// base point is kept as given and never expanded.
struct Ket {
    Vect base;
    std::vector<std::size_t> args;

    friend bool operator==(const Ket&, const Ket&) = default;
};
bool operator<(const Ket& a, const Ket& b);

/// Sub-ket keeping only the arguments whose positions are in `positions`.
Ket sub_ket(const Ket& k, const std::vector<std::size_t>& positions);

/// Element of !V for V = k^dim: finite linear combination of kets with
/// nonzero coefficients. Two elements are equal iff their term maps are.
class BangElem {
public:
    BangElem() = default;
    explicit BangElem(std::size_t dim) : dim_(dim) {}

    static BangElem vacuum(const Vect& base);
    /// |v1, ..., vs>_P expanded by multilinearity over the standard basis.
    static BangElem ket(const Vect& base, const std::vector<Vect>& args);
    static BangElem basis_ket(Ket k, const Rational& coeff = 1);

    std::size_t dim() const { return dim_; }
    const std::map<Ket, Rational>& terms() const& { return terms_; }
    std::map<Ket, Rational> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Ket& k, const Rational& c);
    BangElem& operator+=(const BangElem& o);
    BangElem& operator*=(const Rational& c);
    friend BangElem operator+(BangElem a, const BangElem& b) { return a += b; }
    friend BangElem operator-(BangElem a, const BangElem& b) { return a += b * Rational(-1); }
    friend BangElem operator*(BangElem a, const Rational& c) { return a *= c; }
    friend BangElem operator*(const Rational& c, BangElem a) { return a *= c; }
    friend bool operator==(const BangElem& a, const BangElem& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_ = 0;
    std::map<Ket, Rational> terms_;
};

/// Element of !V1 (x) ... (x) !Vn as a combination of ket tuples.
class BangTensor {
public:
    BangTensor() = default;
    explicit BangTensor(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::map<std::vector<Ket>, Rational>& terms() const& { return terms_; }
    std::map<std::vector<Ket>, Rational> terms() && { return std::move(terms_); }
    void add(const std::vector<Ket>& ks, const Rational& c);
    BangTensor& operator+=(const BangTensor& o);
    /// Zero tensors compare equal regardless of the recorded factor list.
    friend bool operator==(const BangTensor& a, const BangTensor& b) {
        return a.terms_ == b.terms_ && (a.dims_ == b.dims_ || a.terms_.empty());
    }

private:
    std::vector<std::size_t> dims_;
    std::map<std::vector<Ket>, Rational> terms_;
};

BangTensor tensor(const BangElem& a, const BangElem& b);
BangTensor as_tensor(const BangElem& a);
/// Rewrites factor i of every term by f, splicing f's factors in place of it
/// (f may return zero factors, i.e. a scalar).
BangTensor map_factor(const BangTensor& t, std::size_t i,
                      const std::function<BangTensor(const Ket&)>& f);
/// Factor permutation: result factor j is input factor perm[j].
BangTensor permute(const BangTensor& t, const std::vector<std::size_t>& perm);

/// Delta|v1..vs>_P = sum over I of |v_I>_P (x) |v_{I^c}>_P.
BangTensor coproduct(const BangElem& x);
BangTensor coproduct(const Ket& k);
/// |o>_P -> 1, higher kets -> 0.
Rational counit(const BangElem& x);
/// d|o>_P = P, d|v>_P = v, zero for s > 1.
Vect dereliction(const BangElem& x);

/// Set partitions of {0..s-1} from restricted-growth strings in
/// lexicographic order; blocks are listed in order of first element.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t s);

/// Linear map !W -> V, given on basis kets.
using KetMap = std::function<Vect(const Ket&)>;

/// The coalgebra morphism !W -> !V determined by phi:
///   |v1..vs>_P -> sum over partitions C of |phi(v_C1), ..., phi(v_Cl)>_Q
/// with Q = phi|o>_P. `target_dim` is dim V.
BangElem lift(const KetMap& phi, std::size_t target_dim, const BangElem& x);

/// !W1 (x) ... (x) !Wn -> !(W1 + ... + Wn), multilinear in the inputs.
BangElem merge(const std::vector<BangElem>& xs);
BangElem merge(const std::vector<Ket>& ks, const std::vector<std::size_t>& dims);
/// Inverse of merge.
BangTensor split(const BangElem& x, const std::vector<std::size_t>& dims);
std::vector<Ket> split(const Ket& k, const std::vector<std::size_t>& dims);

}  // namespace llsem
