#pragma once

#include "llsem/coalgebra.hpp"
#include "llsem/formula.hpp"
#include "llsem/proof.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace llsem {

class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimension of each propositional variable.
using SpaceAssignment = std::map<std::string, std::size_t>;

struct SemSpace;
using Space = std::shared_ptr<const SemSpace>;

/// Denotation of a formula. `finite` is false exactly when a ! occurs;
/// `dim` is meaningful only for finite spaces.
struct SemSpace {
    enum class Kind { Base, Unit, Tensor, Hom, Bang };
    Kind kind;
    std::size_t dim = 0;
    bool finite = true;
    Space left;   // Tensor left, Hom domain, Bang body
    Space right;  // Tensor right, Hom codomain
};

Space den_formula(const Formula& a, const SpaceAssignment& asg);
std::string to_string(const Space& s);
bool same_space(const Space& a, const Space& b);

class SemValue;

/// Linear map out of an infinite-dimensional space, applied lazily.
class LinearFn {
public:
    virtual ~LinearFn() = default;
    virtual SemValue apply(const SemValue& x) const = 0;
};

/// Element of a semantic space.
///   Finite  coordinates (scalars, vectors, row-major matrices, Kronecker
///           ordered tensors)
///   Bang    element of !V for finite V
///   Pairs   sum of c * (l (x) r) for an infinite tensor space
///   Maps    sum of c * f for an infinite Hom space
class SemValue {
public:
    enum class Kind { Finite, Bang, Pairs, Maps };
    struct PairTerm;
    struct MapTerm;

    static SemValue finite(Space s, Vect coords);
    static SemValue scalar(const Rational& c);
    static SemValue bang(Space s, BangElem x);
    static SemValue zero(Space s);
    /// l (x) r in the tensor space s.
    static SemValue pair(Space s, const SemValue& l, const SemValue& r);
    static SemValue map(Space s, std::shared_ptr<const LinearFn> f);

    Kind kind() const;
    const Space& space() const;
    const Vect& coords() const;
    const BangElem& bang() const;
    const std::vector<PairTerm>& pairs() const;
    const std::vector<MapTerm>& maps() const;

    SemValue scaled(const Rational& c) const;
    friend SemValue operator+(const SemValue& a, const SemValue& b);

private:
    struct Data;
    explicit SemValue(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

struct SemValue::PairTerm {
    Rational coeff;
    SemValue left;
    SemValue right;
};

struct SemValue::MapTerm {
    Rational coeff;
    std::shared_ptr<const LinearFn> fn;
};

/// Applies an element of Hom(A, B) to an element of A.
SemValue apply(const SemValue& f, const SemValue& x);

/// Sum of coefficient-weighted pure tensors over the context spaces.
struct ContextElem {
    std::vector<std::pair<Rational, std::vector<SemValue>>> terms;
};

/// Value of the linear map [[p]] on a pure tensor x1 (x) ... (x) xn of the
/// context (one value per context formula).
SemValue den_apply(const Proof& p, const std::vector<SemValue>& input, const SpaceAssignment& asg);
SemValue den_apply_sum(const Proof& p, const ContextElem& input, const SpaceAssignment& asg);

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vect data;  // row-major

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// [[p]] as a matrix; columns enumerate the context basis in Kronecker order.
Matrix den_matrix(const Proof& p, const SpaceAssignment& asg);

/// [[p]]_nl(P) = [[p]]|o>_P for p proving !B |- C. A proof of |- !B -o C is
/// accepted as well and its value applied to the vacuum.
SemValue nl(const Proof& p, const Vect& point, const SpaceAssignment& asg);

/// Q -> [[rho]]|Q>_P for rho proving !A |- B (or |- !A -o B).
SemValue tangent(const Proof& rho, const Vect& base, const Vect& q, const SpaceAssignment& asg);

/// Probe configuration for extensional comparison of values in infinite
/// spaces: kets with at most `depth` arguments over 5 seed-derived base points.
struct ProbeConfig {
    std::uint64_t seed = 0;
    std::size_t depth = 2;
    std::size_t base_points = 5;
    std::size_t cap = 96;
};

std::vector<Vect> probe_points(std::size_t dim, const ProbeConfig& cfg);
/// Probe elements of a space: the basis when finite, probe kets for !V,
/// products for tensors, rank-one maps for infinite Hom spaces.
std::vector<SemValue> probes(const Space& s, const ProbeConfig& cfg);
/// Probe inputs for a context (products of per-formula probes, capped).
std::vector<std::vector<SemValue>> context_probes(const std::vector<Space>& ctx, const ProbeConfig& cfg);

/// Linear embedding into a sparse coordinate map. Exact for Finite, Bang and
/// Pairs of those; Maps are embedded through their values on probes.
std::map<std::string, Rational> embed(const SemValue& v, const ProbeConfig& cfg);
bool probe_equal(const SemValue& a, const SemValue& b, const ProbeConfig& cfg);

/// Compares [[p]] and [[q]] on every probe input of their (common) context.
bool probe_equal(const Proof& p, const Proof& q, const SpaceAssignment& asg, const ProbeConfig& cfg);

/// Matrix helpers for End(V) values stored row-major.
Vect mat_mul(const Vect& a, const Vect& b, std::size_t n);
Vect mat_identity(std::size_t n);

/// Text form of a finite value: scalars as "p/q", vectors as "[..]", Hom
/// values as nested rows "[[..],[..]]".
std::string value_literal(const SemValue& v);
/// JSON text (nlohmann-compatible) for any value.
std::string value_json(const SemValue& v, const ProbeConfig& cfg);

}  // namespace llsem
