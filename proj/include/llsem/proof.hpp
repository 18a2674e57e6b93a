#pragma once

#include "llsem/formula.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace llsem {

enum class Rule {
    Axiom,
    Exchange,
    Cut,
    TensorR,
    TensorL,
    LolliR,
    LolliL,
    Promotion,
    Dereliction,
    Contraction,
    Weakening,
    OneL,
    OneR,
    ForallR,
    ForallL,
};

/// Keyword used in the proof file format ("ax", "lolli-l", ...).
std::string_view keyword(Rule r);
std::optional<Rule> rule_from_keyword(std::string_view kw);
std::size_t arity(Rule r);

/// Rule label of a proof node together with the data needed to rebuild its
/// conclusion from the premises.
///
/// Meaning of `at` (always a context position):
///   Exchange     swaps positions at, at+1
///   Cut          position of the cut formula in the right premise
///   TensorL      position of A*B in the conclusion
///   LolliL       position of B in the right premise
///   Dereliction, Contraction, Weakening, OneL, ForallL
///                position of the principal formula in the conclusion
///
/// `formula` is the axiom formula (Axiom), the introduced !A (Weakening) or
/// the principal `all x. A` (ForallL). `witness` is B in A[B/x] (ForallL).
/// `binder` is the quantified variable (ForallR).
struct RuleTag {
    Rule rule = Rule::Axiom;
    std::size_t at = 0;
    std::optional<Formula> formula;
    std::optional<Formula> witness;
    std::string binder;

    friend bool operator==(const RuleTag&, const RuleTag&) = default;
};

/// Raised by the checked constructors when premises do not fit a rule.
class KernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Proof;

/// Conclusion obtained by applying a rule schema to premise conclusions.
/// Throws KernelError with a short diagnostic when the schema does not apply.
Sequent infer_conclusion(const RuleTag& tag, const std::vector<Sequent>& premises);

/// Rooted, rule-labelled proof tree. Immutable; subtrees are shared.
class Proof {
public:
    /// Checked construction: the conclusion is computed from the premises.
    static Proof make(RuleTag tag, std::vector<Proof> premises);
    /// Unchecked construction with an asserted conclusion. Only `validate`
    /// can tell whether the result is a proof.
    static Proof assemble(RuleTag tag, std::vector<Proof> premises, Sequent conclusion);

    const RuleTag& tag() const { return node_->tag; }
    Rule rule() const { return node_->tag.rule; }
    const std::vector<Proof>& premises() const { return node_->premises; }
    const Proof& premise(std::size_t i) const { return node_->premises.at(i); }
    const Sequent& conclusion() const { return node_->conclusion; }
    /// Number of nodes in the tree.
    std::size_t size() const { return node_->size; }
    /// Number of cut nodes in the tree.
    std::size_t cut_count() const { return node_->cuts; }

    bool same_node(const Proof& other) const { return node_ == other.node_; }

    /// Exact structural equality (tags, premises and stored conclusions).
    friend bool operator==(const Proof& a, const Proof& b);

private:
    struct Node {
        RuleTag tag;
        std::vector<Proof> premises;
        Sequent conclusion;
        std::size_t size;
        std::size_t cuts;
    };
    explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using Path = std::vector<std::size_t>;

struct Violation {
    Path path;
    std::string message;
};

/// Checks every node against its rule schema. Empty result means valid.
/// Violations are reported leaves-first, so the first entry is the deepest
/// leftmost failing node.
std::vector<Violation> validate(const Proof& p);
bool is_valid(const Proof& p);

/// Root sequent.
inline const Sequent& conclusion(const Proof& p) { return p.conclusion(); }

/// Structural equality up to renaming of bound variables, including
/// eigenvariables of forall-right.
bool alpha_eq(const Proof& a, const Proof& b);

/// Replaces free occurrences of x by b in every sequent of the proof.
/// Eigenvariables that would capture a free variable of b are renamed.
Proof substitute(const Proof& p, const std::string& x, const Formula& b);

bool is_cut_free(const Proof& p);

const Proof& subproof(const Proof& p, const Path& path);
/// Returns p with the subtree at `path` replaced; ancestors are rebuilt with
/// the checked constructor.
Proof replace_at(const Proof& p, const Path& path, const Proof& replacement);

// Checked constructors, one per rule.
Proof mk_axiom(const Formula& a);
Proof mk_exchange(const Proof& p, std::size_t at);
Proof mk_cut(const Proof& left, const Proof& right, std::size_t at);
Proof mk_tensor_r(const Proof& left, const Proof& right);
Proof mk_tensor_l(const Proof& p, std::size_t at);
Proof mk_lolli_r(const Proof& p);
Proof mk_lolli_l(const Proof& left, const Proof& right, std::size_t at);
Proof mk_prom(const Proof& p);
Proof mk_der(const Proof& p, std::size_t at);
Proof mk_ctr(const Proof& p, std::size_t at);
Proof mk_weak(const Proof& p, std::size_t at, const Formula& banged);
Proof mk_one_l(const Proof& p, std::size_t at);
Proof mk_one_r();
Proof mk_forall_r(const Proof& p, const std::string& binder);
Proof mk_forall_l(const Proof& p, std::size_t at, const Formula& quantified, const Formula& witness);

/// Moves the context formula at `from` to position `to` by a chain of
/// adjacent exchanges (no-op when from == to).
Proof move_hypothesis(const Proof& p, std::size_t from, std::size_t to);

}  // namespace llsem
