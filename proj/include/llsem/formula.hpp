#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace llsem {

/// Formula of intuitionistic linear logic with second-order quantifiers:
/// variables, 1, tensor, linear implication, exponential and forall.
///
/// Formulas are immutable trees with shared structure; copying is cheap.
/// Binders keep their surface names; every comparison that should ignore
/// binder names goes through alpha_eq / canonical_string.
class Formula {
public:
    enum class Kind { Var, One, Tensor, Lolli, Bang, Forall };

    static Formula var(std::string name);
    static Formula one();
    static Formula tensor(Formula left, Formula right);
    static Formula lolli(Formula ante, Formula cons);
    static Formula bang(Formula body);
    static Formula forall(std::string binder, Formula body);

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }

    /// Variable name (Var) or binder name (Forall).
    const std::string& name() const { return node_->name; }
    /// Left operand of Tensor, antecedent of Lolli.
    const Formula& left() const { return *node_->left; }
    /// Right operand of Tensor, consequent of Lolli.
    const Formula& right() const { return *node_->right; }
    /// Body of Bang and Forall.
    const Formula& body() const { return *node_->left; }

    /// Exact structural equality, binder names included.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::unique_ptr<Formula> left;
        std::unique_ptr<Formula> right;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Formula& a);
bool is_free_in(const std::string& x, const Formula& a);

/// Capture-avoiding substitution a[b/x]; bound variables of a are renamed
/// when they would capture a free variable of b.
Formula substitute(const Formula& a, const std::string& x, const Formula& b);

bool alpha_eq(const Formula& a, const Formula& b);

/// Surface syntax. At top level binary connectives and forall are printed
/// without outer parentheses; `atomic` forces a self-delimiting form (the
/// form used inside proof s-expressions).
std::string to_string(const Formula& a, bool atomic = false);

/// Printing with binders renamed by de Bruijn level (avoiding the formula's
/// free variables). Equal strings iff alpha_eq.
std::string canonical_string(const Formula& a);

/// A variable name not in `avoid`, derived from `base`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// A -o A
Formula endo(const Formula& a);
/// int_A = !(A -o A) -o (A -o A)
Formula int_on(const Formula& a);
/// int = all x. !(x -o x) -o (x -o x)
Formula int_poly(const std::string& binder = "x");

/// Sequent A1, ..., An |- B. Context order is significant.
struct Sequent {
    std::vector<Formula> context;
    Formula conclusion;

    friend bool operator==(const Sequent&, const Sequent&) = default;
};

bool alpha_eq(const Sequent& a, const Sequent& b);
std::set<std::string> free_vars(const Sequent& s);
std::string to_string(const Sequent& s);

}  // namespace llsem
