#include "llsem/formula.hpp"

#include <algorithm>
#include <cctype>

namespace llsem {

Formula Formula::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::one() {
    static const Formula unit = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::One;
        return Formula(std::move(n));
    }();
    return unit;
}

Formula Formula::tensor(Formula left, Formula right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->left = std::make_unique<Formula>(std::move(left));
    n->right = std::make_unique<Formula>(std::move(right));
    return Formula(std::move(n));
}

Formula Formula::lolli(Formula ante, Formula cons) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Lolli;
    n->left = std::make_unique<Formula>(std::move(ante));
    n->right = std::make_unique<Formula>(std::move(cons));
    return Formula(std::move(n));
}

Formula Formula::bang(Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bang;
    n->left = std::make_unique<Formula>(std::move(body));
    return Formula(std::move(n));
}

Formula Formula::forall(std::string binder, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Forall;
    n->name = std::move(binder);
    n->left = std::make_unique<Formula>(std::move(body));
    return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Var: return a.name() == b.name();
        case Formula::Kind::One: return true;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli: return a.left() == b.left() && a.right() == b.right();
        case Formula::Kind::Bang: return a.body() == b.body();
        case Formula::Kind::Forall: return a.name() == b.name() && a.body() == b.body();
    }
    return false;
}

namespace {

void collect_free(const Formula& a, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (a.kind()) {
        case Formula::Kind::Var:
            if (std::find(bound.begin(), bound.end(), a.name()) == bound.end()) out.insert(a.name());
            return;
        case Formula::Kind::One: return;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli:
            collect_free(a.left(), bound, out);
            collect_free(a.right(), bound, out);
            return;
        case Formula::Kind::Bang: collect_free(a.body(), bound, out); return;
        case Formula::Kind::Forall:
            bound.push_back(a.name());
            collect_free(a.body(), bound, out);
            bound.pop_back();
            return;
    }
}

}  // namespace

std::set<std::string> free_vars(const Formula& a) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collect_free(a, bound, out);
    return out;
}

bool is_free_in(const std::string& x, const Formula& a) {
    switch (a.kind()) {
        case Formula::Kind::Var: return a.name() == x;
        case Formula::Kind::One: return false;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli: return is_free_in(x, a.left()) || is_free_in(x, a.right());
        case Formula::Kind::Bang: return is_free_in(x, a.body());
        case Formula::Kind::Forall: return a.name() != x && is_free_in(x, a.body());
    }
    return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.contains(base)) return base;
    // strip a trailing counter so renaming x1 gives x2 rather than x11
    std::string stem = base;
    while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    if (stem.empty()) stem = "v";
    for (int i = 1;; ++i) {
        std::string candidate = stem + std::to_string(i);
        if (!avoid.contains(candidate)) return candidate;
    }
}

Formula substitute(const Formula& a, const std::string& x, const Formula& b) {
    switch (a.kind()) {
        case Formula::Kind::Var: return a.name() == x ? b : a;
        case Formula::Kind::One: return a;
        case Formula::Kind::Tensor:
            return Formula::tensor(substitute(a.left(), x, b), substitute(a.right(), x, b));
        case Formula::Kind::Lolli:
            return Formula::lolli(substitute(a.left(), x, b), substitute(a.right(), x, b));
        case Formula::Kind::Bang: return Formula::bang(substitute(a.body(), x, b));
        case Formula::Kind::Forall: {
            if (a.name() == x || !is_free_in(x, a.body())) return a;
            if (!is_free_in(a.name(), b)) {
                return Formula::forall(a.name(), substitute(a.body(), x, b));
            }
            std::set<std::string> avoid = free_vars(b);
            avoid.merge(free_vars(a.body()));
            avoid.insert(x);
            std::string y = fresh_name(a.name(), avoid);
            Formula renamed = substitute(a.body(), a.name(), Formula::var(y));
            return Formula::forall(y, substitute(renamed, x, b));
        }
    }
    return a;
}

namespace {

// Index of the innermost binder named `name`, counted from the innermost
// binder outwards; -1 when free.
int bound_index(const std::vector<std::string>& env, const std::string& name) {
    for (std::size_t i = env.size(); i-- > 0;) {
        if (env[i] == name) return static_cast<int>(env.size() - 1 - i);
    }
    return -1;
}

bool alpha_eq_in(const Formula& a, std::vector<std::string>& ea, const Formula& b,
                 std::vector<std::string>& eb) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Formula::Kind::Var: {
            int ia = bound_index(ea, a.name());
            int ib = bound_index(eb, b.name());
            if (ia != ib) return false;
            return ia >= 0 || a.name() == b.name();
        }
        case Formula::Kind::One: return true;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli:
            return alpha_eq_in(a.left(), ea, b.left(), eb) && alpha_eq_in(a.right(), ea, b.right(), eb);
        case Formula::Kind::Bang: return alpha_eq_in(a.body(), ea, b.body(), eb);
        case Formula::Kind::Forall: {
            ea.push_back(a.name());
            eb.push_back(b.name());
            bool r = alpha_eq_in(a.body(), ea, b.body(), eb);
            ea.pop_back();
            eb.pop_back();
            return r;
        }
    }
    return false;
}

void print(const Formula& a, bool atomic, std::string& out) {
    switch (a.kind()) {
        case Formula::Kind::Var: out += a.name(); return;
        case Formula::Kind::One: out += "1"; return;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli:
            if (atomic) out += "(";
            print(a.left(), true, out);
            out += a.is(Formula::Kind::Tensor) ? " * " : " -o ";
            print(a.right(), true, out);
            if (atomic) out += ")";
            return;
        case Formula::Kind::Bang:
            out += "!";
            print(a.body(), true, out);
            return;
        case Formula::Kind::Forall:
            if (atomic) out += "(";
            out += "all " + a.name() + ". ";
            print(a.body(), false, out);
            if (atomic) out += ")";
            return;
    }
}

void print_canonical(const Formula& a, bool atomic, std::string& out, std::vector<std::string>& env,
                     const std::set<std::string>& free) {
    switch (a.kind()) {
        case Formula::Kind::Var: {
            int idx = bound_index(env, a.name());
            if (idx < 0) {
                out += a.name();
            } else {
                // level of the binder = depth at which it was introduced
                std::size_t level = env.size() - 1 - static_cast<std::size_t>(idx);
                out += fresh_name("v" + std::to_string(level) + "_", free);
            }
            return;
        }
        case Formula::Kind::One: out += "1"; return;
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli:
            if (atomic) out += "(";
            print_canonical(a.left(), true, out, env, free);
            out += a.is(Formula::Kind::Tensor) ? " * " : " -o ";
            print_canonical(a.right(), true, out, env, free);
            if (atomic) out += ")";
            return;
        case Formula::Kind::Bang:
            out += "!";
            print_canonical(a.body(), true, out, env, free);
            return;
        case Formula::Kind::Forall: {
            if (atomic) out += "(";
            out += "all " + fresh_name("v" + std::to_string(env.size()) + "_", free) + ". ";
            env.push_back(a.name());
            print_canonical(a.body(), false, out, env, free);
            env.pop_back();
            if (atomic) out += ")";
            return;
        }
    }
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
    std::vector<std::string> ea, eb;
    return alpha_eq_in(a, ea, b, eb);
}

std::string to_string(const Formula& a, bool atomic) {
    std::string out;
    print(a, atomic, out);
    return out;
}

std::string canonical_string(const Formula& a) {
    std::string out;
    std::vector<std::string> env;
    print_canonical(a, true, out, env, free_vars(a));
    return out;
}

Formula endo(const Formula& a) { return Formula::lolli(a, a); }

Formula int_on(const Formula& a) { return Formula::lolli(Formula::bang(endo(a)), endo(a)); }

Formula int_poly(const std::string& binder) { return Formula::forall(binder, int_on(Formula::var(binder))); }

bool alpha_eq(const Sequent& a, const Sequent& b) {
    if (a.context.size() != b.context.size()) return false;
    for (std::size_t i = 0; i < a.context.size(); ++i) {
        if (!alpha_eq(a.context[i], b.context[i])) return false;
    }
    return alpha_eq(a.conclusion, b.conclusion);
}

std::set<std::string> free_vars(const Sequent& s) {
    std::set<std::string> out = free_vars(s.conclusion);
    for (const auto& f : s.context) out.merge(free_vars(f));
    return out;
}

std::string to_string(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.context.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s.context[i]);
    }
    out += s.context.empty() ? "⊢ " : " ⊢ ";
    out += to_string(s.conclusion);
    return out;
}

}  // namespace llsem
