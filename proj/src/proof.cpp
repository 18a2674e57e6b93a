#include "llsem/proof.hpp"

#include <array>
#include <utility>

namespace llsem {

namespace {

struct RuleInfo {
    Rule rule;
    std::string_view keyword;
    std::size_t arity;
};

constexpr std::array<RuleInfo, 15> kRules{{
    {Rule::Axiom, "ax", 0},
    {Rule::Exchange, "ex", 1},
    {Rule::Cut, "cut", 2},
    {Rule::TensorR, "tensor-r", 2},
    {Rule::TensorL, "tensor-l", 1},
    {Rule::LolliR, "lolli-r", 1},
    {Rule::LolliL, "lolli-l", 2},
    {Rule::Promotion, "prom", 1},
    {Rule::Dereliction, "der", 1},
    {Rule::Contraction, "ctr", 1},
    {Rule::Weakening, "weak", 1},
    {Rule::OneL, "one-l", 1},
    {Rule::OneR, "one-r", 0},
    {Rule::ForallR, "all-r", 1},
    {Rule::ForallL, "all-l", 1},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

[[noreturn]] void fail(const std::string& msg) { throw KernelError(msg); }

void need_index(std::size_t at, std::size_t limit, std::string_view rule) {
    if (at >= limit) {
        fail(std::string(rule) + ": index " + std::to_string(at) + " out of range");
    }
}

template <class It>
std::vector<Formula> concat(std::initializer_list<std::pair<It, It>> ranges) {
    std::vector<Formula> out;
    for (auto [b, e] : ranges) out.insert(out.end(), b, e);
    return out;
}

}  // namespace

std::string_view keyword(Rule r) { return info(r).keyword; }

std::size_t arity(Rule r) { return info(r).arity; }

std::optional<Rule> rule_from_keyword(std::string_view kw) {
    for (const auto& ri : kRules) {
        if (ri.keyword == kw) return ri.rule;
    }
    return std::nullopt;
}

Sequent infer_conclusion(const RuleTag& tag, const std::vector<Sequent>& prem) {
    const auto name = keyword(tag.rule);
    if (prem.size() != arity(tag.rule)) {
        fail(std::string(name) + ": expected " + std::to_string(arity(tag.rule)) + " premises, got " +
             std::to_string(prem.size()));
    }
    const std::size_t at = tag.at;
    switch (tag.rule) {
        case Rule::Axiom: {
            if (!tag.formula) fail("ax: missing formula");
            return Sequent{{*tag.formula}, *tag.formula};
        }
        case Rule::Exchange: {
            auto ctx = prem[0].context;
            need_index(at + 1, ctx.size(), name);
            std::swap(ctx[at], ctx[at + 1]);
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::Cut: {
            const auto& l = prem[0];
            const auto& r = prem[1];
            need_index(at, r.context.size(), name);
            if (!alpha_eq(r.context[at], l.conclusion)) {
                fail("cut: formula mismatch, left proves " + to_string(l.conclusion) + " but right has " +
                     to_string(r.context[at]) + " at " + std::to_string(at));
            }
            auto rb = r.context.begin();
            auto ctx = concat<std::vector<Formula>::const_iterator>(
                {{rb, rb + static_cast<long>(at)},
                 {l.context.begin(), l.context.end()},
                 {rb + static_cast<long>(at) + 1, r.context.end()}});
            return Sequent{std::move(ctx), r.conclusion};
        }
        case Rule::TensorR: {
            auto ctx = prem[0].context;
            ctx.insert(ctx.end(), prem[1].context.begin(), prem[1].context.end());
            return Sequent{std::move(ctx), Formula::tensor(prem[0].conclusion, prem[1].conclusion)};
        }
        case Rule::TensorL: {
            auto ctx = prem[0].context;
            need_index(at + 1, ctx.size(), name);
            ctx[at] = Formula::tensor(ctx[at], ctx[at + 1]);
            ctx.erase(ctx.begin() + static_cast<long>(at) + 1);
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::LolliR: {
            const auto& p = prem[0];
            if (p.context.empty()) fail("lolli-r: premise context is empty");
            std::vector<Formula> ctx(p.context.begin() + 1, p.context.end());
            return Sequent{std::move(ctx), Formula::lolli(p.context.front(), p.conclusion)};
        }
        case Rule::LolliL: {
            const auto& l = prem[0];
            const auto& r = prem[1];
            need_index(at, r.context.size(), name);
            auto rb = r.context.begin();
            std::vector<Formula> ctx(rb, rb + static_cast<long>(at));
            ctx.insert(ctx.end(), l.context.begin(), l.context.end());
            ctx.push_back(Formula::lolli(l.conclusion, r.context[at]));
            ctx.insert(ctx.end(), rb + static_cast<long>(at) + 1, r.context.end());
            return Sequent{std::move(ctx), r.conclusion};
        }
        case Rule::Promotion: {
            for (const auto& f : prem[0].context) {
                if (!f.is(Formula::Kind::Bang)) {
                    fail("prom: context formula " + to_string(f) + " is not banged");
                }
            }
            return Sequent{prem[0].context, Formula::bang(prem[0].conclusion)};
        }
        case Rule::Dereliction: {
            auto ctx = prem[0].context;
            need_index(at, ctx.size(), name);
            ctx[at] = Formula::bang(ctx[at]);
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::Contraction: {
            auto ctx = prem[0].context;
            need_index(at + 1, ctx.size(), name);
            if (!ctx[at].is(Formula::Kind::Bang)) fail("ctr: formula " + to_string(ctx[at]) + " is not banged");
            if (!alpha_eq(ctx[at], ctx[at + 1])) {
                fail("ctr: formulas " + to_string(ctx[at]) + " and " + to_string(ctx[at + 1]) + " differ");
            }
            ctx.erase(ctx.begin() + static_cast<long>(at) + 1);
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::Weakening: {
            if (!tag.formula) fail("weak: missing formula");
            if (!tag.formula->is(Formula::Kind::Bang)) {
                fail("weak: formula " + to_string(*tag.formula) + " is not banged");
            }
            auto ctx = prem[0].context;
            need_index(at, ctx.size() + 1, name);
            ctx.insert(ctx.begin() + static_cast<long>(at), *tag.formula);
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::OneL: {
            auto ctx = prem[0].context;
            need_index(at, ctx.size() + 1, name);
            ctx.insert(ctx.begin() + static_cast<long>(at), Formula::one());
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
        case Rule::OneR: return Sequent{{}, Formula::one()};
        case Rule::ForallR: {
            if (tag.binder.empty()) fail("all-r: missing variable");
            for (const auto& f : prem[0].context) {
                if (is_free_in(tag.binder, f)) {
                    fail("all-r: variable freeness, " + tag.binder + " is free in " + to_string(f));
                }
            }
            return Sequent{prem[0].context, Formula::forall(tag.binder, prem[0].conclusion)};
        }
        case Rule::ForallL: {
            if (!tag.formula || !tag.witness) fail("all-l: missing formula or witness");
            if (!tag.formula->is(Formula::Kind::Forall)) {
                fail("all-l: formula " + to_string(*tag.formula) + " is not quantified");
            }
            auto ctx = prem[0].context;
            need_index(at, ctx.size(), name);
            Formula instance = substitute(tag.formula->body(), tag.formula->name(), *tag.witness);
            if (!alpha_eq(ctx[at], instance)) {
                fail("all-l: premise has " + to_string(ctx[at]) + " where " + to_string(instance) +
                     " was expected");
            }
            ctx[at] = *tag.formula;
            return Sequent{std::move(ctx), prem[0].conclusion};
        }
    }
    fail("unknown rule");
}

Proof Proof::assemble(RuleTag tag, std::vector<Proof> premises, Sequent conclusion) {
    std::size_t size = 1;
    std::size_t cuts = tag.rule == Rule::Cut ? 1 : 0;
    for (const auto& p : premises) {
        size += p.size();
        cuts += p.cut_count();
    }
    return Proof(
        std::make_shared<const Node>(Node{std::move(tag), std::move(premises), std::move(conclusion), size, cuts}));
}

Proof Proof::make(RuleTag tag, std::vector<Proof> premises) {
    std::vector<Sequent> seqs;
    seqs.reserve(premises.size());
    for (const auto& p : premises) seqs.push_back(p.conclusion());
    Sequent concl = infer_conclusion(tag, seqs);
    return assemble(std::move(tag), std::move(premises), std::move(concl));
}

bool operator==(const Proof& a, const Proof& b) {
    if (a.node_ == b.node_) return true;
    if (a.size() != b.size() || !(a.tag() == b.tag()) || !(a.conclusion() == b.conclusion())) return false;
    return a.premises() == b.premises();
}

namespace {

void validate_into(const Proof& p, Path& path, std::vector<Violation>& out) {
    for (std::size_t i = 0; i < p.premises().size(); ++i) {
        path.push_back(i);
        validate_into(p.premises()[i], path, out);
        path.pop_back();
    }
    const auto& tag = p.tag();
    const auto& concl = p.conclusion();
    if (tag.rule == Rule::Axiom &&
        (concl.context.size() != 1 || !alpha_eq(concl.context[0], concl.conclusion))) {
        out.push_back({path, "axiom mismatch: " + to_string(concl)});
        return;
    }
    std::vector<Sequent> seqs;
    for (const auto& q : p.premises()) seqs.push_back(q.conclusion());
    try {
        Sequent expected = infer_conclusion(tag, seqs);
        if (!alpha_eq(expected, concl)) {
            out.push_back({path, std::string(keyword(tag.rule)) + ": conclusion " + to_string(concl) +
                                     " does not match " + to_string(expected)});
        }
    } catch (const KernelError& e) {
        out.push_back({path, e.what()});
    }
}

}  // namespace

std::vector<Violation> validate(const Proof& p) {
    std::vector<Violation> out;
    Path path;
    validate_into(p, path, out);
    return out;
}

bool is_valid(const Proof& p) { return validate(p).empty(); }

namespace {

Proof rename_eigen(const Proof& p, const std::string& from, const std::string& to) {
    return substitute(p, from, Formula::var(to));
}

std::set<std::string> vars_of_proof(const Proof& p) {
    std::set<std::string> out = free_vars(p.conclusion());
    for (const auto& q : p.premises()) out.merge(vars_of_proof(q));
    if (p.rule() == Rule::ForallR) out.insert(p.tag().binder);
    return out;
}

}  // namespace

bool alpha_eq(const Proof& a, const Proof& b) {
    if (a.same_node(b)) return true;
    const auto& ta = a.tag();
    const auto& tb = b.tag();
    if (ta.rule != tb.rule || ta.at != tb.at || a.premises().size() != b.premises().size()) return false;
    if (ta.formula.has_value() != tb.formula.has_value() || ta.witness.has_value() != tb.witness.has_value()) {
        return false;
    }
    if (ta.formula && !alpha_eq(*ta.formula, *tb.formula)) return false;
    if (ta.witness && !alpha_eq(*ta.witness, *tb.witness)) return false;
    if (!alpha_eq(a.conclusion(), b.conclusion())) return false;
    if (ta.rule == Rule::ForallR && ta.binder != tb.binder) {
        // compare the premises with a common fresh eigenvariable
        auto avoid = vars_of_proof(a);
        avoid.merge(vars_of_proof(b));
        std::string z = fresh_name(ta.binder, avoid);
        return alpha_eq(rename_eigen(a.premise(0), ta.binder, z), rename_eigen(b.premise(0), tb.binder, z));
    }
    for (std::size_t i = 0; i < a.premises().size(); ++i) {
        if (!alpha_eq(a.premises()[i], b.premises()[i])) return false;
    }
    return true;
}

Proof substitute(const Proof& p, const std::string& x, const Formula& b) {
    RuleTag tag = p.tag();
    if (tag.formula) tag.formula = substitute(*tag.formula, x, b);
    if (tag.witness) tag.witness = substitute(*tag.witness, x, b);
    if (tag.rule == Rule::ForallR) {
        if (tag.binder == x) {
            // x is the eigenvariable here; it is not free in the context, so
            // nothing below this node refers to the outer x
            return p;
        }
        Proof premise = p.premise(0);
        if (is_free_in(tag.binder, b)) {
            auto avoid = vars_of_proof(p);
            avoid.merge(free_vars(b));
            avoid.insert(x);
            std::string fresh = fresh_name(tag.binder, avoid);
            premise = rename_eigen(premise, tag.binder, fresh);
            tag.binder = fresh;
        }
        return Proof::make(std::move(tag), {substitute(premise, x, b)});
    }
    std::vector<Proof> prem;
    prem.reserve(p.premises().size());
    for (const auto& q : p.premises()) prem.push_back(substitute(q, x, b));
    return Proof::make(std::move(tag), std::move(prem));
}

bool is_cut_free(const Proof& p) { return p.cut_count() == 0; }

const Proof& subproof(const Proof& p, const Path& path) {
    const Proof* cur = &p;
    for (std::size_t i : path) cur = &cur->premise(i);
    return *cur;
}

namespace {

Proof replace_from(const Proof& p, const Path& path, std::size_t depth, const Proof& replacement) {
    if (depth == path.size()) return replacement;
    std::vector<Proof> prem = p.premises();
    prem.at(path[depth]) = replace_from(p.premise(path[depth]), path, depth + 1, replacement);
    return Proof::make(p.tag(), std::move(prem));
}

}  // namespace

Proof replace_at(const Proof& p, const Path& path, const Proof& replacement) {
    return replace_from(p, path, 0, replacement);
}

Proof mk_axiom(const Formula& a) { return Proof::make(RuleTag{.rule = Rule::Axiom, .formula = a}, {}); }

Proof mk_exchange(const Proof& p, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::Exchange, .at = at}, {p});
}

Proof mk_cut(const Proof& left, const Proof& right, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::Cut, .at = at}, {left, right});
}

Proof mk_tensor_r(const Proof& left, const Proof& right) {
    return Proof::make(RuleTag{.rule = Rule::TensorR}, {left, right});
}

Proof mk_tensor_l(const Proof& p, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::TensorL, .at = at}, {p});
}

Proof mk_lolli_r(const Proof& p) { return Proof::make(RuleTag{.rule = Rule::LolliR}, {p}); }

Proof mk_lolli_l(const Proof& left, const Proof& right, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::LolliL, .at = at}, {left, right});
}

Proof mk_prom(const Proof& p) { return Proof::make(RuleTag{.rule = Rule::Promotion}, {p}); }

Proof mk_der(const Proof& p, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::Dereliction, .at = at}, {p});
}

Proof mk_ctr(const Proof& p, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::Contraction, .at = at}, {p});
}

Proof mk_weak(const Proof& p, std::size_t at, const Formula& banged) {
    return Proof::make(RuleTag{.rule = Rule::Weakening, .at = at, .formula = banged}, {p});
}

Proof mk_one_l(const Proof& p, std::size_t at) {
    return Proof::make(RuleTag{.rule = Rule::OneL, .at = at}, {p});
}

Proof mk_one_r() { return Proof::make(RuleTag{.rule = Rule::OneR}, {}); }

Proof mk_forall_r(const Proof& p, const std::string& binder) {
    return Proof::make(RuleTag{.rule = Rule::ForallR, .binder = binder}, {p});
}

Proof mk_forall_l(const Proof& p, std::size_t at, const Formula& quantified, const Formula& witness) {
    return Proof::make(RuleTag{.rule = Rule::ForallL, .at = at, .formula = quantified, .witness = witness}, {p});
}

Proof move_hypothesis(const Proof& p, std::size_t from, std::size_t to) {
    Proof cur = p;
    while (from < to) {
        cur = mk_exchange(cur, from);
        ++from;
    }
    while (from > to) {
        cur = mk_exchange(cur, from - 1);
        --from;
    }
    return cur;
}

}  // namespace llsem
