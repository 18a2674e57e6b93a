#include "llsem/rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace llsem {

namespace {

using Reduction = std::optional<std::pair<std::string_view, Proof>>;

Proof with_at(const Proof& node, std::size_t at, std::vector<Proof> premises) {
    RuleTag tag = node.tag();
    tag.at = at;
    return Proof::make(std::move(tag), std::move(premises));
}

bool is_left_rule(Rule r) {
    switch (r) {
        case Rule::Exchange:
        case Rule::TensorL:
        case Rule::LolliL:
        case Rule::Dereliction:
        case Rule::Contraction:
        case Rule::Weakening:
        case Rule::OneL:
        case Rule::ForallL: return true;
        default: return false;
    }
}

// Position in the conclusion of the formula introduced by a left rule.
std::optional<std::size_t> principal_position(const Proof& p) {
    switch (p.rule()) {
        case Rule::TensorL:
        case Rule::Dereliction:
        case Rule::Contraction:
        case Rule::Weakening:
        case Rule::OneL:
        case Rule::ForallL: return p.tag().at;
        case Rule::LolliL: return p.tag().at + p.premise(0).conclusion().context.size();
        default: return std::nullopt;
    }
}

void collect_vars(const Proof& p, std::set<std::string>& out) {
    out.merge(free_vars(p.conclusion()));
    if (p.rule() == Rule::ForallR) out.insert(p.tag().binder);
    for (const auto& q : p.premises()) collect_vars(q, out);
}

// p has context D', G, G', D with G' a copy of the k formulas of G starting
// at `from`; contracts each pair.
Proof contract_copies(Proof p, std::size_t from, std::size_t k) {
    for (std::size_t i = k; i-- > 0;) {
        p = move_hypothesis(p, from + k + i, from + i + 1);
        p = mk_ctr(p, from + i);
    }
    return p;
}

Reduction principal(const Proof& l, const Proof& r, std::size_t at) {
    switch (l.rule()) {
        case Rule::TensorR:
            if (r.rule() != Rule::TensorL) break;
            return {{"tensor-principal",
                     mk_cut(l.premise(0), mk_cut(l.premise(1), r.premise(0), at + 1), at)}};
        case Rule::LolliR: {
            if (r.rule() != Rule::LolliL) break;
            Proof inner = mk_cut(r.premise(0), l.premise(0), 0);
            return {{"lolli-l-principal", mk_cut(inner, r.premise(1), r.tag().at)}};
        }
        case Rule::OneR:
            if (r.rule() != Rule::OneL) break;
            return {{"one-principal", r.premise(0)}};
        case Rule::ForallR: {
            if (r.rule() != Rule::ForallL) break;
            Proof inst = substitute(l.premise(0), l.tag().binder, *r.tag().witness);
            return {{"all-principal", mk_cut(inst, r.premise(0), at)}};
        }
        case Rule::Promotion: {
            const auto& gamma = l.conclusion().context;
            switch (r.rule()) {
                case Rule::Dereliction: return {{"prom-vs-der", mk_cut(l.premise(0), r.premise(0), at)}};
                case Rule::Contraction: {
                    Proof twice = mk_cut(l, mk_cut(l, r.premise(0), at + 1), at);
                    return {{"prom-vs-ctr", contract_copies(twice, at, gamma.size())}};
                }
                case Rule::Weakening: {
                    Proof p = r.premise(0);
                    for (std::size_t i = 0; i < gamma.size(); ++i) p = mk_weak(p, at + i, gamma[i]);
                    return {{"prom-vs-weak", p}};
                }
                default: break;
            }
            break;
        }
        default: break;
    }
    return std::nullopt;
}

// The cut formula is the succedent of l, whose last rule acts on its context.
Reduction commute_left(const Proof& l, const Proof& r, std::size_t at) {
    std::string_view name;
    switch (l.rule()) {
        case Rule::Exchange: name = "ex-commute-left"; break;
        case Rule::TensorL: name = "tensor-l-commute-left"; break;
        case Rule::LolliL: name = "lolli-l-commute-left"; break;
        case Rule::Dereliction: name = "der-commute-left"; break;
        case Rule::Contraction: name = "ctr-commute-left"; break;
        case Rule::Weakening: name = "weak-commute-left"; break;
        case Rule::OneL: name = "one-l-commute-left"; break;
        case Rule::ForallL: name = "all-l-commute-left"; break;
        default: return std::nullopt;
    }
    if (l.rule() == Rule::LolliL) {
        Proof moved = mk_cut(l.premise(1), r, at);
        return {{name, mk_lolli_l(l.premise(0), moved, l.tag().at + at)}};
    }
    return {{name, with_at(l, l.tag().at + at, {mk_cut(l.premise(0), r, at)})}};
}

// The cut formula sits in the context of r without being principal there.
Reduction commute_right(const Proof& l, const Proof& r, std::size_t at) {
    const std::size_t k = l.conclusion().context.size();
    const Rule rule = r.rule();
    const std::size_t j = r.tag().at;
    auto shifted = [&](std::size_t pos) { return pos < at ? pos : pos + k - 1; };
    switch (rule) {
        case Rule::Exchange: {
            if (at == j) {
                return {{"ex-commute-right", move_hypothesis(mk_cut(l, r.premise(0), j + 1), j, j + k)}};
            }
            if (at == j + 1) {
                return {{"ex-commute-right", move_hypothesis(mk_cut(l, r.premise(0), j), j + k, j)}};
            }
            return {{"ex-commute-right", mk_exchange(mk_cut(l, r.premise(0), at), shifted(j))}};
        }
        case Rule::Dereliction:
        case Rule::ForallL: {
            std::string_view id = rule == Rule::Dereliction ? "der-commute-right" : "all-l-commute-right";
            return {{id, with_at(r, shifted(j), {mk_cut(l, r.premise(0), at)})}};
        }
        case Rule::Contraction:
        case Rule::TensorL: {
            std::string_view id = rule == Rule::Contraction ? "ctr-commute-right" : "tensor-l-commute-right";
            std::size_t inner = at < j ? at : at + 1;
            return {{id, with_at(r, shifted(j), {mk_cut(l, r.premise(0), inner)})}};
        }
        case Rule::Weakening:
        case Rule::OneL: {
            std::string_view id = rule == Rule::Weakening ? "weak-commute-right" : "one-l-commute-right";
            std::size_t inner = at < j ? at : at - 1;
            return {{id, with_at(r, shifted(j), {mk_cut(l, r.premise(0), inner)})}};
        }
        case Rule::LolliR: return {{"lolli-r-commute", mk_lolli_r(mk_cut(l, r.premise(0), at + 1))}};
        case Rule::ForallR: {
            std::string x = r.tag().binder;
            Proof body = r.premise(0);
            bool clash = false;
            for (const auto& f : l.conclusion().context) clash = clash || is_free_in(x, f);
            if (clash) {
                std::set<std::string> avoid;
                collect_vars(l, avoid);
                collect_vars(r, avoid);
                std::string y = fresh_name(x, avoid);
                body = substitute(body, x, Formula::var(y));
                x = y;
            }
            return {{"all-r-commute", mk_forall_r(mk_cut(l, body, at), x)}};
        }
        case Rule::TensorR: {
            const std::size_t n1 = r.premise(0).conclusion().context.size();
            if (at < n1) return {{"tensor-r-commute", mk_tensor_r(mk_cut(l, r.premise(0), at), r.premise(1))}};
            return {{"tensor-r-commute", mk_tensor_r(r.premise(0), mk_cut(l, r.premise(1), at - n1))}};
        }
        case Rule::LolliL: {
            const std::size_t g = r.premise(0).conclusion().context.size();
            if (at < j) {
                return {{"lolli-l-commute-right", mk_lolli_l(r.premise(0), mk_cut(l, r.premise(1), at), j + k - 1)}};
            }
            if (at < j + g) {
                return {{"lolli-l-commute-right", mk_lolli_l(mk_cut(l, r.premise(0), at - j), r.premise(1), j)}};
            }
            if (at > j + g) {
                return {{"lolli-l-commute-right", mk_lolli_l(r.premise(0), mk_cut(l, r.premise(1), at - g), j)}};
            }
            break;
        }
        default: break;
    }
    return std::nullopt;
}

Reduction reduce(const Proof& cut) {
    const Proof& l = cut.premise(0);
    const Proof& r = cut.premise(1);
    const std::size_t at = cut.tag().at;
    if (l.rule() == Rule::Axiom) return {{"ax-left", r}};
    if (r.rule() == Rule::Axiom) return {{"ax-right", l}};
    if (principal_position(r) == at) {
        if (auto red = principal(l, r, at)) return red;
    }
    if (l.rule() == Rule::Promotion && r.rule() == Rule::Promotion) {
        return {{"prom-vs-prom", mk_prom(mk_cut(l, r.premise(0), at))}};
    }
    if (is_left_rule(l.rule())) return commute_left(l, r, at);
    if (principal_position(r) != at) return commute_right(l, r, at);
    return std::nullopt;
}

// Post-order search for cuts whose premises are cut-free.
bool find_redex(const Proof& p, Path& path, std::optional<std::pair<Proof, StepInfo>>& out, const Proof& root) {
    if (p.cut_count() == 0) return false;
    for (std::size_t i = 0; i < p.premises().size(); ++i) {
        path.push_back(i);
        bool done = find_redex(p.premise(i), path, out, root);
        path.pop_back();
        if (done) return true;
    }
    if (p.rule() != Rule::Cut || p.cut_count() != 1) return false;
    out = rewrite_at(root, path);
    return out.has_value();
}

}  // namespace

const std::vector<std::string_view>& rule_ids() {
    static const std::vector<std::string_view> ids = {
        "ax-left",
        "ax-right",
        "tensor-principal",
        "lolli-l-principal",
        "prom-vs-der",
        "prom-vs-ctr",
        "prom-vs-weak",
        "one-principal",
        "all-principal",
        "prom-vs-prom",
        "ex-commute-left",
        "tensor-l-commute-left",
        "lolli-l-commute-left",
        "der-commute-left",
        "ctr-commute-left",
        "weak-commute-left",
        "one-l-commute-left",
        "all-l-commute-left",
        "ex-commute-right",
        "tensor-l-commute-right",
        "lolli-l-commute-right",
        "der-commute-right",
        "ctr-commute-right",
        "weak-commute-right",
        "one-l-commute-right",
        "all-l-commute-right",
        "lolli-r-commute",
        "tensor-r-commute",
        "all-r-commute",
    };
    return ids;
}

std::optional<std::pair<Proof, StepInfo>> rewrite_at(const Proof& p, const Path& path) {
    const Proof& node = subproof(p, path);
    if (node.rule() != Rule::Cut) return std::nullopt;
    Reduction red = reduce(node);
    if (!red) return std::nullopt;
    if (!alpha_eq(red->second.conclusion(), node.conclusion())) {
        throw RewriteError(std::string(red->first) + " changed " + to_string(node.conclusion()) + " into " +
                           to_string(red->second.conclusion()));
    }
    Proof out = replace_at(p, path, red->second);
    return {{out, StepInfo{std::string(red->first), path, p.size(), out.size()}}};
}

std::optional<std::pair<Proof, StepInfo>> step(const Proof& p) {
    std::optional<std::pair<Proof, StepInfo>> out;
    Path path;
    find_redex(p, path, out, p);
    return out;
}

NormalizeResult normalize(const Proof& p, std::size_t max_steps, const std::function<void(const StepInfo&)>& on_step) {
    NormalizeResult res{p, {}, false};
    while (!is_cut_free(res.proof)) {
        if (res.trace.steps.size() >= max_steps) {
            res.exhausted = true;
            break;
        }
        auto next = step(res.proof);
        if (!next) break;
        res.proof = std::move(next->first);
        if (on_step) on_step(next->second);
        res.trace.steps.push_back(std::move(next->second));
    }
    return res;
}

Proof replay(const Proof& initial, const Trace& t) {
    Proof cur = initial;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& s = t.steps[i];
        auto next = rewrite_at(cur, s.path);
        if (!next || next->second.rule != s.rule) {
            throw RewriteError("replay diverges at step " + std::to_string(i) + " (" + s.rule + ")");
        }
        cur = std::move(next->first);
    }
    return cur;
}

namespace {

bool is_structural(Rule r) {
    return r == Rule::Exchange || r == Rule::Dereliction || r == Rule::Contraction || r == Rule::Weakening;
}

// Context entry of a structural block, tracked from the block's premise
// upward: the premise positions merged into it (with a flag for those
// derelicted before merging), or the formula it was weakened in as.
struct Entry {
    std::optional<Formula> weakened;
    std::vector<std::pair<std::size_t, bool>> sources;
};

class Block {
public:
    explicit Block(Proof premise) : premise_(std::move(premise)) {
        for (std::size_t i = 0; i < premise_.conclusion().context.size(); ++i) entries_.push_back({std::nullopt, {{i, false}}});
    }

    // Records a structural rule; false when it cannot be absorbed.
    bool absorb(const RuleTag& tag) {
        const std::size_t j = tag.at;
        switch (tag.rule) {
            case Rule::Exchange: std::swap(entries_[j], entries_[j + 1]); return true;
            case Rule::Dereliction: {
                Entry& e = entries_[j];
                if (e.weakened || e.sources.size() != 1 || e.sources[0].second) return false;
                e.sources[0].second = true;
                return true;
            }
            case Rule::Contraction: {
                if (entries_[j].weakened || entries_[j + 1].weakened) return false;
                auto& dst = entries_[j].sources;
                dst.insert(dst.end(), entries_[j + 1].sources.begin(), entries_[j + 1].sources.end());
                entries_.erase(entries_.begin() + static_cast<long>(j) + 1);
                return true;
            }
            case Rule::Weakening:
                entries_.insert(entries_.begin() + static_cast<long>(j), Entry{tag.formula, {}});
                return true;
            default: return false;
        }
    }

    // Exchanges, then derelictions, then contractions, then weakenings.
    Proof emit() const {
        std::vector<std::pair<std::size_t, bool>> order;
        for (const auto& e : entries_) {
            auto src = e.sources;
            std::sort(src.begin(), src.end());
            order.insert(order.end(), src.begin(), src.end());
        }
        std::vector<std::size_t> cur(premise_.conclusion().context.size());
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
        Proof p = premise_;
        for (std::size_t t = 0; t < order.size(); ++t) {
            std::size_t from = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), order[t].first) - cur.begin());
            p = move_hypothesis(p, from, t);
            std::size_t v = cur[from];
            cur.erase(cur.begin() + static_cast<long>(from));
            cur.insert(cur.begin() + static_cast<long>(t), v);
        }
        for (std::size_t t = 0; t < order.size(); ++t) {
            if (order[t].second) p = mk_der(p, t);
        }
        std::size_t pos = 0;
        for (const auto& e : entries_) {
            if (e.weakened) continue;
            for (std::size_t c = 1; c < e.sources.size(); ++c) p = mk_ctr(p, pos);
            ++pos;
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].weakened) p = mk_weak(p, i, *entries_[i].weakened);
        }
        return p;
    }

private:
    Proof premise_;
    std::vector<Entry> entries_;
};

}  // namespace

Proof exchange_normalize(const Proof& p) {
    if (!is_structural(p.rule())) {
        if (p.premises().empty()) return p;
        std::vector<Proof> prem;
        for (const auto& q : p.premises()) prem.push_back(exchange_normalize(q));
        return Proof::make(p.tag(), std::move(prem));
    }
    std::vector<const Proof*> chain;
    const Proof* cur = &p;
    while (is_structural(cur->rule())) {
        chain.push_back(cur);
        cur = &cur->premise(0);
    }
    Block block(exchange_normalize(*cur));
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (block.absorb((*it)->tag())) continue;
        block = Block(Proof::make((*it)->tag(), {block.emit()}));
    }
    return block.emit();
}

std::string step_json(const StepInfo& s) {
    nlohmann::ordered_json j;
    j["rule"] = s.rule;
    j["path"] = s.path;
    j["sizes"] = {s.size_before, s.size_after};
    return j.dump();
}

}  // namespace llsem
