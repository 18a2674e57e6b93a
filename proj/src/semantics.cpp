#include "llsem/semantics.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

namespace llsem {

// ---- spaces ----------------------------------------------------------------

Space den_formula(const Formula& a, const SpaceAssignment& asg) {
    using K = SemSpace::Kind;
    switch (a.kind()) {
        case Formula::Kind::Var: {
            auto it = asg.find(a.name());
            if (it == asg.end()) throw SemanticError("unassigned variable " + a.name());
            if (it->second == 0) throw SemanticError("variable " + a.name() + " has dimension 0");
            return std::make_shared<const SemSpace>(SemSpace{K::Base, it->second, true, nullptr, nullptr});
        }
        case Formula::Kind::One: return std::make_shared<const SemSpace>(SemSpace{K::Unit, 1, true, nullptr, nullptr});
        case Formula::Kind::Tensor:
        case Formula::Kind::Lolli: {
            Space l = den_formula(a.left(), asg);
            Space r = den_formula(a.right(), asg);
            bool fin = l->finite && r->finite;
            K k = a.is(Formula::Kind::Tensor) ? K::Tensor : K::Hom;
            return std::make_shared<const SemSpace>(SemSpace{k, fin ? l->dim * r->dim : 0, fin, l, r});
        }
        case Formula::Kind::Bang: {
            Space b = den_formula(a.body(), asg);
            return std::make_shared<const SemSpace>(SemSpace{K::Bang, 0, false, b, nullptr});
        }
        case Formula::Kind::Forall: throw SemanticError("no semantics for second-order formula " + to_string(a));
    }
    throw SemanticError("unknown formula");
}

std::string to_string(const Space& s) {
    switch (s->kind) {
        case SemSpace::Kind::Base: return "V" + std::to_string(s->dim);
        case SemSpace::Kind::Unit: return "k";
        case SemSpace::Kind::Tensor: return "(" + to_string(s->left) + " * " + to_string(s->right) + ")";
        case SemSpace::Kind::Hom: return "Hom(" + to_string(s->left) + ", " + to_string(s->right) + ")";
        case SemSpace::Kind::Bang: return "!" + to_string(s->left);
    }
    return "?";
}

bool same_space(const Space& a, const Space& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind || a->dim != b->dim) return false;
    switch (a->kind) {
        case SemSpace::Kind::Base:
        case SemSpace::Kind::Unit: return true;
        case SemSpace::Kind::Bang: return same_space(a->left, b->left);
        default: return same_space(a->left, b->left) && same_space(a->right, b->right);
    }
}

// ---- values ----------------------------------------------------------------

struct SemValue::Data {
    Kind kind;
    Space space;
    Vect coords;
    BangElem bang;
    std::vector<PairTerm> pairs;
    std::vector<MapTerm> maps;
};

SemValue SemValue::finite(Space s, Vect coords) {
    if (!s->finite) throw SemanticError("finite value in infinite space " + to_string(s));
    if (coords.size() != s->dim) {
        throw SemanticError("value has " + std::to_string(coords.size()) + " coordinates, space " + to_string(s) +
                            " has dimension " + std::to_string(s->dim));
    }
    return SemValue(std::make_shared<const Data>(Data{Kind::Finite, std::move(s), std::move(coords), {}, {}, {}}));
}

SemValue SemValue::scalar(const Rational& c) {
    static const Space unit = std::make_shared<const SemSpace>(SemSpace{SemSpace::Kind::Unit, 1, true, nullptr, nullptr});
    return finite(unit, Vect{c});
}

SemValue SemValue::bang(Space s, BangElem x) {
    if (s->kind != SemSpace::Kind::Bang) throw SemanticError("bang value in space " + to_string(s));
    if (!s->left->finite) {
        if (!x.is_zero()) throw SemanticError("unsupported space: kets over " + to_string(s->left));
    } else if (x.dim() != s->left->dim) {
        throw SemanticError("ket base point has the wrong dimension for " + to_string(s));
    }
    return SemValue(std::make_shared<const Data>(Data{Kind::Bang, std::move(s), {}, std::move(x), {}, {}}));
}

SemValue SemValue::zero(Space s) {
    if (s->finite) return finite(s, zero_vect(s->dim));
    switch (s->kind) {
        case SemSpace::Kind::Bang: {
            std::size_t d = s->left->finite ? s->left->dim : 0;
            return SemValue(std::make_shared<const Data>(Data{Kind::Bang, std::move(s), {}, BangElem(d), {}, {}}));
        }
        case SemSpace::Kind::Tensor:
            return SemValue(std::make_shared<const Data>(Data{Kind::Pairs, std::move(s), {}, {}, {}, {}}));
        default: return SemValue(std::make_shared<const Data>(Data{Kind::Maps, std::move(s), {}, {}, {}, {}}));
    }
}

SemValue SemValue::pair(Space s, const SemValue& l, const SemValue& r) {
    if (s->kind != SemSpace::Kind::Tensor) throw SemanticError("pair in non-tensor space " + to_string(s));
    if (s->finite) {
        const Vect& a = l.coords();
        const Vect& b = r.coords();
        Vect out(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
        }
        return finite(std::move(s), std::move(out));
    }
    return SemValue(std::make_shared<const Data>(Data{Kind::Pairs, std::move(s), {}, {}, {PairTerm{1, l, r}}, {}}));
}

SemValue SemValue::map(Space s, std::shared_ptr<const LinearFn> f) {
    if (s->kind != SemSpace::Kind::Hom || s->finite) throw SemanticError("lazy map in space " + to_string(s));
    return SemValue(std::make_shared<const Data>(Data{Kind::Maps, std::move(s), {}, {}, {}, {MapTerm{1, std::move(f)}}}));
}

SemValue::Kind SemValue::kind() const { return d_->kind; }
const Space& SemValue::space() const { return d_->space; }

const Vect& SemValue::coords() const {
    if (d_->kind != Kind::Finite) throw SemanticError("expected a finite value in " + to_string(d_->space));
    return d_->coords;
}
const BangElem& SemValue::bang() const {
    if (d_->kind != Kind::Bang) throw SemanticError("expected a bang value in " + to_string(d_->space));
    return d_->bang;
}
const std::vector<SemValue::PairTerm>& SemValue::pairs() const { return d_->pairs; }
const std::vector<SemValue::MapTerm>& SemValue::maps() const { return d_->maps; }

SemValue SemValue::scaled(const Rational& c) const {
    if (c == 1) return *this;
    if (c == 0) return zero(d_->space);
    Data d = *d_;
    for (auto& x : d.coords) x *= c;
    d.bang *= c;
    for (auto& t : d.pairs) t.coeff *= c;
    for (auto& t : d.maps) t.coeff *= c;
    return SemValue(std::make_shared<const Data>(std::move(d)));
}

SemValue operator+(const SemValue& a, const SemValue& b) {
    if (a.kind() != b.kind() || !same_space(a.space(), b.space())) {
        throw SemanticError("cannot add values of " + to_string(a.space()) + " and " + to_string(b.space()));
    }
    SemValue::Data d = *a.d_;
    switch (a.kind()) {
        case SemValue::Kind::Finite: axpy(d.coords, 1, b.coords()); break;
        case SemValue::Kind::Bang: d.bang += b.bang(); break;
        case SemValue::Kind::Pairs: d.pairs.insert(d.pairs.end(), b.pairs().begin(), b.pairs().end()); break;
        case SemValue::Kind::Maps: d.maps.insert(d.maps.end(), b.maps().begin(), b.maps().end()); break;
    }
    return SemValue(std::make_shared<const SemValue::Data>(std::move(d)));
}

SemValue apply(const SemValue& f, const SemValue& x) {
    const Space& s = f.space();
    if (s->kind != SemSpace::Kind::Hom) throw SemanticError("applying a value of " + to_string(s));
    if (f.kind() == SemValue::Kind::Finite) {
        const Vect& m = f.coords();
        const Vect& v = x.coords();
        const std::size_t cols = s->left->dim;
        if (v.size() != cols) throw SemanticError("argument has the wrong dimension");
        Vect out = zero_vect(s->right->dim);
        for (std::size_t r = 0; r < out.size(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (v[c] != 0 && m[r * cols + c] != 0) out[r] += m[r * cols + c] * v[c];
            }
        }
        return SemValue::finite(s->right, std::move(out));
    }
    SemValue out = SemValue::zero(s->right);
    for (const auto& t : f.maps()) out = out + t.fn->apply(x).scaled(t.coeff);
    return out;
}

// ---- evaluation --------------------------------------------------------------

namespace {

using Factors = std::vector<SemValue>;

struct Ctx {
    std::shared_ptr<const SpaceAssignment> asg;
    Space space(const Formula& a) const { return den_formula(a, *asg); }
};

SemValue eval(const Proof& p, const Factors& f, const Ctx& cx);

class Closure final : public LinearFn {
public:
    Closure(Proof node, Factors env, Ctx cx) : node_(std::move(node)), env_(std::move(env)), cx_(std::move(cx)) {}
    SemValue apply(const SemValue& x) const override {
        Factors args;
        args.reserve(env_.size() + 1);
        args.push_back(x);
        args.insert(args.end(), env_.begin(), env_.end());
        return eval(node_.premise(0), args, cx_);
    }

private:
    Proof node_;
    Factors env_;
    Ctx cx_;
};

Factors slice(const Factors& f, std::size_t b, std::size_t e) {
    return Factors(f.begin() + static_cast<long>(b), f.begin() + static_cast<long>(e));
}

Factors splice(const Factors& f, std::size_t at, std::size_t erase, const Factors& ins) {
    Factors out = slice(f, 0, at);
    out.insert(out.end(), ins.begin(), ins.end());
    out.insert(out.end(), f.begin() + static_cast<long>(at + erase), f.end());
    return out;
}

struct PureTerm {
    Rational coeff;
    SemValue left;
    SemValue right;
};

std::vector<PureTerm> decompose(const SemValue& v) {
    const Space& s = v.space();
    std::vector<PureTerm> out;
    if (v.kind() == SemValue::Kind::Pairs) {
        for (const auto& t : v.pairs()) out.push_back({t.coeff, t.left, t.right});
        return out;
    }
    const Vect& c = v.coords();
    const std::size_t db = s->right->dim;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        out.push_back({c[k], SemValue::finite(s->left, basis_vect(s->left->dim, k / db)),
                       SemValue::finite(s->right, basis_vect(db, k % db))});
    }
    return out;
}

const BangElem& bang_of(const SemValue& v) {
    if (v.space()->kind != SemSpace::Kind::Bang) throw SemanticError("expected a value of a !-space");
    return v.bang();
}

SemValue eval(const Proof& p, const Factors& f, const Ctx& cx) {
    const auto& ctx = p.conclusion().context;
    if (f.size() != ctx.size()) {
        throw SemanticError("input has " + std::to_string(f.size()) + " factors for a context of length " +
                            std::to_string(ctx.size()));
    }
    const std::size_t at = p.tag().at;
    switch (p.rule()) {
        case Rule::Axiom: return f[0];
        case Rule::Exchange: {
            Factors g = f;
            std::swap(g[at], g[at + 1]);
            return eval(p.premise(0), g, cx);
        }
        case Rule::Cut: {
            const std::size_t n = p.premise(0).conclusion().context.size();
            SemValue a = eval(p.premise(0), slice(f, at, at + n), cx);
            return eval(p.premise(1), splice(f, at, n, {a}), cx);
        }
        case Rule::TensorR: {
            const std::size_t n = p.premise(0).conclusion().context.size();
            SemValue l = eval(p.premise(0), slice(f, 0, n), cx);
            SemValue r = eval(p.premise(1), slice(f, n, f.size()), cx);
            return SemValue::pair(cx.space(p.conclusion().conclusion), l, r);
        }
        case Rule::TensorL: {
            SemValue out = SemValue::zero(cx.space(p.conclusion().conclusion));
            for (const auto& t : decompose(f[at])) {
                out = out + eval(p.premise(0), splice(f, at, 1, {t.left, t.right}), cx).scaled(t.coeff);
            }
            return out;
        }
        case Rule::LolliR: {
            Space s = cx.space(p.conclusion().conclusion);
            if (!s->finite) return SemValue::map(s, std::make_shared<const Closure>(p, f, cx));
            const std::size_t cols = s->left->dim;
            const std::size_t rows = s->right->dim;
            Vect m = zero_vect(cols * rows);
            Factors args = splice(f, 0, 0, {SemValue::zero(s->left)});
            for (std::size_t c = 0; c < cols; ++c) {
                args[0] = SemValue::finite(s->left, basis_vect(cols, c));
                const Vect col = eval(p.premise(0), args, cx).coords();
                for (std::size_t r = 0; r < rows; ++r) m[r * cols + c] = col[r];
            }
            return SemValue::finite(s, std::move(m));
        }
        case Rule::LolliL: {
            const std::size_t n = p.premise(0).conclusion().context.size();
            SemValue a = eval(p.premise(0), slice(f, at, at + n), cx);
            SemValue b = apply(f[at + n], a);
            Factors g = slice(f, 0, at);
            g.push_back(b);
            g.insert(g.end(), f.begin() + static_cast<long>(at + n + 1), f.end());
            return eval(p.premise(1), g, cx);
        }
        case Rule::Promotion: {
            Space target = cx.space(p.conclusion().conclusion);
            if (!target->left->finite) {
                throw SemanticError("unsupported space: promotion into " + to_string(target) +
                                    " would need kets over an infinite space");
            }
            std::vector<BangElem> xs;
            std::vector<Space> spaces;
            std::vector<std::size_t> dims;
            for (std::size_t i = 0; i < f.size(); ++i) {
                xs.push_back(bang_of(f[i]));
                spaces.push_back(f[i].space());
                dims.push_back(xs.back().dim());
                if (!f[i].space()->left->finite) {
                    throw SemanticError("unsupported space: kets over " + to_string(f[i].space()->left));
                }
            }
            const Proof& body = p.premise(0);
            KetMap phi = [&](const Ket& k) {
                Factors g;
                auto parts = split(k, dims);
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    g.push_back(SemValue::bang(spaces[i], BangElem::basis_ket(parts[i])));
                }
                return eval(body, g, cx).coords();
            };
            return SemValue::bang(target, lift(phi, target->left->dim, merge(xs)));
        }
        case Rule::Dereliction: {
            const Space& s = f[at].space();
            if (!s->left->finite) throw SemanticError("unsupported space: dereliction on " + to_string(s));
            Factors g = f;
            g[at] = SemValue::finite(s->left, dereliction(bang_of(f[at])));
            return eval(p.premise(0), g, cx);
        }
        case Rule::Contraction: {
            const Space& s = f[at].space();
            SemValue out = SemValue::zero(cx.space(p.conclusion().conclusion));
            for (const auto& [ks, c] : coproduct(bang_of(f[at])).terms()) {
                SemValue l = SemValue::bang(s, BangElem::basis_ket(ks[0]));
                SemValue r = SemValue::bang(s, BangElem::basis_ket(ks[1]));
                out = out + eval(p.premise(0), splice(f, at, 1, {l, r}), cx).scaled(c);
            }
            return out;
        }
        case Rule::Weakening: {
            Rational c = counit(bang_of(f[at]));
            if (c == 0) return SemValue::zero(cx.space(p.conclusion().conclusion));
            return eval(p.premise(0), splice(f, at, 1, {}), cx).scaled(c);
        }
        case Rule::OneL: {
            Rational c = f[at].coords().at(0);
            if (c == 0) return SemValue::zero(cx.space(p.conclusion().conclusion));
            return eval(p.premise(0), splice(f, at, 1, {}), cx).scaled(c);
        }
        case Rule::OneR: return SemValue::scalar(1);
        case Rule::ForallR:
        case Rule::ForallL: throw SemanticError("no semantics for second-order proofs");
    }
    throw SemanticError("unknown rule");
}

Ctx make_ctx(const SpaceAssignment& asg) { return Ctx{std::make_shared<const SpaceAssignment>(asg)}; }

void check_input(const Proof& p, const Factors& f, const Ctx& cx) {
    const auto& ctx = p.conclusion().context;
    if (f.size() != ctx.size()) {
        throw SemanticError("input has " + std::to_string(f.size()) + " factors for a context of length " +
                            std::to_string(ctx.size()));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        Space s = cx.space(ctx[i]);
        if (!same_space(s, f[i].space())) {
            throw SemanticError("input " + std::to_string(i) + " lies in " + to_string(f[i].space()) +
                                ", expected " + to_string(s));
        }
    }
}

}  // namespace

SemValue den_apply(const Proof& p, const std::vector<SemValue>& input, const SpaceAssignment& asg) {
    Ctx cx = make_ctx(asg);
    check_input(p, input, cx);
    return eval(p, input, cx);
}

SemValue den_apply_sum(const Proof& p, const ContextElem& input, const SpaceAssignment& asg) {
    Ctx cx = make_ctx(asg);
    SemValue out = SemValue::zero(cx.space(p.conclusion().conclusion));
    for (const auto& [c, f] : input.terms) {
        check_input(p, f, cx);
        out = out + eval(p, f, cx).scaled(c);
    }
    return out;
}

Matrix den_matrix(const Proof& p, const SpaceAssignment& asg) {
    Ctx cx = make_ctx(asg);
    std::vector<Space> spaces;
    std::size_t cols = 1;
    for (const auto& a : p.conclusion().context) {
        spaces.push_back(cx.space(a));
        if (!spaces.back()->finite) throw SemanticError("den_matrix: infinite space " + to_string(spaces.back()));
        cols *= spaces.back()->dim;
    }
    Space cod = cx.space(p.conclusion().conclusion);
    if (!cod->finite) throw SemanticError("den_matrix: infinite space " + to_string(cod));
    Matrix m{cod->dim, cols, zero_vect(cod->dim * cols)};
    for (std::size_t c = 0; c < cols; ++c) {
        Factors f(spaces.size(), SemValue::scalar(0));
        std::size_t rest = c;
        for (std::size_t i = spaces.size(); i-- > 0;) {
            f[i] = SemValue::finite(spaces[i], basis_vect(spaces[i]->dim, rest % spaces[i]->dim));
            rest /= spaces[i]->dim;
        }
        const Vect col = eval(p, f, cx).coords();
        for (std::size_t r = 0; r < m.rows; ++r) m.data[r * cols + c] = col[r];
    }
    return m;
}

namespace {

SemValue apply_to_ket(const Proof& p, const BangElem& x, const SpaceAssignment& asg, const char* what) {
    Ctx cx = make_ctx(asg);
    const auto& s = p.conclusion();
    if (s.context.size() == 1 && s.context[0].is(Formula::Kind::Bang)) {
        SemValue in = SemValue::bang(cx.space(s.context[0]), x);
        return eval(p, {in}, cx);
    }
    if (s.context.empty() && s.conclusion.is(Formula::Kind::Lolli) && s.conclusion.left().is(Formula::Kind::Bang)) {
        SemValue in = SemValue::bang(cx.space(s.conclusion.left()), x);
        return apply(eval(p, {}, cx), in);
    }
    throw SemanticError(std::string(what) + ": expected a proof of !B |- C or |- !B -o C, got " + to_string(s));
}

}  // namespace

SemValue nl(const Proof& p, const Vect& point, const SpaceAssignment& asg) {
    return apply_to_ket(p, BangElem::vacuum(point), asg, "nl");
}

SemValue tangent(const Proof& rho, const Vect& base, const Vect& q, const SpaceAssignment& asg) {
    if (q.size() != base.size()) throw SemanticError("tangent: vector and base point differ in dimension");
    return apply_to_ket(rho, BangElem::ket(base, {q}), asg, "tangent");
}

// ---- probes and embedding ------------------------------------------------------

std::vector<Vect> probe_points(std::size_t dim, const ProbeConfig& cfg) {
    std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + dim);
    std::vector<Vect> out;
    for (std::size_t k = 0; k < cfg.base_points; ++k) {
        Vect v(dim);
        for (auto& x : v) {
            long num = static_cast<long>(rng() % 7) - 3;
            long den = static_cast<long>(rng() % 3) + 1;
            x = Rational(num, den);
            x.canonicalize();
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

class RankOne final : public LinearFn {
public:
    RankOne(std::string key, ProbeConfig cfg, SemValue y) : key_(std::move(key)), cfg_(cfg), y_(std::move(y)) {}
    SemValue apply(const SemValue& x) const override {
        auto e = embed(x, cfg_);
        auto it = e.find(key_);
        return y_.scaled(it == e.end() ? Rational(0) : it->second);
    }

private:
    std::string key_;
    ProbeConfig cfg_;
    SemValue y_;
};

void multisets(std::size_t dim, std::size_t size, std::size_t from, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < dim; ++i) {
        cur.push_back(i);
        multisets(dim, size, i, cur, out);
        cur.pop_back();
    }
}

// Picks `cap` of `total` indices spread evenly, all of them when total <= cap.
std::vector<std::size_t> spread(std::size_t total, std::size_t cap) {
    std::vector<std::size_t> out;
    if (total <= cap) {
        for (std::size_t i = 0; i < total; ++i) out.push_back(i);
        return out;
    }
    for (std::size_t k = 0; k < cap; ++k) out.push_back(k * total / cap);
    return out;
}

std::string ket_key(const Ket& k) {
    std::string out = "k" + to_string(k.base) + "[";
    for (std::size_t i = 0; i < k.args.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k.args[i]);
    }
    return out + "]";
}

void embed_into(const SemValue& v, const Rational& c, const ProbeConfig& cfg, const std::string& prefix,
                std::map<std::string, Rational>& out) {
    auto put = [&](const std::string& key, const Rational& x) {
        Rational& slot = out[prefix + key];
        slot += c * x;
    };
    switch (v.kind()) {
        case SemValue::Kind::Finite:
            for (std::size_t i = 0; i < v.coords().size(); ++i) {
                if (v.coords()[i] != 0) put("c" + std::to_string(i), v.coords()[i]);
            }
            return;
        case SemValue::Kind::Bang:
            for (const auto& [k, x] : v.bang().terms()) put(ket_key(k), x);
            return;
        case SemValue::Kind::Pairs:
            for (const auto& t : v.pairs()) {
                auto l = embed(t.left, cfg);
                auto r = embed(t.right, cfg);
                for (const auto& [kl, xl] : l) {
                    for (const auto& [kr, xr] : r) put("(" + kl + "|" + kr + ")", t.coeff * xl * xr);
                }
            }
            return;
        case SemValue::Kind::Maps: {
            auto ps = probes(v.space()->left, cfg);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                embed_into(apply(v, ps[i]), c, cfg, prefix + "p" + std::to_string(i) + ":", out);
            }
            return;
        }
    }
}

}  // namespace

std::vector<SemValue> probes(const Space& s, const ProbeConfig& cfg) {
    std::vector<SemValue> out;
    if (s->finite) {
        for (std::size_t i = 0; i < s->dim; ++i) out.push_back(SemValue::finite(s, basis_vect(s->dim, i)));
        return out;
    }
    switch (s->kind) {
        case SemSpace::Kind::Bang: {
            if (!s->left->finite) throw SemanticError("unsupported space: probes for " + to_string(s));
            const std::size_t d = s->left->dim;
            for (const auto& p : probe_points(d, cfg)) {
                for (std::size_t size = 0; size <= cfg.depth; ++size) {
                    std::vector<std::vector<std::size_t>> ms;
                    std::vector<std::size_t> cur;
                    multisets(d, size, 0, cur, ms);
                    for (auto& args : ms) out.push_back(SemValue::bang(s, BangElem::basis_ket(Ket{p, args})));
                }
            }
            return out;
        }
        case SemSpace::Kind::Tensor: {
            auto l = probes(s->left, cfg);
            auto r = probes(s->right, cfg);
            for (auto k : spread(l.size() * r.size(), cfg.cap)) {
                out.push_back(SemValue::pair(s, l[k / r.size()], r[k % r.size()]));
            }
            return out;
        }
        case SemSpace::Kind::Hom: {
            // rank-one maps x -> <key, x> y
            auto dom = probes(s->left, cfg);
            auto cod = probes(s->right, cfg);
            std::vector<std::string> keys;
            for (auto i : spread(dom.size(), 4)) {
                for (const auto& [k, x] : embed(dom[i], cfg)) {
                    if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
                }
            }
            for (auto i : spread(keys.size(), 6)) {
                for (auto j : spread(cod.size(), 2)) {
                    out.push_back(SemValue::map(s, std::make_shared<const RankOne>(keys[i], cfg, cod[j])));
                }
            }
            return out;
        }
        default: break;
    }
    throw SemanticError("no probes for " + to_string(s));
}

std::vector<std::vector<SemValue>> context_probes(const std::vector<Space>& ctx, const ProbeConfig& cfg) {
    std::vector<std::vector<SemValue>> per;
    std::size_t total = 1;
    bool huge = false;
    for (const auto& s : ctx) {
        per.push_back(probes(s, cfg));
        if (per.back().empty()) return {};
        if (total > (std::size_t{1} << 40) / per.back().size()) huge = true;
        total *= per.back().size();
    }
    std::vector<std::vector<SemValue>> out;
    auto decode = [&](std::size_t k) {
        std::vector<SemValue> row(per.size(), SemValue::scalar(0));
        for (std::size_t i = per.size(); i-- > 0;) {
            row[i] = per[i][k % per[i].size()];
            k /= per[i].size();
        }
        return row;
    };
    if (!huge) {
        for (auto k : spread(total, cfg.cap)) out.push_back(decode(k));
        return out;
    }
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t k = 0; k < cfg.cap; ++k) {
        std::vector<SemValue> row;
        for (const auto& ps : per) row.push_back(ps[rng() % ps.size()]);
        out.push_back(std::move(row));
    }
    return out;
}

std::map<std::string, Rational> embed(const SemValue& v, const ProbeConfig& cfg) {
    std::map<std::string, Rational> out;
    embed_into(v, 1, cfg, "", out);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool probe_equal(const SemValue& a, const SemValue& b, const ProbeConfig& cfg) {
    if (!same_space(a.space(), b.space())) return false;
    if (a.kind() == SemValue::Kind::Finite && b.kind() == SemValue::Kind::Finite) return a.coords() == b.coords();
    if (a.kind() == SemValue::Kind::Bang && b.kind() == SemValue::Kind::Bang) return a.bang() == b.bang();
    return embed(a, cfg) == embed(b, cfg);
}

bool probe_equal(const Proof& p, const Proof& q, const SpaceAssignment& asg, const ProbeConfig& cfg) {
    if (!alpha_eq(p.conclusion(), q.conclusion())) return false;
    std::vector<Space> ctx;
    for (const auto& a : p.conclusion().context) ctx.push_back(den_formula(a, asg));
    for (const auto& in : context_probes(ctx, cfg)) {
        if (!probe_equal(den_apply(p, in, asg), den_apply(q, in, asg), cfg)) return false;
    }
    return true;
}

// ---- matrices and output ------------------------------------------------------

Vect mat_mul(const Vect& a, const Vect& b, std::size_t n) {
    Vect out = zero_vect(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    }
    return out;
}

Vect mat_identity(std::size_t n) {
    Vect out = zero_vect(n * n);
    for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
    return out;
}

namespace {

using nlohmann::json;

json rows_json(const Vect& v, std::size_t cols) {
    json out = json::array();
    for (std::size_t r = 0; r * cols < v.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < cols; ++c) row.push_back(to_string(v[r * cols + c]));
        out.push_back(row);
    }
    return out;
}

// Row width for printing a point of the given space.
std::size_t row_width(const Space& s) {
    if (s->kind == SemSpace::Kind::Hom && s->finite) return s->left->dim;
    return std::max<std::size_t>(s->dim, 1);
}

json to_json(const SemValue& v, const ProbeConfig& cfg) {
    json out;
    out["space"] = to_string(v.space());
    switch (v.kind()) {
        case SemValue::Kind::Finite: {
            json coords = json::array();
            for (const auto& c : v.coords()) coords.push_back(to_string(c));
            out["coords"] = coords;
            if (v.space()->kind == SemSpace::Kind::Hom) out["matrix"] = rows_json(v.coords(), v.space()->left->dim);
            break;
        }
        case SemValue::Kind::Bang: {
            json kets = json::array();
            for (const auto& [k, c] : v.bang().terms()) {
                kets.push_back({{"base", rows_json(k.base, row_width(v.space()->left))},
                                {"args", k.args},
                                {"coeff", to_string(c)}});
            }
            out["kets"] = kets;
            break;
        }
        case SemValue::Kind::Pairs: {
            json terms = json::array();
            for (const auto& t : v.pairs()) {
                terms.push_back(
                    {{"coeff", to_string(t.coeff)}, {"left", to_json(t.left, cfg)}, {"right", to_json(t.right, cfg)}});
            }
            out["terms"] = terms;
            break;
        }
        case SemValue::Kind::Maps: {
            json table = json::array();
            for (const auto& p : probes(v.space()->left, cfg)) {
                table.push_back({{"input", to_json(p, cfg)}, {"output", to_json(apply(v, p), cfg)}});
            }
            out["probes"] = table;
            break;
        }
    }
    return out;
}

}  // namespace

std::string value_literal(const SemValue& v) {
    if (v.kind() != SemValue::Kind::Finite) {
        throw SemanticError("no literal form for a value of " + to_string(v.space()));
    }
    const Space& s = v.space();
    if (s->kind == SemSpace::Kind::Unit) return to_string(v.coords()[0]);
    if (s->kind != SemSpace::Kind::Hom) return to_string(v.coords());
    const std::size_t cols = s->left->dim;
    std::string out = "[";
    for (std::size_t r = 0; r < s->right->dim; ++r) {
        if (r) out += ",";
        out += to_string(Vect(v.coords().begin() + static_cast<long>(r * cols),
                              v.coords().begin() + static_cast<long>((r + 1) * cols)));
    }
    return out + "]";
}

std::string value_json(const SemValue& v, const ProbeConfig& cfg) { return to_json(v, cfg).dump(); }

}  // namespace llsem
