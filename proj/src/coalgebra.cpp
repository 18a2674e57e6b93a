#include "llsem/coalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace llsem {

Vect zero_vect(std::size_t dim) { return Vect(dim, Rational(0)); }

Vect basis_vect(std::size_t dim, std::size_t i) {
    Vect v = zero_vect(dim);
    v.at(i) = 1;
    return v;
}

Vect& axpy(Vect& y, const Rational& a, const Vect& x) {
    if (y.size() != x.size()) throw std::invalid_argument("axpy: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0) y[i] += a * x[i];
    }
    return y;
}

std::string to_string(const Vect& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + "]";
}

bool operator<(const Ket& a, const Ket& b) {
    if (a.base.size() != b.base.size()) return a.base.size() < b.base.size();
    for (std::size_t i = 0; i < a.base.size(); ++i) {
        int c = cmp(a.base[i], b.base[i]);
        if (c != 0) return c < 0;
    }
    return a.args < b.args;
}

Ket sub_ket(const Ket& k, const std::vector<std::size_t>& positions) {
    Ket out{k.base, {}};
    out.args.reserve(positions.size());
    for (auto p : positions) out.args.push_back(k.args.at(p));
    std::sort(out.args.begin(), out.args.end());
    return out;
}

// ---- BangElem ------------------------------------------------------------

BangElem BangElem::vacuum(const Vect& base) { return basis_ket(Ket{base, {}}); }

BangElem BangElem::basis_ket(Ket k, const Rational& coeff) {
    BangElem out(k.base.size());
    std::sort(k.args.begin(), k.args.end());
    out.add(k, coeff);
    return out;
}

BangElem BangElem::ket(const Vect& base, const std::vector<Vect>& args) {
    BangElem out(base.size());
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t j, const Rational& c) {
        if (j == args.size()) {
            Ket k{base, idx};
            std::sort(k.args.begin(), k.args.end());
            out.add(k, c);
            return;
        }
        if (args[j].size() != base.size()) throw std::invalid_argument("ket: argument dimension mismatch");
        for (std::size_t i = 0; i < args[j].size(); ++i) {
            if (args[j][i] == 0) continue;
            idx.push_back(i);
            expand(j + 1, c * args[j][i]);
            idx.pop_back();
        }
    };
    expand(0, Rational(1));
    return out;
}

void BangElem::add(const Ket& k, const Rational& c) {
    if (c == 0) return;
    if (k.base.size() != dim_) throw std::invalid_argument("ket base point has the wrong dimension");
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BangElem& BangElem::operator+=(const BangElem& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("BangElem: dimension mismatch");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

BangElem& BangElem::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

// ---- BangTensor ----------------------------------------------------------

void BangTensor::add(const std::vector<Ket>& ks, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(ks, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BangTensor& BangTensor::operator+=(const BangTensor& o) {
    if (o.dims_ != dims_) throw std::invalid_argument("BangTensor: factor mismatch");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

BangTensor tensor(const BangElem& a, const BangElem& b) {
    BangTensor out({a.dim(), b.dim()});
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) out.add({ka, kb}, ca * cb);
    }
    return out;
}

BangTensor as_tensor(const BangElem& a) {
    BangTensor out({a.dim()});
    for (const auto& [k, c] : a.terms()) out.add({k}, c);
    return out;
}

BangTensor map_factor(const BangTensor& t, std::size_t i, const std::function<BangTensor(const Ket&)>& f) {
    std::vector<std::size_t> dims;
    bool dims_known = false;
    BangTensor out;
    for (const auto& [ks, c] : t.terms()) {
        BangTensor img = f(ks.at(i));
        if (!dims_known) {
            dims = t.dims();
            dims.erase(dims.begin() + static_cast<long>(i));
            dims.insert(dims.begin() + static_cast<long>(i), img.dims().begin(), img.dims().end());
            out = BangTensor(dims);
            dims_known = true;
        }
        for (const auto& [kimg, cimg] : img.terms()) {
            std::vector<Ket> row(ks.begin(), ks.begin() + static_cast<long>(i));
            row.insert(row.end(), kimg.begin(), kimg.end());
            row.insert(row.end(), ks.begin() + static_cast<long>(i) + 1, ks.end());
            out.add(row, c * cimg);
        }
    }
    return out;
}

BangTensor permute(const BangTensor& t, const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> dims;
    for (auto p : perm) dims.push_back(t.dims().at(p));
    BangTensor out(dims);
    for (const auto& [ks, c] : t.terms()) {
        std::vector<Ket> row;
        for (auto p : perm) row.push_back(ks.at(p));
        out.add(row, c);
    }
    return out;
}

// ---- coalgebra structure ---------------------------------------------------

BangTensor coproduct(const Ket& k) {
    const std::size_t s = k.args.size();
    BangTensor out({k.base.size(), k.base.size()});
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        std::vector<std::size_t> in, rest;
        for (std::size_t j = 0; j < s; ++j) ((mask >> j) & 1 ? in : rest).push_back(j);
        out.add({sub_ket(k, in), sub_ket(k, rest)}, 1);
    }
    return out;
}

BangTensor coproduct(const BangElem& x) {
    BangTensor out({x.dim(), x.dim()});
    for (const auto& [k, c] : x.terms()) {
        BangTensor d = coproduct(k);
        for (const auto& [ks, ck] : d.terms()) out.add(ks, c * ck);
    }
    return out;
}

Rational counit(const BangElem& x) {
    Rational out = 0;
    for (const auto& [k, c] : x.terms()) {
        if (k.args.empty()) out += c;
    }
    return out;
}

Vect dereliction(const BangElem& x) {
    Vect out = zero_vect(x.dim());
    for (const auto& [k, c] : x.terms()) {
        if (k.args.empty()) {
            axpy(out, c, k.base);
        } else if (k.args.size() == 1) {
            out[k.args[0]] += c;
        }
    }
    return out;
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t s) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    // a[i] = block of element i; a[i] <= 1 + max(a[0..i-1])
    std::vector<std::size_t> a(s, 0);
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t blocks) {
        if (i == s) {
            std::vector<std::vector<std::size_t>> part(blocks);
            for (std::size_t j = 0; j < s; ++j) part[a[j]].push_back(j);
            out.push_back(std::move(part));
            return;
        }
        for (std::size_t b = 0; b <= blocks && (i > 0 || b == 0); ++b) {
            a[i] = b;
            go(i + 1, std::max(blocks, b + 1));
        }
    };
    go(0, 0);
    return out;
}

BangElem lift(const KetMap& phi, std::size_t target_dim, const BangElem& x) {
    BangElem out(target_dim);
    for (const auto& [k, c] : x.terms()) {
        const std::size_t s = k.args.size();
        std::map<std::size_t, Vect> memo;
        auto phi_on = [&](std::size_t mask) -> const Vect& {
            auto it = memo.find(mask);
            if (it != memo.end()) return it->second;
            std::vector<std::size_t> pos;
            for (std::size_t j = 0; j < s; ++j) {
                if ((mask >> j) & 1) pos.push_back(j);
            }
            Vect v = phi(sub_ket(k, pos));
            if (v.size() != target_dim) throw std::invalid_argument("lift: phi has the wrong codomain");
            return memo.emplace(mask, std::move(v)).first->second;
        };
        const Vect q = phi_on(0);
        for (const auto& part : set_partitions(s)) {
            std::vector<Vect> args;
            args.reserve(part.size());
            for (const auto& block : part) {
                std::size_t mask = 0;
                for (auto j : block) mask |= std::size_t{1} << j;
                args.push_back(phi_on(mask));
            }
            out += BangElem::ket(q, args) * c;
        }
    }
    return out;
}

BangElem merge(const std::vector<Ket>& ks, const std::vector<std::size_t>& dims) {
    Ket out;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i].base.size() != dims.at(i)) throw std::invalid_argument("merge: dimension mismatch");
        out.base.insert(out.base.end(), ks[i].base.begin(), ks[i].base.end());
        for (auto a : ks[i].args) out.args.push_back(a + offset);
        offset += dims[i];
    }
    return BangElem::basis_ket(std::move(out));
}

BangElem merge(const std::vector<BangElem>& xs) {
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    for (const auto& x : xs) {
        dims.push_back(x.dim());
        total += x.dim();
    }
    BangElem out(total);
    std::vector<Ket> row;
    std::function<void(std::size_t, const Rational&)> go = [&](std::size_t i, const Rational& c) {
        if (i == xs.size()) {
            out += merge(row, dims) * c;
            return;
        }
        for (const auto& [k, ck] : xs[i].terms()) {
            row.push_back(k);
            go(i + 1, c * ck);
            row.pop_back();
        }
    };
    go(0, Rational(1));
    return out;
}

std::vector<Ket> split(const Ket& k, const std::vector<std::size_t>& dims) {
    std::vector<Ket> out;
    std::size_t offset = 0;
    for (auto d : dims) {
        if (offset + d > k.base.size()) throw std::invalid_argument("split: dimension mismatch");
        Ket part{Vect(k.base.begin() + static_cast<long>(offset), k.base.begin() + static_cast<long>(offset + d)),
                 {}};
        for (auto a : k.args) {
            if (a >= offset && a < offset + d) part.args.push_back(a - offset);
        }
        out.push_back(std::move(part));
        offset += d;
    }
    if (offset != k.base.size()) throw std::invalid_argument("split: dimension mismatch");
    return out;
}

BangTensor split(const BangElem& x, const std::vector<std::size_t>& dims) {
    BangTensor out(dims);
    for (const auto& [k, c] : x.terms()) out.add(split(k, dims), c);
    return out;
}

}  // namespace llsem
