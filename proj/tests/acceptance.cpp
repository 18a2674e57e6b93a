// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.
// All comparisons are exact rational equality; the tolerance is pinned at zero.

#include "corpus.hpp"
#include "generators.hpp"
#include "llsem/coalgebra.hpp"
#include "llsem/encodings.hpp"
#include "llsem/parser.hpp"
#include "llsem/rewrite.hpp"
#include "llsem/semantics.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace llsem;
using oracle::Mat;

namespace {

constexpr int kTolerance = 0;  // exact equality everywhere
static_assert(kTolerance == 0);

const Formula A = Formula::var("A");
const Formula E = endo(A);
const SpaceAssignment A2{{"A", 2}};

// Thrown by expect() to stop a criterion at its first failed check.
struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

Vect flat(const Mat& m) { return oracle::flatten(m); }
Vect anticomm(const Mat& a, const Mat& b) { return flat(oracle::sum(oracle::product(a, b), oracle::product(b, a))); }

SemValue bang_in(BangElem x) { return SemValue::bang(den_formula(Formula::bang(E), A2), std::move(x)); }

Proof two_times_two() { return mk_cut(church(2, A), mult(2, A), 0); }

// 1
std::string two_times_two_is_four() {
    auto r = normalize(two_times_two(), 10000);
    expect(!r.exhausted && is_cut_free(r.proof), "not cut-free within 10000 steps");
    expect(r.trace.steps.size() < 10000, "step count");
    expect(exchange_normalize(r.proof) == church(4, A), "normal form differs from church(4)");
    Mat alpha{{1, 1}, {0, 1}};
    expect(nl(r.proof, flat(alpha), A2).coords() == flat(oracle::power(alpha, 4)), "nl differs from alpha^4");
    return std::to_string(r.trace.steps.size()) + " steps";
}

// 2
std::string trace_skeleton() {
    auto r = normalize(two_times_two());
    const std::vector<std::string> want = {"lolli-r-commute", "lolli-l-principal", "prom-vs-ctr", "prom-vs-der"};
    std::size_t k = 0;
    for (const auto& s : r.trace.steps) {
        if (k < want.size() && s.rule == want[k]) ++k;
    }
    expect(k == want.size(), "expected rule ids are not a subsequence of the trace");
    bool prefix = r.trace.steps.size() >= 4;
    for (std::size_t i = 0; prefix && i < 4; ++i) prefix = r.trace.steps[i].rule == want[i];
    return prefix ? "also the first four steps" : "subsequence only";
}

// 3
std::string church_two_table() {
    Proof two = church_body(2, A);
    std::mt19937 rng(301);
    for (int i = 0; i < 20; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2);
        auto phi = [&](BangElem x) { return den_apply(two, {bang_in(std::move(x))}, A2).coords(); };
        expect(phi(BangElem::vacuum(flat(a))) == flat(oracle::power(a, 2)), "vacuum");
        expect(phi(BangElem::ket(flat(a), {flat(nu)})) == anticomm(nu, a), "one argument");
        expect(phi(BangElem::ket(flat(a), {flat(nu), flat(mu)})) == anticomm(nu, mu), "two arguments");
    }
    return "20 triples";
}

// 4
std::string lifting_table() {
    Proof Phi = mk_prom(church_body(2, A));
    std::mt19937 rng(401);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2),
            th = oracle::random_matrix(rng, 2);
        Vect a2 = flat(oracle::power(a, 2));
        auto lift_of = [&](std::vector<Vect> args) {
            return den_apply(Phi, {bang_in(BangElem::ket(flat(a), std::move(args)))}, A2).bang();
        };
        expect(lift_of({}) == BangElem::vacuum(a2), "vacuum");
        expect(lift_of({flat(nu)}) == BangElem::ket(a2, {anticomm(nu, a)}), "one argument");
        expect(lift_of({flat(nu), flat(mu)}) ==
                   BangElem::ket(a2, {anticomm(nu, mu)}) + BangElem::ket(a2, {anticomm(nu, a), anticomm(mu, a)}),
               "two arguments");
        BangElem three = BangElem::ket(a2, {anticomm(nu, mu), anticomm(th, a)}) +
                         BangElem::ket(a2, {anticomm(th, mu), anticomm(nu, a)}) +
                         BangElem::ket(a2, {anticomm(nu, th), anticomm(mu, a)}) +
                         BangElem::ket(a2, {anticomm(nu, a), anticomm(mu, a), anticomm(th, a)});
        expect(lift_of({flat(nu), flat(mu), flat(th)}) == three, "three arguments");
    }
    const std::size_t bell[] = {1, 1, 2, 5, 15};
    for (std::size_t s = 0; s <= 4; ++s) {
        expect(set_partitions(s).size() == bell[s], "Bell number for s=" + std::to_string(s));
        expect(oracle::partitions(s).size() == bell[s], "oracle Bell number for s=" + std::to_string(s));
    }
    return "10 quadruples, Bell 1,1,2,5,15";
}

// 5
std::string coalgebra_laws() {
    std::mt19937 rng(501);
    for (unsigned i = 0; i < 100; ++i) {
        auto failed = gen::coalgebra_law_failures(rng, i);
        expect(failed.empty(), failed.empty() ? "" : failed.front());
    }
    return "100 kets";
}

// 6
std::string rewrite_soundness() {
    auto cuts = corpus::single_cuts(606, 220);
    expect(cuts.size() >= 200, "corpus too small");
    SpaceAssignment asg{{"A", 2}, {"B", 1}};
    ProbeConfig cfg;
    std::size_t steps = 0;
    for (const auto& c : cuts) {
        expect(is_valid(c) && c.cut_count() == 1, "corpus proof is not a valid single cut");
        Proof cur = c;
        while (!is_cut_free(cur)) {
            auto s = step(cur);
            expect(s.has_value(), "stuck on a cut");
            expect(s->first.conclusion() == cur.conclusion(), "conclusion changed by " + s->second.rule);
            expect(probe_equal(cur, s->first, asg, cfg), "denotation changed by " + s->second.rule);
            cur = s->first;
            expect(++steps < 1000000, "runaway");
        }
    }
    return std::to_string(cuts.size()) + " proofs, " + std::to_string(steps) + " steps";
}

// 7
std::string arithmetic() {
    std::mt19937 rng(701);
    ProbeConfig cfg;
    std::size_t pairs = 0;
    for (std::size_t m = 0; m <= 8; ++m) {
        for (std::size_t n = 0; m + n <= 8; ++n) {
            if (m * n > 12) continue;
            ++pairs;
            std::string tag = " at m=" + std::to_string(m) + " n=" + std::to_string(n);
            Mat a = oracle::random_matrix(rng, 2);
            auto s = normalize(mk_cut(church(m, A), mk_cut(church(n, A), add(A), 1), 0));
            expect(is_cut_free(s.proof), "add not cut-free" + tag);
            expect(probe_equal(s.proof, church(m + n, A), A2, cfg), "add not probe-equal" + tag);
            expect(nl(s.proof, flat(a), A2).coords() == flat(oracle::power(a, m + n)), "add nl" + tag);
            auto p = normalize(mk_cut(church(n, A), mult(m, A), 0));
            expect(is_cut_free(p.proof), "mult not cut-free" + tag);
            expect(probe_equal(p.proof, church(m * n, A), A2, cfg), "mult not probe-equal" + tag);
            expect(nl(p.proof, flat(a), A2).coords() == flat(oracle::power(a, m * n)), "mult nl" + tag);
        }
    }
    return std::to_string(pairs) + " pairs";
}

// 8
std::string exponentials() {
    std::mt19937 rng(801);
    std::ostringstream steps;
    for (std::size_t n = 0; n <= 3; ++n) {
        auto r = normalize(mk_cut(church(n, int_on(A)), exp(2, A), 0));
        expect(is_cut_free(r.proof), "exp not cut-free at n=" + std::to_string(n));
        Mat a = oracle::random_matrix(rng, 2);
        expect(nl(r.proof, flat(a), A2).coords() == flat(oracle::power(a, std::size_t{1} << n)),
               "exp nl at n=" + std::to_string(n));
        steps << r.trace.steps.size() << ' ';
    }
    // E(0) = 1, E(n+1) = 2^E(n), computed here without the library's tower()
    std::size_t e = 1;
    for (std::size_t n = 0; n <= 2; ++n) {
        auto r = normalize(mk_cut(church2(n), hypexp(), 0));
        expect(is_cut_free(r.proof), "hypexp not cut-free at n=" + std::to_string(n));
        expect(alpha_eq(exchange_normalize(r.proof), church2(e)), "hypexp differs at n=" + std::to_string(n));
        steps << r.trace.steps.size() << ' ';
        e = std::size_t{1} << e;
    }
    std::string s = steps.str();
    return "steps " + s.substr(0, s.size() - 1);
}

// 9
std::string tangent_map() {
    std::mt19937 rng(901);
    for (int i = 0; i < 20; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2);
        Vect t = tangent(church_body(2, A), flat(a), flat(nu), A2).coords();
        expect(t == anticomm(nu, a), "differs from the anticommutator");
        expect(t == flat(oracle::square_linear_term(a, nu)), "differs from the expansion oracle");
    }
    return "20 pairs";
}

// 10
std::string axiom_cut_identity() {
    std::vector<Proof> lib;
    for (std::size_t n = 0; n <= 4; ++n) lib.push_back(church(n, A));
    for (std::size_t n = 0; n <= 3; ++n) lib.push_back(church_body(n, A));
    for (std::size_t n = 1; n <= 3; ++n) lib.push_back(iterate_chain(n, A));
    lib.push_back(comp(A));
    lib.push_back(add(A));
    for (std::size_t m = 0; m <= 3; ++m) lib.push_back(mult(m, A));
    lib.push_back(rec(mk_one_r(), mk_lolli_r(mk_axiom(Formula::one())), Formula::one()));
    lib.push_back(exp(2, A));
    for (std::size_t n = 0; n <= 3; ++n) lib.push_back(church2(n));
    lib.push_back(llsem::exp2(2));
    lib.push_back(hypexp());
    std::size_t cuts = 0;
    for (const auto& pi : lib) {
        const auto& ctx = pi.conclusion().context;
        for (std::size_t i = 0; i < ctx.size(); ++i, ++cuts) {
            expect(normalize(mk_cut(mk_axiom(ctx[i]), pi, i)).proof == pi, "cut(ax, pi) for " + print_proof(pi));
        }
        ++cuts;
        expect(normalize(mk_cut(pi, mk_axiom(pi.conclusion().conclusion), 0)).proof == pi,
               "cut(pi, ax) for " + print_proof(pi));
    }
    return std::to_string(lib.size()) + " proofs, " + std::to_string(cuts) + " cuts";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"two times two normalizes to four", two_times_two_is_four},
        {"trace skeleton of two times two", trace_skeleton},
        {"Church two on kets", church_two_table},
        {"lifting table and Bell numbers", lifting_table},
        {"coalgebra laws", coalgebra_laws},
        {"rewrite soundness on a random corpus", rewrite_soundness},
        {"arithmetic", arithmetic},
        {"exponential and hyper-exponential", exponentials},
        {"tangent map of squaring", tangent_map},
        {"axiom cut is an identity", axiom_cut_identity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string status = "PASS", detail;
        try {
            detail = criteria[i].second();
        } catch (const Failure& f) {
            status = "FAIL";
            detail = f.what;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = std::string("exception: ") + e.what();
        }
        if (status == "FAIL") ++failures;
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << status << " " << (i + 1) << " " << criteria[i].first << " (" << detail << ", "
                  << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
