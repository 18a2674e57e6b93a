#include <doctest.h>

#include "llsem/encodings.hpp"
#include "llsem/parser.hpp"
#include "llsem/semantics.hpp"
#include "oracles.hpp"

#include <random>

using namespace llsem;
using oracle::Mat;

namespace {

const Formula A = Formula::var("A");
const Formula B = Formula::var("B");
const Formula E = endo(A);
const SpaceAssignment A2{{"A", 2}};

Vect flat(const Mat& m) { return oracle::flatten(m); }
Vect anticomm(const Mat& a, const Mat& b) { return flat(oracle::sum(oracle::product(a, b), oracle::product(b, a))); }

Space space_of(const Formula& f, const SpaceAssignment& asg = A2) { return den_formula(f, asg); }

SemValue bang_in(const Formula& body, BangElem x) { return SemValue::bang(space_of(Formula::bang(body)), std::move(x)); }

}  // namespace

TEST_CASE("formula denotations") {
    Space s = space_of(int_on(A));
    CHECK(to_string(s) == "Hom(!Hom(V2, V2), Hom(V2, V2))");
    CHECK_FALSE(s->finite);
    Space u = den_formula(Formula::one(), {});
    CHECK(u->kind == SemSpace::Kind::Unit);
    Space t = den_formula(Formula::tensor(A, A), {{"A", 3}});
    CHECK(t->finite);
    CHECK(t->dim == 9);
    CHECK_THROWS_AS(den_formula(B, A2), SemanticError);
    CHECK_THROWS_AS(den_formula(int_poly(), A2), SemanticError);
}

TEST_CASE("den_matrix of small proofs") {
    Matrix id = den_matrix(mk_axiom(A), A2);
    CHECK(id.data == mat_identity(2));

    Matrix c = den_matrix(comp(A), {{"A", 1}});
    CHECK(c.rows == 1);
    CHECK(c.cols == 1);
    CHECK(c.data == Vect{1});

    // A, B |- B * A through an exchange: the symmetry map
    Proof sym = mk_exchange(mk_tensor_r(mk_axiom(B), mk_axiom(A)), 0);
    Matrix m = den_matrix(sym, {{"A", 2}, {"B", 2}});
    REQUIRE(m.rows == 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            // column e_i (x) e_j maps to e_j (x) e_i
            for (std::size_t r = 0; r < 4; ++r) {
                CHECK(m.data[r * 4 + (i * 2 + j)] == (r == j * 2 + i ? 1 : 0));
            }
        }
    }
}

TEST_CASE("comp composes in diagrammatic order") {
    std::mt19937 rng(3);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), b = oracle::random_matrix(rng, 2);
        SemValue out = den_apply(comp(A), {SemValue::finite(space_of(E), flat(a)), SemValue::finite(space_of(E), flat(b))}, A2);
        CHECK(out.coords() == flat(oracle::product(b, a)));
    }
    Mat id = oracle::identity(2);
    SemValue out = den_apply(comp(A), {SemValue::finite(space_of(E), flat(id)), SemValue::finite(space_of(E), flat(id))}, A2);
    CHECK(out.coords() == flat(id));
}

TEST_CASE("Church two on kets") {
    Proof two = church_body(2, A);
    Mat alpha{{1, 1}, {0, 1}};
    SemValue sq = den_apply(two, {bang_in(E, BangElem::vacuum(flat(alpha)))}, A2);
    CHECK(value_literal(sq) == "[[1/1,2/1],[0/1,1/1]]");

    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2);
        auto phi = [&](BangElem x) { return den_apply(two, {bang_in(E, std::move(x))}, A2).coords(); };
        CHECK(phi(BangElem::vacuum(flat(a))) == flat(oracle::power(a, 2)));
        CHECK(phi(BangElem::ket(flat(a), {flat(nu)})) == anticomm(nu, a));
        CHECK(phi(BangElem::ket(flat(a), {flat(nu), flat(mu)})) == anticomm(nu, mu));
        CHECK(phi(BangElem::ket(flat(a), {flat(nu), flat(mu), flat(a)})) == zero_vect(4));
    }
}

TEST_CASE("two-bang proof keeps at most one argument per side") {
    Proof p = mk_der(mk_der(mk_lolli_r(iterate_chain(2, A)), 0), 1);
    std::mt19937 rng(8);
    Mat a = oracle::random_matrix(rng, 2), b = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2);
    SemValue out = den_apply(p, {bang_in(E, BangElem::vacuum(flat(a))), bang_in(E, BangElem::ket(flat(b), {flat(mu)}))}, A2);
    CHECK(out.coords() == flat(oracle::product(mu, a)));
    SemValue zero = den_apply(
        p, {bang_in(E, BangElem::ket(flat(a), {flat(mu), flat(mu)})), bang_in(E, BangElem::ket(flat(b), {flat(mu)}))}, A2);
    CHECK(zero.coords() == zero_vect(4));
}

TEST_CASE("Church two is the composite of coproduct, derelictions and composition") {
    std::mt19937 rng(21);
    Proof two = church_body(2, A);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2);
        for (auto x : {BangElem::vacuum(flat(a)), BangElem::ket(flat(a), {flat(nu)}),
                       BangElem::ket(flat(a), {flat(nu), flat(mu)})}) {
            Vect expect = zero_vect(4);
            for (const auto& [ks, c] : coproduct(x).terms()) {
                Vect f = dereliction(BangElem::basis_ket(ks[0]));
                Vect g = dereliction(BangElem::basis_ket(ks[1]));
                axpy(expect, c, flat(oracle::product(oracle::unflatten(g, 2), oracle::unflatten(f, 2))));
            }
            CHECK(den_apply(two, {bang_in(E, x)}, A2).coords() == expect);
        }
    }
}

TEST_CASE("numerals iterate") {
    std::mt19937 rng(99);
    for (std::size_t n = 0; n <= 5; ++n) {
        for (int i = 0; i < 3; ++i) {
            Mat a = oracle::random_matrix(rng, 2);
            CHECK(nl(church_body(n, A), flat(a), A2).coords() == flat(oracle::power(a, n)));
            CHECK(nl(church(n, A), flat(a), A2).coords() == flat(oracle::power(a, n)));
        }
    }
    Mat nil{{0, 1}, {0, 0}};
    CHECK(nl(church_body(3, A), flat(nil), A2).coords() == zero_vect(4));
    CHECK(nl(church_body(0, A), flat(nil), A2).coords() == mat_identity(2));
}

TEST_CASE("tangent maps") {
    std::mt19937 rng(4);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2);
        CHECK(tangent(church_body(2, A), flat(a), flat(nu), A2).coords() ==
              flat(oracle::square_linear_term(a, nu)));
        CHECK(tangent(church_body(1, A), flat(a), flat(nu), A2).coords() == flat(nu));
        // linear in the tangent vector
        Mat mu = oracle::random_matrix(rng, 2);
        Vect lhs = tangent(church_body(3, A), flat(a), flat(oracle::sum(nu, mu)), A2).coords();
        Vect rhs = tangent(church_body(3, A), flat(a), flat(nu), A2).coords();
        axpy(rhs, 1, tangent(church_body(3, A), flat(a), flat(mu), A2).coords());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lifting table for the promoted Church two") {
    Proof Phi = mk_prom(church_body(2, A));
    std::mt19937 rng(31);
    for (int i = 0; i < 5; ++i) {
        Mat a = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2), mu = oracle::random_matrix(rng, 2),
            th = oracle::random_matrix(rng, 2);
        Vect a2 = flat(oracle::power(a, 2));
        auto lift_of = [&](std::vector<Vect> args) {
            return den_apply(Phi, {bang_in(E, BangElem::ket(flat(a), args))}, A2).bang();
        };
        CHECK(lift_of({}) == BangElem::vacuum(a2));
        CHECK(lift_of({flat(nu)}) == BangElem::ket(a2, {anticomm(nu, a)}));
        CHECK(lift_of({flat(nu), flat(mu)}) ==
              BangElem::ket(a2, {anticomm(nu, mu)}) + BangElem::ket(a2, {anticomm(nu, a), anticomm(mu, a)}));
        BangElem four = BangElem::ket(a2, {anticomm(nu, mu), anticomm(th, a)}) +
                        BangElem::ket(a2, {anticomm(th, mu), anticomm(nu, a)}) +
                        BangElem::ket(a2, {anticomm(nu, th), anticomm(mu, a)}) +
                        BangElem::ket(a2, {anticomm(nu, a), anticomm(mu, a), anticomm(th, a)});
        CHECK(lift_of({flat(nu), flat(mu), flat(th)}) == four);
    }
}

TEST_CASE("linearity, cut as composition, promotion lifts") {
    std::mt19937 rng(12);
    ProbeConfig cfg;
    Proof two = church_body(2, A);
    for (int i = 0; i < 10; ++i) {
        Mat a = oracle::random_matrix(rng, 2), b = oracle::random_matrix(rng, 2), nu = oracle::random_matrix(rng, 2);
        Rational s = oracle::random_rational(rng), t = oracle::random_rational(rng);
        BangElem x = BangElem::ket(flat(a), {flat(nu)}), y = BangElem::vacuum(flat(b));
        SemValue lhs = den_apply(two, {bang_in(E, x * s + y * t)}, A2);
        SemValue rhs = den_apply(two, {bang_in(E, x)}, A2).scaled(s) + den_apply(two, {bang_in(E, y)}, A2).scaled(t);
        CHECK(probe_equal(lhs, rhs, cfg));

        ContextElem sum{{{s, {bang_in(E, x)}}, {t, {bang_in(E, y)}}}};
        CHECK(probe_equal(den_apply_sum(two, sum, A2), lhs, cfg));

        // promotion then dereliction
        SemValue boxed = den_apply(mk_prom(two), {bang_in(E, x)}, A2);
        CHECK(dereliction(boxed.bang()) == den_apply(two, {bang_in(E, x)}, A2).coords());

        // cut: feed church two into church two
        Proof twice = mk_cut(mk_prom(two), two, 0);
        SemValue direct = den_apply(two, {den_apply(mk_prom(two), {bang_in(E, x)}, A2)}, A2);
        CHECK(probe_equal(den_apply(twice, {bang_in(E, x)}, A2), direct, cfg));
        CHECK(nl(twice, flat(a), A2).coords() == flat(oracle::power(a, 4)));
    }
}

TEST_CASE("closures compare on probes") {
    ProbeConfig cfg;
    SemValue two = den_apply(church(2, A), {}, A2);
    CHECK(two.kind() == SemValue::Kind::Maps);
    CHECK(probe_equal(two, den_apply(church(2, A), {}, A2), cfg));
    CHECK_FALSE(probe_equal(two, den_apply(church(3, A), {}, A2), cfg));
    CHECK(probe_equal(church(2, A), church(2, A), A2, cfg));
    CHECK_FALSE(probe_equal(church(1, A), church(2, A), A2, cfg));
    // at dimension one only the counit distinguishes nothing: still differ on kets
    CHECK_FALSE(probe_equal(church(1, A), church(2, A), {{"A", 1}}, cfg));
}

TEST_CASE("semantic errors") {
    CHECK_THROWS_AS(den_apply(church2(1), {}, A2), SemanticError);
    CHECK_THROWS_AS(den_apply(mk_axiom(A), {}, A2), SemanticError);
    CHECK_THROWS_AS(den_matrix(church(2, A), A2), SemanticError);
    CHECK_THROWS_AS(nl(mk_axiom(A), Vect{1, 0}, A2), SemanticError);
    // kets over the infinite space !(!A -o A) are not representable
    Proof p = mk_prom(mk_lolli_r(mk_der(mk_axiom(A), 0)));
    CHECK_THROWS_AS(den_apply(p, {}, A2), SemanticError);
}

TEST_CASE("value output") {
    SemValue v = SemValue::finite(space_of(E), Vect{1, 2, 0, 1});
    CHECK(value_literal(v) == "[[1/1,2/1],[0/1,1/1]]");
    CHECK(value_literal(SemValue::scalar(Rational(1, 2))) == "1/2");
    SemValue k = bang_in(E, BangElem::ket(Vect{1, 0, 0, 1}, {Vect{0, 1, 0, 0}}) * Rational(3));
    CHECK(value_json(k, {}) ==
          R"js({"kets":[{"args":[1],"base":[["1/1","0/1"],["0/1","1/1"]],"coeff":"3/1"}],"space":"!Hom(V2, V2)"})js");
}
