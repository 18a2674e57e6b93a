#include <doctest.h>

#include "llsem/encodings.hpp"
#include "llsem/parser.hpp"
#include "llsem/rewrite.hpp"
#include "llsem/semantics.hpp"
#include "oracles.hpp"

#include <random>

using namespace llsem;

namespace {

const Formula A = Formula::var("A");
const SpaceAssignment A2{{"A", 2}};

Proof add_cut(std::size_t m, std::size_t n) { return mk_cut(church(m, A), mk_cut(church(n, A), add(A), 1), 0); }
Proof mult_cut(std::size_t m, std::size_t n) { return mk_cut(church(n, A), mult(m, A), 0); }

}  // namespace

TEST_CASE("encodings validate with the expected conclusions") {
    const std::string ia = "!(A -o A) -o (A -o A)";
    const std::string i2 = "all x. !(x -o x) -o (x -o x)";
    struct Row {
        Proof p;
        std::string concl;
    };
    std::vector<Row> rows = {
        {church(0, A), "⊢ " + ia},
        {church(2, A), "⊢ " + ia},
        {church_body(3, A), "!(A -o A) ⊢ A -o A"},
        {iterate_chain(3, A), "A, A -o A, A -o A, A -o A ⊢ A"},
        {comp(A), "A -o A, A -o A ⊢ A -o A"},
        {add(A), ia + ", " + ia + " ⊢ " + ia},
        {mult(3, A), ia + " ⊢ " + ia},
        {rec(mk_one_r(), mk_lolli_r(mk_axiom(Formula::one())), Formula::one()), "!(1 -o 1) -o (1 -o 1) ⊢ 1"},
        {church2(3), "⊢ " + i2},
        {llsem::exp2(2), i2 + " ⊢ " + i2},
        {hypexp(), i2 + " ⊢ " + i2},
    };
    for (const auto& row : rows) {
        CHECK(is_valid(row.p));
        CHECK(is_cut_free(row.p));
        CHECK(to_string(row.p.conclusion()) == row.concl);
        CHECK(parse_proof(print_proof(row.p)) == row.p);
    }
    Formula iia = int_on(int_on(A));
    CHECK(exp(2, A).conclusion() == Sequent{{iia}, int_on(A)});
    CHECK_THROWS_AS(iterate_chain(0, A), std::invalid_argument);
}

TEST_CASE("church zero prints canonically") {
    CHECK(print_proof(church(0, A)) ==
          "(lolli-r\n"
          "  (weak 0 !(A -o A)\n"
          "    (lolli-r\n"
          "      (ax A))))\n");
}

TEST_CASE("tower") {
    CHECK(tower(0) == 1);
    CHECK(tower(1) == 2);
    CHECK(tower(2) == 4);
    CHECK(tower(3) == 16);
    CHECK(tower(4) == 65536);
    CHECK(tower(6) == SIZE_MAX);
}

TEST_CASE("arithmetic by denotation, without normalizing") {
    std::mt19937 rng(12);
    for (std::size_t m = 0; m <= 3; ++m) {
        for (std::size_t n = 0; n <= 3; ++n) {
            oracle::Mat a = oracle::random_matrix(rng, 2);
            Vect pa = oracle::flatten(a);
            CHECK(nl(add_cut(m, n), pa, A2).coords() == oracle::flatten(oracle::power(a, m + n)));
            CHECK(nl(mult_cut(m, n), pa, A2).coords() == oracle::flatten(oracle::power(a, m * n)));
        }
    }
}

TEST_CASE("arithmetic by normalization") {
    std::mt19937 rng(13);
    for (std::size_t m = 0; m <= 4; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
            auto s = normalize(add_cut(m, n));
            REQUIRE(is_cut_free(s.proof));
            CHECK(probe_equal(s.proof, church(m + n, A), A2, ProbeConfig{}));
            auto p = normalize(mult_cut(m, n));
            REQUIRE(is_cut_free(p.proof));
            CHECK(probe_equal(p.proof, church(m * n, A), A2, ProbeConfig{}));
            oracle::Mat a = oracle::random_matrix(rng, 2);
            CHECK(nl(p.proof, oracle::flatten(a), A2).coords() == oracle::flatten(oracle::power(a, m * n)));
            // structural agreement is expected once both inputs are nonzero
            if (m > 0 && n > 0) {
                CHECK(exchange_normalize(s.proof) == church(m + n, A));
                CHECK(exchange_normalize(p.proof) == church(m * n, A));
            }
        }
    }
}

TEST_CASE("exponentials by normalization") {
    for (std::size_t n = 0; n <= 3; ++n) {
        auto r = normalize(mk_cut(church(n, int_on(A)), exp(2, A), 0));
        REQUIRE(is_cut_free(r.proof));
        CHECK(exchange_normalize(r.proof) == church(std::size_t{1} << n, A));
    }
    for (std::size_t n = 0; n <= 2; ++n) {
        auto r = normalize(mk_cut(church2(n), hypexp(), 0));
        REQUIRE(is_cut_free(r.proof));
        CHECK(alpha_eq(exchange_normalize(r.proof), church2(tower(n))));
    }
    auto e = normalize(mk_cut(church2(3), llsem::exp2(2), 0));
    CHECK(alpha_eq(exchange_normalize(e.proof), church2(8)));
}

TEST_CASE("second-order proofs have no semantics") {
    CHECK_THROWS_AS(den_matrix(church2(1), {}), SemanticError);
}
