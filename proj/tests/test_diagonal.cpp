#include "steenrod/diagonal.hpp"
#include "steenrod/spaces.hpp"
#include "steenrod/suites.hpp"

#include <doctest.h>

using namespace steenrod;

namespace {

uint64_t pow_u64(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

TEST_CASE("diagonal and rotations") {
    SimplicialSet X = load_space("rp2");
    Complex two = Complex::product({&X, &X});
    Complex three = Complex::product({&X, &X, &X});
    SimplexRef v = X.ref(X.gen_id("1"));
    SimplexRef e = X.ref(X.gen_id("1,2"));

    Chain<Z> d2 = diagonal<Z>(two, v, 2);
    CHECK(d2 == make_chain<Z>(two, pair_key(v, v)));
    Chain<Z> d3 = diagonal<Z>(three, e, 3);
    REQUIRE(d3.size() == 1);
    CHECK(d3.terms[0].first.size() == 3);

    // t(a, b) = (b, a), no sign
    SimplexRef a = e, b = X.ref(X.gen_id("2,4"));
    CHECK(rotate_t<Z>(two, make_chain<Z>(two, pair_key(a, b))) ==
          make_chain<Z>(two, pair_key(b, a)));
    // t^3 = 1 on three factors
    Key k3;
    k3.push(a);
    k3.push(b);
    k3.push(e);
    Chain<Z> c3 = make_chain<Z>(three, k3);
    Chain<Z> r3 = rotate_t<Z>(three, rotate_t<Z>(three, rotate_t<Z>(three, c3)));
    CHECK(r3 == c3);
}

TEST_CASE("tensor rotation carries the Koszul sign") {
    SimplicialSet X = load_space("rp2");
    Complex one = Complex::product({&X});
    Complex tt = Complex::tensor({one, one});
    SimplexRef v = X.ref(X.gen_id("1")), w = X.ref(X.gen_id("2"));
    SimplexRef e = X.ref(X.gen_id("1,2"));

    CHECK(rotate_T<Z>(tt, make_chain<Z>(tt, pair_key(v, w))) ==
          make_chain<Z>(tt, pair_key(w, v)));
    CHECK(rotate_T<Z>(tt, make_chain<Z>(tt, pair_key(e, e))) ==
          make_chain<Z>(tt, pair_key(e, e)).scaled(-1));
    // T^2 = (-1)^{2|x||y|} = +1 for two factors
    Chain<Z> c = make_chain<Z>(tt, pair_key(e, v));
    CHECK(rotate_T<Z>(tt, rotate_T<Z>(tt, c)) == c);
}

TEST_CASE("slow diagonal specializations") {
    SimplicialSet X = load_space("simplex-2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);

    // h_0 is the Alexander-Whitney map
    for (int d = 0; d <= 2; ++d)
        for (const Key& k : complex_basis(big, d))
            CHECK(h_slow<Z>(X, X, 0, k[0], k[1]) == con.f(k));

    // h_1 on a pair of 1-simplices lands on the swapped tensor
    SimplexRef a = X.ref(X.gen_id("0,1")), b = X.ref(X.gen_id("1,2"));
    Complex out = diag_target(X, X, 1);
    CHECK(h_slow<Z>(X, X, 1, a, b) == make_chain<Z>(out, pair_key(b, a)));

    // SHI vanishes on vertices, so h_n does for n >= 1
    SimplexRef v = X.ref(X.gen_id("0"));
    CHECK(h_slow<Z>(X, X, 1, v, v).empty());
    CHECK(h_slow<Z>(X, X, 2, v, v).empty());
}

TEST_CASE("fast diagonal structure") {
    // one summand at n = 1, m = 1: multi-index (0, 1), sign +, empty words
    const std::vector<DiagTerm>& w11 = diagonal_words(1, 1);
    REQUIRE(w11.size() == 1);
    CHECK(w11[0].sign == 1);
    CHECK(w11[0].word_first.faces == 0);
    CHECK(w11[0].word_second.faces == 0);

    // pure face words with total deletions m - n
    for (int n = 0; n <= 3; ++n)
        for (int m = n; m <= 6; ++m)
            for (const DiagTerm& t : diagonal_words(n, m)) {
                CHECK(t.word_first.degen == 0);
                CHECK(t.word_second.degen == 0);
                CHECK(mask_count(t.word_first.faces) + mask_count(t.word_second.faces) ==
                      m - n);
            }

    // empty multi-index range when n > m
    CHECK(diagonal_words(3, 2).empty());
    CHECK(diagonal_words(0, 2).size() == 3);
}

TEST_CASE("fast equals slow on a mixed product") {
    SimplicialSet X = load_space("interval");
    SimplicialSet Y = load_space("rp2");
    Complex big = Complex::product({&X, &Y});
    for (int n = 0; n <= 2; ++n)
        for (int d = 0; d <= 3; ++d)
            for (const Key& k : complex_basis(big, d))
                CHECK(h_fast<Z>(X, Y, n, k[0], k[1]) == h_slow<Z>(X, Y, n, k[0], k[1]));
}

TEST_CASE("two-fold diagonal morphisms") {
    SimplicialSet X = load_space("rp2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);
    for (int32_t g = 0; g < X.gen_count(); ++g) {
        SimplexRef x = X.ref(g);
        CHECK(big_d<Z>(X, 0, x) == con.f(pair_key(x, x)));
        CHECK(big_d<Z>(X, X.dim_of(g) + 1, x).empty());
    }

    // recurrence d D_{i+1} + (-1)^i D_{i+1} d = T D_i + (-1)^{i+1} D_i
    Complex tt = diag_target(X, X, 0);
    for (int i = 0; i <= 1; ++i)
        for (int32_t g = 0; g < X.gen_count(); ++g) {
            SimplexRef x = X.ref(g);
            Chain<Z> dD;
            for (const auto& [k, c] : boundary(X, x).terms)
                dD += big_d<Z>(X, i + 1, k[0]).scaled(c);
            Chain<Z> lhs = differential(tt, big_d<Z>(X, i + 1, x)) + dD.scaled(ring_sign<Z>(i));
            Chain<Z> Di = big_d<Z>(X, i, x);
            Chain<Z> rhs = rotate_T<Z>(tt, Di) + Di.scaled(ring_sign<Z>(i + 1));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("cup-i products") {
    SimplicialSet X = load_space("rp2");
    std::vector<Cochain> ones;
    for (int32_t g : X.gens_by_dim[1]) ones.push_back(Cochain::indicator(X, g));

    // cup-0 equals the direct two-face formula
    for (const Cochain& c : ones)
        for (const Cochain& cp : ones)
            for (int32_t xg : X.gens_by_dim[2]) {
                Z2 direct;
                SimplexRef x = X.ref(xg);
                // front face deletes the back vertices, back face the front ones
                direct = pairing(c, apply_word(X, OperatorWord{bit(2), 0, 2}, x)) *
                         pairing(cp, apply_word(X, OperatorWord{bit(0), 0, 2}, x));
                CHECK(cup_i(X, 0, c, cp, x) == direct);
                CHECK(cup_i(X, 0, c, cp, x, Mode::slow) == cup_i(X, 0, c, cp, x));
            }

    CHECK_THROWS_AS(cup_i(X, 0, ones[0], ones[0], X.ref(X.gens_by_dim[1][0])), word_error);

    // cup-1 on a 1-cochain pairs against D_1; cochain wrapper agrees pointwise
    Cochain w = cup_i_cochain(X, 1, ones[0], ones[0]);
    CHECK(w.degree == 1);
    for (int32_t g : X.gens_by_dim[1])
        CHECK(w(g) == cup_i(X, 1, ones[0], ones[0], X.ref(g)));
}

TEST_CASE("steenrod squares match cup-i squares") {
    for (const char* name : {"rp2", "klein-bottle"}) {
        SimplicialSet X = load_space(name);
        for (int j = 0; j <= 2; ++j)
            for (int32_t cg : X.gens_by_dim[size_t(j)]) {
                Cochain c = Cochain::indicator(X, cg);
                for (int i = 0; i <= j; ++i)
                    CHECK(sq(X, i, c) == cup_i_cochain(X, j - i, c, c));
            }
    }
}

TEST_CASE("squares at the degree edges") {
    SimplicialSet X = load_space("rp2");
    // Sq^0 is the identity on 1-cochains: both face words are empty
    const std::vector<SqTerm>& w01 = sq_words(0, 1);
    REQUIRE(w01.size() == 1);
    CHECK(w01[0].word_first.faces == 0);
    CHECK(w01[0].word_second.faces == 0);
    for (int32_t g : X.gens_by_dim[1]) {
        Cochain c = Cochain::indicator(X, g);
        CHECK(sq(X, 0, c) == c);
    }
    // above the degree the square vanishes identically
    for (int32_t g : X.gens_by_dim[1]) {
        Cochain c = Cochain::indicator(X, g);
        CHECK(sq(X, 2, c).zero_cochain());
        CHECK(sq(X, 3, c).zero_cochain());
    }
}

TEST_CASE("fast squares agree with the slow pipeline") {
    SimplicialSet X = load_space("rp2");
    for (int j = 0; j <= 2; ++j)
        for (int i = 0; i <= j; ++i) {
            if (i + j > X.top_dim) continue;
            for (int32_t cg : X.gens_by_dim[size_t(j)]) {
                Cochain c = Cochain::indicator(X, cg);
                Cochain fast = sq(X, i, c);
                for (int32_t xg : X.gens_by_dim[size_t(i + j)])
                    CHECK(fast(xg) == sq_slow_value(X, i, c, X.ref(xg)));
            }
        }
}

TEST_CASE("summand and face-operator counts") {
    for (int i = 1; i <= 8; ++i) {
        TermCount tc = term_count(i, i);
        CHECK(tc.summands == 1);
        CHECK(tc.face_ops == uint64_t(2 * i));
    }
    for (int i = 1; i <= 8; ++i)
        for (int k = 0; k <= 3; ++k) {
            TermCount tc = term_count(i, i + k);
            CHECK(tc.summands <= pow_u64(uint64_t(i) + 1, k));
            CHECK(tc.face_ops <= 2 * uint64_t(i) * pow_u64(uint64_t(i) + 1, k));
            CHECK(tc.face_ops == 2 * uint64_t(i) * tc.summands);
        }
}

TEST_CASE("instrumented evaluation performs exactly the counted face ops") {
    for (auto [i, k] :
         {std::pair{1, 1}, std::pair{2, 0}, std::pair{3, 2}, std::pair{8, 3}}) {
        int m = 2 * i + k;
        SimplicialSet X = load_space("sphere-" + std::to_string(m) + "-minimal");
        Cochain c = Cochain::zero(X, i + k);
        sq_words(i, i + k);
        reset_face_ops();
        sq(X, i, c);
        CHECK(face_ops() == term_count(i, i + k).face_ops);
    }
}

TEST_CASE("an injected sign fault is caught by the equivalence suite") {
    CHECK(diagonal_words(1, 1)[0].sign == 1);
    inject_sign_fault(true);
    bool flipped = diagonal_words(1, 1)[0].sign == -1;
    SuiteParams params;
    params.spaces = {"interval"};
    params.max_n = 1;
    params.max_dim = 2;
    SuiteReport broken = run_suite("theorem2", params);
    inject_sign_fault(false);
    CHECK(flipped);
    CHECK(broken.failed() >= 1);
    bool has_counterexample = false;
    for (const CaseResult& c : broken.cases)
        if (!c.pass && c.detail.find("counterexample") != std::string::npos)
            has_counterexample = true;
    CHECK(has_counterexample);
    CHECK(run_suite("theorem2", params).ok());
    CHECK(diagonal_words(1, 1)[0].sign == 1);
}
