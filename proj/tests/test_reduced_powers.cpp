#include "steenrod/reduced_powers.hpp"
#include "steenrod/spaces.hpp"

#include <doctest.h>

using namespace steenrod;

TEST_CASE("gamma on two product factors is the swap for both parities") {
    SimplicialSet X = load_space("rp2");
    Complex two = Complex::product({&X, &X});
    SimplexRef a = X.ref(X.gen_id("1,2")), b = X.ref(X.gen_id("2,4"));
    Chain<Z> c = make_chain<Z>(two, pair_key(a, b));
    for (int i = 1; i <= 4; ++i) CHECK(gamma<Z>(two, i, c) == rotate_t<Z>(two, c));
}

TEST_CASE("gamma on three product factors sums the nontrivial rotations for even i") {
    SimplicialSet X = load_space("rp2");
    Complex three = Complex::product({&X, &X, &X});
    Key k;
    k.push(X.ref(X.gen_id("1,2")));
    k.push(X.ref(X.gen_id("2,4")));
    k.push(X.ref(X.gen_id("1,4")));
    Chain<Z> c = make_chain<Z>(three, k);
    Chain<Z> once = rotate_t<Z>(three, c);
    Chain<Z> twice = rotate_t<Z>(three, once);
    CHECK(gamma<Z>(three, 1, c) == once);
    CHECK(gamma<Z>(three, 3, c) == once);
    CHECK(gamma<Z>(three, 2, c) == once + twice);
}

TEST_CASE("alpha and beta on tensor factors") {
    SimplicialSet X = load_space("rp2");
    Complex one = Complex::product({&X});
    Complex tt = Complex::tensor({one, one});
    SimplexRef e = X.ref(X.gen_id("1,2")), v = X.ref(X.gen_id("1"));
    Chain<Z> c = make_chain<Z>(tt, pair_key(e, v));
    Chain<Z> Tc = rotate_T<Z>(tt, c);
    CHECK(alpha<Z>(tt, 1, c) == Tc + c.scaled(-1));
    CHECK(alpha<Z>(tt, 2, c) == c + Tc);
    CHECK(beta_op<Z>(tt, 1, c) == Tc);
    CHECK(beta_op<Z>(tt, 2, c) == Tc);

    Complex ttt = Complex::tensor({one, one, one});
    Key k;
    k.push(e);
    k.push(v);
    k.push(e);
    Chain<Z> c3 = make_chain<Z>(ttt, k);
    Chain<Z> T1 = rotate_T<Z>(ttt, c3);
    Chain<Z> T2 = rotate_T<Z>(ttt, T1);
    CHECK(beta_op<Z>(ttt, 1, c3) == T1);
    CHECK(beta_op<Z>(ttt, 2, c3) == T1 + T2);
    CHECK(alpha<Z>(ttt, 2, c3) == c3 + T1 + T2);
}

TEST_CASE("the two-fold family reproduces the contraction diagonal") {
    SimplicialSet X = load_space("rp2");
    for (int i = 0; i <= 2; ++i)
        for (int d = 0; d <= X.top_dim; ++d)
            for (int32_t g : X.gens_by_dim[size_t(d)]) {
                SimplexRef x = X.ref(g);
                CHECK(reduced_d<Z>(X, 2, i, x) == big_d<Z>(X, i, x, Mode::slow));
            }
}

TEST_CASE("higher morphisms vanish on vertices") {
    SimplicialSet X = load_space("interval");
    SimplexRef v = X.ref(X.gen_id("0"));
    for (int p : {2, 3})
        for (int i = 1; i <= 3; ++i) CHECK(reduced_d<Z>(X, p, i, v).empty());
}

TEST_CASE("the zeroth morphism is the projection of the diagonal") {
    SimplicialSet X = load_space("interval");
    Contraction<Z> con = pfold_contraction<Z>(X, 3);
    for (int32_t g = 0; g < X.gen_count(); ++g) {
        SimplexRef x = X.ref(g);
        Key k;
        for (int s = 0; s < 3; ++s) k.push(x);
        CHECK(reduced_d<Z>(X, 3, 0, x) == con.f(k));
    }
}

TEST_CASE("three-fold boundary identity in low dimensions") {
    SimplicialSet X = load_space("interval");
    Complex one = Complex::product({&X});
    Complex small = Complex::tensor({one, one, one});
    for (int i = 1; i <= 2; ++i)
        for (int32_t g = 0; g < X.gen_count(); ++g) {
            SimplexRef x = X.ref(g);
            Chain<Z> dD;
            for (const auto& [k, coeff] : boundary(X, x).terms)
                dD += reduced_d<Z>(X, 3, i, k[0]).scaled(coeff);
            Chain<Z> lhs =
                differential(small, reduced_d<Z>(X, 3, i, x)) + dD.scaled(ring_sign<Z>(i + 1));
            CHECK(lhs == alpha<Z>(small, i, reduced_d<Z>(X, 3, i - 1, x)));
        }
}

TEST_CASE("rotation commutes with the inclusion") {
    for (const char* name : {"interval", "sphere-2-minimal"}) {
        SimplicialSet X = load_space(name);
        Contraction<Z> con = pfold_contraction<Z>(X, 3);
        for (int d = 0; d <= 2; ++d)
            for (const Key& k : complex_basis(con.small, d)) {
                Chain<Z> u = make_chain<Z>(con.small, k);
                Chain<Z> lhs = rotate_t<Z>(con.big, con.g(k));
                CHECK(lhs == apply_linear(rotate_T<Z>(con.small, u), con.g));
                // the g-side mirror of gamma for both parities
                for (int i = 1; i <= 2; ++i)
                    CHECK(gamma<Z>(con.big, i, con.g(k)) ==
                          apply_linear(beta_op<Z>(con.small, i, u), con.g));
            }
    }
}
