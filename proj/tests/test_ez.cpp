#include "steenrod/ez.hpp"
#include "steenrod/spaces.hpp"

#include <doctest.h>

using namespace steenrod;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

} // namespace

TEST_CASE("shuffle enumeration") {
    std::vector<Shuffle> s11 = shuffles(1, 1);
    REQUIRE(s11.size() == 2);
    CHECK(s11[0].alpha == std::vector<int>{0});
    CHECK(s11[0].beta == std::vector<int>{1});
    CHECK(s11[0].sig == 0);
    CHECK(s11[1].alpha == std::vector<int>{1});
    CHECK(s11[1].beta == std::vector<int>{0});
    CHECK(s11[1].sig == 1);

    CHECK(shuffles(2, 2).size() == 6);
    std::vector<Shuffle> s03 = shuffles(0, 3);
    REQUIRE(s03.size() == 1);
    CHECK(s03[0].alpha.empty());
    CHECK(s03[0].sig == 0);

    for (const Shuffle& s : shuffles(2, 3)) {
        int sig = 0;
        for (size_t i = 0; i < s.alpha.size(); ++i) sig += s.alpha[i] - int(i);
        CHECK(s.sig == sig);
        CHECK(s.alpha.size() == 2);
        CHECK(s.beta.size() == 3);
    }
}

TEST_CASE("structure-map raw summand counts") {
    for (int m = 0; m <= 6; ++m) CHECK(aw_words(m).size() == size_t(m + 1));
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            CHECK(eml_words(p, q).size() == size_t(binom(p + q, p)));
    CHECK(shi_words(0).empty());
}

TEST_CASE("alexander-whitney on small simplices") {
    SimplicialSet X = load_space("simplex-2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);

    SimplexRef v = X.ref(X.gen_id("0"));
    Chain<Z> f0 = con.f(pair_key(v, v));
    REQUIRE(f0.size() == 1);
    CHECK(f0.terms[0].first == pair_key(v, v));
    CHECK(f0.terms[0].second == 1);

    // dim 1: f(e, e) = d1 e @ e + e @ d0 e
    SimplexRef e = X.ref(X.gen_id("0,1"));
    Chain<Z> f1 = con.f(pair_key(e, e));
    Chain<Z> want = make_chain<Z>(con.small, pair_key(X.ref(X.gen_id("0")), e)) +
                    make_chain<Z>(con.small, pair_key(e, X.ref(X.gen_id("1"))));
    CHECK(f1 == want);

    // both degeneracy letters present: only the middle summand survives
    SimplexRef b = X.ref(X.gen_id("0,1")), a = X.ref(X.gen_id("1,2"));
    Chain<Z> f2 = con.f(pair_key(apply_degeneracy(1, b), apply_degeneracy(0, a)));
    CHECK(f2 == make_chain<Z>(con.small, pair_key(b, a)));
}

TEST_CASE("eilenberg-mac lane inclusion on small tensors") {
    SimplicialSet X = load_space("simplex-2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);

    SimplexRef v = X.ref(X.gen_id("0")), w = X.ref(X.gen_id("1"));
    CHECK(con.g(pair_key(v, w)) == make_chain<Z>(big, pair_key(v, w)));

    // g(a @ b) = s1 a x s0 b - s0 a x s1 b
    SimplexRef a = X.ref(X.gen_id("0,1")), b = X.ref(X.gen_id("1,2"));
    Chain<Z> g1 = con.g(pair_key(a, b));
    Chain<Z> want =
        make_chain<Z>(big, pair_key(apply_degeneracy(1, a), apply_degeneracy(0, b))) +
        make_chain<Z>(big, pair_key(apply_degeneracy(0, a), apply_degeneracy(1, b))).scaled(-1);
    CHECK(g1 == want);

    // f g = 1 on the same tensor
    CHECK(apply_linear(g1, con.f) == make_chain<Z>(con.small, pair_key(a, b)));
}

TEST_CASE("homotopy on small product simplices") {
    SimplicialSet X = load_space("simplex-2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);

    SimplexRef v = X.ref(X.gen_id("0"));
    CHECK(con.phi(pair_key(v, v)).empty());

    SimplexRef a = X.ref(X.gen_id("0,1")), b = X.ref(X.gen_id("1,2"));
    Chain<Z> p1 = con.phi(pair_key(a, b));
    CHECK(p1 ==
          make_chain<Z>(big, pair_key(apply_degeneracy(0, a), apply_degeneracy(1, b))));
}

TEST_CASE("contraction axioms on a torus product") {
    SimplicialSet X = load_space("torus");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);
    CHECK(check_contraction<Z>(con, 2).ok());
}

TEST_CASE("corrupted homotopy is caught by the axiom checker") {
    SimplicialSet X = load_space("interval");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> con = ez_contraction<Z>(big, 1);
    Contraction<Z> bad = con;
    BasisMap<Z> orig = con.phi;
    bad.phi = [orig](const Key& k) { return orig(k).scaled(-1); };
    AxiomReport rep = check_contraction<Z>(bad, 2);
    REQUIRE(!rep.ok());
    bool names_homotopy_axiom = false;
    for (const std::string& f : rep.failures)
        if (f.find("phi d + d phi") != std::string::npos) names_homotopy_axiom = true;
    CHECK(names_homotopy_axiom);
}

TEST_CASE("aw and eml are chain maps") {
    SimplicialSet X = load_space("interval");
    SimplicialSet Y = load_space("rp2");
    Complex big = Complex::product({&X, &Y});
    Contraction<Z> con = ez_contraction<Z>(big, 1);
    for (int d = 0; d <= 3; ++d) {
        for (const Key& k : complex_basis(big, d)) {
            Chain<Z> unit = make_chain<Z>(big, k);
            CHECK(apply_linear(differential(big, unit), con.f) ==
                  differential(con.small, con.f(k)));
        }
        for (const Key& k : complex_basis(con.small, d)) {
            Chain<Z> unit = make_chain<Z>(con.small, k);
            CHECK(apply_linear(differential(con.small, unit), con.g) ==
                  differential(big, con.g(k)));
        }
    }
}

TEST_CASE("identity and tensor contractions") {
    SimplicialSet X = load_space("interval");
    SimplicialSet Y = load_space("sphere-2-minimal");
    Complex cx = Complex::product({&X});
    Complex cy = Complex::product({&Y});
    Contraction<Z> idx = identity_contraction<Z>(cx);
    Contraction<Z> t = tensor_contraction<Z>(idx, identity_contraction<Z>(cy));
    for (int d = 0; d <= 2; ++d)
        for (const Key& k : complex_basis(t.big, d)) {
            CHECK(t.f(k) == make_chain<Z>(t.small, k));
            CHECK(t.g(k) == make_chain<Z>(t.big, k));
            CHECK(t.phi(k).empty());
        }
    CHECK(check_contraction<Z>(t, 2).ok());
}

TEST_CASE("composition with the identity preserves the maps") {
    SimplicialSet X = load_space("interval");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> ez = ez_contraction<Z>(big, 1);
    Contraction<Z> pre = compose_contraction<Z>(identity_contraction<Z>(big), ez);
    for (int d = 0; d <= 2; ++d)
        for (const Key& k : complex_basis(big, d)) {
            CHECK(pre.f(k) == ez.f(k));
            CHECK(pre.phi(k) == ez.phi(k));
        }
    for (int d = 0; d <= 2; ++d)
        for (const Key& k : complex_basis(ez.small, d)) CHECK(pre.g(k) == ez.g(k));
}

TEST_CASE("three-fold contraction") {
    SimplicialSet X = load_space("interval");
    Contraction<Z> con = pfold_contraction<Z>(X, 3);
    CHECK(con.big.slot_count() == 3);
    CHECK(con.small.factor_count() == 3);

    SimplexRef v0 = X.ref(X.gen_id("0")), v1 = X.ref(X.gen_id("1"));
    Key k;
    k.push(v0);
    k.push(v1);
    k.push(v0);
    CHECK(con.f(k) == make_chain<Z>(con.small, k));
    CHECK(check_contraction<Z>(con, 2).ok());
}

TEST_CASE("two-fold specialization matches the ez contraction") {
    SimplicialSet X = load_space("rp2");
    Complex big = Complex::product({&X, &X});
    Contraction<Z> ez = ez_contraction<Z>(big, 1);
    Contraction<Z> p2 = pfold_contraction<Z>(X, 2);
    for (int d = 0; d <= 2; ++d)
        for (const Key& k : complex_basis(big, d)) {
            CHECK(p2.f(k) == ez.f(k));
            CHECK(p2.phi(k) == ez.phi(k));
        }
}

TEST_CASE("structure words never mix faces into eml") {
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (const TermWords& t : eml_words(p, q)) {
                CHECK(t.a.faces == 0);
                CHECK(t.b.faces == 0);
            }
    for (const TermWords& t : aw_words(4)) {
        CHECK(t.a.degen == 0);
        CHECK(t.b.degen == 0);
        CHECK(t.sign == 1);
    }
    // every shi summand raises dimension by exactly one
    for (int m = 1; m <= 5; ++m)
        for (const TermWords& t : shi_words(m)) {
            CHECK(t.a.src_dim == m);
            CHECK(t.a.dst_dim() == m + 1);
            CHECK(t.b.dst_dim() == m + 1);
        }
}
