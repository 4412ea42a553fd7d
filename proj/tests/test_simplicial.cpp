#include "steenrod/simplicial.hpp"
#include "steenrod/spaces.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace steenrod;

namespace {

OpSymbol fa(int k) { return OpSymbol{true, k}; }
OpSymbol de(int k) { return OpSymbol{false, k}; }

// expand a canonical word back into application-order symbols: faces largest
// first (indices name deleted source vertices), then degeneracies ascending
std::vector<OpSymbol> expand(const OperatorWord& w) {
    std::vector<OpSymbol> out;
    for (int l = max_letter - 1; l >= 0; --l)
        if (w.faces & bit(l)) out.push_back(fa(l));
    for (int l = 0; l < max_letter; ++l)
        if (w.degen & bit(l)) out.push_back(de(l));
    return out;
}

SimplexRef apply_symbols(const SimplicialSet& X, const std::vector<OpSymbol>& raw,
                         SimplexRef x) {
    for (const OpSymbol& s : raw) x = s.is_face ? apply_face(X, s.index, x) : apply_degeneracy(s.index, x);
    return x;
}

std::vector<OpSymbol> random_word(std::mt19937& rng, int src_dim, int len) {
    std::vector<OpSymbol> raw;
    int d = src_dim;
    for (int t = 0; t < len; ++t) {
        bool face = d > 0 && (rng() & 1);
        int k = int(rng() % uint32_t(d + 1));
        raw.push_back(face ? fa(k) : de(k));
        d += face ? -1 : 1;
    }
    return raw;
}

} // namespace

TEST_CASE("mask helpers") {
    CHECK(interval_mask(2, 4) == (bit(2) | bit(3) | bit(4)));
    CHECK(interval_mask(3, 2) == 0);
    CHECK(interval_mask(0, 0) == bit(0));
    CHECK(mask_count(interval_mask(0, 5)) == 6);
    CHECK(degen_insert(0, 2) == bit(2));
    // s_0 s_1 = s_2 s_0: inserting letter 0 into {1} shifts 1 up to 2
    CHECK(degen_insert(bit(1), 0) == (bit(0) | bit(2)));
}

TEST_CASE("normalize_word canonical forms") {
    // s_2 then d_2 at dim 2 collapses to the identity
    OperatorWord w = normalize_word({de(2), fa(2)}, 2);
    CHECK(w.faces == 0);
    CHECK(w.degen == 0);
    CHECK(w.src_dim == 2);
    CHECK(w.dst_dim() == 2);

    // s_1 then s_0, i.e. the composition s_0 s_1, rewrites to s_2 s_0
    w = normalize_word({de(1), de(0)}, 1);
    CHECK(w.faces == 0);
    CHECK(w.degen == (bit(0) | bit(2)));

    // s_2 then d_0, i.e. d_0 s_2, rewrites to s_1 d_0
    w = normalize_word({de(2), fa(0)}, 2);
    CHECK(w.faces == bit(0));
    CHECK(w.degen == bit(1));
    CHECK(w.dst_dim() == 2);
}

TEST_CASE("normalize_word rejects out-of-range indices") {
    CHECK_THROWS_AS(normalize_word({fa(3)}, 2), word_error);
    CHECK_THROWS_AS(normalize_word({de(2)}, 1), word_error);
    CHECK_THROWS_AS(normalize_word({fa(0), fa(0)}, 1), word_error);
}

TEST_CASE("normalize_word is idempotent on random words") {
    std::mt19937 rng(7);
    SimplicialSet X = load_space("simplex-4");
    for (int trial = 0; trial < 300; ++trial) {
        int src = int(rng() % 5);
        std::vector<OpSymbol> raw = random_word(rng, src, int(rng() % 7));
        OperatorWord w = normalize_word(raw, src);
        CHECK(normalize_word(expand(w), src) == w);
    }
}

TEST_CASE("normalized words act like their raw symbol sequence") {
    std::mt19937 rng(11);
    for (const char* name : {"rp2", "sphere-3-minimal", "simplex-3"}) {
        SimplicialSet X = load_space(name);
        for (int trial = 0; trial < 200; ++trial) {
            int src = int(rng() % uint32_t(X.top_dim + 3));
            std::vector<OpSymbol> raw = random_word(rng, src, int(rng() % 7));
            OperatorWord w = normalize_word(raw, src);
            for (const SimplexRef& x : simplices_of_dim(X, src))
                CHECK(apply_word(X, w, x) == apply_symbols(X, raw, x));
        }
    }
}

TEST_CASE("distinct canonical words are distinct as functions") {
    SimplicialSet X = load_space("simplex-3");
    std::vector<SimplexRef> domain = simplices_of_dim(X, 3);
    REQUIRE(!domain.empty());
    std::map<std::vector<SimplexRef>, OperatorWord> seen;
    for (Mask faces = 0; faces < bit(4); ++faces) {
        if (mask_count(faces) > 3) continue; // must land in dim >= 0
        int dst = 3 - mask_count(faces);
        for (Mask degen = 0; degen < bit(5); ++degen) {
            if (mask_count(degen) > 2) continue;
            // letters must be applicable in ascending order from dim dst
            bool valid = true;
            int d = dst, applied = 0;
            for (int l = 0; l < 5; ++l)
                if (degen & bit(l)) {
                    if (l > d + applied) valid = false;
                    ++applied;
                }
            (void)d;
            if (!valid) continue;
            OperatorWord w{faces, degen, 3};
            std::vector<SimplexRef> table;
            for (const SimplexRef& x : domain) table.push_back(apply_word(X, w, x));
            auto [it, inserted] = seen.emplace(std::move(table), w);
            if (!inserted) CHECK(it->second == w);
        }
    }
    CHECK(seen.size() > 50);
}

TEST_CASE("apply_face and apply_degeneracy satisfy the simplicial identities") {
    for (const char* name : {"rp2", "torus", "sphere-2-minimal", "sphere-3-boundary"}) {
        SimplicialSet X = load_space(name);
        for (int d = 0; d <= 4; ++d)
            for (const SimplexRef& y : simplices_of_dim(X, d))
                for (int j = 0; j <= d; ++j) {
                    SimplexRef sy = apply_degeneracy(j, y);
                    for (int k = 0; k <= d + 1; ++k) {
                        SimplexRef lhs = apply_face(X, k, sy);
                        if (k == j || k == j + 1) {
                            CHECK(lhs == y); // (s5)
                        } else if (k < j) {
                            CHECK(lhs == apply_degeneracy(j - 1, apply_face(X, k, y))); // (s3)
                        } else {
                            CHECK(lhs == apply_degeneracy(j, apply_face(X, k - 1, y))); // (s4)
                        }
                    }
                }
    }
}

TEST_CASE("face of a degeneracy in canonical form") {
    SimplicialSet X = load_space("rp2");
    SimplexRef y = X.ref(X.gen_id("1,2,4"));
    // d_0 s_2 y = s_1 d_0 y
    CHECK(apply_face(X, 0, apply_degeneracy(2, y)) == apply_degeneracy(1, apply_face(X, 0, y)));
}

TEST_CASE("ordered-complex faces delete the indexed vertex") {
    SimplicialSet X = load_space("rp2");
    int32_t tri = X.gen_id("1,2,4");
    CHECK(apply_face(X, 1, X.ref(tri)) == X.ref(X.gen_id("1,4")));
    CHECK(apply_face(X, 0, X.ref(tri)) == X.ref(X.gen_id("2,4")));
    CHECK(apply_face(X, 2, X.ref(tri)) == X.ref(X.gen_id("1,2")));
}

TEST_CASE("degeneracies stack canonically") {
    SimplicialSet X = load_space("point");
    SimplexRef v = X.ref(0);
    SimplexRef s0 = apply_degeneracy(0, v);
    CHECK(s0.degen == bit(0));
    CHECK(s0.dim() == 1);
    // s_0 s_0 = s_1 s_0
    CHECK(apply_degeneracy(0, s0).degen == (bit(0) | bit(1)));

    SimplicialSet Y = load_space("rp2");
    SimplexRef g2 = Y.ref(Y.gen_id("1,2,4"));
    OperatorWord w = normalize_word({de(0), de(2)}, 2);
    CHECK(apply_degeneracy(2, apply_degeneracy(0, g2)) == apply_word(Y, w, g2));
}

TEST_CASE("validate accepts library spaces and rejects a corrupted table") {
    for (const SpaceLibraryEntry& e : space_library())
        CHECK(validate(load_space(e.name)).empty());

    SimplicialSet X = load_space("simplex-2");
    int32_t tri = X.gens_by_dim[2][0];
    std::swap(X.face_table[size_t(tri)][0], X.face_table[size_t(tri)][2]);
    CHECK(validate(X).size() >= 1);
}

TEST_CASE("from_ordered_complex generator counts") {
    SimplicialSet tri = from_ordered_complex({"a", "b", "c"}, {{0, 1, 2}}, "t");
    CHECK(tri.gens_by_dim[0].size() == 3);
    CHECK(tri.gens_by_dim[1].size() == 3);
    CHECK(tri.gens_by_dim[2].size() == 1);

    // boundary of the tetrahedron: 4 + 6 + 4 generators
    SimplicialSet s = load_space("sphere-2-boundary");
    CHECK(s.gen_count() == 14);

    // Euler characteristic of the projective-plane triangulation is 1
    SimplicialSet rp2 = load_space("rp2");
    int chi = int(rp2.gens_by_dim[0].size()) - int(rp2.gens_by_dim[1].size()) +
              int(rp2.gens_by_dim[2].size());
    CHECK(chi == 1);
    CHECK(rp2.gens_by_dim[0].size() == 6);

    CHECK_THROWS(from_ordered_complex({"a", "b"}, {{1, 0}}, "bad"));
}

TEST_CASE("simplices_of_dim enumerates degenerate simplices") {
    SimplicialSet X = load_space("interval");
    // dim 1: the edge plus s_0 of both vertices
    CHECK(simplices_of_dim(X, 1).size() == 3);
    // dim 2: one valid two-letter word per vertex, two one-letter words on
    // the edge, no 2-generators
    CHECK(simplices_of_dim(X, 2).size() == 4);
}

TEST_CASE("face-op counter counts face applications") {
    SimplicialSet X = load_space("rp2");
    SimplexRef x = X.ref(X.gen_id("1,2,4"));
    reset_face_ops();
    apply_word(X, OperatorWord{bit(0) | bit(2), 0, 2}, x);
    CHECK(face_ops() == 2);
    apply_word(X, OperatorWord{0, bit(0), 2}, x);
    CHECK(face_ops() == 2);
}
