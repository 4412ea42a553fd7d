#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steenrod {

// Canonical degeneracy words s_{j_t}...s_{j_1} have strictly decreasing
// letters, so a word is determined by its letter set and fits in a bitmask.
// Letter range 0..31 covers every dimension this library targets.
using Mask = uint32_t;

constexpr int max_letter = 32;

inline int mask_count(Mask m) { return std::popcount(m); }
inline Mask bit(int k) { return Mask(1) << k; }
// bits [a, b] inclusive; empty when b < a
inline Mask interval_mask(int a, int b) {
    if (b < a) return 0;
    return (b + 1 >= max_letter ? ~Mask(0) : bit(b + 1) - 1) & ~(bit(a) - 1);
}

struct word_error : std::runtime_error {
    explicit word_error(const std::string& what) : std::runtime_error(what) {}
};

// Applying s_k on top of a canonical word s_J shifts the letters >= k up by
// one and inserts k (repeated use of s_i s_j = s_{j+1} s_i for i <= j).
inline Mask degen_insert(Mask j, int k) {
    Mask low = j & (bit(k) - 1);
    Mask high = (j >> k) << (k + 1);
    return low | high | bit(k);
}

// A simplex in canonical form: a degeneracy word applied to a nondegenerate
// generator. Nondegenerate iff the word is empty.
struct SimplexRef {
    int32_t gen = -1;
    int32_t gen_dim = 0;
    Mask degen = 0;

    int dim() const { return gen_dim + std::popcount(degen); }
    bool degenerate() const { return degen != 0; }
    friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

// Canonical operator word s_{j_t}...s_{j_1} d_{i_1}...d_{i_s}: the face part
// deletes the vertex set `faces` of the source simplex (the written word is
// ascending, so the largest index is applied first), then the degeneracy
// letters are applied in increasing order.
struct OperatorWord {
    Mask faces = 0;
    Mask degen = 0;
    int src_dim = 0;

    int dst_dim() const { return src_dim - std::popcount(faces) + std::popcount(degen); }
    friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;
};

struct OpSymbol {
    bool is_face = true;
    int index = 0;
};

struct SimplicialSet {
    std::string name;
    std::vector<std::string> gen_names;
    std::vector<int32_t> gen_dims;
    std::vector<std::vector<int32_t>> gens_by_dim; // [d] -> generator ids, fixed order
    std::vector<std::vector<SimplexRef>> face_table; // [gen][k], k = 0..dim(gen)
    int top_dim = 0;
    // true when every face_table target is nondegenerate (ordered complexes);
    // enables the mask-only degeneracy prefilter in hot loops
    bool faces_nondegenerate = true;

    int gen_count() const { return int(gen_names.size()); }
    int dim_of(int32_t g) const { return gen_dims[size_t(g)]; }
    const SimplexRef& face(int32_t g, int k) const { return face_table[size_t(g)][size_t(k)]; }
    SimplexRef ref(int32_t g) const { return SimplexRef{g, gen_dims[size_t(g)], 0}; }
    int32_t gen_id(const std::string& name) const;
};

// global face-operator application counter (benchmark instrumentation)
uint64_t face_ops();
void reset_face_ops();

SimplexRef apply_face(const SimplicialSet& X, int k, const SimplexRef& x);
SimplexRef apply_degeneracy(int k, const SimplexRef& x);
SimplexRef apply_word(const SimplicialSet& X, const OperatorWord& w, const SimplexRef& x);

// Degeneracy letters of apply_word(X, w, x) under the assumption that face
// targets contribute no letters of their own; exact when X.faces_nondegenerate.
Mask word_letters(const OperatorWord& w, Mask letters);

// raw is in application order: raw[0] acts first on a src_dim-simplex
OperatorWord normalize_word(const std::vector<OpSymbol>& raw, int src_dim);

// one report line per violation of d_i d_j = d_{j-1} d_i (i < j); empty = valid
std::vector<std::string> validate(const SimplicialSet& X);

// facets are strictly increasing vertex-index tuples; generators are all
// nonempty subtuples, face k deletes the k-th vertex
SimplicialSet from_ordered_complex(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<int>>& facets,
                                   std::string name);

struct GenSpec {
    std::string name;
    int dim = 0;
};
struct FaceSpec {
    std::vector<int> degeneracies; // letters j_t > ... > j_1
    std::string target;
};
SimplicialSet from_face_table(const std::vector<GenSpec>& gens,
                              const std::vector<std::vector<FaceSpec>>& faces,
                              std::string name);

// all m-simplices (including degenerate ones), canonical order:
// generators by id, degeneracy words by ascending mask value
std::vector<SimplexRef> simplices_of_dim(const SimplicialSet& X, int m);

} // namespace steenrod
