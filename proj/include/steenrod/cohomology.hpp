#pragma once

#include "steenrod/diagonal.hpp"

#include <optional>

namespace steenrod {

// dense bit-packed matrix over Z2
struct Gf2Matrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<uint64_t>> bits; // [row][word], 64 columns per word

    static Gf2Matrix zero(int r, int c);
    void set(int r, int c, bool v = true);
    bool get(int r, int c) const;
    Gf2Matrix transposed() const;
    int rank() const;
    // y = M v, v packed over cols, y packed over rows
    std::vector<uint64_t> apply(const std::vector<uint64_t>& v) const;
    // basis of { v : M v = 0 }, vectors packed over cols
    std::vector<std::vector<uint64_t>> kernel_basis() const;
};

// matrix of the coboundary C^p -> C^{p+1}: one column per p-generator, one
// row per (p+1)-generator
Gf2Matrix delta_matrix(const SimplicialSet& X, int p);
// matrix of the boundary C_p -> C_{p-1}, assembled directly from the face
// table (the independent route for rank cross-checks)
Gf2Matrix boundary_matrix(const SimplicialSet& X, int p);

// pack a degree-p cochain over the columns gens_by_dim[p] and back
std::vector<uint64_t> cochain_bits(const SimplicialSet& X, const Cochain& c);
Cochain bits_to_cochain(const SimplicialSet& X, int degree, const std::vector<uint64_t>& bits);

// H^p basis: representative cocycles plus the reduced row space (image of
// delta first, then representatives). Each row has a distinct pivot column and
// is zero at the pivots of all earlier rows, so one in-order reduction pass
// decomposes any cocycle and the rep rows give its coordinates.
struct CohomologyBasis {
    int degree = 0;
    std::vector<Cochain> reps;
    struct Row {
        std::vector<uint64_t> bits;
        int pivot = -1;
        int rep_index = -1; // -1 for coboundary rows
    };
    std::vector<Row> rows;
    int dim() const { return int(reps.size()); }
};

CohomologyBasis cohomology_basis(const SimplicialSet& X, int p);

// coordinates of [c] in the basis, or nullopt when c is not a cocycle
std::optional<std::vector<uint8_t>> class_of(const SimplicialSet& X, const CohomologyBasis& basis,
                                             const Cochain& c);

// action of Sq^i on a degree-j class; throws if the square of a cocycle
// fails to be a cocycle (an implementation fault, never a data error)
std::vector<uint8_t> sq_on_cohomology(const SimplicialSet& X, int i, int j,
                                      const std::vector<uint8_t>& cls);
// matrix of Sq^i: H^j -> H^{i+j}, one column per basis class of H^j
std::vector<std::vector<uint8_t>> sq_matrix(const SimplicialSet& X, int i, int j);

// cup product of classes via representatives
std::vector<uint8_t> cup_on_cohomology(const SimplicialSet& X, int p,
                                       const std::vector<uint8_t>& cls1, int q,
                                       const std::vector<uint8_t>& cls2);

// (c cup c')(x) by the two-face front/back formula, written against the face
// table only; the independent oracle for cup-square checks
Z2 cup_direct(const SimplicialSet& X, const Cochain& c, const Cochain& cp, const SimplexRef& x);
Cochain cup_direct_cochain(const SimplicialSet& X, const Cochain& c, const Cochain& cp);

// Z2 Betti numbers b_0..b_max_dim by coboundary ranks
std::vector<int> betti_numbers(const SimplicialSet& X, int max_dim);
// the same numbers by ranks of transposed boundary matrices (cross-check)
std::vector<int> betti_via_boundary_ranks(const SimplicialSet& X, int max_dim);

} // namespace steenrod
