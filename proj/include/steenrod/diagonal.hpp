#pragma once

#include "steenrod/ez.hpp"

namespace steenrod {

enum class Mode { fast, slow };

// p-fold diagonal: the single product simplex (x, ..., x)
template <class R>
Chain<R> diagonal(const Complex& prod_cx, const SimplexRef& x, int p);

// cyclic rotation of the first slot of a one-factor product complex to the
// back: t(x_1, ..., x_p) = (x_2, ..., x_p, x_1), no sign
Complex rotate_complex(const Complex& cx);
template <class R>
Chain<R> rotate_t(const Complex& cx, const Chain<R>& c);

// tensor rotation with Koszul sign:
// T(x_1 (x) ... (x) x_p) = (-1)^{|x_1|(|x_2|+...+|x_p|)} x_2 (x) ... (x) x_1
template <class R>
Chain<R> rotate_T(const Complex& cx, const Chain<R>& c);

// target complex of h_n on C(X x Y): C(X)(x)C(Y) for n even, C(Y)(x)C(X)
// for n odd (each application of t swaps the components)
Complex diag_target(const SimplicialSet& X, const SimplicialSet& Y, int n);

// slow higher diagonal: the literal composition AW (t SHI)^n on a x b
template <class R>
Chain<R> h_slow(const SimplicialSet& X, const SimplicialSet& Y, int n, const SimplexRef& a,
                const SimplexRef& b);

// One summand of the closed-form expansion of AW (t SHI)^n: two pure face
// words indexed by a strictly increasing multi-index (i_0 < ... < i_n),
// i_k >= k, i_n <= m. word_first applies to the first output tensor factor,
// word_second to the second; for odd n the first factor holds the second
// product component (t swaps an odd number of times).
struct DiagTerm {
    int sign = 1; // +-1
    OperatorWord word_first, word_second;
};

// all summands of h_n on m-simplices; cached
const std::vector<DiagTerm>& diagonal_words(int n, int m);

// test hook: flip one sign contribution in every odd-n summand and drop the
// word caches, so verification suites must catch the corruption
void inject_sign_fault(bool on);

// fast higher diagonal: direct evaluation of the face-word expansion
template <class R>
Chain<R> h_fast(const SimplicialSet& X, const SimplicialSet& Y, int n, const SimplexRef& a,
                const SimplexRef& b);

// D_i = h_i after the diagonal, a chain in C(X)(x)C(X)
template <class R>
Chain<R> big_d(const SimplicialSet& X, int i, const SimplexRef& x, Mode mode = Mode::fast);

// cup-i product evaluated on one simplex: (c cup_i c')(x) = <c(x)c', D_i(x)>;
// throws on dim(x) != deg c + deg c' - i
Z2 cup_i(const SimplicialSet& X, int i, const Cochain& c, const Cochain& cp, const SimplexRef& x,
         Mode mode = Mode::fast);
// the whole degree-(p+q-i) cochain c cup_i c'
Cochain cup_i_cochain(const SimplicialSet& X, int i, const Cochain& c, const Cochain& cp,
                      Mode mode = Mode::fast);

// the face-word pairs of the Steenrod square expansion: the multi-index
// ranges specialize so that both words delete exactly i letters and i_0 is
// determined by the higher indices; cached per (i, j)
struct SqTerm {
    OperatorWord word_first, word_second;
};
const std::vector<SqTerm>& sq_words(int i, int j);

// Sq^i on a degree-j cochain, evaluated generator by generator; i > j gives
// the zero cochain of degree i+j. Every summand is evaluated in full (no
// short-circuit) so the face-op counter matches term_count exactly.
Cochain sq(const SimplicialSet& X, int i, const Cochain& c);

// slow-oracle value of Sq^i(c)(x) through the contraction pipeline
Z2 sq_slow_value(const SimplicialSet& X, int i, const Cochain& c, const SimplexRef& x);

struct TermCount {
    uint64_t summands = 0;
    uint64_t face_ops = 0;
};
// counts of the Sq^i expansion on degree-j cochains, no evaluation
TermCount term_count(int i, int j);

} // namespace steenrod
