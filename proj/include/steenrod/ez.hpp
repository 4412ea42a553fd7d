#pragma once

#include "steenrod/chains.hpp"

#include <functional>
#include <string>
#include <vector>

namespace steenrod {

struct Shuffle {
    std::vector<int> alpha; // ascending, |alpha| = p
    std::vector<int> beta;  // ascending, |beta| = q
    int sig = 0;            // sum alpha_i - (i-1)
};

// all (p,q)-shuffles of {0..p+q-1}, lexicographic in alpha
std::vector<Shuffle> shuffles(int p, int q);

// One summand of AW / EML / SHI as a pair of operator words: `a` acts on the
// first slot group, `b` on the second. Words carry their source dimension.
struct TermWords {
    int sign = 1; // +-1
    OperatorWord a, b;
};

// AW(a x b) = sum_i d_{i+1}..d_m a (x) d_0..d_{i-1} b
const std::vector<TermWords>& aw_words(int m);
// EML(a_p (x) b_q) = sum over shuffles (-1)^sig s_{beta} a x s_{alpha} b
const std::vector<TermWords>& eml_words(int p, int q);
// SHI: sum over 0<=q<=m-1, 0<=p<=m-q-1 and (p+1,q)-shuffles of {0..p+q} of
// (-1)^{mbar+sig+1} s_{beta+mbar} s_{mbar-1} d_{m-q+1}..d_m a
//                 x s_{alpha+mbar} d_{mbar}..d_{m-q-1} b, mbar = m-p-q
const std::vector<TermWords>& shi_words(int m);

// apply one word diagonally to the slot range [lo, hi) of a key
Key apply_to_slots(const Complex& cx, const OperatorWord& w, const Key& k, int lo, int hi);

// Termwise structure-map application on whole chains. `split` separates the
// slot ranges the two words of each summand act on. aw: product -> two-factor
// tensor; eml: tensor -> product; shi: product -> product, degree +1.
template <class R>
Chain<R> aw_apply(const Complex& big, const Complex& small, int split, const Chain<R>& c);
template <class R>
Chain<R> eml_apply(const Complex& small, const Complex& big, int split, const Chain<R>& c);
template <class R>
Chain<R> shi_apply(const Complex& big, int split, const Chain<R>& c);

template <class R>
using BasisMap = std::function<Chain<R>(const Key&)>;

template <class R>
struct Contraction {
    Complex big, small;
    BasisMap<R> f;   // projection big -> small
    BasisMap<R> g;   // inclusion small -> big
    BasisMap<R> phi; // homotopy big -> big, degree +1
};

// Eilenberg-Zilber contraction between the product complex `big` (one factor
// of width w) and the two-factor split [0,split) x [split,w).
template <class R>
Contraction<R> ez_contraction(const Complex& big, int split);

template <class R>
Contraction<R> identity_contraction(const Complex& cx);

// (f1(x)f2, g1(x)g2, phi1(x)g2f2 + 1(x)phi2), Koszul sign on the 1(x)phi2 leg
template <class R>
Contraction<R> tensor_contraction(const Contraction<R>& c1, const Contraction<R>& c2);

// (f2 f1, g1 g2, phi1 + g1 phi2 f1); requires c1.small == c2.big
template <class R>
Contraction<R> compose_contraction(const Contraction<R>& c1, const Contraction<R>& c2);

// contraction from C(X^p) onto C(X)^{(x)p}: p = 2 is (AW, EML, SHI); p > 2
// splits off the first product component and recurses on the rest
template <class R>
Contraction<R> pfold_contraction(const SimplicialSet& X, int p);

struct AxiomReport {
    std::vector<std::string> failures; // first offender per axiom/dim
    bool ok() const { return failures.empty(); }
};

// checks f g = 1, phi d + d phi = g f - 1, phi g = 0, f phi = 0, phi phi = 0
// on every basis element of dimension <= max_dim
template <class R>
AxiomReport check_contraction(const Contraction<R>& c, int max_dim);

// basis of the normalized complex at one degree: all keys whose factors are
// nondegenerate, in canonical (sorted) order
std::vector<Key> complex_basis(const Complex& cx, int degree);

} // namespace steenrod
