#pragma once

#include "steenrod/diagonal.hpp"

namespace steenrod {

// gamma_i on a p-fold product: one rotation for odd i, the sum
// t + t^2 + ... + t^{p-1} for even i
template <class R>
Chain<R> gamma(const Complex& cx, int i, const Chain<R>& c);

// alpha_i on p-fold tensors: T - 1 for odd i, 1 + T + ... + T^{p-1} for even
template <class R>
Chain<R> alpha(const Complex& cx, int i, const Chain<R>& c);

// beta_i: T for odd i, T + ... + T^{p-1} for even i (the g-side mirror of
// gamma under t g = g T)
template <class R>
Chain<R> beta_op(const Complex& cx, int i, const Chain<R>& c);

// D_i = f gamma_i phi gamma_{i-1} ... phi gamma_1 phi Delta through the
// p-fold contraction; D_0 = f Delta. Output lives in C(X)^{(x)p}.
template <class R>
Chain<R> reduced_d(const SimplicialSet& X, int p, int i, const SimplexRef& x);

} // namespace steenrod
