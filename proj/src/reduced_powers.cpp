#include "steenrod/reduced_powers.hpp"

namespace steenrod {

template <class R>
Chain<R> gamma(const Complex& cx, int i, const Chain<R>& c) {
    if (i < 1) throw word_error("gamma: index starts at 1");
    if (i % 2 == 1) return rotate_t<R>(cx, c);
    int p = cx.slot_count();
    Chain<R> acc, cur = c;
    for (int k = 1; k <= p - 1; ++k) {
        cur = rotate_t<R>(cx, cur);
        acc += cur;
    }
    return acc;
}

template <class R>
Chain<R> alpha(const Complex& cx, int i, const Chain<R>& c) {
    if (i < 1) throw word_error("alpha: index starts at 1");
    if (i % 2 == 1) return rotate_T<R>(cx, c) + c.scaled(R(-1));
    int p = cx.factor_count();
    Chain<R> acc = c, cur = c;
    for (int k = 1; k <= p - 1; ++k) {
        cur = rotate_T<R>(cx, cur);
        acc += cur;
    }
    return acc;
}

template <class R>
Chain<R> beta_op(const Complex& cx, int i, const Chain<R>& c) {
    if (i < 1) throw word_error("beta: index starts at 1");
    if (i % 2 == 1) return rotate_T<R>(cx, c);
    int p = cx.factor_count();
    Chain<R> acc, cur = c;
    for (int k = 1; k <= p - 1; ++k) {
        cur = rotate_T<R>(cx, cur);
        acc += cur;
    }
    return acc;
}

template <class R>
Chain<R> reduced_d(const SimplicialSet& X, int p, int i, const SimplexRef& x) {
    if (i < 0) throw word_error("reduced_d: negative index");
    Contraction<R> con = pfold_contraction<R>(X, p);
    Chain<R> cur = diagonal<R>(con.big, x, p);
    for (int k = 1; k <= i; ++k) {
        cur = apply_linear(cur, con.phi);
        cur = gamma<R>(con.big, k, cur);
    }
    return apply_linear(cur, con.f);
}

template Chain<Z> gamma<Z>(const Complex&, int, const Chain<Z>&);
template Chain<Z2> gamma<Z2>(const Complex&, int, const Chain<Z2>&);
template Chain<Z> alpha<Z>(const Complex&, int, const Chain<Z>&);
template Chain<Z2> alpha<Z2>(const Complex&, int, const Chain<Z2>&);
template Chain<Z> beta_op<Z>(const Complex&, int, const Chain<Z>&);
template Chain<Z2> beta_op<Z2>(const Complex&, int, const Chain<Z2>&);
template Chain<Z> reduced_d<Z>(const SimplicialSet&, int, int, const SimplexRef&);
template Chain<Z2> reduced_d<Z2>(const SimplicialSet&, int, int, const SimplexRef&);

} // namespace steenrod
