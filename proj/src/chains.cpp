#include "steenrod/chains.hpp"

namespace steenrod {

Z2 pairing(const Cochain& c, const SimplexRef& x) {
    if (x.degenerate() || x.dim() != c.degree) return Z2(0);
    return c(x.gen);
}

Z2 pairing(const Cochain& c, const Chain<Z2>& x) {
    Z2 acc(0);
    for (const auto& [k, coeff] : x.terms)
        if (k.size() == 1) acc += pairing(c, k[0]) * coeff;
    return acc;
}

Chain<Z> boundary(const SimplicialSet& X, const SimplexRef& x) {
    Complex cx = Complex::product({&X});
    return differential(cx, make_chain<Z>(cx, single_key(x)));
}

Cochain coboundary(const SimplicialSet& X, const Cochain& c) {
    Cochain out = Cochain::zero(X, c.degree + 1);
    if (c.degree + 1 >= int(X.gens_by_dim.size())) return out;
    for (int32_t g : X.gens_by_dim[size_t(c.degree + 1)]) {
        Z2 acc(0);
        SimplexRef x = X.ref(g);
        for (int i = 0; i <= X.dim_of(g); ++i) acc += pairing(c, apply_face(X, i, x));
        out.values[size_t(g)] = acc.v;
    }
    return out;
}

} // namespace steenrod
