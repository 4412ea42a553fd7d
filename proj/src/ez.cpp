#include "steenrod/ez.hpp"

#include <map>
#include <mutex>

namespace steenrod {

std::vector<Shuffle> shuffles(int p, int q) {
    if (p < 0 || q < 0) throw word_error("negative shuffle arguments");
    std::vector<Shuffle> out;
    std::vector<int> alpha(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) alpha[size_t(i)] = i;
    while (true) {
        Shuffle s;
        s.alpha = alpha;
        int sig = 0;
        size_t ai = 0;
        for (int v = 0; v < p + q; ++v) {
            if (ai < alpha.size() && alpha[ai] == v) {
                sig += v - int(ai);
                ++ai;
            } else {
                s.beta.push_back(v);
            }
        }
        s.sig = sig;
        out.push_back(std::move(s));
        // next p-subset of {0..p+q-1} in lexicographic order
        int i = p - 1;
        while (i >= 0 && alpha[size_t(i)] == q + i) --i;
        if (i < 0) break;
        ++alpha[size_t(i)];
        for (int k = i + 1; k < p; ++k) alpha[size_t(k)] = alpha[size_t(k - 1)] + 1;
    }
    return out;
}

namespace {

Mask bits_of(const std::vector<int>& letters, int shift = 0) {
    Mask m = 0;
    for (int l : letters) m |= bit(l + shift);
    return m;
}

std::mutex cache_mutex;

} // namespace

const std::vector<TermWords>& aw_words(int m) {
    static std::map<int, std::vector<TermWords>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<TermWords> words;
    for (int i = 0; i <= m; ++i) {
        TermWords t;
        t.a = OperatorWord{interval_mask(i + 1, m), 0, m};
        t.b = OperatorWord{interval_mask(0, i - 1), 0, m};
        words.push_back(t);
    }
    return cache.emplace(m, std::move(words)).first->second;
}

const std::vector<TermWords>& eml_words(int p, int q) {
    static std::map<std::pair<int, int>, std::vector<TermWords>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
    std::vector<TermWords> words;
    for (const Shuffle& s : shuffles(p, q)) {
        TermWords t;
        t.sign = (s.sig & 1) ? -1 : 1;
        t.a = OperatorWord{0, bits_of(s.beta), p};
        t.b = OperatorWord{0, bits_of(s.alpha), q};
        words.push_back(t);
    }
    return cache.emplace(std::pair{p, q}, std::move(words)).first->second;
}

const std::vector<TermWords>& shi_words(int m) {
    static std::map<int, std::vector<TermWords>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<TermWords> words;
    for (int q = 0; q <= m - 1; ++q)
        for (int p = 0; p <= m - q - 1; ++p) {
            int mbar = m - p - q;
            for (const Shuffle& s : shuffles(p + 1, q)) {
                TermWords t;
                t.sign = ((mbar + s.sig + 1) & 1) ? -1 : 1;
                t.a = OperatorWord{interval_mask(m - q + 1, m),
                                   bits_of(s.beta, mbar) | bit(mbar - 1), m};
                t.b = OperatorWord{interval_mask(mbar, m - q - 1), bits_of(s.alpha, mbar), m};
                words.push_back(t);
            }
        }
    return cache.emplace(m, std::move(words)).first->second;
}

Key apply_to_slots(const Complex& cx, const OperatorWord& w, const Key& k, int lo, int hi) {
    Key out = k;
    for (int i = lo; i < hi; ++i) out[i] = apply_word(*cx.slots[size_t(i)], w, k[i]);
    return out;
}

namespace {

bool all_faces_nondegenerate(const Complex& cx) {
    for (const SimplicialSet* X : cx.slots)
        if (!X->faces_nondegenerate) return false;
    return true;
}

// word-level degeneracy prefilter: exact when the words contain no faces or
// every face target in the spaces involved is nondegenerate
bool prefilter_degenerate(const Complex& out_cx, const TermWords& t, const Key& k, int split) {
    std::array<Mask, max_slots> lm{};
    int w = k.size();
    for (int i = 0; i < split; ++i) lm[size_t(i)] = word_letters(t.a, k[i].degen);
    for (int i = split; i < w; ++i) lm[size_t(i)] = word_letters(t.b, k[i].degen);
    int off = 0;
    for (int fw : out_cx.widths) {
        Mask common = ~Mask(0);
        for (int i = 0; i < fw; ++i) common &= lm[size_t(off + i)];
        if (common) return true;
        off += fw;
    }
    return false;
}

template <class R>
void eval_terms_into(ChainBuilder<R>& b, const Complex& in_cx, const Complex& out_cx, int split,
                     const std::vector<TermWords>& words, const Key& k, R coeff,
                     bool exact_masks) {
    int w = k.size();
    for (const TermWords& t : words) {
        if (exact_masks && prefilter_degenerate(out_cx, t, k, split)) continue;
        Key k2 = k;
        for (int i = 0; i < split; ++i) k2[i] = apply_word(*in_cx.slots[size_t(i)], t.a, k[i]);
        for (int i = split; i < w; ++i) k2[i] = apply_word(*in_cx.slots[size_t(i)], t.b, k[i]);
        b.emit(k2, coeff * ring_sign<R>(t.sign < 0 ? 1 : 0));
    }
}

} // namespace

template <class R>
Chain<R> aw_apply(const Complex& big, const Complex& small, int split, const Chain<R>& c) {
    bool exact = all_faces_nondegenerate(big);
    ChainBuilder<R> b(small);
    for (const auto& [k, coeff] : c.terms)
        eval_terms_into(b, big, small, split, aw_words(k[0].dim()), k, coeff, exact);
    return b.finalize();
}

template <class R>
Chain<R> eml_apply(const Complex& small, const Complex& big, int split, const Chain<R>& c) {
    ChainBuilder<R> b(big);
    // eml words are pure degeneracies, the mask prefilter is always exact
    for (const auto& [k, coeff] : c.terms)
        eval_terms_into(b, small, big, split, eml_words(k[0].dim(), k[split].dim()), k, coeff,
                        true);
    return b.finalize();
}

template <class R>
Chain<R> shi_apply(const Complex& big, int split, const Chain<R>& c) {
    bool exact = all_faces_nondegenerate(big);
    ChainBuilder<R> b(big);
    for (const auto& [k, coeff] : c.terms)
        eval_terms_into(b, big, big, split, shi_words(k[0].dim()), k, coeff, exact);
    return b.finalize();
}

template <class R>
Contraction<R> ez_contraction(const Complex& big, int split) {
    if (big.factor_count() != 1) throw word_error("ez_contraction expects a product complex");
    int w = big.slot_count();
    if (split < 1 || split >= w) throw word_error("bad ez_contraction split");
    Complex left, right;
    left.slots.assign(big.slots.begin(), big.slots.begin() + split);
    left.widths = {split};
    right.slots.assign(big.slots.begin() + split, big.slots.end());
    right.widths = {w - split};
    Complex small = Complex::tensor({left, right});

    Contraction<R> c;
    c.big = big;
    c.small = small;
    c.f = [big, small, split](const Key& k) {
        return aw_apply<R>(big, small, split, make_chain<R>(big, k));
    };
    c.g = [big, small, split](const Key& k) {
        return eml_apply<R>(small, big, split, make_chain<R>(small, k));
    };
    c.phi = [big, split](const Key& k) {
        return shi_apply<R>(big, split, make_chain<R>(big, k));
    };
    return c;
}

template <class R>
Contraction<R> identity_contraction(const Complex& cx) {
    Contraction<R> c;
    c.big = cx;
    c.small = cx;
    c.f = [cx](const Key& k) { return make_chain<R>(cx, k); };
    c.g = c.f;
    c.phi = [](const Key&) { return Chain<R>{}; };
    return c;
}

namespace {

Key key_slice(const Key& k, int lo, int hi) {
    Key out;
    for (int i = lo; i < hi; ++i) out.push(k[i]);
    return out;
}

Key key_concat(const Key& a, const Key& b) {
    Key out = a;
    for (int i = 0; i < b.size(); ++i) out.push(b[i]);
    return out;
}

template <class R>
Chain<R> chain_cross(const Complex& out_cx, const Chain<R>& a, const Chain<R>& b, int sign_exp) {
    ChainBuilder<R> out(out_cx);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            out.emit(key_concat(ka, kb), ca * cb * ring_sign<R>(sign_exp));
    return out.finalize();
}

} // namespace

template <class R>
Contraction<R> tensor_contraction(const Contraction<R>& c1, const Contraction<R>& c2) {
    Contraction<R> c;
    c.big = Complex::tensor({c1.big, c2.big});
    c.small = Complex::tensor({c1.small, c2.small});
    int na = c1.big.slot_count();
    Complex big = c.big, small = c.small;
    c.f = [c1, c2, na, small](const Key& k) {
        Key k1 = key_slice(k, 0, na), k2 = key_slice(k, na, k.size());
        return chain_cross(small, c1.f(k1), c2.f(k2), 0);
    };
    c.g = [c1, c2, small, big, na2 = c1.small.slot_count()](const Key& k) {
        Key k1 = key_slice(k, 0, na2), k2 = key_slice(k, na2, k.size());
        return chain_cross(big, c1.g(k1), c2.g(k2), 0);
    };
    c.phi = [c1, c2, na, big](const Key& k) {
        Key k1 = key_slice(k, 0, na), k2 = key_slice(k, na, k.size());
        Chain<R> first = chain_cross(big, c1.phi(k1), apply_linear(c2.f(k2), c2.g), 0);
        int deg1 = c1.big.degree(k1);
        Chain<R> second =
            chain_cross(big, make_chain<R>(c1.big, k1), c2.phi(k2), deg1);
        return first + second;
    };
    return c;
}

template <class R>
Contraction<R> compose_contraction(const Contraction<R>& c1, const Contraction<R>& c2) {
    if (!(c1.small == c2.big)) throw word_error("compose_contraction: complex mismatch");
    Contraction<R> c;
    c.big = c1.big;
    c.small = c2.small;
    c.f = [c1, c2](const Key& k) { return apply_linear(c1.f(k), c2.f); };
    c.g = [c1, c2](const Key& k) { return apply_linear(c2.g(k), c1.g); };
    c.phi = [c1, c2](const Key& k) {
        return c1.phi(k) + apply_linear(apply_linear(c1.f(k), c2.phi), c1.g);
    };
    return c;
}

template <class R>
Contraction<R> pfold_contraction(const SimplicialSet& X, int p) {
    if (p < 2) throw word_error("pfold_contraction needs p >= 2");
    if (p > max_slots) throw word_error("pfold_contraction supports p <= 8");
    Complex big = Complex::product(std::vector<const SimplicialSet*>(size_t(p), &X));
    if (p == 2) return ez_contraction<R>(big, 1);
    Contraction<R> first = ez_contraction<R>(big, 1);
    Contraction<R> rest = pfold_contraction<R>(X, p - 1);
    Contraction<R> one = identity_contraction<R>(Complex::product({&X}));
    return compose_contraction(first, tensor_contraction(one, rest));
}

std::vector<Key> complex_basis(const Complex& cx, int degree) {
    // per factor: nondegenerate width-w product simplices of one dimension
    auto factor_basis = [&](int f, int d) {
        std::vector<Key> out;
        int off = cx.factor_offset(f), w = cx.widths[size_t(f)];
        std::vector<std::vector<SimplexRef>> per_slot;
        for (int i = 0; i < w; ++i)
            per_slot.push_back(simplices_of_dim(*cx.slots[size_t(off + i)], d));
        Key cur;
        std::function<void(int, Mask)> rec = [&](int i, Mask common) {
            if (i == w) {
                if (!common) out.push_back(cur);
                return;
            }
            for (const SimplexRef& r : per_slot[size_t(i)]) {
                cur.s[size_t(i)] = r;
                rec(i + 1, common & r.degen);
            }
        };
        cur.n = uint8_t(w);
        rec(0, ~Mask(0));
        return out;
    };
    std::vector<Key> out;
    std::function<void(int, int, Key)> rec = [&](int f, int left, Key acc) {
        if (f == cx.factor_count()) {
            if (left == 0) out.push_back(acc);
            return;
        }
        bool last = f == cx.factor_count() - 1;
        for (int d = last ? left : 0; d <= left; ++d) {
            for (const Key& fk : factor_basis(f, d)) {
                Key next = acc;
                for (int i = 0; i < fk.size(); ++i) next.push(fk[i]);
                rec(f + 1, left - d, next);
            }
        }
    };
    rec(0, degree, Key{});
    std::sort(out.begin(), out.end());
    return out;
}

template <class R>
AxiomReport check_contraction(const Contraction<R>& c, int max_dim) {
    AxiomReport rep;
    auto key_str = [](const Key& k) {
        std::string s = "(";
        for (int i = 0; i < k.size(); ++i) {
            if (i) s += ",";
            s += "g" + std::to_string(k[i].gen) + "/" + std::to_string(k[i].degen);
        }
        return s + ")";
    };
    for (int d = 0; d <= max_dim; ++d) {
        std::vector<Key> big_basis = complex_basis(c.big, d);
        std::vector<Key> small_basis = complex_basis(c.small, d);
        const char* fail = nullptr;
        std::string detail;
        for (const Key& k : small_basis) {
            Chain<R> unit = make_chain<R>(c.small, k);
            if (apply_linear(c.g(k), c.f) != unit) {
                fail = "f g = 1";
            } else if (!apply_linear(c.g(k), c.phi).empty()) {
                fail = "phi g = 0";
            }
            if (fail) {
                detail = key_str(k);
                break;
            }
        }
        for (const Key& k : big_basis) {
            if (fail) break;
            Chain<R> unit = make_chain<R>(c.big, k);
            Chain<R> phik = c.phi(k);
            if (!apply_linear(phik, c.f).empty()) {
                fail = "f phi = 0";
            } else if (!apply_linear(phik, c.phi).empty()) {
                fail = "phi phi = 0";
            } else {
                Chain<R> homotopy = apply_linear(differential(c.big, unit), c.phi) +
                                    differential(c.big, phik);
                Chain<R> reduction = apply_linear(c.f(k), c.g) + unit.scaled(R(-1));
                if (homotopy != reduction) fail = "phi d + d phi = g f - 1";
            }
            if (fail) detail = key_str(k);
        }
        if (fail)
            rep.failures.push_back("dim " + std::to_string(d) + ": " + fail + " fails at " +
                                   detail);
    }
    return rep;
}

template Chain<Z> aw_apply<Z>(const Complex&, const Complex&, int, const Chain<Z>&);
template Chain<Z2> aw_apply<Z2>(const Complex&, const Complex&, int, const Chain<Z2>&);
template Chain<Z> eml_apply<Z>(const Complex&, const Complex&, int, const Chain<Z>&);
template Chain<Z2> eml_apply<Z2>(const Complex&, const Complex&, int, const Chain<Z2>&);
template Chain<Z> shi_apply<Z>(const Complex&, int, const Chain<Z>&);
template Chain<Z2> shi_apply<Z2>(const Complex&, int, const Chain<Z2>&);
template Contraction<Z> ez_contraction<Z>(const Complex&, int);
template Contraction<Z2> ez_contraction<Z2>(const Complex&, int);
template Contraction<Z> identity_contraction<Z>(const Complex&);
template Contraction<Z2> identity_contraction<Z2>(const Complex&);
template Contraction<Z> tensor_contraction<Z>(const Contraction<Z>&, const Contraction<Z>&);
template Contraction<Z2> tensor_contraction<Z2>(const Contraction<Z2>&, const Contraction<Z2>&);
template Contraction<Z> compose_contraction<Z>(const Contraction<Z>&, const Contraction<Z>&);
template Contraction<Z2> compose_contraction<Z2>(const Contraction<Z2>&, const Contraction<Z2>&);
template Contraction<Z> pfold_contraction<Z>(const SimplicialSet&, int);
template Contraction<Z2> pfold_contraction<Z2>(const SimplicialSet&, int);
template AxiomReport check_contraction<Z>(const Contraction<Z>&, int);
template AxiomReport check_contraction<Z2>(const Contraction<Z2>&, int);

} // namespace steenrod
