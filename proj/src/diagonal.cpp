#include "steenrod/diagonal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace steenrod {

template <class R>
Chain<R> diagonal(const Complex& prod_cx, const SimplexRef& x, int p) {
    if (p < 2 || p > max_slots) throw word_error("diagonal arity out of range");
    if (prod_cx.slot_count() != p) throw word_error("diagonal: complex arity mismatch");
    Key k;
    for (int s = 0; s < p; ++s) k.push(x);
    return make_chain<R>(prod_cx, k);
}

Complex rotate_complex(const Complex& cx) {
    Complex out = cx;
    int w0 = cx.factor_count() == 1 ? 1 : cx.widths[0];
    std::rotate(out.slots.begin(), out.slots.begin() + w0, out.slots.end());
    if (cx.factor_count() > 1)
        std::rotate(out.widths.begin(), out.widths.begin() + 1, out.widths.end());
    return out;
}

template <class R>
Chain<R> rotate_t(const Complex& cx, const Chain<R>& c) {
    Complex out = rotate_complex(cx);
    ChainBuilder<R> b(out);
    int w = cx.slot_count();
    for (const auto& [k, coeff] : c.terms) {
        Key k2;
        for (int s = 1; s < w; ++s) k2.push(k[s]);
        k2.push(k[0]);
        b.emit(k2, coeff);
    }
    return b.finalize();
}

template <class R>
Chain<R> rotate_T(const Complex& cx, const Chain<R>& c) {
    Complex out = rotate_complex(cx);
    ChainBuilder<R> b(out);
    int w0 = cx.widths[0], w = cx.slot_count();
    for (const auto& [k, coeff] : c.terms) {
        int d0 = k[0].dim();
        int rest = cx.degree(k) - d0;
        Key k2;
        for (int s = w0; s < w; ++s) k2.push(k[s]);
        for (int s = 0; s < w0; ++s) k2.push(k[s]);
        b.emit(k2, coeff * ring_sign<R>(d0 * rest));
    }
    return b.finalize();
}

Complex diag_target(const SimplicialSet& X, const SimplicialSet& Y, int n) {
    const SimplicialSet& first = (n % 2 == 0) ? X : Y;
    const SimplicialSet& second = (n % 2 == 0) ? Y : X;
    return Complex::tensor({Complex::product({&first}), Complex::product({&second})});
}

template <class R>
Chain<R> h_slow(const SimplicialSet& X, const SimplicialSet& Y, int n, const SimplexRef& a,
                const SimplexRef& b) {
    if (n < 0) throw word_error("h_slow: negative index");
    if (a.dim() != b.dim()) throw word_error("h_slow: component dims differ");
    Complex cur_cx = Complex::product({&X, &Y});
    Chain<R> cur = make_chain<R>(cur_cx, pair_key(a, b));
    for (int step = 0; step < n; ++step) {
        cur = shi_apply<R>(cur_cx, 1, cur);
        cur = rotate_t<R>(cur_cx, cur);
        cur_cx = rotate_complex(cur_cx);
    }
    return aw_apply<R>(cur_cx, diag_target(X, Y, n), 1, cur);
}

namespace {

std::mutex diag_cache_mutex;
std::map<std::pair<int, int>, std::vector<DiagTerm>> diag_word_cache;
std::map<std::pair<int, int>, std::vector<SqTerm>> sq_word_cache;
bool sign_fault = false;

DiagTerm build_diag_term(int n, int m, const std::vector<int>& idx) {
    Mask m1 = 0, m2 = 0;
    for (int k = 0; k < n; ++k) {
        Mask seg = interval_mask(idx[size_t(k)] + 1, idx[size_t(k) + 1] - 1);
        (k % 2 == 0 ? m1 : m2) |= seg;
    }
    (n % 2 == 0 ? m1 : m2) |= interval_mask(idx[size_t(n)] + 1, m);
    m2 |= interval_mask(0, idx[0] - 1);

    long long a_exp = (n % 8 == 3 || n % 8 == 4 || n % 8 == 5 || n % 8 == 6) ? 1 : 0;
    long long b_exp = 0;
    if (n % 4 == 1 || n % 4 == 2) {
        for (int j = 0; 2 * j <= n; ++j) b_exp += idx[size_t(2 * j)];
    } else {
        for (int j = 0; 2 * j + 1 <= n; ++j) b_exp += idx[size_t(2 * j + 1)];
        b_exp += static_cast<long long>(n) * m;
    }
    std::vector<long long> pre(size_t(n) + 1);
    pre[0] = idx[0];
    for (int k = 1; k <= n; ++k) pre[size_t(k)] = pre[size_t(k) - 1] + idx[size_t(k)];
    long long c_exp = 0;
    for (int j = 1; 2 * j <= n; ++j)
        c_exp += (idx[size_t(2 * j)] + idx[size_t(2 * j) - 1]) * pre[size_t(2 * j) - 1];
    long long d_exp = (n % 2 == 1) ? static_cast<long long>(m + idx[size_t(n)]) * pre[size_t(n)]
                                   : 0;
    if (sign_fault && n % 2 == 1) d_exp += 1;

    DiagTerm t;
    t.sign = ((a_exp + b_exp + c_exp + d_exp) % 2 != 0) ? -1 : 1;
    t.word_first = OperatorWord{m1, 0, m};
    t.word_second = OperatorWord{m2, 0, m};
    return t;
}

} // namespace

void inject_sign_fault(bool on) {
    std::lock_guard<std::mutex> lock(diag_cache_mutex);
    sign_fault = on;
    diag_word_cache.clear();
    sq_word_cache.clear();
}

const std::vector<DiagTerm>& diagonal_words(int n, int m) {
    if (n < 0 || m < 0) throw word_error("diagonal_words: negative arguments");
    auto& cache = diag_word_cache;
    std::lock_guard<std::mutex> lock(diag_cache_mutex);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
    std::vector<DiagTerm> out;
    std::vector<int> idx(size_t(n) + 1);
    std::function<void(int)> rec = [&](int k) {
        if (k < 0) {
            out.push_back(build_diag_term(n, m, idx));
            return;
        }
        int hi = (k == n) ? m : idx[size_t(k) + 1] - 1;
        for (int v = k; v <= hi; ++v) {
            idx[size_t(k)] = v;
            rec(k - 1);
        }
    };
    rec(n);
    return cache.emplace(std::pair{n, m}, std::move(out)).first->second;
}

template <class R>
Chain<R> h_fast(const SimplicialSet& X, const SimplicialSet& Y, int n, const SimplexRef& a,
                const SimplexRef& b) {
    if (n < 0) throw word_error("h_fast: negative index");
    if (a.dim() != b.dim()) throw word_error("h_fast: component dims differ");
    int m = a.dim();
    bool even = n % 2 == 0;
    const SimplicialSet& s1 = even ? X : Y;
    const SimplicialSet& s2 = even ? Y : X;
    const SimplexRef& x1 = even ? a : b;
    const SimplexRef& x2 = even ? b : a;
    Complex out = diag_target(X, Y, n);
    ChainBuilder<R> bld(out);
    for (const DiagTerm& t : diagonal_words(n, m)) {
        Key k;
        k.push(apply_word(s1, t.word_first, x1));
        k.push(apply_word(s2, t.word_second, x2));
        bld.emit(k, ring_sign<R>(t.sign < 0 ? 1 : 0));
    }
    return bld.finalize();
}

template <class R>
Chain<R> big_d(const SimplicialSet& X, int i, const SimplexRef& x, Mode mode) {
    return mode == Mode::fast ? h_fast<R>(X, X, i, x, x) : h_slow<R>(X, X, i, x, x);
}

Z2 cup_i(const SimplicialSet& X, int i, const Cochain& c, const Cochain& cp, const SimplexRef& x,
         Mode mode) {
    if (x.dim() != c.degree + cp.degree - i)
        throw word_error("cup_i: simplex dimension must be deg(c) + deg(c') - i");
    Chain<Z2> d = big_d<Z2>(X, i, x, mode);
    Z2 acc;
    for (const auto& [k, coeff] : d.terms) acc += coeff * pairing(c, k[0]) * pairing(cp, k[1]);
    return acc;
}

Cochain cup_i_cochain(const SimplicialSet& X, int i, const Cochain& c, const Cochain& cp,
                      Mode mode) {
    int deg = c.degree + cp.degree - i;
    if (deg < 0) throw word_error("cup_i: index exceeds total degree");
    Cochain out = Cochain::zero(X, deg);
    if (deg < int(X.gens_by_dim.size()))
        for (int32_t g : X.gens_by_dim[size_t(deg)])
            out.values[size_t(g)] = cup_i(X, i, c, cp, X.ref(g), mode).v;
    return out;
}

const std::vector<SqTerm>& sq_words(int i, int j) {
    auto& cache = sq_word_cache;
    std::lock_guard<std::mutex> lock(diag_cache_mutex);
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
    std::vector<SqTerm> out;
    if (i >= 0 && j >= 0 && i <= j) {
        int n = j - i, m = i + j;
        int half = (m + 1) / 2;
        std::vector<int> idx(size_t(n) + 1);
        auto emit = [&] {
            DiagTerm dt = build_diag_term(n, m, idx);
            // the determined lowest index forces the equal split of deleted
            // letters between the two words; anything else is a bug
            if (mask_count(dt.word_first.faces) != i || mask_count(dt.word_second.faces) != i)
                throw word_error("sq_words: uneven face split");
            out.push_back(SqTerm{dt.word_first, dt.word_second});
        };
        if (n == 0) {
            idx[0] = half;
            emit();
        } else {
            // descend k = n-1..0 carrying the alternating tail sum
            // a_k = i_{k+1} - a_{k+1}; the lower bound is
            // s_k = a_k + (-1)^{k+n} floor((m+1)/2) + floor(k/2), clipped at k
            std::function<void(int, long long)> rec = [&](int k, long long a_next) {
                long long a_k = idx[size_t(k) + 1] - a_next;
                long long s_k = a_k + (((k + n) % 2 == 0) ? half : -half) + k / 2;
                if (k == 0) {
                    if (s_k >= 0 && s_k <= idx[1] - 1) {
                        idx[0] = int(s_k);
                        emit();
                    }
                    return;
                }
                for (long long v = std::max<long long>(s_k, k); v <= idx[size_t(k) + 1] - 1; ++v) {
                    idx[size_t(k)] = int(v);
                    rec(k - 1, a_k);
                }
            };
            for (int v = std::max(half + n / 2, n); v <= m; ++v) {
                idx[size_t(n)] = v;
                rec(n - 1, 0);
            }
        }
    }
    return cache.emplace(std::pair{i, j}, std::move(out)).first->second;
}

Cochain sq(const SimplicialSet& X, int i, const Cochain& c) {
    int j = c.degree;
    int out_deg = std::max(i + j, 0);
    Cochain out = Cochain::zero(X, out_deg);
    if (i < 0 || i > j) return out;
    const std::vector<SqTerm>& words = sq_words(i, j);
    if (out_deg >= int(X.gens_by_dim.size())) return out;
    for (int32_t g : X.gens_by_dim[size_t(out_deg)]) {
        SimplexRef x = X.ref(g);
        Z2 acc;
        for (const SqTerm& t : words)
            acc += pairing(c, apply_word(X, t.word_first, x)) *
                   pairing(c, apply_word(X, t.word_second, x));
        out.values[size_t(g)] = acc.v;
    }
    return out;
}

Z2 sq_slow_value(const SimplicialSet& X, int i, const Cochain& c, const SimplexRef& x) {
    int j = c.degree;
    if (i < 0 || i > j) return Z2(0);
    if (x.dim() != i + j) throw word_error("sq_slow_value: simplex dimension must be i + deg(c)");
    Chain<Z2> d = h_slow<Z2>(X, X, j - i, x, x);
    Z2 acc;
    for (const auto& [k, coeff] : d.terms) acc += coeff * pairing(c, k[0]) * pairing(c, k[1]);
    return acc;
}

TermCount term_count(int i, int j) {
    TermCount tc;
    for (const SqTerm& t : sq_words(i, j)) {
        tc.summands += 1;
        tc.face_ops +=
            uint64_t(mask_count(t.word_first.faces) + mask_count(t.word_second.faces));
    }
    return tc;
}

template Chain<Z> diagonal<Z>(const Complex&, const SimplexRef&, int);
template Chain<Z2> diagonal<Z2>(const Complex&, const SimplexRef&, int);
template Chain<Z> rotate_t<Z>(const Complex&, const Chain<Z>&);
template Chain<Z2> rotate_t<Z2>(const Complex&, const Chain<Z2>&);
template Chain<Z> rotate_T<Z>(const Complex&, const Chain<Z>&);
template Chain<Z2> rotate_T<Z2>(const Complex&, const Chain<Z2>&);
template Chain<Z> h_slow<Z>(const SimplicialSet&, const SimplicialSet&, int, const SimplexRef&,
                            const SimplexRef&);
template Chain<Z2> h_slow<Z2>(const SimplicialSet&, const SimplicialSet&, int, const SimplexRef&,
                              const SimplexRef&);
template Chain<Z> h_fast<Z>(const SimplicialSet&, const SimplicialSet&, int, const SimplexRef&,
                            const SimplexRef&);
template Chain<Z2> h_fast<Z2>(const SimplicialSet&, const SimplicialSet&, int, const SimplexRef&,
                              const SimplexRef&);
template Chain<Z> big_d<Z>(const SimplicialSet&, int, const SimplexRef&, Mode);
template Chain<Z2> big_d<Z2>(const SimplicialSet&, int, const SimplexRef&, Mode);

} // namespace steenrod
