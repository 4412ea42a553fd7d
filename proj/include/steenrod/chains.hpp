#pragma once

#include "steenrod/simplicial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

namespace steenrod {

struct Z2 {
    uint8_t v = 0;
    constexpr Z2() = default;
    constexpr Z2(int x) : v(uint8_t(x & 1)) {}
    constexpr Z2 operator+(Z2 o) const { return Z2(v ^ o.v); }
    constexpr Z2 operator-(Z2 o) const { return Z2(v ^ o.v); }
    constexpr Z2 operator-() const { return *this; }
    constexpr Z2 operator*(Z2 o) const { return Z2(v & o.v); }
    Z2& operator+=(Z2 o) {
        v ^= o.v;
        return *this;
    }
    friend constexpr bool operator==(Z2, Z2) = default;
};
inline bool is_zero(Z2 r) { return r.v == 0; }
inline bool is_zero(long long r) { return r == 0; }

using Z = long long;

// Tensor keys are flat tuples of simplices; the factor structure (how slots
// group into tensor factors) lives in the Complex descriptor. Capacity 8
// covers p-fold products up to p = 8 without heap traffic.
constexpr int max_slots = 8;

struct Key {
    uint8_t n = 0;
    std::array<SimplexRef, max_slots> s{};

    void push(const SimplexRef& r) {
        if (n >= max_slots) throw word_error("tensor key slot overflow");
        s[n++] = r;
    }
    const SimplexRef& operator[](int i) const { return s[size_t(i)]; }
    SimplexRef& operator[](int i) { return s[size_t(i)]; }
    int size() const { return n; }
    friend auto operator<=>(const Key&, const Key&) = default;
};

inline Key single_key(const SimplexRef& a) {
    Key k;
    k.push(a);
    return k;
}
inline Key pair_key(const SimplexRef& a, const SimplexRef& b) {
    Key k;
    k.push(a);
    k.push(b);
    return k;
}

// A chain complex descriptor: a tensor product of factors, each factor the
// normalized chains of a product of simplicial sets. slots lists the product
// components in order; widths splits them into tensor factors.
struct Complex {
    std::vector<const SimplicialSet*> slots;
    std::vector<int> widths;

    static Complex product(std::vector<const SimplicialSet*> sets) {
        Complex c;
        c.widths = {int(sets.size())};
        c.slots = std::move(sets);
        return c;
    }
    static Complex tensor(const std::vector<Complex>& parts) {
        Complex c;
        for (const Complex& p : parts) {
            c.slots.insert(c.slots.end(), p.slots.begin(), p.slots.end());
            c.widths.insert(c.widths.end(), p.widths.begin(), p.widths.end());
        }
        return c;
    }
    int slot_count() const { return int(slots.size()); }
    int factor_count() const { return int(widths.size()); }
    int factor_offset(int f) const {
        int off = 0;
        for (int i = 0; i < f; ++i) off += widths[size_t(i)];
        return off;
    }
    // all slots of one factor have equal dim; a key is degenerate iff some
    // factor's slots share a common outermost degeneracy letter
    bool key_degenerate(const Key& k) const {
        int off = 0;
        for (int w : widths) {
            Mask common = ~Mask(0);
            for (int i = 0; i < w; ++i) common &= k[off + i].degen;
            if (common) return true;
            off += w;
        }
        return false;
    }
    int degree(const Key& k) const {
        int d = 0, off = 0;
        for (int w : widths) {
            d += k[off].dim();
            off += w;
        }
        return d;
    }
    friend bool operator==(const Complex&, const Complex&) = default;
};

template <class R>
struct Chain {
    std::vector<std::pair<Key, R>> terms; // sorted by key, unique, nonzero

    bool empty() const { return terms.empty(); }
    size_t size() const { return terms.size(); }
    friend bool operator==(const Chain&, const Chain&) = default;

    Chain& operator+=(const Chain& o) {
        if (o.empty()) return *this;
        std::vector<std::pair<Key, R>> merged;
        merged.reserve(terms.size() + o.terms.size());
        auto a = terms.begin(), b = o.terms.begin();
        while (a != terms.end() && b != o.terms.end()) {
            if (a->first < b->first)
                merged.push_back(*a++);
            else if (b->first < a->first)
                merged.push_back(*b++);
            else {
                R c = a->second + b->second;
                if (!is_zero(c)) merged.emplace_back(a->first, c);
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), a, terms.end());
        merged.insert(merged.end(), b, o.terms.end());
        terms = std::move(merged);
        return *this;
    }
    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r += o;
        return r;
    }
    Chain scaled(R c) const {
        Chain r;
        if (is_zero(c)) return r;
        r.terms = terms;
        for (auto& [k, v] : r.terms) v = v * c;
        return r;
    }
};

template <class R>
R ring_sign(int exponent) {
    if constexpr (std::is_same_v<R, Z2>)
        return Z2(1);
    else
        return (exponent & 1) ? R(-1) : R(1);
}

// Staging buffer: collect raw terms, drop degenerate keys eagerly, then sort
// and combine once.
template <class R>
struct ChainBuilder {
    const Complex* cx = nullptr;
    std::vector<std::pair<Key, R>> buf;

    explicit ChainBuilder(const Complex& c) : cx(&c) {}
    explicit ChainBuilder(Complex&&) = delete; // the descriptor must outlive the builder
    void emit(const Key& k, R coeff) {
        if (is_zero(coeff) || cx->key_degenerate(k)) return;
        buf.emplace_back(k, coeff);
    }
    Chain<R> finalize() {
        std::sort(buf.begin(), buf.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Chain<R> out;
        out.terms.reserve(buf.size());
        for (auto& [k, c] : buf) {
            if (!out.terms.empty() && out.terms.back().first == k)
                out.terms.back().second += c;
            else
                out.terms.emplace_back(k, c);
        }
        std::erase_if(out.terms, [](const auto& t) { return is_zero(t.second); });
        buf.clear();
        return out;
    }
};

template <class R>
Chain<R> make_chain(const Complex& cx, const Key& k, R coeff = R(1)) {
    ChainBuilder<R> b(cx);
    b.emit(k, coeff);
    return b.finalize();
}

// linear extension of a basis-element map
template <class R, class F>
Chain<R> apply_linear(const Chain<R>& c, F&& on_basis) {
    Chain<R> out;
    for (const auto& [k, coeff] : c.terms) out += on_basis(k).scaled(coeff);
    return out;
}

// Differential of the tensor product of normalized product complexes:
// alternating sum of componentwise-diagonal faces within each factor, with
// the Koszul sign of the factors passed over.
template <class R>
Chain<R> differential(const Complex& cx, const Chain<R>& c) {
    ChainBuilder<R> b(cx);
    for (const auto& [key, coeff] : c.terms) {
        int off = 0, deg_before = 0;
        for (int f = 0; f < cx.factor_count(); ++f) {
            int w = cx.widths[size_t(f)];
            int d = key[off].dim();
            for (int i = 0; i <= d && d > 0; ++i) {
                Key k2 = key;
                for (int s = 0; s < w; ++s)
                    k2[off + s] = apply_face(*cx.slots[size_t(off + s)], i, key[off + s]);
                b.emit(k2, coeff * ring_sign<R>(deg_before + i));
            }
            deg_before += d;
            off += w;
        }
    }
    return b.finalize();
}

// Z2-valued cochain on the nondegenerate generators of one degree
struct Cochain {
    int degree = 0;
    std::vector<uint8_t> values; // indexed by generator id, only this degree used

    static Cochain zero(const SimplicialSet& X, int degree) {
        Cochain c;
        c.degree = degree;
        c.values.assign(size_t(X.gen_count()), 0);
        return c;
    }
    static Cochain indicator(const SimplicialSet& X, int32_t gen) {
        Cochain c = zero(X, X.dim_of(gen));
        c.values[size_t(gen)] = 1;
        return c;
    }
    Z2 operator()(int32_t gen) const { return Z2(values[size_t(gen)]); }
    Cochain operator+(const Cochain& o) const {
        Cochain r = *this;
        for (size_t i = 0; i < values.size(); ++i) r.values[i] ^= o.values[i];
        return r;
    }
    bool zero_cochain() const {
        for (uint8_t v : values)
            if (v) return false;
        return true;
    }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

// <c, x> with the zero convention on degree mismatch or degenerate x
Z2 pairing(const Cochain& c, const SimplexRef& x);
Z2 pairing(const Cochain& c, const Chain<Z2>& x);

Chain<Z> boundary(const SimplicialSet& X, const SimplexRef& x);
Cochain coboundary(const SimplicialSet& X, const Cochain& c);

} // namespace steenrod
