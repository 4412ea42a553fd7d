#include "steenrod/cohomology.hpp"

namespace steenrod {

namespace {

int word_count(int cols) { return (cols + 63) / 64; }

bool bit_at(const std::vector<uint64_t>& v, int i) { return (v[size_t(i >> 6)] >> (i & 63)) & 1; }

void flip_bit(std::vector<uint64_t>& v, int i) { v[size_t(i >> 6)] ^= uint64_t(1) << (i & 63); }

void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
    for (size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

bool all_zero(const std::vector<uint64_t>& v) {
    for (uint64_t w : v)
        if (w) return false;
    return true;
}

int lowest_bit(const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < v.size(); ++w)
        if (v[w]) return int(w * 64) + std::countr_zero(v[w]);
    return -1;
}

int gens_in_dim(const SimplicialSet& X, int d) {
    if (d < 0 || d >= int(X.gens_by_dim.size())) return 0;
    return int(X.gens_by_dim[size_t(d)].size());
}

} // namespace

Gf2Matrix Gf2Matrix::zero(int r, int c) {
    Gf2Matrix m;
    m.rows = r;
    m.cols = c;
    m.bits.assign(size_t(r), std::vector<uint64_t>(size_t(word_count(c)), 0));
    return m;
}

void Gf2Matrix::set(int r, int c, bool v) {
    uint64_t mask = uint64_t(1) << (c & 63);
    if (v)
        bits[size_t(r)][size_t(c >> 6)] |= mask;
    else
        bits[size_t(r)][size_t(c >> 6)] &= ~mask;
}

bool Gf2Matrix::get(int r, int c) const { return bit_at(bits[size_t(r)], c); }

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix m = zero(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (get(r, c)) m.set(c, r);
    return m;
}

int Gf2Matrix::rank() const {
    std::vector<std::vector<uint64_t>> work = bits;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (bit_at(work[size_t(r)], c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[size_t(pivot)], work[size_t(rk)]);
        for (int r = 0; r < rows; ++r)
            if (r != rk && bit_at(work[size_t(r)], c)) xor_into(work[size_t(r)], work[size_t(rk)]);
        ++rk;
    }
    return rk;
}

std::vector<uint64_t> Gf2Matrix::apply(const std::vector<uint64_t>& v) const {
    std::vector<uint64_t> out(size_t(word_count(rows)), 0);
    for (int r = 0; r < rows; ++r) {
        uint64_t acc = 0;
        for (size_t w = 0; w < bits[size_t(r)].size(); ++w) acc ^= bits[size_t(r)][w] & v[w];
        if (std::popcount(acc) & 1) flip_bit(out, r);
    }
    return out;
}

std::vector<std::vector<uint64_t>> Gf2Matrix::kernel_basis() const {
    std::vector<std::vector<uint64_t>> work = bits;
    std::vector<int> pivot_of_row;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r)
            if (bit_at(work[size_t(r)], c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(work[size_t(pivot)], work[size_t(rk)]);
        for (int r = 0; r < rows; ++r)
            if (r != rk && bit_at(work[size_t(r)], c)) xor_into(work[size_t(r)], work[size_t(rk)]);
        pivot_of_row.push_back(c);
        ++rk;
    }
    std::vector<bool> is_pivot(size_t(cols), false);
    for (int c : pivot_of_row) is_pivot[size_t(c)] = true;
    std::vector<std::vector<uint64_t>> out;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[size_t(c)]) continue;
        std::vector<uint64_t> v(size_t(word_count(cols)), 0);
        flip_bit(v, c);
        for (int r = 0; r < rk; ++r)
            if (bit_at(work[size_t(r)], c)) flip_bit(v, pivot_of_row[size_t(r)]);
        out.push_back(std::move(v));
    }
    return out;
}

Gf2Matrix delta_matrix(const SimplicialSet& X, int p) {
    int nc = gens_in_dim(X, p), nr = gens_in_dim(X, p + 1);
    Gf2Matrix m = Gf2Matrix::zero(nr, nc);
    if (nr == 0 || nc == 0) return m;
    std::vector<int> col_of(size_t(X.gen_count()), -1);
    for (int c = 0; c < nc; ++c) col_of[size_t(X.gens_by_dim[size_t(p)][size_t(c)])] = c;
    for (int r = 0; r < nr; ++r) {
        int32_t g = X.gens_by_dim[size_t(p) + 1][size_t(r)];
        for (int k = 0; k <= p + 1; ++k) {
            const SimplexRef& f = X.face(g, k);
            if (f.degenerate()) continue;
            int c = col_of[size_t(f.gen)];
            m.set(r, c, !m.get(r, c));
        }
    }
    return m;
}

Gf2Matrix boundary_matrix(const SimplicialSet& X, int p) {
    int nc = gens_in_dim(X, p), nr = gens_in_dim(X, p - 1);
    Gf2Matrix m = Gf2Matrix::zero(nr, nc);
    if (nr == 0 || nc == 0) return m;
    std::vector<int> row_of(size_t(X.gen_count()), -1);
    for (int r = 0; r < nr; ++r) row_of[size_t(X.gens_by_dim[size_t(p) - 1][size_t(r)])] = r;
    for (int c = 0; c < nc; ++c) {
        int32_t g = X.gens_by_dim[size_t(p)][size_t(c)];
        for (int k = 0; k <= p; ++k) {
            const SimplexRef& f = X.face(g, k);
            if (f.degenerate()) continue;
            int r = row_of[size_t(f.gen)];
            m.set(r, c, !m.get(r, c));
        }
    }
    return m;
}

std::vector<uint64_t> cochain_bits(const SimplicialSet& X, const Cochain& c) {
    int n = gens_in_dim(X, c.degree);
    std::vector<uint64_t> v(size_t(word_count(n)), 0);
    for (int i = 0; i < n; ++i)
        if (c.values[size_t(X.gens_by_dim[size_t(c.degree)][size_t(i)])]) flip_bit(v, i);
    return v;
}

Cochain bits_to_cochain(const SimplicialSet& X, int degree, const std::vector<uint64_t>& bits) {
    Cochain c = Cochain::zero(X, degree);
    int n = gens_in_dim(X, degree);
    for (int i = 0; i < n; ++i)
        if (bit_at(bits, i)) c.values[size_t(X.gens_by_dim[size_t(degree)][size_t(i)])] = 1;
    return c;
}

namespace {

// append `vec` to the row collection if independent; every row is zero at the
// pivots of all earlier rows, so one in-order pass decomposes any span member.
// Earlier rows are never touched: a row tagged as a coboundary stays a genuine
// coboundary, which class_of relies on when it skips rep_index < 0 rows.
bool insert_reduced(std::vector<CohomologyBasis::Row>& rows, std::vector<uint64_t> vec,
                    int rep_index) {
    for (const CohomologyBasis::Row& r : rows)
        if (bit_at(vec, r.pivot)) xor_into(vec, r.bits);
    if (all_zero(vec)) return false;
    CohomologyBasis::Row nr;
    nr.pivot = lowest_bit(vec);
    nr.bits = std::move(vec);
    nr.rep_index = rep_index;
    rows.push_back(std::move(nr));
    return true;
}

} // namespace

CohomologyBasis cohomology_basis(const SimplicialSet& X, int p) {
    CohomologyBasis b;
    b.degree = p;
    if (gens_in_dim(X, p) == 0) return b;
    // coboundary rows first
    if (p > 0) {
        int nprev = gens_in_dim(X, p - 1);
        Gf2Matrix prev = delta_matrix(X, p - 1);
        for (int c = 0; c < nprev; ++c) {
            std::vector<uint64_t> unit(size_t(word_count(nprev)), 0);
            flip_bit(unit, c);
            insert_reduced(b.rows, prev.apply(unit), -1);
        }
    }
    // then kernel vectors; the survivors are the representatives
    Gf2Matrix del = delta_matrix(X, p);
    int next_rep = 0;
    for (std::vector<uint64_t>& k : del.kernel_basis())
        if (insert_reduced(b.rows, std::move(k), next_rep)) ++next_rep;
    b.reps.resize(size_t(next_rep));
    for (const CohomologyBasis::Row& r : b.rows)
        if (r.rep_index >= 0) b.reps[size_t(r.rep_index)] = bits_to_cochain(X, p, r.bits);
    return b;
}

std::optional<std::vector<uint8_t>> class_of(const SimplicialSet& X, const CohomologyBasis& basis,
                                             const Cochain& c) {
    if (!coboundary(X, c).zero_cochain()) return std::nullopt;
    std::vector<uint64_t> v = cochain_bits(X, c);
    std::vector<uint8_t> coords(basis.reps.size(), 0);
    for (const CohomologyBasis::Row& r : basis.rows)
        if (bit_at(v, r.pivot)) {
            if (r.rep_index >= 0) coords[size_t(r.rep_index)] = 1;
            xor_into(v, r.bits);
        }
    if (!all_zero(v)) throw word_error("class_of: cocycle outside span of kernel basis");
    return coords;
}

namespace {

Cochain rep_combination(const CohomologyBasis& b, const SimplicialSet& X,
                        const std::vector<uint8_t>& cls) {
    if (cls.size() != b.reps.size()) throw word_error("class coordinates of wrong length");
    Cochain c = Cochain::zero(X, b.degree);
    for (size_t i = 0; i < cls.size(); ++i)
        if (cls[i]) c = c + b.reps[i];
    return c;
}

} // namespace

std::vector<uint8_t> sq_on_cohomology(const SimplicialSet& X, int i, int j,
                                      const std::vector<uint8_t>& cls) {
    CohomologyBasis src = cohomology_basis(X, j);
    CohomologyBasis dst = cohomology_basis(X, i + j);
    Cochain image = sq(X, i, rep_combination(src, X, cls));
    std::optional<std::vector<uint8_t>> out = class_of(X, dst, image);
    if (!out) throw word_error("sq_on_cohomology: square of a cocycle is not a cocycle");
    return *out;
}

std::vector<std::vector<uint8_t>> sq_matrix(const SimplicialSet& X, int i, int j) {
    CohomologyBasis src = cohomology_basis(X, j);
    std::vector<std::vector<uint8_t>> cols;
    for (int c = 0; c < src.dim(); ++c) {
        std::vector<uint8_t> unit(size_t(src.dim()), 0);
        unit[size_t(c)] = 1;
        cols.push_back(sq_on_cohomology(X, i, j, unit));
    }
    return cols;
}

std::vector<uint8_t> cup_on_cohomology(const SimplicialSet& X, int p,
                                       const std::vector<uint8_t>& cls1, int q,
                                       const std::vector<uint8_t>& cls2) {
    CohomologyBasis b1 = cohomology_basis(X, p);
    CohomologyBasis b2 = cohomology_basis(X, q);
    CohomologyBasis dst = cohomology_basis(X, p + q);
    Cochain prod =
        cup_i_cochain(X, 0, rep_combination(b1, X, cls1), rep_combination(b2, X, cls2));
    std::optional<std::vector<uint8_t>> out = class_of(X, dst, prod);
    if (!out) throw word_error("cup_on_cohomology: product of cocycles is not a cocycle");
    return *out;
}

Z2 cup_direct(const SimplicialSet& X, const Cochain& c, const Cochain& cp, const SimplexRef& x) {
    int p = c.degree, q = cp.degree;
    if (x.dim() != p + q) throw word_error("cup_direct: simplex dimension must be deg + deg");
    SimplexRef front = x;
    for (int k = x.dim(); k > p; --k) front = apply_face(X, k, front);
    SimplexRef back = x;
    for (int k = p - 1; k >= 0; --k) back = apply_face(X, k, back);
    return pairing(c, front) * pairing(cp, back);
}

Cochain cup_direct_cochain(const SimplicialSet& X, const Cochain& c, const Cochain& cp) {
    int deg = c.degree + cp.degree;
    Cochain out = Cochain::zero(X, deg);
    for (int g = 0; g < X.gen_count(); ++g)
        if (X.dim_of(g) == deg) out.values[size_t(g)] = cup_direct(X, c, cp, X.ref(g)).v;
    return out;
}

std::vector<int> betti_numbers(const SimplicialSet& X, int max_dim) {
    std::vector<int> out;
    int prev_rank = 0;
    for (int p = 0; p <= max_dim; ++p) {
        Gf2Matrix del = delta_matrix(X, p);
        int rk = del.rank();
        out.push_back(gens_in_dim(X, p) - rk - prev_rank);
        prev_rank = rk;
    }
    return out;
}

std::vector<int> betti_via_boundary_ranks(const SimplicialSet& X, int max_dim) {
    std::vector<int> out;
    for (int p = 0; p <= max_dim; ++p) {
        int r_down = boundary_matrix(X, p).transposed().rank();
        int r_up = boundary_matrix(X, p + 1).transposed().rank();
        out.push_back(gens_in_dim(X, p) - r_down - r_up);
    }
    return out;
}

} // namespace steenrod
