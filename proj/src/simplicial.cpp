#include "steenrod/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace steenrod {

namespace {
thread_local uint64_t tl_face_ops = 0;
}

uint64_t face_ops() { return tl_face_ops; }
void reset_face_ops() { tl_face_ops = 0; }

int32_t SimplicialSet::gen_id(const std::string& gname) const {
    for (int32_t g = 0; g < gen_count(); ++g)
        if (gen_names[size_t(g)] == gname) return g;
    throw word_error("unknown generator '" + gname + "' in " + name);
}

// Push d_k through the degeneracy word of x, largest letter first:
//   letter > k:      d_k s_j = s_{j-1} d_k
//   letter in {k, k-1}: d_k s_j = 1, the face is absorbed
//   letter < k-1:    d_k s_j = s_j d_{k-1}
// If the face survives all letters it lands on the generator and the
// face_table is consulted; the accumulated letters stack back on top.
SimplexRef apply_face(const SimplicialSet& X, int k, const SimplexRef& x) {
    ++tl_face_ops;
    int d = x.dim();
    if (d == 0 || k < 0 || k > d)
        throw word_error("face index " + std::to_string(k) + " out of range at dim " +
                         std::to_string(d));
    Mask j = x.degen;
    Mask out = 0;
    int g = k;
    while (j) {
        int l = 31 - std::countl_zero(j);
        if (l > g) {
            out |= bit(l - 1);
            j ^= bit(l);
        } else if (l == g || l + 1 == g) {
            j ^= bit(l);
            return SimplexRef{x.gen, x.gen_dim, out | j};
        } else {
            out |= bit(l);
            j ^= bit(l);
            --g;
        }
    }
    const SimplexRef& y = X.face(x.gen, g);
    Mask m = y.degen;
    for (Mask o = out; o;) {
        int l = std::countr_zero(o);
        m = degen_insert(m, l);
        o ^= bit(l);
    }
    return SimplexRef{y.gen, y.gen_dim, m};
}

SimplexRef apply_degeneracy(int k, const SimplexRef& x) {
    if (k < 0 || k > x.dim())
        throw word_error("degeneracy index " + std::to_string(k) + " out of range at dim " +
                         std::to_string(x.dim()));
    if (x.dim() >= max_letter - 1)
        throw word_error("dimension overflow in degeneracy application");
    return SimplexRef{x.gen, x.gen_dim, degen_insert(x.degen, k)};
}

SimplexRef apply_word(const SimplicialSet& X, const OperatorWord& w, const SimplexRef& x) {
    if (x.dim() != w.src_dim)
        throw word_error("word source dim " + std::to_string(w.src_dim) +
                         " applied to dim " + std::to_string(x.dim()));
    SimplexRef r = x;
    for (Mask f = w.faces; f;) {
        int k = 31 - std::countl_zero(f);
        r = apply_face(X, k, r);
        f ^= bit(k);
    }
    for (Mask s = w.degen; s;) {
        int k = std::countr_zero(s);
        r = apply_degeneracy(k, r);
        s ^= bit(k);
    }
    return r;
}

Mask word_letters(const OperatorWord& w, Mask letters) {
    for (Mask f = w.faces; f;) {
        int k = 31 - std::countl_zero(f);
        f ^= bit(k);
        Mask j = letters, out = 0;
        int g = k;
        bool absorbed = false;
        while (j) {
            int l = 31 - std::countl_zero(j);
            if (l > g) {
                out |= bit(l - 1);
                j ^= bit(l);
            } else if (l == g || l + 1 == g) {
                j ^= bit(l);
                out |= j;
                absorbed = true;
                break;
            } else {
                out |= bit(l);
                j ^= bit(l);
                --g;
            }
        }
        (void)absorbed; // generator targets contribute no letters here
        letters = out;
    }
    for (Mask s = w.degen; s;) {
        int k = std::countr_zero(s);
        letters = degen_insert(letters, k);
        s ^= bit(k);
    }
    return letters;
}

// Accumulate symbols one at a time onto a canonical word. A degeneracy is a
// degen_insert; a face is pushed through the degeneracy letters as in
// apply_face, and a surviving face merges into the face part: its index is in
// post-deletion coordinates, so it shifts past already-deleted vertices.
OperatorWord normalize_word(const std::vector<OpSymbol>& raw, int src_dim) {
    if (src_dim < 0 || src_dim >= max_letter)
        throw word_error("source dimension out of range");
    OperatorWord w{0, 0, src_dim};
    int cur = src_dim;
    for (const OpSymbol& sym : raw) {
        if (!sym.is_face) {
            if (sym.index < 0 || sym.index > cur)
                throw word_error("degeneracy index " + std::to_string(sym.index) +
                                 " out of range at dim " + std::to_string(cur));
            w.degen = degen_insert(w.degen, sym.index);
            ++cur;
            continue;
        }
        if (cur == 0 || sym.index < 0 || sym.index > cur)
            throw word_error("face index " + std::to_string(sym.index) +
                             " out of range at dim " + std::to_string(cur));
        --cur;
        Mask j = w.degen, out = 0;
        int g = sym.index;
        bool absorbed = false;
        while (j) {
            int l = 31 - std::countl_zero(j);
            if (l > g) {
                out |= bit(l - 1);
                j ^= bit(l);
            } else if (l == g || l + 1 == g) {
                j ^= bit(l);
                out |= j;
                absorbed = true;
                break;
            } else {
                out |= bit(l);
                j ^= bit(l);
                --g;
            }
        }
        w.degen = out;
        if (absorbed) continue;
        // shift the face index past already-deleted vertices, smallest first
        for (Mask f = w.faces; f;) {
            int l = std::countr_zero(f);
            f ^= bit(l);
            if (g >= l)
                ++g;
            else
                break;
        }
        w.faces |= bit(g);
    }
    return w;
}

std::vector<std::string> validate(const SimplicialSet& X) {
    std::vector<std::string> report;
    for (int32_t g = 0; g < X.gen_count(); ++g) {
        int d = X.dim_of(g);
        SimplexRef x = X.ref(g);
        for (int jj = 1; jj <= d; ++jj)
            for (int ii = 0; ii < jj; ++ii) {
                if (d < 2) continue; // both sides land in dimension d-2
                SimplexRef lhs = apply_face(X, ii, apply_face(X, jj, x));
                SimplexRef rhs = apply_face(X, jj - 1, apply_face(X, ii, x));
                if (lhs != rhs)
                    report.push_back("generator '" + X.gen_names[size_t(g)] + "': d_" +
                                     std::to_string(ii) + " d_" + std::to_string(jj) +
                                     " != d_" + std::to_string(jj - 1) + " d_" +
                                     std::to_string(ii));
            }
    }
    return report;
}

SimplicialSet from_ordered_complex(const std::vector<std::string>& vertices,
                                   const std::vector<std::vector<int>>& facets,
                                   std::string name) {
    std::vector<std::set<std::vector<int>>> tuples; // [d] -> sorted vertex tuples
    auto add_with_subtuples = [&](const std::vector<int>& t) {
        std::vector<std::vector<int>> stack{t};
        while (!stack.empty()) {
            std::vector<int> cur = stack.back();
            stack.pop_back();
            int d = int(cur.size()) - 1;
            if (int(tuples.size()) <= d) tuples.resize(size_t(d) + 1);
            if (!tuples[size_t(d)].insert(cur).second) continue;
            for (size_t k = 0; k < cur.size() && cur.size() > 1; ++k) {
                std::vector<int> f = cur;
                f.erase(f.begin() + long(k));
                stack.push_back(f);
            }
        }
    };
    for (const auto& facet : facets) {
        if (facet.empty()) throw word_error("empty facet");
        for (size_t k = 0; k < facet.size(); ++k) {
            if (facet[k] < 0 || facet[k] >= int(vertices.size()))
                throw word_error("facet vertex index out of range");
            if (k > 0 && facet[k] <= facet[k - 1])
                throw word_error("facet is not strictly increasing");
        }
        add_with_subtuples(facet);
    }

    SimplicialSet X;
    X.name = std::move(name);
    std::map<std::vector<int>, int32_t> id_of;
    for (size_t d = 0; d < tuples.size(); ++d) {
        X.gens_by_dim.emplace_back();
        for (const auto& t : tuples[d]) {
            int32_t id = X.gen_count();
            id_of[t] = id;
            std::string nm;
            for (size_t k = 0; k < t.size(); ++k) {
                if (k) nm += ',';
                nm += vertices[size_t(t[k])];
            }
            X.gen_names.push_back(nm);
            X.gen_dims.push_back(int32_t(d));
            X.gens_by_dim[d].push_back(id);
        }
    }
    X.top_dim = int(tuples.size()) - 1;
    X.face_table.resize(size_t(X.gen_count()));
    for (const auto& [t, id] : id_of) {
        if (t.size() == 1) continue;
        auto& row = X.face_table[size_t(id)];
        for (size_t k = 0; k < t.size(); ++k) {
            std::vector<int> f = t;
            f.erase(f.begin() + long(k));
            int32_t fid = id_of.at(f);
            row.push_back(SimplexRef{fid, int32_t(t.size()) - 2, 0});
        }
    }
    for (int32_t v : X.gens_by_dim[0]) X.face_table[size_t(v)].clear();
    return X;
}

SimplicialSet from_face_table(const std::vector<GenSpec>& gens,
                              const std::vector<std::vector<FaceSpec>>& faces,
                              std::string name) {
    if (gens.size() != faces.size()) throw word_error("face list count != generator count");
    SimplicialSet X;
    X.name = std::move(name);
    std::map<std::string, int32_t> id_of;
    int maxd = 0;
    for (const auto& gs : gens) maxd = std::max(maxd, gs.dim);
    X.gens_by_dim.resize(size_t(maxd) + 1);
    X.top_dim = maxd;
    for (const auto& gs : gens) {
        if (gs.dim < 0) throw word_error("negative generator dimension");
        if (id_of.count(gs.name)) throw word_error("duplicate generator '" + gs.name + "'");
        int32_t id = X.gen_count();
        id_of[gs.name] = id;
        X.gen_names.push_back(gs.name);
        X.gen_dims.push_back(gs.dim);
        X.gens_by_dim[size_t(gs.dim)].push_back(id);
    }
    X.face_table.resize(size_t(X.gen_count()));
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int d = gens[gi].dim;
        if (d == 0) {
            if (!faces[gi].empty()) throw word_error("vertex with face entries");
            continue;
        }
        if (int(faces[gi].size()) != d + 1)
            throw word_error("generator '" + gens[gi].name + "' needs " + std::to_string(d + 1) +
                             " faces");
        for (const FaceSpec& fs : faces[gi]) {
            auto it = id_of.find(fs.target);
            if (it == id_of.end()) throw word_error("unknown face target '" + fs.target + "'");
            Mask m = 0;
            int prev = max_letter;
            for (int l : fs.degeneracies) {
                if (l < 0 || l >= prev)
                    throw word_error("degeneracy word not strictly decreasing on '" +
                                     gens[gi].name + "'");
                prev = l;
                m |= bit(l);
            }
            SimplexRef t{it->second, gens[size_t(it->second)].dim, m};
            if (t.dim() != d - 1)
                throw word_error("face of '" + gens[gi].name + "' has dim " +
                                 std::to_string(t.dim()) + ", expected " + std::to_string(d - 1));
            if (t.degenerate()) X.faces_nondegenerate = false;
            X.face_table[gi].push_back(t);
        }
    }
    return X;
}

namespace {
void enum_words(int gdim, int missing, int next_letter, Mask acc, std::vector<Mask>& out) {
    if (missing == 0) {
        out.push_back(acc);
        return;
    }
    // next letter l is applied at dimension gdim + popcount(acc): l <= that dim
    int limit = gdim + std::popcount(acc);
    for (int l = next_letter; l <= limit; ++l)
        enum_words(gdim, missing - 1, l + 1, acc | bit(l), out);
}
} // namespace

std::vector<SimplexRef> simplices_of_dim(const SimplicialSet& X, int m) {
    std::vector<SimplexRef> out;
    for (int g = 0; g <= m && g < int(X.gens_by_dim.size()); ++g) {
        for (int32_t id : X.gens_by_dim[size_t(g)]) {
            std::vector<Mask> words;
            enum_words(g, m - g, 0, 0, words);
            std::sort(words.begin(), words.end());
            for (Mask w : words) out.push_back(SimplexRef{id, int32_t(g), w});
        }
    }
    return out;
}

} // namespace steenrod
