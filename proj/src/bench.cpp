#include "steenrod/bench.hpp"

#include "steenrod/spaces.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace steenrod {

namespace {

uint64_t pow_u64(uint64_t base, int exp) {
    uint64_t r = 1;
    for (int e = 0; e < exp; ++e) r *= base;
    return r;
}

template <class Fn>
double median_ms(Fn&& fn, int reps = 5) {
    std::vector<double> samples;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

} // namespace

std::vector<BenchRecord> run_bench(int max_i, int max_k) {
    std::vector<BenchRecord> rows;
    for (int i = 1; i <= max_i; ++i)
        for (int k = 0; k <= max_k; ++k) {
            int j = i + k, m = 2 * i + k;
            if (m + 2 > max_letter) continue;
            SimplicialSet X = load_space("sphere-" + std::to_string(m) + "-minimal");
            Cochain c = Cochain::zero(X, j);
            SimplexRef cell = X.ref(X.gens_by_dim[size_t(m)].front());
            BenchRecord row;
            row.i = i;
            row.k = k;
            TermCount tc = term_count(i, j);
            row.summands = tc.summands;
            row.face_ops = tc.face_ops;
            row.bound = 2 * uint64_t(i) * pow_u64(uint64_t(i) + 1, k);
            sq_words(i, j); // warm the word cache so timings measure evaluation
            row.wall_time_fast_ms = median_ms([&] { sq(X, i, c); });
            row.wall_time_slow_ms = median_ms([&] { sq_slow_value(X, i, c, cell); });
            rows.push_back(row);
        }
    return rows;
}

std::string bench_csv(const std::vector<BenchRecord>& rows) {
    std::ostringstream os;
    os << "i,k,summands,face_ops,bound,wall_time_slow_ms,wall_time_fast_ms\n";
    os.setf(std::ios::fixed);
    os.precision(6);
    for (const BenchRecord& r : rows)
        os << r.i << "," << r.k << "," << r.summands << "," << r.face_ops << "," << r.bound << ","
           << r.wall_time_slow_ms << "," << r.wall_time_fast_ms << "\n";
    return os.str();
}

OpCountPair counted_ops(int i, int k) {
    int j = i + k, m = 2 * i + k;
    SimplicialSet X = load_space("sphere-" + std::to_string(m) + "-minimal");
    Cochain c = Cochain::zero(X, j);
    SimplexRef cell = X.ref(X.gens_by_dim[size_t(m)].front());
    sq_words(i, j);
    OpCountPair out;
    reset_face_ops();
    sq(X, i, c);
    out.fast = face_ops();
    reset_face_ops();
    sq_slow_value(X, i, c, cell);
    out.slow = face_ops();
    return out;
}

} // namespace steenrod
