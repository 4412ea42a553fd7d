#pragma once

#include "steenrod/diagonal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace steenrod {

// One benchmark row: Sq^i on a degree-(i+k) cochain over a (2i+k)-sphere.
// Counts come from the closed-form expansion; times are medians of >= 5
// evaluations and are informational only (machine-dependent).
struct BenchRecord {
    int i = 0;
    int k = 0;
    uint64_t summands = 0;
    uint64_t face_ops = 0;
    uint64_t bound = 0; // 2i(i+1)^k
    double wall_time_slow_ms = 0.0;
    double wall_time_fast_ms = 0.0;
};

std::vector<BenchRecord> run_bench(int max_i, int max_k);
std::string bench_csv(const std::vector<BenchRecord>& rows);

// face-operator applications performed by one fast and one slow evaluation
// of Sq^i on a degree-(i+k) cochain over the minimal (2i+k)-sphere
struct OpCountPair {
    uint64_t fast = 0;
    uint64_t slow = 0;
};
OpCountPair counted_ops(int i, int k);

} // namespace steenrod
