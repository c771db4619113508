// Timing comparison of the OpenMP kernels against their serial references:
// radius-1 coverage counts, distance maps, and minimum distance. The two
// implementations must agree bit-for-bit; this tool asserts that too.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "perfectlike/code.hpp"
#include "perfectlike/construct.hpp"
#include "perfectlike/verify.hpp"

using namespace perfectlike;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = clk::now();
    f();
    auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

Code random_code(int q, int n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uint64_t space = 1;
    for (int i = 0; i < n; ++i) space *= std::uint64_t(q);
    std::vector<Word> ws;
    ws.reserve(m);
    for (std::size_t k = 0; k < m; ++k) ws.push_back(Word::from_rank(q, n, rng() % space));
    return Code(q, n, std::move(ws));
}

} // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());

    Code h = hamming_code(3, 3).materialize(); // (13, 3^10, 3)
    Code sh = shorten(h, h.n(), 0);            // (12, 3^9, 3)

    std::vector<std::uint32_t> cs, cp;
    double t_cs = time_ms([&] { cs = coverage_counts(sh, false); });
    double t_cp = time_ms([&] { cp = coverage_counts(sh, true); });
    std::printf("coverage_counts (12,3^9): serial %.1f ms, parallel %.1f ms, equal %d\n",
                t_cs, t_cp, int(cs == cp));

    std::vector<std::uint8_t> ds, dp;
    double t_ds = time_ms([&] { ds = distance_map(sh, false); });
    double t_dp = time_ms([&] { dp = distance_map(sh, true); });
    std::printf("distance_map    (12,3^9): serial %.1f ms, parallel %.1f ms, equal %d\n",
                t_ds, t_dp, int(ds == dp));

    Code r = random_code(4, 10, 20000, 17);
    int d1 = 0, d2 = 0;
    double t_m1 = time_ms([&] {
        d1 = 99;
        const auto& ws = r.words();
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = i + 1; j < ws.size(); ++j) {
                int d = distance(ws[i], ws[j]);
                if (d < d1) d1 = d;
            }
    });
    double t_m2 = time_ms([&] { d2 = min_distance(r); });
    std::printf("min_distance (20000 words): serial %.1f ms, parallel %.1f ms, equal %d\n",
                t_m1, t_m2, int(d1 == d2));

    return (cs == cp && ds == dp && d1 == d2) ? 0 : 1;
}
