#include "perfectlike/config.hpp"

#include <atomic>
#include <string>

#include "perfectlike/errors.hpp"

namespace perfectlike {

namespace {
std::atomic<std::uint64_t> g_budget{std::uint64_t(1) << 28};
}

std::uint64_t vertex_budget() { return g_budget.load(); }

void set_vertex_budget(std::uint64_t budget) {
    if (budget == 0) throw parameter_error("vertex budget must be positive");
    g_budget.store(budget);
}

std::uint64_t space_size(int q, int n) {
    if (q < 2 || n < 0) throw parameter_error("bad (q,n) for space size");
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > UINT64_MAX / std::uint64_t(q))
            throw parameter_error("q^n overflows 64 bits");
        r *= std::uint64_t(q);
    }
    return r;
}

std::uint64_t checked_space_size(int q, int n) {
    std::uint64_t s = space_size(q, n);
    if (s > vertex_budget())
        throw budget_error("q^n = " + std::to_string(s) +
                           " exceeds the vertex budget " +
                           std::to_string(vertex_budget()));
    return s;
}

std::uint64_t sat_mul_u64(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

} // namespace perfectlike
