#ifndef PERFECTLIKE_CONFIG_HPP
#define PERFECTLIKE_CONFIG_HPP

#include <cstdint>

namespace perfectlike {

// Maximum number of vertices q^n a full-space operation may touch.
// Default 2^28; overridable via set_vertex_budget (the CLI also honors the
// PERFECTLIKE_BUDGET environment variable).
std::uint64_t vertex_budget();
void set_vertex_budget(std::uint64_t budget);

// q^n as uint64, throwing parameter_error on overflow.
std::uint64_t space_size(int q, int n);

// Throws budget_error when q^n exceeds the vertex budget; returns q^n.
std::uint64_t checked_space_size(int q, int n);

// Saturating multiply: cardinalities of deep oracle constructions can exceed
// 64 bits; UINT64_MAX then means "too large to represent".
std::uint64_t sat_mul_u64(std::uint64_t a, std::uint64_t b);

} // namespace perfectlike

#endif
