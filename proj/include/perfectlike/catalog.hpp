#ifndef PERFECTLIKE_CATALOG_HPP
#define PERFECTLIKE_CATALOG_HPP

#include <array>

#include "perfectlike/code.hpp"

namespace perfectlike {

// The embedded 16x16 class-label grid of the non-lengthenable partition of
// H(4,4) into sixteen (4,16,3)_4 MDS codes, labels 0..15 (A..F = 10..15).
const std::array<std::array<std::uint8_t, 16>, 16>& embedded_h44_grid();

// Decodes grid cell (r,c) to the word (r/4, r%4, c/4, c%4) in class T[r][c]
// and self-validates: 16 MDS classes of size 16 partitioning H(4,4).
// A validation failure would indicate a wrong indexing convention and aborts
// with semantics_error.
Partition load_embedded_partition();

} // namespace perfectlike

#endif
