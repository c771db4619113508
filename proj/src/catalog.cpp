#include "perfectlike/catalog.hpp"

#include "perfectlike/verify.hpp"

namespace perfectlike {

namespace {

// Rows top to bottom, columns left to right; A..F = 10..15.
constexpr const char* kGrid[16] = {
    "0123 4567 89AB CDEF",
    "FE76 103A 24DC 9B85",
    "A8B9 EFCD 5601 3742",
    "DC54 B298 73FE 6A10",
    "67FE A301 DC45 28B9",
    "3510 7624 BA98 EFCD",
    "42DC 895B FE37 01A6",
    "9B8A CDEF 1062 5473",
    "BA98 FEDC 3270 1654",
    "CD42 58B9 61EF A307",
    "7065 2413 9B8A DCFE",
    "EF31 07A6 45CD 892B",
    "54CD 9B82 EF16 703A",
    "89AB DCFE 0753 4261",
    "13EF 6A70 CD24 B598",
    "2607 3145 A8B9 FEDC",
};

int hex_label(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    return 10 + (c - 'A');
}

} // namespace

const std::array<std::array<std::uint8_t, 16>, 16>& embedded_h44_grid() {
    static const auto grid = [] {
        std::array<std::array<std::uint8_t, 16>, 16> g{};
        for (int r = 0; r < 16; ++r) {
            int c = 0;
            for (const char* p = kGrid[r]; *p; ++p) {
                if (*p == ' ') continue;
                g[r][c++] = std::uint8_t(hex_label(*p));
            }
        }
        return g;
    }();
    return grid;
}

Partition load_embedded_partition() {
    const auto& g = embedded_h44_grid();
    std::vector<std::vector<Word>> classes(16);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 16; ++c) {
            Word w(4, {r / 4, r % 4, c / 4, c % 4});
            classes[g[r][c]].push_back(w);
        }
    Partition p;
    p.q = 4;
    p.n = 4;
    p.full_space_ambient = true;
    for (int i = 0; i < 16; ++i) {
        p.classes.emplace_back(4, 4, std::move(classes[i]));
        p.labels.push_back(i < 10 ? std::string(1, char('0' + i))
                                  : std::string(1, char('A' + i - 10)));
    }
    // Self-validation: a transcription or indexing mistake fails loudly here.
    p.validate();
    for (const Code& c : p.classes) {
        if (c.size() != 16 || !is_mds(c) || c.min_dist() != 3)
            throw semantics_error("embedded H(4,4) partition failed MDS self-validation");
    }
    return p;
}

} // namespace perfectlike
