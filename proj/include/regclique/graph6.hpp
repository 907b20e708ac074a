#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regclique/graph.hpp"

namespace regclique {

class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::size_t byte, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(byte) + ": " + what),
          byte_(byte) {}

    std::size_t byte_offset() const { return byte_; }

private:
    std::size_t byte_;
};

namespace g6_detail {

inline constexpr std::string_view kHeader = ">>graph6<<";

inline int value_at(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw Graph6ParseError(pos, "truncated");
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6ParseError(pos, "byte out of range 63..126");
    return c - 63;
}

}  // namespace g6_detail

// One graph6 line, optionally prefixed by the ">>graph6<<" header.
// Strict: every byte is validated, padding bits must be zero, and no
// trailing bytes are allowed. Byte offsets in errors refer to the input
// string as given.
inline Graph parse_graph6(std::string_view text) {
    using g6_detail::value_at;
    std::size_t pos = 0;
    if (text.substr(0, g6_detail::kHeader.size()) == g6_detail::kHeader)
        pos = g6_detail::kHeader.size();

    if (pos >= text.size()) throw Graph6ParseError(pos, "truncated");

    long long n = 0;
    int first = value_at(text, pos);
    if (first < 63) {
        n = first;
        ++pos;
    } else {  // first == 63, i.e. byte 126
        ++pos;
        if (value_at(text, pos) == 63) {  // 126 126: 36-bit order
            ++pos;
            for (int i = 0; i < 6; ++i, ++pos) n = (n << 6) | value_at(text, pos);
        } else {  // 126: 18-bit order
            for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | value_at(text, pos);
        }
    }
    if (n == 0) throw Graph6ParseError(pos, "zero-vertex graph not representable");

    const long long nbits = n * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int i = 0, j = 1;
    for (long long b = 0; b < nbytes; ++b, ++pos) {
        int group = value_at(text, pos);
        for (int k = 5; k >= 0; --k, ++bit) {
            int x = (group >> k) & 1;
            if (bit < nbits) {
                if (x) edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (x) {
                throw Graph6ParseError(pos, "non-zero padding");
            }
        }
    }
    if (pos != text.size()) throw Graph6ParseError(pos, "trailing data");
    return Graph(static_cast<int>(n), edges);
}

// Deterministic graph6 encoding, no header.
inline std::string emit_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

}  // namespace regclique
