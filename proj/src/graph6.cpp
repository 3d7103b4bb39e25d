#include "exg/graph6.hpp"

#include <cstdint>

namespace exg {

namespace {

constexpr char kHeader[] = ">>graph6<<";

int char_value(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126) throw InputError(std::string("invalid graph6 character '") + c + "'");
    return v - 63;
}

}  // namespace

VertexWeightedGraph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(kHeader, 0) == 0) s = s.substr(sizeof(kHeader) - 1);
    if (s.empty()) throw InputError("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (s[pos] != '~') {
        n = static_cast<std::uint64_t>(char_value(s[pos]));
        pos += 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw InputError("malformed graph6 length field");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(char_value(s[static_cast<std::size_t>(k)]));
        pos = 4;
    } else {
        if (s.size() < 8) throw InputError("malformed graph6 length field");
        n = 0;
        for (int k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::uint64_t>(char_value(s[static_cast<std::size_t>(k)]));
        pos = 8;
    }
    if (n > 100000) throw InputError("graph6 order too large");

    const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != nchars)
        throw InputError("graph6 body has " + std::to_string(s.size() - pos) + " characters, expected " +
                         std::to_string(nchars));

    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    int cur = 0, cur_bits = 0;
    std::size_t ci = pos;
    for (int j = 1; j < static_cast<int>(n); ++j) {
        for (int i = 0; i < j; ++i) {
            if (cur_bits == 0) {
                cur = char_value(s[ci++]);
                cur_bits = 6;
            }
            if (cur & (1 << (cur_bits - 1))) edges.emplace_back(i, j);
            --cur_bits;
            ++bit;
        }
    }
    // Padding bits of the final character must be zero.
    if (cur_bits > 0 && (cur & ((1 << cur_bits) - 1)) != 0)
        throw InputError("nonzero padding bits in graph6 string");

    return VertexWeightedGraph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_graph6(const VertexWeightedGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw InputError("graph too large for graph6 encoder");
    }
    int cur = 0, cur_bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                cur_bits = 0;
            }
        }
    }
    if (cur_bits > 0) out.push_back(static_cast<char>((cur << (6 - cur_bits)) + 63));
    return out;
}

}  // namespace exg
