#include "qsl/graph6.hpp"

#include <sstream>

namespace qsl {

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw capability_error("graph6 short form supports n <= 62, got n=" + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bitpos = 0;
    int chunk = 0;
    auto push_bit = [&](int b) {
        chunk = (chunk << 1) | b;
        if (++bitpos == 6) {
            out.push_back(static_cast<char>(chunk + 63));
            bitpos = 0;
            chunk = 0;
        }
    };
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) push_bit(g.has_edge(u, v) ? 1 : 0);
    if (bitpos > 0) {
        chunk <<= (6 - bitpos);  // zero padding on the right
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

Graph decode_graph6(const std::string& s) {
    if (s.empty()) throw parse_error("empty graph6 string", 0);
    unsigned char head = static_cast<unsigned char>(s[0]);
    if (head == 126)
        throw parse_error("extended graph6 length forms are not supported", 0);
    if (head < 63 || head > 125)
        throw parse_error("header byte out of graph6 range", 0);
    int n = head - 63;
    long long bits_needed = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() < 1 + bytes_needed)
        throw parse_error("truncated graph6 string: need " + std::to_string(1 + bytes_needed) +
                              " bytes, got " + std::to_string(s.size()),
                          s.size());
    if (s.size() > 1 + bytes_needed)
        throw parse_error("trailing bytes after graph6 payload", 1 + bytes_needed);

    std::vector<Edge> edges;
    long long bit = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw parse_error("payload byte out of graph6 range", i);
        int chunk = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            int value = (chunk >> b) & 1;
            if (bit >= bits_needed) {
                if (value != 0) throw parse_error("nonzero padding bits", i);
                continue;
            }
            if (value) {
                // Recover (u, v) with u < v from the column-wise position.
                long long pos = bit;
                int v = 1;
                while (pos >= v) pos -= v, ++v;
                edges.push_back({static_cast<int>(pos), v});
            }
        }
    }
    return Graph(n, edges);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace qsl
