#include "opl/graph6.hpp"

#include <sstream>

namespace opl {

namespace {

constexpr int kBias = 63;     // printable offset
constexpr int kMaxChar = 126;

int decode_size(const std::string& text, size_t& pos) {
    if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxChar) throw ParseError("bad graph6 byte", pos);
    if (c != 126) {
        ++pos;
        return c - kBias;
    }
    // '~' prefix: 18-bit order in the next three bytes (258047 max).
    if (pos + 3 >= text.size()) throw ParseError("truncated graph6 order", text.size());
    if (text[pos + 1] == '~')
        throw ParseError("graph6 orders above 258047 unsupported", pos + 1);
    int n = 0;
    for (size_t i = 1; i <= 3; ++i) {
        unsigned char b = static_cast<unsigned char>(text[pos + i]);
        if (b < kBias || b > kMaxChar) throw ParseError("bad graph6 byte", pos + i);
        n = (n << 6) | (b - kBias);
    }
    pos += 4;
    return n;
}

Graph parse_g6(const std::string& text) {
    size_t pos = 0;
    int n = decode_size(text, pos);
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) throw ParseError("truncated graph6 body", text.size());
    if (text.size() - pos > body) throw ParseError("trailing bytes after graph6 body", pos + body);
    std::vector<Edge> edges;
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            unsigned char c = static_cast<unsigned char>(text[pos + bit / 6]);
            if (c < kBias || c > kMaxChar) throw ParseError("bad graph6 byte", pos + bit / 6);
            if ((c - kBias) & (1 << (5 - bit % 6))) edges.emplace_back(u, v);
        }
    // Padding bits must be zero.
    for (; bit < body * 6; ++bit) {
        unsigned char c = static_cast<unsigned char>(text[pos + bit / 6]);
        if ((c - kBias) & (1 << (5 - bit % 6)))
            throw ParseError("nonzero graph6 padding", pos + bit / 6);
    }
    return Graph::from_edges(n, edges);
}

std::string write_g6(const Graph& g) {
    int n = g.n();
    if (n > 258047) throw std::domain_error("graph6 orders above 258047 unsupported");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<int> groups((bits + 5) / 6, 0);
    size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) groups[bit / 6] |= 1 << (5 - bit % 6);
    for (int grp : groups) out.push_back(static_cast<char>(grp + kBias));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1;
    if (!(in >> n) || n < 0) throw ParseError("edge-list header must be a vertex count", 0);
    std::vector<Edge> edges;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge-list has dangling endpoint", text.size());
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge-list vertex out of range", static_cast<size_t>(in.tellg()));
        if (u == v) throw ParseError("edge-list self-loop", static_cast<size_t>(in.tellg()));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw ParseError("edge-list has non-numeric data", static_cast<size_t>(in.tellg()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n());
    for (auto [u, v] : g.edges())
        out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_g6(text) : parse_edge_list(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? write_g6(g) : write_edge_list(g);
}

std::vector<Graph> parse_graph6_stream(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_g6(line));
    }
    return out;
}

std::string write_graph6_stream(const std::vector<Graph>& graphs) {
    std::string out;
    for (const auto& g : graphs) out += write_g6(g) + "\n";
    return out;
}

}  // namespace opl
