#include "msnum/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <utility>

namespace msnum {

namespace {

std::string with_offset(const std::string& message, std::size_t offset) {
    return message + " (byte " + std::to_string(offset) + ")";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(with_offset(message, offset)), offset(offset) {}

Graph::Graph(std::size_t n) : adj_(n, gf2::BitVector(n)) {}

void Graph::check_vertex(std::size_t v) const {
    if (v >= adj_.size()) {
        throw std::out_of_range("Graph: vertex out of range");
    }
}

void Graph::check_edge_ends(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("Graph: loops are not allowed");
    }
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& row : adj_) total += row.popcount();
    return total / 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return adj_[u].get(v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_edge_ends(u, v);
    adj_[u].set(v, true);
    adj_[v].set(u, true);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    check_edge_ends(u, v);
    adj_[u].set(v, false);
    adj_[v].set(u, false);
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
    check_edge_ends(u, v);
    adj_[u].flip(v);
    adj_[v].flip(u);
}

std::size_t Graph::degree(std::size_t v) const {
    check_vertex(v);
    return adj_[v].popcount();
}

const gf2::BitVector& Graph::neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
}

gf2::BitMatrix Graph::adjacency_matrix() const {
    gf2::BitMatrix m(vertex_count(), vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        m.row(i) = adj_[i];
    }
    return m;
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t graph6_data_bytes(std::size_t n) {
    const std::size_t bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    std::size_t end = text.size();
    while (pos < end && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (text.substr(pos).starts_with(kGraph6Header)) {
        pos += kGraph6Header.size();
    }
    if (pos >= end) throw ParseError("graph6: empty record", pos);

    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= end) throw ParseError("graph6: record truncated", i);
        const unsigned b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126) throw ParseError("graph6: byte out of range", i);
        return b;
    };

    // Order field: 1, 4 ("~" + 3) or 8 ("~~" + 6) bytes.
    std::size_t n = 0;
    if (byte_at(pos) == 126) {
        std::size_t count = 3;
        std::size_t start = pos + 1;
        if (byte_at(pos + 1) == 126) {
            count = 6;
            start = pos + 2;
        }
        for (std::size_t i = 0; i < count; ++i) {
            n = (n << 6) | (byte_at(start + i) - 63);
        }
        pos = start + count;
    } else {
        n = byte_at(pos) - 63;
        ++pos;
    }
    if (n > gf2::kMaxDimension) throw ParseError("graph6: order exceeds supported maximum", pos);

    const std::size_t data_bytes = n >= 2 ? graph6_data_bytes(n) : 0;
    if (end - pos < data_bytes) throw ParseError("graph6: record truncated", end);
    if (end - pos > data_bytes) throw ParseError("graph6: trailing garbage", pos + data_bytes);

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            const unsigned b = byte_at(pos + bit / 6) - 63;
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero or the encoding would not round-trip.
    for (; bit < data_bytes * 6; ++bit) {
        const unsigned b = byte_at(pos + bit / 6) - 63;
        if ((b >> (5 - bit % 6)) & 1) {
            throw ParseError("graph6: nonzero padding bit", pos + bit / 6);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out += static_cast<char>(((n >> shift) & 63) + 63);
        }
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int shift = 30; shift >= 0; shift -= 6) {
            out += static_cast<char>(((n >> shift) & 63) + 63);
        }
    }
    unsigned group = 0;
    std::size_t filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out += static_cast<char>(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        group <<= (6 - filled);
        out += static_cast<char>(group + 63);
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    struct Token {
        std::size_t value;
        std::size_t offset;
    };
    std::vector<Token> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        std::size_t value = 0;
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("edge list: expected a nonnegative integer", pos);
        }
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (value > gf2::kMaxDimension) {
                throw ParseError("edge list: value out of range", start);
            }
            ++pos;
        }
        tokens.push_back({value, start});
    }
    if (tokens.empty()) throw ParseError("edge list: missing vertex count", 0);
    if (tokens.size() % 2 == 0) {
        throw ParseError("edge list: dangling edge endpoint", tokens.back().offset);
    }

    Graph g(tokens[0].value);
    for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
        const auto& [u, u_off] = tokens[i];
        const auto& [v, v_off] = tokens[i + 1];
        if (u == v) throw ParseError("edge list: loop edge", u_off);
        if (u >= g.vertex_count()) throw ParseError("edge list: vertex out of range", u_off);
        if (v >= g.vertex_count()) throw ParseError("edge list: vertex out of range", v_off);
        g.add_edge(u, v);
    }
    return g;
}

Graph induced_subgraph(const Graph& g, std::vector<std::size_t> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (std::size_t v : keep) {
        if (v >= g.vertex_count()) {
            throw std::out_of_range("induced_subgraph: vertex out of range");
        }
    }
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (g.has_edge(keep[i], keep[j])) h.add_edge(i, j);
        }
    }
    return h;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::deque<std::size_t> queue;
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.push_back(start);
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t u = 0; u < n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < n; ++v) {
        (color[v] == 0 ? parts.side_a : parts.side_b).push_back(v);
    }
    return parts;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.vertex_count();
    Graph g(n1 + g2.vertex_count());
    for (std::size_t u = 0; u < n1; ++u) {
        for (std::size_t v = u + 1; v < n1; ++v) {
            if (g1.has_edge(u, v)) g.add_edge(u, v);
        }
    }
    for (std::size_t u = 0; u < g2.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g2.vertex_count(); ++v) {
            if (g2.has_edge(u, v)) g.add_edge(n1 + u, n1 + v);
        }
    }
    return g;
}

Graph local_complement(const Graph& g, std::size_t v) {
    const std::size_t n = g.vertex_count();
    if (v >= n) throw std::out_of_range("local_complement: vertex out of range");
    Graph out = g;
    const gf2::BitVector hood = g.neighbors(v);
    for (std::size_t i = 0; i < n; ++i) {
        if (!hood.get(i)) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (hood.get(j)) out.toggle_edge(i, j);
        }
    }
    return out;
}

Graph pivot(const Graph& g, std::size_t u, std::size_t v) {
    if (!g.has_edge(u, v)) {
        throw std::invalid_argument("pivot: {u,v} is not an edge");
    }
    return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph pivot_minor_delete(const Graph& g, std::size_t u, std::size_t v) {
    const Graph pivoted = pivot(g, u, v);
    std::vector<std::size_t> keep;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        if (w != u && w != v) keep.push_back(w);
    }
    return induced_subgraph(pivoted, keep);
}

bool is_tree(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    if (g.edge_count() != n - 1) return false;
    // Connectivity check.
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u = 0; u < n; ++u) {
            if (g.has_edge(v, u) && !seen[u]) {
                seen[u] = true;
                ++visited;
                queue.push_back(u);
            }
        }
    }
    return visited == n;
}

std::size_t tree_vertex_cover_number(const Graph& g) {
    if (!is_tree(g)) {
        throw std::invalid_argument("tree_vertex_cover_number: input is not a tree");
    }
    const std::size_t n = g.vertex_count();
    // Iterative rooted DP: in[v] = cover size with v included,
    // out[v] = cover size with v excluded (children then forced in).
    std::vector<std::size_t> order, parent(n, n);
    order.reserve(n);
    order.push_back(0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t v = order[head];
        for (std::size_t u = 0; u < n; ++u) {
            if (g.has_edge(v, u) && !seen[u]) {
                seen[u] = true;
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    std::vector<std::size_t> in(n, 1), out(n, 0);
    for (std::size_t i = order.size(); i-- > 0;) {
        const std::size_t v = order[i];
        if (parent[v] != n) {
            in[parent[v]] += std::min(in[v], out[v]);
            out[parent[v]] += in[v];
        }
    }
    return std::min(in[0], out[0]);
}

}  // namespace msnum
