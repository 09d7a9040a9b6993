#include "msnum/closedforms.hpp"

#include <stdexcept>

namespace msnum::closedforms {

namespace {

BigInt pow2(std::size_t e) {
    BigInt x = 1;
    x <<= static_cast<unsigned>(e);
    return x;
}

BigInt binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned long>(n - i);
        r /= static_cast<unsigned long>(i + 1);
    }
    return r;
}

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

BigInt w_complete(std::size_t n) {
    require(n >= 1, "w_complete: n must be >= 1");
    BigInt w = 0;
    for (std::size_t i = 0; 4 * i + 3 <= n + 1; ++i) {
        w += binom(n + 1, 4 * i + 3);
    }
    return w;
}

BigInt w_path(std::size_t n) {
    require(n >= 1, "w_path: n must be >= 1");
    if (n == 1) return 0;
    if (n % 2 == 1) return pow2(n - 1) - pow2((n - 1) / 2);
    return pow2(n - 1) - pow2((n - 2) / 2);
}

BigInt w_cycle(std::size_t n) {
    require(n >= 3, "w_cycle: n must be >= 3");
    if (n % 2 == 1) return pow2(n - 1);
    return pow2(n - 1) - pow2(n / 2);
}

BigInt w_star(std::size_t n) {
    require(n >= 2, "w_star: n must be >= 2");
    return pow2(n - 2);
}

BigInt w_complete_bipartite(std::size_t p, std::size_t q) {
    require(p >= 1 && q >= 1, "w_complete_bipartite: p and q must be >= 1");
    return pow2(p + q - 2);
}

BigInt w_qmax(std::size_t n) {
    require(n >= 4, "w_qmax: n must be >= 4");
    return pow2(n - 1) + pow2(n - 3);
}

BigInt w_tree(const Graph& t) {
    const std::size_t tau = tree_vertex_cover_number(t);
    const std::size_t n = t.vertex_count();
    return pow2(n - 1) - pow2(n - 1 - tau);
}

BigInt union_weight(const BigInt& w1, std::size_t n1, const BigInt& w2, std::size_t n2) {
    require(w1 >= 0 && w1 <= pow2(n1), "union_weight: w1 out of range");
    require(w2 >= 0 && w2 <= pow2(n2), "union_weight: w2 out of range");
    return w1 * (pow2(n2) - w2) + (pow2(n1) - w1) * w2;
}

Graph make_complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph make_path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(std::size_t n) {
    require(n >= 3, "make_cycle: n must be >= 3");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_star(std::size_t n) {
    require(n >= 1, "make_star: n must be >= 1");
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph make_complete_bipartite(std::size_t p, std::size_t q) {
    Graph g(p + q);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) g.add_edge(i, p + j);
    }
    return g;
}

Graph make_qn(std::size_t n) {
    require(n >= 4, "make_qn: n must be >= 4");
    return disjoint_union(make_complete(4), Graph(n - 4));
}

}  // namespace msnum::closedforms
