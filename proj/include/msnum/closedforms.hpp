#pragma once

#include <cstddef>

#include "msnum/graph.hpp"
#include "msnum/quadform.hpp"

// Closed-form MS-number evaluators for familiar graph families plus the
// disjoint-union recursion. Implemented with plain binomial/power arithmetic,
// independent of the reduction pipeline, so the two routes cross-check each
// other.

namespace msnum::closedforms {

// w(K_n) = sum_i binom(n+1, 4i+3), n >= 1.
BigInt w_complete(std::size_t n);

// 2^{n-1} - 2^{(n-1)/2} (odd n) or 2^{n-1} - 2^{(n-2)/2} (even n), n >= 1.
BigInt w_path(std::size_t n);

// 2^{n-1} (odd n) or 2^{n-1} - 2^{n/2} (even n), n >= 3.
BigInt w_cycle(std::size_t n);

// 2^{n-2}, n >= 2.
BigInt w_star(std::size_t n);

// 2^{p+q-2}, p, q >= 1.
BigInt w_complete_bipartite(std::size_t p, std::size_t q);

// Maximum over all graphs of order n: 2^{n-1} + 2^{n-3}, n >= 4.
BigInt w_qmax(std::size_t n);

// 2^{n-1}(1 - 2^{-tau}) via the tree cover DP; rejects non-trees.
BigInt w_tree(const Graph& t);

// w(G1 u G2) = w1*(2^{n2} - w2) + (2^{n1} - w1)*w2.
BigInt union_weight(const BigInt& w1, std::size_t n1, const BigInt& w2, std::size_t n2);

// Family constructors (test fixtures and the CLI formula subcommand).
Graph make_complete(std::size_t n);
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t n);
Graph make_complete_bipartite(std::size_t p, std::size_t q);
// K_4 plus n-4 isolated vertices, n >= 4.
Graph make_qn(std::size_t n);

}  // namespace msnum::closedforms
