#pragma once

// Test-only utilities: small-graph enumeration, random fixtures, and naive
// oracles kept independent of the library's bit-packed implementations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "msnum/gf2.hpp"
#include "msnum/graph.hpp"
#include "msnum/quadform.hpp"

namespace testutil {

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Labeled graph from a bitmask over vertex pairs (i<j in row-major order).
inline msnum::Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    msnum::Graph g(n);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

template <typename F>
void for_each_labeled_graph(std::size_t n, F&& fn) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        fn(graph_from_mask(n, mask));
    }
}

inline msnum::Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    msnum::Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() & 1) g.add_edge(i, j);
        }
    }
    return g;
}

// Uniform random attachment: vertex i > 0 links to a uniform earlier vertex.
inline msnum::Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    msnum::Graph g(n);
    for (std::size_t i = 1; i < n; ++i) {
        g.add_edge(i, rng() % i);
    }
    return g;
}

inline msnum::QuadraticPolynomial random_polynomial(std::size_t n, std::mt19937_64& rng) {
    msnum::QuadraticPolynomial f(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng() & 1) f.set_quad(i, j, true);
        }
        if (rng() & 1) f.set_linear(i, true);
    }
    f.set_constant(rng() & 1);
    return f;
}

inline msnum::gf2::BitVector bits_from_u64(std::size_t n, std::uint64_t v) {
    msnum::gf2::BitVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x.set(i, (v >> i) & 1);
    }
    return x;
}

// Per-bit Gaussian elimination on int rows; no word packing anywhere.
inline std::size_t naive_rank(const msnum::gf2::BitMatrix& m) {
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = m.get(i, j) ? 1 : 0;
        }
    }
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows()) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && a[i][col] == 1) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

// Exhaustive minimum vertex cover, subsets in population order.
inline std::size_t brute_min_vertex_cover(const msnum::Graph& g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = n;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        bool covers = true;
        for (std::size_t i = 0; i < n && covers; ++i) {
            for (std::size_t j = i + 1; j < n && covers; ++j) {
                if (g.has_edge(i, j) && !((subset >> i) & 1) && !((subset >> j) & 1)) {
                    covers = false;
                }
            }
        }
        if (covers) {
            best = std::min<std::size_t>(best, std::popcount(subset));
        }
    }
    return best;
}

// Definition-level weight oracle: counts x with f(x)=1 via direct evaluation.
inline std::uint64_t definition_weight(const msnum::QuadraticPolynomial& f) {
    const std::size_t n = f.variable_count();
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        if (f.evaluate(bits_from_u64(n, v))) ++count;
    }
    return count;
}

// Isomorph-free labeled-graph representatives for small n: canonical form =
// minimum pair bitmask over all vertex permutations. Stands in for an
// external isomorph-free generator.
inline std::vector<std::uint64_t> isomorph_free_masks(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> pair_maps;  // per permutation: old bit -> new bit
    auto pair_index = [n](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        // bits are laid out row-major over i<j
        std::size_t idx = 0;
        for (std::size_t r = 0; r < i; ++r) idx += n - 1 - r;
        return idx + (j - i - 1);
    };
    do {
        std::vector<std::size_t> map(pair_count(n));
        std::size_t bit = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++bit) {
                map[bit] = pair_index(perm[i], perm[j]);
            }
        }
        pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> reps;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t canon = mask;
        for (const auto& map : pair_maps) {
            std::uint64_t image = 0;
            for (std::size_t bit = 0; bit < map.size(); ++bit) {
                if ((mask >> bit) & 1) image |= std::uint64_t{1} << map[bit];
            }
            canon = std::min(canon, image);
        }
        if (canon == mask) reps.push_back(mask);
    }
    return reps;
}

}  // namespace testutil
