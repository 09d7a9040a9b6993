#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "msnum/graph.hpp"
#include "msnum/quadform.hpp"

// Graph-state level quantities: MS-numbers, amplitude sign vectors, the exact
// Walsh-Hadamard spectrum, bent detection, and Schmidt rank of bipartite
// graph states.
//
// Basis convention: basis string x is indexed by its integer value with x_1
// as the most significant bit.

namespace msnum {

inline constexpr std::size_t kStateQubitCap = 20;

struct AmplitudeVector {
    std::size_t n = 0;
    std::vector<std::int8_t> signs;  // +1 / -1, 2^n entries

    std::size_t minus_count() const;
    // '+'/'-' per entry in index order.
    std::string sign_string() const;
};

// Spectral coefficients w.r.t. the unitary WHT, stored exactly: entry i has
// value numerators[i] * 2^{-n/2}.
struct SpectrumVector {
    std::size_t n = 0;
    std::vector<std::int64_t> numerators;

    // "num/2^(n/2)" exact text for one coefficient.
    std::string coefficient_text(std::size_t i) const;
};

struct ReadonceDescriptor {
    std::size_t m = 0;
    ReadonceKind kind = ReadonceKind::type_two;
    bool z = false;
    std::size_t n_total = 0;
};

// Number of -1 amplitudes of |G>; equals the weight of the graph's form.
BigInt ms_number(const Graph& g);

// 2^n - ms_number(G).
BigInt plus_number(const Graph& g);

AmplitudeVector amplitudes(const Graph& g);

SpectrumVector wht_spectrum(const QuadraticPolynomial& f);

// Bent iff n is even and the spectrum is flat away from order zero with
// f*_0 = 2^{(n-2)/2} +- 1/2; odd n returns false.
bool is_bent(const QuadraticPolynomial& f);

struct RankBentResult {
    std::size_t rank = 0;
    bool bent = false;
};

// Both sides of the maximum-rank/bent correspondence, computed independently.
RankBentResult max_rank_bent_check(const Graph& g);

// brank(G)/2; rejects non-bipartite input.
std::size_t schmidt_rank_bipartite(const Graph& g);

// 2^{n-1}(1 - 2^{-r}), exactly.
BigInt ms_from_schmidt(std::size_t n, std::size_t r);

ReadonceDescriptor readonce_descriptor(const Graph& g);

}  // namespace msnum
