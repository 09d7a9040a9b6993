#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Dense GF(2) linear algebra on bit-packed rows.
//
// Bit order is little-endian within 64-bit words (bit i of a vector lives at
// word i/64, position i%64); matrices are row-major. Bits beyond the logical
// length are kept zero so whole-word comparisons and popcounts are valid.

namespace msnum::gf2 {

inline constexpr std::size_t kMaxDimension = std::size_t{1} << 15;

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    // Parses a string of '0'/'1' characters.
    static BitVector from_string(const std::string& s);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    // Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVector& other) const;

    std::size_t popcount() const;
    bool any() const;
    bool parity() const;

    // Index of the lowest set bit, or -1 when the vector is zero.
    long lowest_set() const;

    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const BitVector&) const = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // Parses one '0'/'1' string per row; rows must have equal length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    void append_row(BitVector row);
    void swap_rows(std::size_t a, std::size_t b);
    // rows_[dst] ^= rows_[src]
    void add_row_into(std::size_t src, std::size_t dst);

    BitMatrix transpose() const;

    // One '0'/'1' string per row, newline separated, trailing newline.
    std::string dump() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::size_t rank(BitMatrix m);

// Throws std::invalid_argument on non-square input.
bool is_nonsingular(const BitMatrix& m);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);
BitVector vec_add(const BitVector& x, const BitVector& y);

// Block diagonal with m/2 blocks [[0,1],[1,0]]; m must be even.
BitMatrix pair_form_matrix(std::size_t m);

struct SymplecticDecomposition {
    BitMatrix c;       // m x n, full row rank
    std::size_t rank;  // m, always even
};

// Decomposes a symmetric zero-diagonal matrix A as C^T N_m C with
// N_m = pair_form_matrix(m) and m = rank(A). Greedy hyperbolic-pair
// extraction: repeatedly take the first nonzero row u = A e_a, its first
// partner v = A e_b with u_b = 1, record the pair, and cancel
// u v^T + v u^T from the residual.
SymplecticDecomposition symplectic_decompose(const BitMatrix& a);

}  // namespace msnum::gf2
