#include "msnum/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace msnum::gf2 {

namespace {

std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

void check_dimension(std::size_t d) {
    if (d > kMaxDimension) {
        throw std::invalid_argument("gf2: dimension exceeds 2^15 cap");
    }
}

}  // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {
    check_dimension(len);
}

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            v.set(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVector::get");
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void BitVector::set(std::size_t i, bool v) {
    if (i >= len_) throw std::out_of_range("BitVector::set");
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("BitVector::flip");
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (len_ != other.len_) {
        throw std::invalid_argument("BitVector::operator^=: length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

bool BitVector::dot(const BitVector& other) const {
    if (len_ != other.len_) {
        throw std::invalid_argument("BitVector::dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return true;
    }
    return false;
}

bool BitVector::parity() const { return popcount() & 1; }

long BitVector::lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return static_cast<long>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
        }
    }
    return -1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    check_dimension(rows);
    check_dimension(cols);
    rows_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& r : rows) m.append_row(BitVector::from_string(r));
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (!rows_.empty() && row.size() != cols_) {
        throw std::invalid_argument("BitMatrix::append_row: column count mismatch");
    }
    cols_ = row.size();
    rows_.push_back(std::move(row));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    std::swap(rows_[a], rows_[b]);
}

void BitMatrix::add_row_into(std::size_t src, std::size_t dst) {
    rows_[dst] ^= rows_[src];
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) t.set(j, i, true);
        }
    }
    return t;
}

std::string BitMatrix::dump() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

std::size_t rank(BitMatrix m) {
    // Forward elimination; pivot = first row at/below the cursor with a one
    // in the current column.
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.get(i, col)) m.add_row_into(r, i);
        }
        ++r;
    }
    return r;
}

bool is_nonsingular(const BitMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("is_nonsingular: matrix is not square");
    }
    return rank(m) == m.cols();
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.get(i, k)) out.row(i) ^= b.row(k);
        }
    }
    return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    BitVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        y.set(i, a.row(i).dot(x));
    }
    return y;
}

BitVector vec_add(const BitVector& x, const BitVector& y) {
    BitVector z = x;
    z ^= y;
    return z;
}

BitMatrix pair_form_matrix(std::size_t m) {
    if (m % 2 != 0) {
        throw std::invalid_argument("pair_form_matrix: m must be even");
    }
    BitMatrix n(m, m);
    for (std::size_t i = 0; i + 1 < m; i += 2) {
        n.set(i, i + 1, true);
        n.set(i + 1, i, true);
    }
    return n;
}

SymplecticDecomposition symplectic_decompose(const BitMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("symplectic_decompose: matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.get(i, i)) {
            throw std::invalid_argument("symplectic_decompose: nonzero diagonal");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a.get(i, j) != a.get(j, i)) {
                throw std::invalid_argument("symplectic_decompose: matrix is not symmetric");
            }
        }
    }

    BitMatrix residual = a;
    BitMatrix c(0, n);
    while (true) {
        // First index with a nonzero residual row.
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (residual.row(i).any()) {
                pivot = i;
                break;
            }
        }
        if (pivot == n) break;

        const BitVector u = residual.row(pivot);
        const std::size_t partner = static_cast<std::size_t>(u.lowest_set());
        const BitVector v = residual.row(partner);

        // residual -= u v^T + v u^T; both new rows vanish from the residual.
        for (std::size_t i = 0; i < n; ++i) {
            if (u.get(i)) residual.row(i) ^= v;
            if (v.get(i)) residual.row(i) ^= u;
        }
        c.append_row(u);
        c.append_row(v);
    }
    const std::size_t m = c.rows();
    return SymplecticDecomposition{std::move(c), m};
}

}  // namespace msnum::gf2
