#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>

#include "msnum/gf2.hpp"
#include "msnum/graph.hpp"

// Degree-<=2 polynomials over GF(2), reduction to readonce form with a
// machine-checkable certificate, and exact weight computation.

namespace msnum {

using BigInt = boost::multiprecision::cpp_int;

// x^T U x + l.x + c0 with U strictly upper triangular.
class QuadraticPolynomial {
public:
    QuadraticPolynomial() = default;
    explicit QuadraticPolynomial(std::size_t n);

    // U = strictly upper part of A(G); no linear or constant part.
    static QuadraticPolynomial from_graph(const Graph& g);

    std::size_t variable_count() const { return n_; }

    bool quad(std::size_t i, std::size_t j) const;
    void set_quad(std::size_t i, std::size_t j, bool v);
    void toggle_quad(std::size_t i, std::size_t j);

    bool linear(std::size_t i) const { return l_.get(i); }
    void set_linear(std::size_t i, bool v) { l_.set(i, v); }
    const gf2::BitVector& linear_part() const { return l_; }

    bool constant() const { return c0_; }
    void set_constant(bool v) { c0_ = v; }

    const gf2::BitMatrix& quad_part() const { return u_; }

    bool has_quadratic_term() const;
    bool is_zero() const;

    bool evaluate(const gf2::BitVector& x) const;

    bool operator==(const QuadraticPolynomial&) const = default;

private:
    std::size_t n_ = 0;
    gf2::BitMatrix u_;
    gf2::BitVector l_;
    bool c0_ = false;
};

enum class ReadonceKind {
    type_one,  // y1 + y2y3 + ... + y_{m-1}y_m   (m odd)
    type_two,  // y1y2 + ... + y_{m-1}y_m + z    (m even)
};

struct ReadonceForm {
    std::size_t m = 0;
    ReadonceKind kind = ReadonceKind::type_two;
    bool z = false;

    bool evaluate(const gf2::BitVector& y) const;
};

// Affine substitution witnessing g(Tx + c) = f(x); T has full row rank.
struct ReductionCertificate {
    gf2::BitMatrix t;
    gf2::BitVector c;
};

struct Reduction {
    ReadonceForm form;
    ReductionCertificate cert;
};

// Iterative hyperbolic-pair extraction: split off the lexicographically
// smallest product term, emit two substitution rows, fold the cross product
// back into the residual, and finish on the leftover affine part. O(n^3).
// The zero polynomial maps to the degenerate (m=0, TypeII, z=0).
Reduction reduce_to_readonce(const QuadraticPolynomial& f);

// Weight of a readonce form: 2^{m-1} for Type I,
// 2^{m-1} - (-1)^z 2^{(m-2)/2} for Type II (m=0: z as 0 or 1 assignments).
BigInt readonce_weight(const ReadonceForm& g);

// |f| = |g| * 2^{n-m}, via the reduction. Exact.
BigInt weight(const QuadraticPolynomial& f);

// Exhaustive count of satisfying assignments; refuses n beyond the cap.
BigInt brute_force_weight(const QuadraticPolynomial& f, std::size_t max_n = 24);

// Checks rank(T) == m and g(Tx+c) == f(x): exhaustively for n <= 12,
// otherwise on 10^4 seeded random points plus all weight-1/weight-2 points.
bool verify_certificate(const QuadraticPolynomial& f, const ReadonceForm& g,
                        const ReductionCertificate& cert);

// "n; quad: i j, i j, ...; lin: i, ...; const: 0|1" with 1-based indices.
// Repeated monomials cancel (GF(2) sum).
QuadraticPolynomial parse_polynomial(std::string_view text);

std::string polynomial_to_string(const QuadraticPolynomial& f);

}  // namespace msnum
