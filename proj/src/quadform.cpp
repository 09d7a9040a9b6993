#include "msnum/quadform.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace msnum {

namespace {

BigInt pow2(std::size_t e) {
    BigInt x = 1;
    x <<= static_cast<unsigned>(e);
    return x;
}

}  // namespace

QuadraticPolynomial::QuadraticPolynomial(std::size_t n)
    : n_(n), u_(n, n), l_(n) {}

QuadraticPolynomial QuadraticPolynomial::from_graph(const Graph& g) {
    QuadraticPolynomial f(g.vertex_count());
    for (std::size_t i = 0; i < f.n_; ++i) {
        for (std::size_t j = i + 1; j < f.n_; ++j) {
            if (g.has_edge(i, j)) f.u_.set(i, j, true);
        }
    }
    return f;
}

bool QuadraticPolynomial::quad(std::size_t i, std::size_t j) const {
    if (i == j || i >= n_ || j >= n_) {
        throw std::out_of_range("QuadraticPolynomial::quad: bad index pair");
    }
    return u_.get(std::min(i, j), std::max(i, j));
}

void QuadraticPolynomial::set_quad(std::size_t i, std::size_t j, bool v) {
    if (i == j || i >= n_ || j >= n_) {
        throw std::out_of_range("QuadraticPolynomial::set_quad: bad index pair");
    }
    u_.set(std::min(i, j), std::max(i, j), v);
}

void QuadraticPolynomial::toggle_quad(std::size_t i, std::size_t j) {
    set_quad(i, j, !quad(i, j));
}

bool QuadraticPolynomial::has_quadratic_term() const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (u_.row(i).any()) return true;
    }
    return false;
}

bool QuadraticPolynomial::is_zero() const {
    return !c0_ && !l_.any() && !has_quadratic_term();
}

bool QuadraticPolynomial::evaluate(const gf2::BitVector& x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("QuadraticPolynomial::evaluate: length mismatch");
    }
    bool v = c0_ ^ l_.dot(x);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x.get(i)) v ^= u_.row(i).dot(x);
    }
    return v;
}

bool ReadonceForm::evaluate(const gf2::BitVector& y) const {
    if (y.size() != m) {
        throw std::invalid_argument("ReadonceForm::evaluate: length mismatch");
    }
    bool v = z;
    std::size_t i = 0;
    if (kind == ReadonceKind::type_one) {
        v ^= y.get(0);
        i = 1;
    }
    for (; i + 1 < m; i += 2) {
        v ^= y.get(i) && y.get(i + 1);
    }
    return v;
}

Reduction reduce_to_readonce(const QuadraticPolynomial& f) {
    const std::size_t n = f.variable_count();
    gf2::BitMatrix u = f.quad_part();
    gf2::BitVector l = f.linear_part();
    bool c0 = f.constant();

    // Symmetric coefficient lookup on the working copy.
    auto sym = [&](std::size_t i, std::size_t j) {
        return u.get(std::min(i, j), std::max(i, j));
    };
    auto sym_flip = [&](std::size_t i, std::size_t j) {
        const std::size_t a = std::min(i, j), b = std::max(i, j);
        u.set(a, b, !u.get(a, b));
    };

    std::vector<gf2::BitVector> pair_rows;
    std::vector<bool> pair_consts;
    std::vector<bool> alive(n, true);

    while (true) {
        // Lexicographically smallest remaining product term x_a x_b.
        std::size_t a = n, b = n;
        for (std::size_t i = 0; i < n && a == n; ++i) {
            const long j = u.row(i).lowest_set();
            if (j >= 0) {
                a = i;
                b = static_cast<std::size_t>(j);
            }
        }
        if (a == n) break;

        // f = x_a x_b + x_a P + x_b Q + R  with P, Q affine in the other
        // variables; then f = (x_a + Q)(x_b + P) + R + PQ.
        gf2::BitVector p(n), q(n);
        const bool p0 = l.get(a), q0 = l.get(b);
        for (std::size_t j = 0; j < n; ++j) {
            if (!alive[j] || j == a || j == b) continue;
            if (sym(a, j)) p.set(j, true);
            if (sym(b, j)) q.set(j, true);
        }

        // Drop every term touching x_a or x_b from the residual.
        for (std::size_t j = 0; j < n; ++j) {
            if (j != a && sym(a, j)) sym_flip(a, j);
            if (j != b && sym(b, j)) sym_flip(b, j);
        }
        l.set(a, false);
        l.set(b, false);
        alive[a] = false;
        alive[b] = false;

        // Substitution rows y = x_a + Q, y' = x_b + P.
        gf2::BitVector row1 = q;
        row1.set(a, true);
        gf2::BitVector row2 = p;
        row2.set(b, true);
        pair_rows.push_back(std::move(row1));
        pair_consts.push_back(q0);
        pair_rows.push_back(std::move(row2));
        pair_consts.push_back(p0);

        // Fold PQ back in: (p0 + p.x)(q0 + q.x).
        c0 ^= p0 && q0;
        if (p0) l ^= q;
        if (q0) l ^= p;
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.get(j)) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!q.get(k)) continue;
                if (j == k) {
                    l.flip(j);  // x_j^2 = x_j
                } else {
                    sym_flip(j, k);
                }
            }
        }
    }

    Reduction result;
    auto& [form, cert] = result;
    cert.t = gf2::BitMatrix(0, n);
    std::vector<bool> consts;
    if (l.any()) {
        // Residual affine part is nonzero: Type I, y_1 = L + c0. The form's
        // own constant is canonically zero (it never affects the weight).
        form.kind = ReadonceKind::type_one;
        form.m = pair_rows.size() + 1;
        form.z = false;
        cert.t.append_row(l);
        consts.push_back(c0);
    } else {
        form.kind = ReadonceKind::type_two;
        form.m = pair_rows.size();
        form.z = c0;
    }
    for (std::size_t i = 0; i < pair_rows.size(); ++i) {
        cert.t.append_row(std::move(pair_rows[i]));
        consts.push_back(pair_consts[i]);
    }
    cert.c = gf2::BitVector(form.m);
    for (std::size_t i = 0; i < consts.size(); ++i) {
        cert.c.set(i, consts[i]);
    }
    return result;
}

BigInt readonce_weight(const ReadonceForm& g) {
    if (g.kind == ReadonceKind::type_one) {
        if (g.m % 2 == 0 || g.m == 0) {
            throw std::invalid_argument("readonce_weight: Type I requires odd m >= 1");
        }
        return pow2(g.m - 1);
    }
    if (g.m % 2 != 0) {
        throw std::invalid_argument("readonce_weight: Type II requires even m");
    }
    if (g.m == 0) {
        return g.z ? 1 : 0;
    }
    BigInt w = pow2(g.m - 1);
    if (g.z) {
        w += pow2((g.m - 2) / 2);
    } else {
        w -= pow2((g.m - 2) / 2);
    }
    return w;
}

BigInt weight(const QuadraticPolynomial& f) {
    const Reduction r = reduce_to_readonce(f);
    return readonce_weight(r.form) * pow2(f.variable_count() - r.form.m);
}

BigInt brute_force_weight(const QuadraticPolynomial& f, std::size_t max_n) {
    const std::size_t n = f.variable_count();
    if (n > max_n || n > 63) {
        throw std::invalid_argument(
            "brute_force_weight: n exceeds the exhaustive-enumeration cap of " +
            std::to_string(std::min<std::size_t>(max_n, 63)));
    }

    // Word-packed symmetric rows; Gray-code walk updates the value in O(1)
    // words per assignment.
    std::vector<std::uint64_t> sym(n, 0);
    std::uint64_t lin = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.linear(i)) lin |= std::uint64_t{1} << i;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && f.quad(i, j)) sym[i] |= std::uint64_t{1} << j;
        }
    }

    std::uint64_t x = 0;
    bool val = f.constant();
    std::uint64_t count = val ? 1 : 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const unsigned k = static_cast<unsigned>(std::countr_zero(i));
        // f(x ^ e_k) = f(x) + l_k + sum_j S_{kj} x_j
        val ^= ((lin >> k) & 1) ^ (std::popcount(sym[k] & x) & 1);
        x ^= std::uint64_t{1} << k;
        count += val ? 1 : 0;
    }
    return count;
}

namespace {

bool check_point(const QuadraticPolynomial& f, const ReadonceForm& g,
                 const ReductionCertificate& cert, const gf2::BitVector& x) {
    gf2::BitVector y = gf2::mat_vec(cert.t, x);
    y ^= cert.c;
    return g.evaluate(y) == f.evaluate(x);
}

}  // namespace

bool verify_certificate(const QuadraticPolynomial& f, const ReadonceForm& g,
                        const ReductionCertificate& cert) {
    const std::size_t n = f.variable_count();
    if (cert.t.rows() != g.m || cert.t.cols() != n || cert.c.size() != g.m) {
        throw std::invalid_argument("verify_certificate: dimension mismatch");
    }
    if (gf2::rank(cert.t) != g.m) return false;

    if (n <= 12) {
        gf2::BitVector x(n);
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t v = 0; v < total; ++v) {
            for (std::size_t i = 0; i < n; ++i) {
                x.set(i, (v >> i) & 1);
            }
            if (!check_point(f, g, cert, x)) return false;
        }
        return true;
    }

    // All weight-0/1/2 points first.
    gf2::BitVector x(n);
    if (!check_point(f, g, cert, x)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            gf2::BitVector y(n);
            y.set(i, true);
            y.set(j, true);
            if (!check_point(f, g, cert, y)) return false;
        }
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 10000; ++trial) {
        for (std::size_t i = 0; i < n; ++i) {
            x.set(i, rng() & 1);
        }
        if (!check_point(f, g, cert, x)) return false;
    }
    return true;
}

namespace {

struct PolyCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::size_t read_number() {
        skip_space();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("polynomial: expected a number", pos);
        }
        std::size_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
            if (v > gf2::kMaxDimension) throw ParseError("polynomial: value out of range", pos);
            ++pos;
        }
        return v;
    }

    bool keyword(std::string_view word) {
        skip_space();
        if (text.substr(pos).starts_with(word)) {
            pos += word.size();
            return true;
        }
        return false;
    }

    bool done() {
        skip_space();
        return pos >= text.size();
    }
};

}  // namespace

QuadraticPolynomial parse_polynomial(std::string_view text) {
    PolyCursor cur{text};
    const std::size_t n = cur.read_number();
    QuadraticPolynomial f(n);

    auto var_index = [&](std::size_t one_based, std::size_t at) {
        if (one_based < 1 || one_based > n) {
            throw ParseError("polynomial: variable index out of range", at);
        }
        return one_based - 1;
    };

    while (cur.eat(';')) {
        if (cur.done()) break;
        if (cur.keyword("quad")) {
            if (!cur.eat(':')) throw ParseError("polynomial: expected ':'", cur.pos);
            cur.skip_space();
            if (cur.pos < text.size() && text[cur.pos] != ';') {
                do {
                    const std::size_t at = cur.pos;
                    const std::size_t i = var_index(cur.read_number(), at);
                    const std::size_t at2 = cur.pos;
                    const std::size_t j = var_index(cur.read_number(), at2);
                    if (i == j) throw ParseError("polynomial: squared variable in quad section", at);
                    f.toggle_quad(i, j);
                } while (cur.eat(','));
            }
        } else if (cur.keyword("lin")) {
            if (!cur.eat(':')) throw ParseError("polynomial: expected ':'", cur.pos);
            cur.skip_space();
            if (cur.pos < text.size() && text[cur.pos] != ';') {
                do {
                    const std::size_t at = cur.pos;
                    const std::size_t i = var_index(cur.read_number(), at);
                    f.set_linear(i, !f.linear(i));
                } while (cur.eat(','));
            }
        } else if (cur.keyword("const")) {
            if (!cur.eat(':')) throw ParseError("polynomial: expected ':'", cur.pos);
            const std::size_t at = cur.pos;
            const std::size_t v = cur.read_number();
            if (v > 1) throw ParseError("polynomial: constant must be 0 or 1", at);
            f.set_constant(f.constant() ^ (v == 1));
        } else {
            throw ParseError("polynomial: unknown section", cur.pos);
        }
    }
    if (!cur.done()) throw ParseError("polynomial: trailing garbage", cur.pos);
    return f;
}

std::string polynomial_to_string(const QuadraticPolynomial& f) {
    const std::size_t n = f.variable_count();
    std::string quad, lin;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (f.quad(i, j)) {
                if (!quad.empty()) quad += ", ";
                quad += std::to_string(i + 1) + " " + std::to_string(j + 1);
            }
        }
        if (f.linear(i)) {
            if (!lin.empty()) lin += ", ";
            lin += std::to_string(i + 1);
        }
    }
    std::string out = std::to_string(n);
    if (!quad.empty()) out += "; quad: " + quad;
    if (!lin.empty()) out += "; lin: " + lin;
    if (f.constant()) out += "; const: 1";
    return out;
}

}  // namespace msnum
