#include "msnum/graphstate.hpp"

#include <stdexcept>

namespace msnum {

namespace {

BigInt pow2(std::size_t e) {
    BigInt x = 1;
    x <<= static_cast<unsigned>(e);
    return x;
}

// 0/1 value vector of f in basis-index order (variable 1 = MSB).
std::vector<std::int64_t> value_vector(const QuadraticPolynomial& f) {
    const std::size_t n = f.variable_count();
    if (n > kStateQubitCap) {
        throw std::invalid_argument("value vector: qubit cap exceeded");
    }
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::int64_t> values(total);
    gf2::BitVector x(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        for (std::size_t j = 0; j < n; ++j) {
            x.set(j, (idx >> (n - 1 - j)) & 1);
        }
        values[idx] = f.evaluate(x) ? 1 : 0;
    }
    return values;
}

}  // namespace

std::size_t AmplitudeVector::minus_count() const {
    std::size_t count = 0;
    for (std::int8_t s : signs) {
        if (s < 0) ++count;
    }
    return count;
}

std::string AmplitudeVector::sign_string() const {
    std::string s(signs.size(), '+');
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] < 0) s[i] = '-';
    }
    return s;
}

std::string SpectrumVector::coefficient_text(std::size_t i) const {
    if (n % 2 == 0) {
        return std::to_string(numerators[i]) + "/2^" + std::to_string(n / 2);
    }
    return std::to_string(numerators[i]) + "/2^(" + std::to_string(n) + "/2)";
}

BigInt ms_number(const Graph& g) {
    return weight(QuadraticPolynomial::from_graph(g));
}

BigInt plus_number(const Graph& g) {
    return pow2(g.vertex_count()) - ms_number(g);
}

AmplitudeVector amplitudes(const Graph& g) {
    const QuadraticPolynomial f = QuadraticPolynomial::from_graph(g);
    const auto values = value_vector(f);
    AmplitudeVector amp;
    amp.n = g.vertex_count();
    amp.signs.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        amp.signs[i] = values[i] ? -1 : 1;
    }
    return amp;
}

SpectrumVector wht_spectrum(const QuadraticPolynomial& f) {
    SpectrumVector spec;
    spec.n = f.variable_count();
    spec.numerators = value_vector(f);
    // In-place +-1 butterfly; the 2^{-n/2} normalization stays implicit.
    const std::size_t total = spec.numerators.size();
    for (std::size_t half = 1; half < total; half <<= 1) {
        for (std::size_t block = 0; block < total; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const std::int64_t a = spec.numerators[i];
                const std::int64_t b = spec.numerators[i + half];
                spec.numerators[i] = a + b;
                spec.numerators[i + half] = a - b;
            }
        }
    }
    return spec;
}

bool is_bent(const QuadraticPolynomial& f) {
    const std::size_t n = f.variable_count();
    if (n % 2 != 0 || n == 0) return false;
    const SpectrumVector spec = wht_spectrum(f);
    // Conditions scaled by 2^{n/2}: f*_0 = 2^{n-1} +- 2^{(n-2)/2} and
    // |f*_i| = 2^{(n-2)/2} for i != 0. Exact integer comparisons.
    const std::int64_t half = std::int64_t{1} << ((n - 2) / 2);
    const std::int64_t lead = std::int64_t{1} << (n - 1);
    if (spec.numerators[0] != lead - half && spec.numerators[0] != lead + half) {
        return false;
    }
    for (std::size_t i = 1; i < spec.numerators.size(); ++i) {
        if (spec.numerators[i] != half && spec.numerators[i] != -half) {
            return false;
        }
    }
    return true;
}

RankBentResult max_rank_bent_check(const Graph& g) {
    return RankBentResult{
        gf2::rank(g.adjacency_matrix()),
        is_bent(QuadraticPolynomial::from_graph(g)),
    };
}

std::size_t schmidt_rank_bipartite(const Graph& g) {
    if (!bipartition(g)) {
        throw std::invalid_argument("schmidt_rank_bipartite: graph is not bipartite");
    }
    return gf2::rank(g.adjacency_matrix()) / 2;
}

BigInt ms_from_schmidt(std::size_t n, std::size_t r) {
    if (n < 1) throw std::invalid_argument("ms_from_schmidt: n must be >= 1");
    if (r + 1 > n) throw std::invalid_argument("ms_from_schmidt: r exceeds n-1");
    return pow2(n - 1) - pow2(n - 1 - r);
}

ReadonceDescriptor readonce_descriptor(const Graph& g) {
    const Reduction r = reduce_to_readonce(QuadraticPolynomial::from_graph(g));
    return ReadonceDescriptor{r.form.m, r.form.kind, r.form.z, g.vertex_count()};
}

}  // namespace msnum
