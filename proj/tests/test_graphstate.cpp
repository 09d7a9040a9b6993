#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "msnum/closedforms.hpp"
#include "msnum/graphstate.hpp"

using namespace msnum;
namespace cf = msnum::closedforms;

TEST_CASE("ms_number and plus_number") {
    CHECK(ms_number(cf::make_complete(3)) == 4);
    CHECK(plus_number(cf::make_complete(3)) == 4);
    CHECK(ms_number(Graph(4)) == 0);
    CHECK(plus_number(Graph(3)) == 8);
    CHECK(ms_number(cf::make_path(2)) == 1);
    CHECK(plus_number(cf::make_path(2)) == 3);

    // empty-on-3 union K2: w = 2^3 * w(K2)
    CHECK(ms_number(disjoint_union(Graph(3), cf::make_path(2))) == 8);
}

TEST_CASE("amplitudes fixtures") {
    CHECK(amplitudes(cf::make_complete(3)).sign_string() == "+++-+---");
    CHECK(amplitudes(Graph(1)).sign_string() == "++");
    CHECK(amplitudes(cf::make_path(2)).sign_string() == "+++-");
    CHECK_THROWS(amplitudes(Graph(21)));
}

TEST_CASE("minus count equals ms_number") {
    for (std::size_t n = 0; n <= 5; ++n) {
        testutil::for_each_labeled_graph(n, [](const Graph& g) {
            CHECK(amplitudes(g).minus_count() == ms_number(g));
        });
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testutil::random_graph(6 + rng() % 5, rng);
        CHECK(amplitudes(g).minus_count() == ms_number(g));
    }
}

TEST_CASE("wht spectrum basics") {
    QuadraticPolynomial f(2);
    f.set_quad(0, 1, true);
    const auto spec = wht_spectrum(f);
    // f*_0 * 2^{n/2} == |f|
    CHECK(spec.numerators[0] == 1);
    CHECK(spec.coefficient_text(0) == "1/2^1");

    const auto fk3 = QuadraticPolynomial::from_graph(cf::make_complete(3));
    CHECK(wht_spectrum(fk3).numerators[0] == 4);

    const auto zero = wht_spectrum(QuadraticPolynomial(3));
    for (const auto c : zero.numerators) CHECK(c == 0);
}

TEST_CASE("spectrum zero-order identity and Parseval, exactly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = testutil::random_polynomial(1 + rng() % 10, rng);
        const auto spec = wht_spectrum(f);
        CHECK(BigInt(spec.numerators[0]) == brute_force_weight(f));

        // Parseval scaled by 2^n: sum of squared numerators == 2^n * |f|
        BigInt lhs = 0;
        for (const auto c : spec.numerators) lhs += BigInt(c) * c;
        BigInt rhs = brute_force_weight(f);
        rhs <<= static_cast<unsigned>(f.variable_count());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bent detection") {
    QuadraticPolynomial k2(2);
    k2.set_quad(0, 1, true);
    CHECK(is_bent(k2));

    CHECK_FALSE(is_bent(QuadraticPolynomial::from_graph(cf::make_path(3))));  // odd n

    // perfect matching on 4 vertices
    Graph pm(4);
    pm.add_edge(0, 1);
    pm.add_edge(2, 3);
    CHECK(is_bent(QuadraticPolynomial::from_graph(pm)));

    CHECK_FALSE(is_bent(QuadraticPolynomial(4)));  // zero form
}

TEST_CASE("max rank vs bent fixtures") {
    const auto k2 = max_rank_bent_check(cf::make_path(2));
    CHECK(k2.rank == 2);
    CHECK(k2.bent);

    const auto k3 = max_rank_bent_check(cf::make_complete(3));
    CHECK(k3.rank == 2);
    CHECK_FALSE(k3.bent);

    const auto c4 = max_rank_bent_check(cf::make_cycle(4));
    CHECK(c4.rank == 2);
    CHECK_FALSE(c4.bent);
}

TEST_CASE("bent iff full binary rank") {
    for (std::size_t n = 1; n <= 6; ++n) {
        testutil::for_each_labeled_graph(n, [&](const Graph& g) {
            const auto r = max_rank_bent_check(g);
            CHECK(r.bent == (r.rank == n));
        });
    }
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto r = max_rank_bent_check(testutil::random_graph(8, rng));
        CHECK(r.bent == (r.rank == 8));
    }
}

TEST_CASE("schmidt rank of bipartite graph states") {
    CHECK(schmidt_rank_bipartite(cf::make_complete_bipartite(2, 3)) == 1);
    CHECK(schmidt_rank_bipartite(cf::make_path(4)) == 2);
    CHECK_THROWS_AS(schmidt_rank_bipartite(cf::make_complete(3)), std::invalid_argument);

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph t = testutil::random_tree(1 + rng() % 14, rng);
        CHECK(schmidt_rank_bipartite(t) == tree_vertex_cover_number(t));
    }
}

TEST_CASE("ms_from_schmidt") {
    CHECK(ms_from_schmidt(4, 1) == 4);   // w(K_{2,2})
    CHECK(ms_from_schmidt(5, 0) == 0);
    CHECK(ms_from_schmidt(4, 2) == 6);   // w(P4)
    CHECK_THROWS(ms_from_schmidt(4, 4));
    CHECK_THROWS(ms_from_schmidt(0, 0));
}

TEST_CASE("schmidt rank determines the MS-number of bipartite graphs") {
    for (std::size_t n = 1; n <= 7; ++n) {
        testutil::for_each_labeled_graph(n, [&](const Graph& g) {
            if (!bipartition(g).has_value()) return;
            CHECK(ms_number(g) == ms_from_schmidt(n, schmidt_rank_bipartite(g)));
        });
    }
}

TEST_CASE("tree chain: cover number, schmidt rank, ms number") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 13;
        const Graph t = testutil::random_tree(n, rng);
        const std::size_t tau = tree_vertex_cover_number(t);
        CHECK(schmidt_rank_bipartite(t) == tau);
        CHECK(ms_number(t) == ms_from_schmidt(n, tau));
    }
}

TEST_CASE("readonce descriptor") {
    const auto k3 = readonce_descriptor(cf::make_complete(3));
    CHECK(k3.m == 3);
    CHECK(k3.kind == ReadonceKind::type_one);
    CHECK(k3.n_total == 3);

    const auto k22 = readonce_descriptor(cf::make_complete_bipartite(2, 2));
    CHECK(k22.m == 2);
    CHECK(k22.kind == ReadonceKind::type_two);
    CHECK(k22.z == false);
    CHECK(k22.n_total == 4);

    const auto empty = readonce_descriptor(Graph(3));
    CHECK(empty.m == 0);

    // the associated product state has the same MS-number
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = testutil::random_graph(1 + rng() % 10, rng);
        const auto d = readonce_descriptor(g);
        BigInt scaled = readonce_weight({d.m, d.kind, d.z});
        scaled <<= static_cast<unsigned>(d.n_total - d.m);
        CHECK(scaled == ms_number(g));
    }
}
