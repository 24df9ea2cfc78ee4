#include "doctest.h"
#include "nullcore/graph.hpp"
#include "nullcore/linalg.hpp"
#include "oracles.hpp"

using namespace nullcore;

namespace {

IntMatrix random_matrix(SplitMix64 &rng, std::size_t rows, std::size_t cols, long spread) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = long(rng.below(2 * spread + 1)) - spread;
    return m;
}

// Low-rank integer matrix as a product of thin factors.
IntMatrix random_low_rank(SplitMix64 &rng, std::size_t rows, std::size_t cols, std::size_t inner) {
    return random_matrix(rng, rows, inner, 3) * random_matrix(rng, inner, cols, 3);
}

IntVector ints(std::initializer_list<long> values) {
    IntVector v;
    for (long x : values) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("rank of small adjacency matrices") {
    CHECK(rank(adjacency_matrix(gen_path(4))) == 4);
    CHECK(rank(IntMatrix(3, 5)) == 0);
    CHECK(rank(adjacency_matrix(gen_cycle(4))) == 2);
    CHECK(rank(IntMatrix()) == 0);
}

TEST_CASE("kernel basis of P7 is the alternating vector") {
    const KernelBasis k = nullspace_basis(adjacency_matrix(gen_path(7)));
    REQUIRE(k.nullity() == 1);
    CHECK(k.vectors[0] == ints({1, 0, -1, 0, 1, 0, -1}));
    CHECK(k.support() == std::vector<std::size_t>{0, 2, 4, 6});
}

TEST_CASE("kernel of identity is empty") {
    const KernelBasis k = nullspace_basis(IntMatrix::identity(5));
    CHECK(k.empty());
    CHECK(k.dim == 5);
}

TEST_CASE("kernel of C4 lives on the colour classes") {
    const KernelBasis k = nullspace_basis(adjacency_matrix(gen_cycle(4)));
    REQUIRE(k.nullity() == 2);
    for (const auto &v : k.vectors) {
        const bool even = v[0] != 0 || v[2] != 0;
        const bool odd = v[1] != 0 || v[3] != 0;
        CHECK(even != odd);
    }
    CHECK(k.support().size() == 4);
}

TEST_CASE("determinants") {
    CHECK(det(adjacency_matrix(gen_path(2))) == -1);
    CHECK(det(adjacency_matrix(gen_cycle(4))) == 0);
    CHECK(det(IntMatrix::identity(6)) == 1);
    CHECK(det(IntMatrix::from_rows({{2, 1}, {7, 4}})) == 1);
    CHECK(is_nonsingular(adjacency_matrix(gen_path(4))));
    CHECK_FALSE(is_nonsingular(adjacency_matrix(gen_path(3))));
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), dimension_error);
}

TEST_CASE("characteristic polynomials") {
    const CharPoly k2 = char_poly(adjacency_matrix(gen_path(2)));
    CHECK(k2.coefficients == ints({-1, 0, 1}));
    const CharPoly p3 = char_poly(adjacency_matrix(gen_path(3)));
    CHECK(p3.coefficients == ints({0, -2, 0, 1}));
    CHECK(to_string(p3) == "x^3 - 2x");
    const auto a = oracle::adjacency(gen_path(3));
    for (long x = -3; x <= 3; ++x) CHECK(p3.evaluate(x) == oracle::char_poly_at(a, x));
}

TEST_CASE("char_poly agrees with det(xI - A) on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gen_random_graph(1 + seed % 7, 1, 2, seed);
        const CharPoly p = char_poly(adjacency_matrix(g));
        const auto a = oracle::adjacency(g);
        CHECK(p.degree() == g.order());
        for (long x : {-2L, -1L, 0L, 1L, 3L}) CHECK(p.evaluate(x) == oracle::char_poly_at(a, x));
    }
}

TEST_CASE("det matches Leibniz expansion on random matrices") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const IntMatrix m = random_matrix(rng, n, n, 4);
        CHECK(det(m) == oracle::leibniz_det(m.to_longs()));
    }
}

TEST_CASE("rank matches rational elimination and rank-nullity holds") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 1 + rng.below(7);
        const std::size_t c = 1 + rng.below(7);
        const IntMatrix m = trial % 2 ? random_matrix(rng, r, c, 2) : random_low_rank(rng, r, c, 1 + rng.below(3));
        const std::size_t rk = rank(m);
        CHECK(rk == oracle::rational_rank(m.to_longs()));
        CHECK(rk == rank(m.transpose()));
        const KernelBasis k = nullspace_basis(m);
        CHECK(rk + k.nullity() == c);
        for (const auto &v : k.vectors) {
            const IntVector image = mat_vec(m, v);
            CHECK(std::all_of(image.begin(), image.end(), [](const Integer &x) { return x == 0; }));
            CHECK(primitive(v) == v);
        }
    }
}

TEST_CASE("char_poly coefficients encode det and trace") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const IntMatrix m = random_matrix(rng, n, n, 3);
        const CharPoly p = char_poly(m);
        REQUIRE(p.coefficients.size() == n + 1);
        CHECK(p.coefficients[n] == 1);
        CHECK(p.coefficients[n - 1] == -m.trace());
        CHECK(p.coefficients[0] == (n % 2 ? -det(m) : det(m)));
    }
}

TEST_CASE("kernel dimension and support are invariant under vertex relabelling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = gen_random_graph(7, 1, 3, seed);
        std::vector<std::size_t> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::reverse(perm.begin(), perm.end());
        const IntMatrix a = adjacency_matrix(g);
        const IntMatrix b = a.submatrix(perm, perm);
        const KernelBasis ka = nullspace_basis(a);
        const KernelBasis kb = nullspace_basis(b);
        CHECK(ka.nullity() == kb.nullity());
        std::vector<std::size_t> mapped;
        for (auto i : kb.support()) mapped.push_back(perm[i]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == ka.support());
    }
}

TEST_CASE("mat_vec over rationals") {
    const IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    RatVector v(2);
    v.set(0, Rational(1, 2));
    v.set(1, Rational(-1, 3));
    const RatVector out = mat_vec(m, v);
    CHECK(out[0] == Rational(-1, 6));
    CHECK(out[1] == Rational(1, 6));
    CHECK_FALSE(out.is_zero());
    CHECK_THROWS_AS(mat_vec(m, RatVector(3)), dimension_error);
}

TEST_CASE("primitive normalises sign and content") {
    CHECK(primitive(ints({0, -4, 6, 2})) == ints({0, 2, -3, -1}));
    CHECK(primitive(ints({0, 0})) == ints({0, 0}));
}

TEST_CASE("poly_mul") {
    const IntVector a = ints({1, 1});
    const IntVector b = ints({-1, 1});
    CHECK(poly_mul(a, b) == ints({-1, 0, 1}));
}

TEST_CASE("large entries stay exact") {
    IntMatrix m = IntMatrix::from_rows({{1, 0}, {0, 1}});
    m(0, 0) = Integer("123456789012345678901234567890");
    m(1, 1) = Integer("987654321098765432109876543210");
    CHECK(det(m) == m(0, 0) * m(1, 1));
    CHECK(rank(m) == 2);
}
