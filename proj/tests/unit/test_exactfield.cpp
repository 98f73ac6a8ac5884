#include "fkts/exactfield.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fkts;

TEST_CASE("gaussian rational arithmetic")
{
    const Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    const Scalar a = Scalar::parse("1/2+1*i");
    CHECK(a * a.conj() == Scalar::fraction(5, 4));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(Scalar::fraction(2, 4) == Scalar::fraction(1, 2));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
    CHECK(Scalar::fraction(1, 3).is_rational());
    CHECK_FALSE(i.is_rational());
}

TEST_CASE("scalar text round trip")
{
    for (const char* s : {"0", "7", "-3/4", "1/2+3/5*i", "-1-2*i", "i", "-i", "2/3*i"}) {
        const Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Scalar::parse(""), Error);
    CHECK_THROWS_AS(Scalar::parse("3i"), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse("x"), Error);
}

TEST_CASE("matrix basics")
{
    const Matrix a{{1, 2}, {3, 4}};
    CHECK(a * inverse(a) == Matrix::identity(2));
    CHECK(inverse(a)(0, 0) == Scalar(-2));
    CHECK(a.transpose()(0, 1) == Scalar(3));
    CHECK(commutator(a, a).is_zero());
    CHECK(anticommutator(a, Matrix::identity(2)) == a * Scalar(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionError);

    const Matrix k = kron(Matrix{{0, 1}, {1, 0}}, Matrix::identity(2));
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == Scalar(1));
    CHECK(k.block(0, 1) == Matrix::identity(2));
    CHECK(Matrix::blocks(a, a, a, a).block(1, 0) == a);
}

TEST_CASE("span basis against an independent rank")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 2 + trial % 5, cols = 3 + trial % 4;
        std::vector<Vec> gens;
        std::vector<oracle::Row> ref;
        for (std::size_t r = 0; r < rows; ++r) {
            Vec v;
            oracle::Row o;
            for (std::size_t c = 0; c < cols; ++c) {
                // every third row is a combination of the previous two
                int x = dist(rng);
                if (r % 3 == 2)
                    x = 0;
                v.push_back(x);
                o.push_back(x);
            }
            if (r % 3 == 2)
                for (std::size_t c = 0; c < cols; ++c) {
                    v[c] = gens[r - 1][c] * Scalar(2) - gens[r - 2][c];
                    o[c] = 2 * ref[r - 1][c] - ref[r - 2][c];
                }
            gens.push_back(v);
            ref.push_back(o);
        }
        const SpanBasis s = span_basis(gens, cols);
        CHECK(s.dimension() == oracle::rank(ref));
        for (const auto& g : gens) {
            auto c = s.coordinates(g);
            REQUIRE(c.has_value());
            CHECK(s.combine(*c) == g);
        }
        auto sol = solve_in_span(gens.back(), gens);
        REQUIRE(sol.has_value());
        Vec back(cols);
        for (std::size_t r = 0; r < rows; ++r)
            back = back + (*sol)[r] * gens[r];
        CHECK(back == gens.back());
    }
    const SpanBasis line = span_basis({Vec{1, 1}}, 2);
    CHECK_FALSE(line.contains(Vec{1, 0}));
    CHECK(span_basis({}, 3).dimension() == 0);
}
