#include "fkts/structurable.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fkts;

namespace {

oracle::Row to_row(const Vec& v)
{
    oracle::Row r;
    for (const auto& s : v)
        r.push_back(s.re());
    return r;
}

EmbeddingParams params(Scalar beta, Scalar k, std::array<Scalar, 3> g)
{
    EmbeddingParams p;
    p.beta = beta;
    p.k = k;
    p.gammas = g;
    return p;
}

std::vector<EmbeddingParams> parameter_sets()
{
    return {EmbeddingParams{}, EmbeddingParams::s4_symmetric(),
            params(Scalar::fraction(-1, 4), 2, {Scalar(-1), Scalar(1), Scalar(2)})};
}

}  // namespace

TEST_CASE("M2 product and transpose against matrix multiplication")
{
    const StructurableAlgebra a = make_m2_transpose();
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(to_row(a.bar(unit_vec(4, i))) == oracle::flat(oracle::transpose(oracle::m2_basis(i))));
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(to_row(a.mul(unit_vec(4, i), unit_vec(4, j))) ==
                  oracle::flat(oracle::mul(oracle::m2_basis(i), oracle::m2_basis(j))));
    }
}

TEST_CASE("associated triple product against the matrix formula")
{
    const TripleSystem t = make_structurable_fkts(make_m2_transpose());
    CHECK(t.epsilon() == -1);
    CHECK(t.delta() == 1);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(to_row(triple_product(t, unit_vec(4, i), unit_vec(4, j), unit_vec(4, k))) ==
                      oracle::flat(oracle::structurable_product(oracle::m2_basis(i), oracle::m2_basis(j),
                                                                oracle::m2_basis(k))));
    CHECK(validate_fkts(t).ok());
}

TEST_CASE("algebra validation")
{
    CHECK(validate_algebra(make_m2_transpose()).ok());
    CHECK(validate_algebra(make_scalar_algebra()).ok());
    const VerificationReport bad = validate_algebra(make_m2_identity_involution());
    CHECK(bad.failed("structurable.involution_antihom"));
    CHECK(bad.passed("structurable.involution_square"));
    CHECK_THROWS_AS(StructurableAlgebra(2, {}, Matrix::identity(2), Vec{1, 0}), DimensionError);
}

TEST_CASE("d operators")
{
    const StructurableAlgebra a = make_m2_transpose();
    const Vec x = unit_vec(4, 1), y = unit_vec(4, 2);
    for (int j = 1; j <= 3; ++j) {
        CHECK(d_op(a, j, x, y) == -d_op(a, j, y, x));
        CHECK(d_op(a, j + 3, x, y) == d_op(a, j, x, y));
    }
    CHECK(d_op(a, 0, x, y) == d_op(a, 3, x, y));
    // d_1(x,y) = l(ybar) l(x) - l(xbar) l(y) by hand for x = E12, y = E21: ybar = E12, xbar = E21
    CHECK(d_op(a, 1, x, y) == a.l(x) * a.l(x) - a.l(y) * a.l(y));
    // e2 e1 = -e2, e2 e2 = 0: the two d_3 forms disagree
    const StructurableAlgebra bad(2, {Vec{1, 0}, Vec{0, 1}, Vec{0, -1}, Vec{0, 0}}, Matrix::identity(2), Vec{1, 0});
    bool threw = false;
    for (std::size_t p = 0; p < 2 && !threw; ++p)
        for (std::size_t q = 0; q < 2 && !threw; ++q)
            try {
                d_op(bad, 3, unit_vec(2, p), unit_vec(2, q));
            } catch (const StructuralError&) {
                threw = true;
            }
    CHECK(threw);
    CHECK(validate_algebra(bad).failed("structurable.d3_forms"));
}

TEST_CASE("S4 Lie algebra")
{
    const S4LieAlgebra m = build_s4_lie(make_m2_transpose(), {Scalar(1), Scalar(1), Scalar(1)});
    CHECK(m.t_basis().dimension() == 3);
    CHECK(m.total_dim() == 15);
    CHECK(m.construction_report().ok());
    CHECK(s4_action_check(m).ok());

    const S4LieAlgebra s = build_s4_lie(make_scalar_algebra(), {Scalar(1), Scalar(1), Scalar(1)});
    CHECK(s.t_basis().dimension() == 0);
    CHECK(s.total_dim() == 3);
    CHECK(s4_action_check(s).ok());

    const S4LieAlgebra g = build_s4_lie(make_m2_transpose(), {Scalar(-1), Scalar(1), Scalar(2)});
    CHECK(g.construction_report().ok());
    CHECK_THROWS_AS(s4_action_check(g), Error);
    CHECK_THROWS_AS(build_s4_lie(make_m2_transpose(), {Scalar(0), Scalar(1), Scalar(1)}), Error);
    CHECK_THROWS_AS(build_s4_lie(make_m2_identity_involution(), {Scalar(1), Scalar(1), Scalar(1)}), Error);
}

TEST_CASE("embedding parameters")
{
    for (const auto& p : parameter_sets())
        CHECK_NOTHROW(p.validate());
    CHECK_THROWS_AS(params(1, 1, {Scalar(-1), Scalar(1), Scalar(1)}).validate(), Error);
    CHECK_THROWS_AS(params(Scalar::fraction(-1, 2), 2, {Scalar(-1), Scalar(1), Scalar(1)}).validate(), Error);
}

TEST_CASE("embedding with corrected signs")
{
    for (const auto& a : {make_m2_transpose(), make_scalar_algebra()})
        for (const auto& p : parameter_sets()) {
            const VerificationReport r = embed_theorem31(a, p);
            CHECK(r.ok());
            CHECK(r.passed("embed.membership"));
        }
}

TEST_CASE("embedding with the printed signs fails with a coefficient witness")
{
    EmbeddingParams p;
    p.convention = SignConvention::as_printed;
    const VerificationReport r = embed_theorem31(make_m2_transpose(), p);
    CHECK(r.failed("embed.rho_rho_same"));
    const ReportEntry* e = r.find("embed.rho_rho_same");
    REQUIRE(e);
    REQUIRE(e->witness);
    CHECK(!e->witness->empty());
}

TEST_CASE("scalar algebra: rho_3 has zero off-diagonal blocks")
{
    const Embedding e(make_scalar_algebra(), EmbeddingParams{});
    const HatElement r = e.rho(3, Vec{1});
    CHECK(r.even.block(0, 1).is_zero());
    CHECK(r.even.block(1, 0).is_zero());
}

TEST_CASE("lemma identities")
{
    const StructurableAlgebra m = make_m2_transpose();
    for (const auto& p : parameter_sets()) {
        CHECK(check_lemmas(m, p).ok());
        CHECK(check_lemmas(make_scalar_algebra(), p).ok());
    }
    // K(x,e) = l(x - xbar) = -K(e,x) for x = E12
    const TripleSystem t = make_structurable_fkts(m);
    const Vec x = unit_vec(4, 1), e = m.unit();
    CHECK(operator_K(t, x, e) == m.l(x - m.bar(x)));
    CHECK(operator_K(t, e, x) == -operator_K(t, x, e));
}

TEST_CASE("literal index form of the commutator identities fails on M2")
{
    CHECK_FALSE(check_lemma34_printed(make_m2_transpose()).ok());
    CHECK(check_lemma34_printed(make_scalar_algebra()).ok());
}
