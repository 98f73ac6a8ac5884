#include "fkts/cli_report.hpp"
#include "fkts/triple_system.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fkts;

namespace {

TripleSystem symplectic()
{
    return make_bilinear_fkts(2, Matrix{{0, 1}, {-1, 0}}, Sign::plus, Sign::plus);
}

oracle::Row to_row(const Vec& v)
{
    oracle::Row r;
    for (const auto& s : v)
        r.push_back(s.re());
    return r;
}

}  // namespace

TEST_CASE("symplectic product matches <y|z> x")
{
    const TripleSystem t = symplectic();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                const Vec x = unit_vec(2, i), y = unit_vec(2, j), z = unit_vec(2, k);
                CHECK(to_row(triple_product(t, x, y, z)) == oracle::symplectic_product(to_row(x), to_row(y), to_row(z)));
            }
    // K(x,y)z = <z|y>x - <z|x>y, so K(e1,e2) = Id by hand
    CHECK(operator_K(t, unit_vec(2, 0), unit_vec(2, 1)) == Matrix::identity(2));
    CHECK(operator_L(t, unit_vec(2, 0), unit_vec(2, 1)) == Matrix{{-1, 0}, {0, 0}});
}

TEST_CASE("axioms on the corpus")
{
    for (const char* name : {"symplectic", "super1", "zero", "m2_fkts", "scalar_fkts"}) {
        const TripleSystem t = parse_fkts_file(*example_text(name));
        INFO(name);
        CHECK(validate_fkts(t).ok());
        CHECK(check_derived_identities(t).ok());
    }
}

TEST_CASE("corrupted tensor fails with a witness")
{
    const TripleSystem bad = symplectic().with_coefficient({0, 0, 0, 0}, 1);
    const VerificationReport r = validate_fkts(bad);
    CHECK_FALSE(r.ok());
    bool has_witness = false;
    for (const auto& e : r.entries())
        if (e.status == Status::fail)
            has_witness = has_witness || (e.witness && !e.witness->empty());
    CHECK(has_witness);
    CHECK_THROWS_AS(require_fkts(bad), Error);
    CHECK_THROWS_AS(check_derived_identities(bad), Error);
}

TEST_CASE("the KK identity with x, y exchanged inside L fails on the symplectic system")
{
    // K(e1,e2)K(e1,e2) = Id while eps delta L(e1,e2) - eps L(e2,e1) = -Id
    const TripleSystem t = symplectic();
    const Matrix K = operator_K(t, unit_vec(2, 0), unit_vec(2, 1));
    const Matrix exchanged = operator_L(t, K.column(0), unit_vec(2, 1)) - operator_L(t, K.column(1), unit_vec(2, 0));
    CHECK(K * K - exchanged == Matrix::identity(2) * Scalar(2));
    const auto* e = check_derived_identities(t).find("derived.KK_via_L_exchanged");
    REQUIRE(e);
    CHECK(e->detail.find("does not hold") != std::string::npos);
}

TEST_CASE("classification")
{
    const ClassificationResult s = classify(symplectic());
    CHECK(s.is_special);
    const ClassificationResult m = classify(make_structurable_fkts(make_m2_transpose()));
    CHECK_FALSE(m.is_special);
    CHECK(m.special_witness.has_value());
    CHECK(classify(make_structurable_fkts(make_scalar_algebra())).is_special);
    CHECK(classify(make_bilinear_fkts(1, Matrix{{1}}, Sign::minus, Sign::minus)).is_special);
}

TEST_CASE("constructor guards")
{
    CHECK_THROWS_AS(TripleSystem(Sign::plus, Sign::plus, 0, {}), DimensionError);
    CHECK_THROWS_AS(TripleSystem(Sign::plus, Sign::plus, 2, {{{0, 0, 0, 2}, Scalar(1)}}), DimensionError);
    CHECK_THROWS_AS(parse_sign(0), Error);
    SweepOptions small;
    small.max_dim = 1;
    CHECK_THROWS_AS(validate_fkts(symplectic(), small), DimensionError);
}
