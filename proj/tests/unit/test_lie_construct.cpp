#include "fkts/cli_report.hpp"
#include "fkts/lie_construct.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fkts;

namespace {

TripleSystem corpus(const char* name)
{
    return parse_fkts_file(*example_text(name));
}

// dim L_0 computed without the library: pairs (L(x,y), eps L(y,x)) from the hand-written product
std::size_t symplectic_l0_dim()
{
    std::vector<oracle::Row> rows;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            oracle::Row r;
            auto L = [&](std::size_t a, std::size_t b) {
                oracle::Row m(4);
                for (std::size_t c = 0; c < 2; ++c) {
                    oracle::Row ea(2), eb(2), ec(2);
                    ea[a] = 1;
                    eb[b] = 1;
                    ec[c] = 1;
                    const oracle::Row v = oracle::symplectic_product(ea, eb, ec);
                    m[0 * 2 + c] = v[0];
                    m[1 * 2 + c] = v[1];
                }
                return m;
            };
            const oracle::Row a = L(i, j), b = L(j, i);
            r.insert(r.end(), a.begin(), a.end());
            r.insert(r.end(), b.begin(), b.end());
            rows.push_back(r);
        }
    return oracle::rank(rows);
}

}  // namespace

TEST_CASE("grade dimensions")
{
    const GradedLie s = build_graded_lie(corpus("symplectic"));
    CHECK(s.grade_dims() == std::array<std::size_t, 5>{1, 2, 4, 2, 1});
    CHECK(s.grade_dims()[2] == symplectic_l0_dim());
    CHECK(s.total_dim() == 10);

    const GradedLie u = build_graded_lie(corpus("super1"));
    CHECK(u.grade_dims() == std::array<std::size_t, 5>{1, 1, 1, 1, 1});
    CHECK(u.total_dim() == 5);

    const GradedLie m = build_graded_lie(corpus("m2_fkts"));
    CHECK(m.grade_dims() == std::array<std::size_t, 5>{1, 4, 5, 4, 1});
    CHECK(m.even_span().dimension() == 7);

    const GradedLie c = build_graded_lie(corpus("scalar_fkts"));
    CHECK(c.grade_dims() == std::array<std::size_t, 5>{0, 1, 1, 1, 0});

    const GradedLie z = build_graded_lie(corpus("zero"));
    CHECK(z.even_dim() == 0);
}

TEST_CASE("W triple on the symplectic system")
{
    const TripleSystem t = corpus("symplectic");
    const WElement x{unit_vec(2, 0), Vec(2)}, y{Vec(2), unit_vec(2, 1)};
    const WElement r = w_triple(t, x, y, x);
    CHECK(r.top == Vec{-1, 0});
    CHECK(is_zero(r.bottom));
    // the triple is the bracket applied to the third argument
    CHECK(w_bracket(t, x, y) * x.stacked() == r.stacked());
}

TEST_CASE("grading, Jacobi and triple system axioms")
{
    for (const char* name : {"symplectic", "super1", "zero", "m2_fkts", "scalar_fkts"}) {
        INFO(name);
        const GradedLie g = build_graded_lie(corpus(name));
        CHECK(check_grading(g).ok());
        CHECK(check_graded_jacobi(g).ok());
        CHECK(describe_graded_lie(g).ok());
        CHECK(check_lts_axioms(w_triple_product(g.source()), g.source().delta()).ok());
    }
}

TEST_CASE("bracket antisymmetry by hand")
{
    const GradedLie g = build_graded_lie(corpus("symplectic"));
    const std::size_t d = g.total_dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const HatElement ab = hat_bracket(g.source(), g.basis()[a], g.basis()[b]);
            const HatElement ba = hat_bracket(g.source(), g.basis()[b], g.basis()[a]);
            CHECK((ab + ba).is_zero());
            CHECK(g.element(g.basis_bracket(a, b)) == ab);
        }
}

TEST_CASE("twisted doubled system")
{
    const TripleSystem t = corpus("symplectic");
    const TripleSystem d = make_doubled_fkts(t);
    const TripleProduct tw = p_twist(d, standard_twist(t));
    const TripleProduct w = w_triple_product(t);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                const Vec x = unit_vec(4, i), y = unit_vec(4, j), z = unit_vec(4, k);
                CHECK(tw.eval(x, y, z) == w.eval(x, y, z));
            }
    CHECK(check_lts_axioms(tw, 1, "twist").ok());
    CHECK_THROWS_AS(p_twist(d, Matrix::identity(4)), Error);
}
