#include "fkts/cli_report.hpp"
#include "fkts/symmetry.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fkts;

namespace {

GradedLie lie(const char* name)
{
    return build_graded_lie(parse_fkts_file(*example_text(name)));
}

}  // namespace

TEST_CASE("outer map construction")
{
    CHECK_THROWS_AS(OuterMap::sigma(0), Error);
    CHECK_THROWS_AS(OuterMap::unimodular(Matrix{{2, 0}, {0, 1}}), Error);
    CHECK_THROWS_AS(OuterMap::general_linear(Matrix{{1, 1}, {1, 1}}), Error);
    CHECK(OuterMap::theta(Sign::plus, Sign::plus).matrix() == Matrix{{0, -1}, {1, 0}});
    CHECK(OuterMap::sigma(2).matrix() == Matrix{{2, 0}, {0, Scalar::fraction(1, 2)}});

    // theta(x, y) = (-eps y, delta x)
    const HatElement x = HatElement::from_odd({Vec{1, 0}, Vec{0, 1}});
    const HatElement tx = apply_outer(OuterMap::theta(Sign::plus, Sign::plus), x);
    CHECK(tx.odd == Vec{0, -1, 1, 0});
}

TEST_CASE("theta and sigma are automorphisms on the corpus")
{
    for (const char* name : {"symplectic", "super1", "zero", "m2_fkts", "scalar_fkts"}) {
        INFO(name);
        const GradedLie g = lie(name);
        const TripleSystem& t = g.source();
        CHECK(check_automorphism(g, OuterMap::theta(t.epsilon_sign(), t.delta_sign())).ok());
        for (const auto& l : lambda_samples(t))
            CHECK(check_automorphism(g, OuterMap::sigma(l)).ok());
        CHECK(check_D_relations(g).ok());
    }
}

TEST_CASE("unimodular maps follow the special condition")
{
    const GradedLie s = lie("symplectic");
    const GradedLie m = lie("m2_fkts");
    for (const Matrix& u : {Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {1, 1}}, Matrix{{2, 1}, {1, 1}}}) {
        CHECK(check_automorphism(s, OuterMap::unimodular(u)).ok());
        const VerificationReport r = check_automorphism(m, OuterMap::unimodular(u));
        CHECK_FALSE(r.ok());
    }
    CHECK_FALSE(check_automorphism(s, OuterMap::general_linear(Matrix{{2, 0}, {0, 1}})).ok());
    CHECK(check_automorphism(lie("zero"), OuterMap::general_linear(Matrix{{2, 0}, {0, 1}})).ok());
}

TEST_CASE("h, f, g derivations")
{
    const VerificationReport s = check_hfg_derivations(lie("symplectic"));
    CHECK(s.ok());
    const VerificationReport m = check_hfg_derivations(lie("m2_fkts"));
    CHECK(m.passed("hfg.h"));
    CHECK(m.failed("hfg.f"));
    CHECK(m.failed("hfg.g"));
}

TEST_CASE("sl2 module decomposition")
{
    for (const char* name : {"symplectic", "super1", "zero"}) {
        INFO(name);
        const GradedLie g = lie(name);
        const ModuleDecomposition d = decompose_sl2_modules(g);
        const auto expect = oracle::module_counts(g.grade_dims());
        for (std::size_t dim = 1; dim <= 3; ++dim) {
            const auto it = d.counts.find(dim);
            CHECK((it == d.counts.end() ? 0 : it->second) == expect[dim - 1]);
        }
        CHECK(d.total_dim == g.total_dim() + 3);
        CHECK(module_report(g, d).ok());
    }
    const ModuleDecomposition s = decompose_sl2_modules(lie("symplectic"));
    CHECK(s.counts == std::map<std::size_t, std::size_t>{{1, 3}, {2, 2}, {3, 2}});
    CHECK(decompose_sl2_modules(lie("zero")).counts == std::map<std::size_t, std::size_t>{{2, 2}, {3, 1}});
    CHECK_THROWS_AS(decompose_sl2_modules(lie("m2_fkts")), Error);
}

TEST_CASE("Nijenhuis tensor")
{
    const GradedLie s = lie("symplectic");
    const GradedLie m = lie("m2_fkts");
    CHECK(nijenhuis_suite(s).ok());
    CHECK(nijenhuis_suite(m).ok());

    const Sl2Triple sl = sl2_triple(4);
    const Matrix J = sl.f - sl.g;
    CHECK(J * J == -Matrix::identity(8));
    bool nonzero = false;
    for (std::size_t i = 0; i < 8 && !nonzero; ++i)
        for (std::size_t j = 0; j < 8 && !nonzero; ++j) {
            const WElement x = WElement::from_stacked(unit_vec(8, i)), y = WElement::from_stacked(unit_vec(8, j));
            const Matrix N = nijenhuis(m.source(), x, y, J);
            CHECK(N == nijenhuis_blocks(m.source(), x, y));
            nonzero = !N.is_zero();
        }
    CHECK(nonzero);
}

TEST_CASE("curvature and torsion")
{
    CHECK(curvature_torsion_suite(lie("symplectic")).ok());
    CHECK(curvature_torsion_suite(lie("m2_fkts")).ok());
    CHECK_THROWS_AS(curvature_torsion_suite(lie("super1")), Error);
}
