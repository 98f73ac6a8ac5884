// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "fkts/cli_report.hpp"
#include "fkts/lie_construct.hpp"
#include "fkts/symmetry.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fkts;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

TripleSystem corpus(const char* name)
{
    return parse_fkts_file(*example_text(name));
}

bool has_witness(const VerificationReport& r)
{
    for (const auto& e : r.entries())
        if (e.status == Status::fail && e.witness && !e.witness->empty())
            return true;
    return false;
}

const char* const kSystems[] = {"symplectic", "super1", "zero", "m2_fkts", "scalar_fkts"};

Outcome check_axioms()
{
    Outcome o;
    for (const char* name : {"symplectic", "super1"}) {
        const auto t0 = std::chrono::steady_clock::now();
        const TripleSystem t = corpus(name);
        const bool pass = validate_fkts(t).ok() && check_derived_identities(t).ok();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(pass, std::string(name) + " axioms");
        o.require(s < 1.0, std::string(name) + " took " + std::to_string(s) + " s");
    }
    const TripleSystem bad = corpus("symplectic").with_coefficient({0, 0, 0, 0}, 1);
    const VerificationReport r = validate_fkts(bad);
    o.require(!r.ok() && has_witness(r), "corrupted tensor not caught with a witness");
    return o;
}

Outcome check_lie_build()
{
    Outcome o;
    const GradedLie s = build_graded_lie(corpus("symplectic"));
    o.require(s.grade_dims() == std::array<std::size_t, 5>{1, 2, 4, 2, 1} && s.total_dim() == 10,
              "symplectic grade dimensions");
    const GradedLie u = build_graded_lie(corpus("super1"));
    o.require(u.grade_dims() == std::array<std::size_t, 5>{1, 1, 1, 1, 1} && u.total_dim() == 5,
              "super1 grade dimensions");
    for (const GradedLie* g : {&s, &u})
        o.require(check_grading(*g).ok() && check_graded_jacobi(*g).ok(), "grading or Jacobi");
    return o;
}

Outcome check_symmetry()
{
    Outcome o;
    const std::vector<Scalar> lambdas{Scalar(2), Scalar(3), Scalar(-1), Scalar::fraction(1, 2)};
    const std::vector<Matrix> us{Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {1, 1}}, Matrix{{2, 1}, {1, 1}}};
    for (const char* name : kSystems) {
        const GradedLie g = build_graded_lie(corpus(name));
        const TripleSystem& t = g.source();
        bool auts = check_automorphism(g, OuterMap::theta(t.epsilon_sign(), t.delta_sign())).ok();
        for (const auto& l : lambdas)
            auts = auts && check_automorphism(g, OuterMap::sigma(l)).ok();
        o.require(auts, std::string(name) + " theta/sigma");
        o.require(check_D_relations(g, lambdas).ok(), std::string(name) + " D relations");

        const bool predicted = classify(t).is_special && t.epsilon() == t.delta();
        const VerificationReport h = check_hfg_derivations(g);
        o.require(h.passed("hfg.h"), std::string(name) + " h derivation");
        o.require(h.passed("hfg.f") == predicted && h.passed("hfg.g") == predicted,
                  std::string(name) + " f/g derivations disagree with the special class");
    }
    const GradedLie s = build_graded_lie(corpus("symplectic"));
    const GradedLie m = build_graded_lie(corpus("m2_fkts"));
    for (const Matrix& u : us) {
        o.require(check_automorphism(s, OuterMap::unimodular(u)).ok(), "U on symplectic");
        const VerificationReport r = check_automorphism(m, OuterMap::unimodular(u));
        o.require(!r.ok() && has_witness(r), "U on m2_fkts did not fail with a witness");
    }
    return o;
}

Outcome check_modules()
{
    Outcome o;
    const GradedLie g = build_graded_lie(corpus("symplectic"));
    const ModuleDecomposition d = decompose_sl2_modules(g);
    o.require(d.total_dim == 13, "enlarged dimension " + std::to_string(d.total_dim));
    o.require(d.counts == std::map<std::size_t, std::size_t>{{1, 3}, {2, 2}, {3, 2}}, "multiplicities");
    o.require(module_report(g, d).ok(), "module report");
    const VerificationReport r = check_D_relations(g, {Scalar(2), Scalar(3), Scalar(-1), Scalar::fraction(1, 2)});
    o.require(r.passed("D_relations.sigma_grade_action"), "sigma grade action");
    return o;
}

Outcome check_nijenhuis()
{
    Outcome o;
    const VerificationReport s = nijenhuis_suite(build_graded_lie(corpus("symplectic")));
    o.require(s.ok(), "symplectic suite");
    const ReportEntry* sv = s.find("nijenhuis.value");
    o.require(sv && sv->detail.find("vanishes") != std::string::npos, "N not zero on symplectic");
    o.require(s.passed("nijenhuis.sl2_invariance"), "U invariance");

    const VerificationReport m = nijenhuis_suite(build_graded_lie(corpus("m2_fkts")));
    o.require(m.ok(), "m2_fkts suite");
    const ReportEntry* mv = m.find("nijenhuis.value");
    o.require(mv && mv->detail.find("nonzero") != std::string::npos, "N zero on m2_fkts");
    for (const VerificationReport* r : {&s, &m})
        o.require(r->passed("nijenhuis.J_squared") && r->passed("nijenhuis.block_formula"), "J^2 or block formula");
    return o;
}

Outcome check_curvature()
{
    Outcome o;
    for (const char* name : {"symplectic", "m2_fkts"}) {
        const VerificationReport r = curvature_torsion_suite(build_graded_lie(corpus(name)));
        o.require(r.ok() && r.passed("curvature.R_on_W") && r.passed("curvature.R_on_LWW") &&
                      r.passed("torsion.T_equals_bracket"),
                  name);
    }
    return o;
}

Outcome check_structurable()
{
    Outcome o;
    const StructurableAlgebra a = make_m2_transpose();
    o.require(validate_algebra(a).ok(), "M2 validation");
    const TripleSystem t = make_structurable_fkts(a);
    o.require(t.epsilon() == -1 && t.delta() == 1, "signs of the associated system");
    o.require(validate_fkts(t).ok() && check_derived_identities(t).ok(), "associated system axioms");
    SuiteSelection sel;
    sel.suites = {"structurable"};
    const VerificationReport r = run_suites(Input{a}, sel);
    o.require(r.ok() && r.passed("structurable.eex"), "eex = x");
    return o;
}

Outcome check_s4()
{
    Outcome o;
    const S4LieAlgebra l = build_s4_lie(make_m2_transpose(), {Scalar(1), Scalar(1), Scalar(1)});
    o.require(l.construction_report().passed("s4lie.jacobi"), "Jacobi");
    o.require(l.construction_report().ok(), "construction");
    const VerificationReport r = s4_action_check(l);
    std::size_t autos = 0, relations = 0;
    for (const auto& e : r.entries()) {
        autos += e.check_id.rfind("s4.automorphism.", 0) == 0 && e.status == Status::pass;
        relations += e.check_id.rfind("s4.relation.", 0) == 0 && e.status == Status::pass;
    }
    o.require(r.ok() && autos == 5 && relations == 10, "action and relations");
    return o;
}

Outcome check_theorem()
{
    Outcome o;
    EmbeddingParams rational;
    rational.beta = Scalar::fraction(-1, 2);
    rational.gammas = {Scalar(-1), Scalar(1), Scalar(1)};
    EmbeddingParams gaussian = EmbeddingParams::s4_symmetric();
    for (const auto& a : {make_m2_transpose(), make_scalar_algebra()})
        for (const EmbeddingParams* p : std::array<const EmbeddingParams*, 2>{&rational, &gaussian}) {
            const VerificationReport e = embed_theorem31(a, *p);
            o.require(e.ok() && e.passed("embed.membership"), "embedding with k = " + p->k.str());
            o.require(check_lemmas(a, *p).ok(), "lemmas with k = " + p->k.str());
        }
    return o;
}

Outcome check_determinism()
{
    Outcome o;
    SuiteSelection sel;
    sel.suites = SuiteSelection::parse_list("all");
    auto full = [&] {
        std::string out;
        bool ok = true;
        for (const auto& name : example_names()) {
            const VerificationReport r = run_suites(parse_input(*example_text(name)), sel);
            ok = ok && r.ok();
            out += "== " + name + "\n" + emit_text(r) + emit_json(r);
        }
        return std::make_pair(ok, out);
    };
    const auto first = full();
    const auto second = full();
    o.require(first.second == second.second, "reports differ");
    o.require(first.first && second.first, "a corpus entry failed (exit would be nonzero)");
    return o;
}

struct Criterion {
    int number;
    const char* title;
    double limit;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "axiom suite", 2.0, check_axioms},
        {2, "graded Lie build", 5.0, check_lie_build},
        {3, "symmetry suite", 10.0, check_symmetry},
        {4, "sl(2) modules", 0.0, check_modules},
        {5, "Nijenhuis tensor", 0.0, check_nijenhuis},
        {6, "curvature and torsion", 0.0, check_curvature},
        {7, "structurable algebra", 30.0, check_structurable},
        {8, "S4 Lie algebra", 0.0, check_s4},
        {9, "embedding and lemmas", 60.0, check_theorem},
        {10, "determinism", 0.0, check_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && s >= c.limit)
            o.require(false, "runtime limit " + std::to_string(c.limit) + " s exceeded");
        std::printf("criterion %2d %-24s %s  %.3f s%s%s\n", c.number, c.title, o.ok ? "PASS" : "FAIL", s,
                    o.note.empty() ? "" : "  ", o.note.c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
