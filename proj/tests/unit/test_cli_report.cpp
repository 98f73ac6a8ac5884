#include "fkts/cli_report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace fkts;

namespace {

std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(FKTS_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_error_line(const std::string& text)
{
    try {
        parse_input(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

}  // namespace

TEST_CASE("shipped files equal the built-in generators")
{
    CHECK(parse_fkts_file(read_data("symplectic_11.fkts")) ==
          make_bilinear_fkts(2, Matrix{{0, 1}, {-1, 0}}, Sign::plus, Sign::plus));
    CHECK(read_data("symplectic_11.fkts") == *example_text("symplectic"));
    CHECK(read_data("super1_mm.fkts") == *example_text("super1"));
    CHECK(read_data("zero_2.fkts") == *example_text("zero"));
    CHECK(read_data("m2_fkts.fkts") == *example_text("m2-fkts"));
    CHECK(read_data("scalar_fkts.fkts") == *example_text("scalar_fkts"));
    CHECK(read_data("m2_transpose.alg") == *example_text("m2"));
    CHECK(read_data("scalar.alg") == *example_text("scalar"));
    CHECK_FALSE(example_text("nope").has_value());
}

TEST_CASE("round trips")
{
    for (const auto& name : example_names()) {
        INFO(name);
        const Input in = parse_input(*example_text(name));
        if (const auto* t = std::get_if<TripleSystem>(&in))
            CHECK(parse_fkts_file(emit_fkts_file(*t)) == *t);
        else {
            const auto& a = std::get<StructurableAlgebra>(in);
            CHECK(emit_algebra_file(parse_algebra_file(emit_algebra_file(a))) == emit_algebra_file(a));
        }
    }
    const StructurableAlgebra m = parse_algebra_file(read_data("m2_transpose.alg"));
    const StructurableAlgebra ref = make_m2_transpose();
    CHECK(m.involution() == ref.involution());
    CHECK(m.unit() == ref.unit());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m.basis_product(i, j) == ref.basis_product(i, j));
}

TEST_CASE("gaussian coefficients")
{
    const std::string text = "fkts\nfield Qi\nepsilon +1\ndelta -1\ndim 1\nc 1 1 1 1 1/2+1*i\n";
    const TripleSystem t = parse_fkts_file(text);
    CHECK(t.coefficient({0, 0, 0, 0}) == Scalar::parse("1/2+i"));
    CHECK(emit_fkts_file(t) == text);
}

TEST_CASE("parse errors carry line numbers")
{
    const std::string head = "fkts\nfield Q\nepsilon 1\ndelta 1\ndim 2\n";
    CHECK(parse_error_line("fkts\nfield Q\nepsilon 0\ndelta 1\ndim 2\n") == 3);
    CHECK(parse_error_line(head + "c 1 1 1 1 1\nc 1 1 1 1 2\n") == 7);
    CHECK(parse_error_line(head + "c 1 1 1 3 1\n") == 6);
    CHECK(parse_error_line(head + "c 1 1 1 1 1/0\n") == 6);
    CHECK(parse_error_line(head + "c 1 1 1 1 i\n") == 6);
    CHECK(parse_error_line(head + "c 1 1 1 1\n") == 6);
    CHECK(parse_error_line(head + "q 1\n") == 6);
    CHECK(parse_error_line("fkts\nfield Q\nepsilon 1\ndim 2\n") == 5);
    CHECK(parse_error_line("# comment\n\nfkts\nfield Q\nepsilon 1\nepsilon 1\n") == 6);
    CHECK(parse_error_line("alg\nfield Q\ndim 1\nm 1 1 1 1\ninv 1 1 1\n") == 6);
    CHECK(parse_error_line("alg\nfield Q\ndim 1\nunit 1\nm 1 1 1 1\nm 1 1 1 1\n") == 6);
    CHECK(parse_error_line("") == 1);
    CHECK_NOTHROW(parse_input("alg\nfield Q\ndim 1\nunit 1\nm 1 1 1 1\ninv 1 1 1\n"));
}

TEST_CASE("involution that is not an involution is caught downstream")
{
    const StructurableAlgebra a = parse_algebra_file("alg\nfield Q\ndim 1\nunit 1\nm 1 1 1 1\ninv 1 1 2\n");
    SuiteSelection sel;
    sel.suites = {"structurable"};
    const VerificationReport r = run_suites(a, sel);
    CHECK(r.failed("structurable.involution_square"));
}

TEST_CASE("suite selection")
{
    CHECK(SuiteSelection::parse_list("all").size() == all_suite_names().size());
    CHECK(SuiteSelection::parse_list("axioms,lie") == std::set<std::string>{"axioms", "lie"});
    CHECK_THROWS_AS(SuiteSelection::parse_list("axioms,bogus"), Error);
}

TEST_CASE("run_suites gating and expected outcomes")
{
    SuiteSelection sel;
    sel.suites = {"sl2", "modules"};
    const VerificationReport m = run_suites(parse_input(*example_text("m2_fkts")), sel);
    CHECK(m.ok());
    CHECK(m.count(Status::skipped) == 2);

    sel.suites = {"dsym", "hfg"};
    const VerificationReport d = run_suites(parse_input(*example_text("m2_fkts")), sel);
    CHECK(d.ok());
    const ReportEntry* u = d.find("dsym.unimodular.U(1,1;0,1)");
    REQUIRE(u);
    CHECK(u->detail.find("holds: no, predicted: no") != std::string::npos);

    sel.suites = {"embed"};
    const VerificationReport e = run_suites(parse_input(*example_text("symplectic")), sel);
    CHECK(e.count(Status::skipped) == 1);
}

TEST_CASE("reports are deterministic and serialize")
{
    SuiteSelection sel;
    sel.suites = SuiteSelection::parse_list("all");
    const Input in = parse_input(*example_text("symplectic"));
    const VerificationReport a = run_suites(in, sel);
    const VerificationReport b = run_suites(in, sel);
    CHECK(a.ok());
    CHECK(emit_text(a) == emit_text(b));
    CHECK(emit_json(a) == emit_json(b));

    const auto j = nlohmann::json::parse(emit_json(a));
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == a.size());
    CHECK(j["entries"][0].contains("check_id"));

    CHECK(emit_text(VerificationReport{}) == "summary: 0/0 passed, 0 failed, 0 skipped\n");
    VerificationReport f;
    f.fail("x", "value 1/3+2*i");
    CHECK_FALSE(f.ok());
    CHECK(emit_text(f).find("witness: value 1/3+2*i") != std::string::npos);
}
