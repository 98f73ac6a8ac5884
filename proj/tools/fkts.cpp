#include "fkts/cli_report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace fkts;

namespace {

std::string load(const std::string& arg)
{
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (auto t = example_text(arg))
        return *t;
    throw Error("no such file or built-in example: '" + arg + "'");
}

std::vector<Scalar> scalar_list(const std::string& s)
{
    std::vector<Scalar> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Scalar::parse(item));
    return out;
}

// "a,b,c,d;a,b,c,d" row-major 2x2 matrices
std::vector<Matrix> matrix_list(const std::string& s)
{
    std::vector<Matrix> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto v = scalar_list(item);
        if (v.size() != 4)
            throw Error("a 2x2 matrix needs 4 entries: '" + item + "'");
        out.push_back(Matrix{{v[0], v[1]}, {v[2], v[3]}});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification for Freudenthal-Kantor triple systems and structurable algebras"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file, suites = "all", lambdas, unimodular, alpha = "1", beta = "-1/2", k = "1", gamma = "-1,1,1",
                      signs = "corrected";
    std::size_t max_dim = SweepOptions{}.max_dim;

    auto* verify = app.add_subcommand("verify", "Run verification suites on a system or algebra file");
    verify->add_option("file", file, "Path or built-in example name")->required();
    verify->add_option("--suites", suites, "Comma-separated suite names or 'all'");
    verify->add_option("--max-dim", max_dim, "Dimension guard for basis sweeps");
    verify->add_option("--lambda", lambdas, "sigma samples, e.g. 2,3,-1,1/2");
    verify->add_option("--unimodular", unimodular, "2x2 samples, e.g. '1,1,0,1;2,1,1,1'");

    auto* classify_cmd = app.add_subcommand("classify", "Special / unitary / balanced classification");
    classify_cmd->add_option("file", file)->required();
    auto* lie = app.add_subcommand("lie", "Build the graded algebra and check grading and Jacobi");
    lie->add_option("file", file)->required();

    auto* embed = app.add_subcommand("embed", "Embed the S4 Lie algebra of an algebra into the graded algebra");
    embed->add_option("algfile", file)->required();
    for (auto* cmd : {verify, embed}) {
        cmd->add_option("--alpha", alpha);
        cmd->add_option("--beta", beta);
        cmd->add_option("--k", k);
        cmd->add_option("--gamma", gamma, "gamma_1,gamma_2,gamma_3");
        cmd->add_option("--signs", signs, "Sign convention of the T_1, T_2 K-entries")
            ->check(CLI::IsMember({"corrected", "printed"}));
    }

    auto* s4 = app.add_subcommand("s4", "Build the S4 Lie algebra (gammas = 1) and check the S4 action");
    s4->add_option("algfile", file)->required();

    std::string example_name;
    auto* example = app.add_subcommand("example", "Print a built-in example file");
    example->add_option("name", example_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) {
            auto t = example_text(example_name);
            if (!t) {
                std::cerr << "unknown example '" << example_name << "'; available:";
                for (const auto& n : example_names())
                    std::cerr << " " << n;
                std::cerr << "\n";
                return 2;
            }
            std::cout << *t;
            return 0;
        }

        SuiteSelection sel;
        sel.sweep.max_dim = max_dim;
        if (verify->parsed())
            sel.suites = SuiteSelection::parse_list(suites);
        else if (classify_cmd->parsed())
            sel.suites = {"classify"};
        else if (lie->parsed())
            sel.suites = {"lie", "grading", "jacobi"};
        else if (embed->parsed())
            sel.suites = {"embed"};
        else
            sel.suites = {"s4"};
        if (!lambdas.empty())
            sel.lambdas = scalar_list(lambdas);
        if (!unimodular.empty())
            sel.unimodular = matrix_list(unimodular);
        sel.embedding.alpha = Scalar::parse(alpha);
        sel.embedding.beta = Scalar::parse(beta);
        sel.embedding.k = Scalar::parse(k);
        const auto g = scalar_list(gamma);
        if (g.size() != 3)
            throw Error("--gamma needs three values");
        sel.embedding.gammas = {g[0], g[1], g[2]};
        sel.embedding.convention = signs == "printed" ? SignConvention::as_printed : SignConvention::corrected;

        const Input input = parse_input(load(file));
        if ((embed->parsed() || s4->parsed()) && !std::holds_alternative<StructurableAlgebra>(input))
            throw Error("'" + file + "' is not an algebra file");
        if (embed->parsed())
            sel.embedding.validate();

        const VerificationReport r = run_suites(input, sel);
        std::cout << (format == "json" ? emit_json(r) : emit_text(r));
        return r.ok() ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
