#pragma once

// File formats, the built-in example corpus and suite dispatch for the fkts tool.

#include "fkts/exactfield.hpp"
#include "fkts/report.hpp"
#include "fkts/structurable.hpp"
#include "fkts/triple_system.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fkts {

/// Syntax or semantic error in an input file; the message starts with "line N, column C:".
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

TripleSystem parse_fkts_file(std::string_view text);
std::string emit_fkts_file(const TripleSystem& t);
StructurableAlgebra parse_algebra_file(std::string_view text);
std::string emit_algebra_file(const StructurableAlgebra& a);

using Input = std::variant<TripleSystem, StructurableAlgebra>;

/// Dispatches on the header line (`fkts` or `alg`).
Input parse_input(std::string_view text);

/// symplectic, super1, zero, m2, m2_fkts, scalar, scalar_fkts ('-' and '_' are interchangeable).
std::vector<std::string> example_names();
std::optional<std::string> example_text(std::string name);

const std::vector<std::string>& all_suite_names();

struct SuiteSelection {
    std::set<std::string> suites;
    EmbeddingParams embedding;
    /// Empty means the built-in defaults.
    std::vector<Scalar> lambdas;
    std::vector<Matrix> unimodular;
    SweepOptions sweep;

    /// Comma-separated names or "all"; throws Error on an unknown name.
    static std::set<std::string> parse_list(std::string_view list);
    bool has(const std::string& s) const { return suites.count(s) != 0; }
};

/// Runs the selected suites in the fixed order of all_suite_names(). An algebra input
/// runs the triple-system suites on its associated (-1,1) system.
///
/// Checks whose outcome depends on the system class (U automorphisms, f and g
/// derivations, N = 0) are reported against the predicted outcome: the entry
/// passes when the computed result agrees with the prediction.
VerificationReport run_suites(const Input& input, const SuiteSelection& sel);

}  // namespace fkts
