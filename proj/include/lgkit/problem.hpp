#pragma once

#include <array>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lgkit/complex.hpp"
#include "lgkit/poly.hpp"

namespace lgkit {

using json = nlohmann::json;

const char* version();

// Problem files are JSON objects with a "kind" key and kind-specific keys.
// Expressions use the grammar of parse.hpp. When "variables" is absent the
// names are inferred from the expressions (x1..xN, or names in order of
// first appearance).

struct FactorizationSpec {
    std::size_t r0 = 0, r1 = 0;
    std::vector<std::vector<std::string>> A;  // r1 x r0
    std::vector<std::vector<std::string>> B;  // r0 x r1
    std::string W;
    std::vector<std::string> variables;
    bool operator==(const FactorizationSpec&) const = default;
};

struct JacobiSpec {
    std::string W;
    std::vector<std::string> variables;
    std::string frame = "affine";  // affine | hypersurface | complete_intersection
    std::string f;                 // hypersurface equation
    std::vector<std::string> equations;
    std::vector<std::vector<std::string>> tangent_generators;
    std::string order = "grevlex";  // lex | grlex | grevlex
    unsigned degree_cap = 64;
    bool operator==(const JacobiSpec&) const = default;
};

struct KoszulSpec {
    std::string W;
    std::vector<std::string> variables;
    std::vector<unsigned> caps{4, 6, 8};
    bool operator==(const KoszulSpec&) const = default;
};

struct CriticalSpec {
    std::string f;
    std::string W;
    std::vector<std::string> variables;
    std::array<double, 2> re{-3.0, 3.0};
    std::array<double, 2> im{-3.0, 3.0};
    unsigned grid = 5;
    double tol = 1e-10;
    unsigned max_iter = 60;
    bool operator==(const CriticalSpec&) const = default;
};

struct MfSpec {
    std::string mode = "verify";  // verify | hom | disk
    FactorizationSpec source;
    std::optional<FactorizationSpec> target;  // hom only; defaults to source
    std::vector<unsigned> caps{4, 6, 8};
    bool operator==(const MfSpec&) const = default;
};

struct ArrangementSpec {
    std::vector<std::vector<std::string>> forms;  // rational coefficients as text
    std::string report = "all";                   // poincare | mobius | os | h2 | all
    bool operator==(const ArrangementSpec&) const = default;
};

struct ThetaSpec {
    std::size_t samples = 50;
    double tol = 1e-8;
    std::uint64_t seed = 20240607;
    int n_max = 8;
    bool operator==(const ThetaSpec&) const = default;
};

struct ProblemSpec {
    std::string kind;  // jacobi | koszul | critical | mf-verify | mf-hom | mf-disk | arrangement | theta
    std::variant<JacobiSpec, KoszulSpec, CriticalSpec, MfSpec, ArrangementSpec, ThetaSpec> payload;
    bool operator==(const ProblemSpec&) const = default;
};

/// Strict parse: unknown keys, wrong types and inconsistent shapes raise
/// ParseError with the line and column of the offending key.
ProblemSpec parse_problem(std::string_view text);

/// Parses a bare factorization object {r0, r1, A, B, W[, variables]}.
FactorizationSpec parse_factorization(std::string_view text);

json to_json(const ProblemSpec& spec);
json to_json(const FactorizationSpec& spec);
std::string serialize_problem(const ProblemSpec& spec);

struct RunOptions {
    GroebnerOptions groebner;
    TruncationOptions truncation;
    unsigned threads = 0;  // multistart workers, 0 = hardware concurrency
};

/// Limits from LGKIT_MAX_PAIRS and LGKIT_MAX_MATRIX_DIM when set.
RunOptions run_options_from_env();

struct ResultRecord {
    std::string kind;
    json inputs;
    json outputs;
    json diagnostics;
    std::string version;
    /// False when a stabilization flag came back false; the CLI exits with 3.
    bool conclusive = true;

    json to_json() const;
    static ResultRecord from_json(const json& j);
    bool operator==(const ResultRecord&) const = default;
};

ResultRecord run(const ProblemSpec& problem, const RunOptions& options = {});

enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_parse = 2, exit_inconclusive = 3, exit_resource = 4 };

/// Exit status for an exception escaping run() or parsing.
int exit_code_for(const std::exception& e);

}  // namespace lgkit
