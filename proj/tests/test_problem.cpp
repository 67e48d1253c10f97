#include <doctest.h>

#include <random>

#include "lgkit/errors.hpp"
#include "lgkit/problem.hpp"

using namespace lgkit;

namespace {

std::string parse_error_message(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

ParseError parse_error(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e;
    }
    return ParseError("no error");
}

const char* kMf = R"({"r0": 1, "r1": 1, "A": [["z"]], "B": [["z^2"]], "W": "z^3"})";

}  // namespace

TEST_CASE("problems: parsing valid files") {
    const auto p = parse_problem(R"({"kind": "jacobi", "W": "z^3"})");
    CHECK(p.kind == "jacobi");
    const auto& s = std::get<JacobiSpec>(p.payload);
    CHECK(s.W == "z^3");
    CHECK(s.frame == "affine");
    CHECK(s.order == "grevlex");

    const auto c = parse_problem(R"({"kind": "critical", "f": "x1*x2 - 1", "W": "x1 + x2", "re": [-2, 2], "grid": 3})");
    const auto& cs = std::get<CriticalSpec>(c.payload);
    CHECK(cs.re == std::array<double, 2>{-2.0, 2.0});
    CHECK(cs.im == std::array<double, 2>{-3.0, 3.0});
    CHECK(cs.grid == 3);

    const auto a = parse_problem(R"({"kind": "arrangement", "forms": [[1, 0], [0, 1], ["1", "-1/2"]]})");
    CHECK(std::get<ArrangementSpec>(a.payload).forms[2][1] == "-1/2");

    const auto m = parse_problem(std::string(R"({"kind": "mf-hom", "source": )") + kMf + "}");
    CHECK(std::get<MfSpec>(m.payload).mode == "hom");
    CHECK_FALSE(std::get<MfSpec>(m.payload).target.has_value());
}

TEST_CASE("problems: errors name the offending key and its location") {
    const ParseError e = parse_error("{\n  \"kind\": \"jacobi\",\n  \"jaccobi\": \"z^3\"\n}");
    CHECK(std::string(e.what()).find("unknown key 'jaccobi'") != std::string::npos);
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);

    CHECK(parse_error_message(R"({"kind": "jaccobi", "W": "z"})").find("unknown problem kind 'jaccobi'") !=
          std::string::npos);
    CHECK(parse_error_message(R"({"W": "z"})").find("missing required key 'kind'") != std::string::npos);
    CHECK(parse_error_message(R"({"kind": "jacobi", "W": 3})").find("'W' must be a string") != std::string::npos);
    CHECK(parse_error_message(R"({"kind": "jacobi", "W": "z", "order": "deglex"})").find("'order'") !=
          std::string::npos);
    CHECK(parse_error_message(R"({"kind": "critical", "f": "x1", "W": "x1", "re": [2, -2]})").find("low > high") !=
          std::string::npos);

    const ParseError bad_json = parse_error("{\n  \"kind\": \"jacobi\",,\n}");
    CHECK(std::string(bad_json.what()).find("invalid JSON") != std::string::npos);
    CHECK(bad_json.line() == 2);
}

TEST_CASE("problems: factorization shape errors") {
    const std::string bad =
        R"({"kind": "mf-verify", "factorization": {"r0": 2, "r1": 2, "A": [["1","0"],["0","1"]],)"
        R"( "B": [["1","0"],["0","1"],["0","0"]], "W": "1"}})";
    const std::string msg = parse_error_message(bad);
    CHECK(msg.find("shape error: 'B' has 3 rows, expected 2x2") != std::string::npos);
    CHECK_THROWS_AS(parse_factorization(R"({"r0": 1, "r1": 1, "A": [["z", "z"]], "B": [["z"]], "W": "z^2"})"),
                    ParseError);
    CHECK(parse_factorization(kMf).W == "z^3");
}

TEST_CASE("problems: serialization round trip") {
    std::vector<ProblemSpec> specs;
    JacobiSpec j;
    j.W = "x1 + x2 + x3";
    j.frame = "hypersurface";
    j.f = "x1*x2*x3 - 1";
    j.order = "lex";
    specs.push_back({"jacobi", j});
    JacobiSpec ci;
    ci.W = "x1 + x2";
    ci.frame = "complete_intersection";
    ci.equations = {"x1*x2 - 1"};
    ci.tangent_generators = {{"x1", "-x2"}};
    ci.variables = {"x1", "x2"};
    specs.push_back({"jacobi", ci});
    specs.push_back({"koszul", KoszulSpec{"a^3 + b^2", {"a", "b"}, {2, 5}}});
    CriticalSpec c;
    c.f = "x*y - 1";
    c.W = "x + y";
    c.re = {-1.5, 0.25};
    c.tol = 1e-9;
    specs.push_back({"critical", c});
    MfSpec m;
    m.mode = "hom";
    m.source = parse_factorization(kMf);
    m.target = parse_factorization(R"({"r0": 1, "r1": 1, "A": [["z^2"]], "B": [["z"]], "W": "z^3", "variables": ["z"]})");
    specs.push_back({"mf-hom", m});
    MfSpec d;
    d.mode = "disk";
    d.source = parse_factorization(kMf);
    d.caps = {6, 8};
    specs.push_back({"mf-disk", d});
    specs.push_back({"arrangement", ArrangementSpec{{{"1", "0"}, {"1/2", "-3"}}, "os"}});
    specs.push_back({"theta", ThetaSpec{12, 1e-9, 99, 7}});

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 10; ++k) {
        CriticalSpec r;
        r.f = "x1 - x2";
        r.W = "x1^2";
        const double a = u(rng), b = u(rng);
        r.re = {std::min(a, b), std::max(a, b)};
        r.tol = std::abs(u(rng)) * 1e-11 + 1e-14;
        r.grid = 1 + k;
        specs.push_back({"critical", r});
    }

    for (const auto& s : specs) {
        CAPTURE(s.kind);
        const std::string text = serialize_problem(s);
        CHECK(parse_problem(text) == s);
        CHECK(serialize_problem(parse_problem(text)) == text);
    }
}

TEST_CASE("problems: running") {
    auto rec = run(parse_problem(R"({"kind": "jacobi", "W": "z^3"})"));
    CHECK(rec.outputs.at("dimension") == 2);
    CHECK(rec.outputs.at("basis") == json::array({"1", "z"}));
    CHECK(rec.conclusive);
    CHECK(rec.version == version());

    rec = run(parse_problem(
        R"({"kind": "arrangement", "forms": [[1,0,0],[0,1,0],[0,0,1],[1,-1,0],[1,0,-1],[0,1,-1]]})"));
    CHECK(rec.outputs.at("poincare") == json::array({1, 6, 11, 6}));
    CHECK(rec.outputs.at("os_ranks") == json::array({1, 6, 11, 6}));
    CHECK(rec.outputs.at("h2_rank") == 11);

    rec = run(parse_problem(std::string(R"({"kind": "mf-disk", "factorization": )") + kMf + "}"));
    CHECK(rec.outputs.at("verdict") == true);

    rec = run(parse_problem(R"({"kind": "koszul", "W": "x^2*y", "caps": [4, 6]})"));
    CHECK_FALSE(rec.conclusive);

    rec = run(parse_problem(R"({"kind": "theta", "samples": 10})"));
    CHECK(rec.outputs.at("ok") == true);

    rec = run(parse_problem(R"({"kind": "critical", "f": "x1*x2*x3 - 1", "W": "x1 + x2 + x3", "grid": 3,
                                "re": [-2, 2], "im": [-2, 2]})"));
    CHECK(rec.outputs.at("count") == 3);
}

TEST_CASE("problems: identical input gives identical records") {
    const char* text = R"({"kind": "mf-hom", "source": {"r0": 1, "r1": 1, "A": [["z"]], "B": [["z"]], "W": "z^2"}})";
    const auto a = run(parse_problem(text)).to_json().dump();
    const auto b = run(parse_problem(text)).to_json().dump();
    CHECK(a == b);
    const auto rec = ResultRecord::from_json(json::parse(a));
    CHECK(rec.to_json().dump() == a);
}

TEST_CASE("problems: exit codes") {
    CHECK(exit_code_for(ParseError("x")) == exit_parse);
    CHECK(exit_code_for(InconclusiveError("x")) == exit_inconclusive);
    CHECK(exit_code_for(ResourceLimitError("x")) == exit_resource);
    CHECK(exit_code_for(DomainError("x")) == exit_error);

    RunOptions tight;
    tight.truncation.max_matrix_dim = 5;
    CHECK_THROWS_AS(run(parse_problem(R"({"kind": "koszul", "W": "x1^3 + x2*x3"})"), tight), ResourceLimitError);
    CHECK_THROWS_AS(run(parse_problem(R"({"kind": "jacobi", "W": "z^5", "degree_cap": 2})")), InconclusiveError);
}
