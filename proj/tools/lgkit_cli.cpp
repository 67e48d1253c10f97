// Command-line front end: each subcommand builds a problem and hands it to run().

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lgkit/arrangement.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/problem.hpp"

using namespace lgkit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Two consecutive even caps ending at `cap`, enough for the stabilization test.
std::vector<unsigned> caps_from(unsigned cap) {
    if (cap < 2) return {cap, cap + 2};
    return {cap - 2, cap};
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::array<double, 2> parse_pair(const std::string& text, std::size_t first, const std::vector<double>& values) {
    if (values.size() < first + 2) throw ParseError("--box expects re_lo,re_hi[,im_lo,im_hi], got '" + text + "'");
    return {values[first], values[first + 1]};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-Ginzburg algebra toolkit: Jacobi algebras, Koszul cohomology, matrix factorizations, "
                 "critical points, arrangements and theta functions"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    double tol = -1.0;
    int cap = -1;
    unsigned seed_grid = 0;
    unsigned threads = 0;
    app.add_option("--out", out_path, "Write the JSON record to this file instead of stdout");
    app.add_option("--tol", tol, "Numerical tolerance");
    app.add_option("--cap", cap, "Truncation degree cap (the largest cap of the stabilization check)");
    app.add_option("--seed-grid", seed_grid, "Multistart seeds per interval");
    app.add_option("--threads", threads, "Worker threads for multistart (0 = all cores)");

    // jacobi
    auto* jac = app.add_subcommand("jacobi", "Jacobi algebra dimension and basis");
    std::string jac_W, jac_f, jac_order = "grevlex", jac_vars;
    jac->add_option("--W", jac_W, "Superpotential")->required();
    jac->add_option("--f", jac_f, "Hypersurface equation (selects the hypersurface frame)");
    jac->add_option("--order", jac_order, "Monomial order")->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    jac->add_option("--vars", jac_vars, "Comma-separated variable names");

    // koszul
    auto* kos = app.add_subcommand("koszul", "Cohomology of the truncated Koszul complex of dW");
    std::string kos_W, kos_vars;
    std::vector<unsigned> kos_caps;
    kos->add_option("--W", kos_W, "Superpotential")->required();
    kos->add_option("--caps", kos_caps, "Truncation caps")->delimiter(',');
    kos->add_option("--vars", kos_vars, "Comma-separated variable names");

    // critical
    auto* crit = app.add_subcommand("critical", "Critical points of W restricted to {f = 0}");
    std::string crit_f, crit_W, crit_box, crit_vars;
    unsigned crit_grid = 0;
    crit->add_option("--f", crit_f, "Hypersurface equation")->required();
    crit->add_option("--W", crit_W, "Ambient superpotential")->required();
    crit->add_option("--box", crit_box, "re_lo,re_hi[,im_lo,im_hi] applied to every coordinate");
    crit->add_option("--grid", crit_grid, "Seeds per interval");
    crit->add_option("--vars", crit_vars, "Comma-separated variable names");

    // mf
    auto* mf = app.add_subcommand("mf", "Matrix factorizations");
    mf->require_subcommand(1);
    std::string mf_file, mf_target;
    std::vector<unsigned> mf_caps;
    auto* mf_verify = mf->add_subcommand("verify", "Check B*A = A*B = W");
    mf_verify->add_option("file", mf_file, "Factorization JSON")->required()->check(CLI::ExistingFile);
    auto* mf_hom = mf->add_subcommand("hom", "Even/odd dimensions of the HMF morphism space");
    mf_hom->add_option("file", mf_file, "Source factorization JSON")->required()->check(CLI::ExistingFile);
    mf_hom->add_option("target", mf_target, "Target factorization JSON (default: the source)")
        ->check(CLI::ExistingFile);
    mf_hom->add_option("--caps", mf_caps, "Truncation caps")->delimiter(',');
    auto* mf_disk = mf->add_subcommand("disk", "Disk algebra: Jac x End prediction against direct cohomology");
    mf_disk->add_option("file", mf_file, "Factorization JSON")->required()->check(CLI::ExistingFile);
    mf_disk->add_option("--caps", mf_caps, "Truncation caps")->delimiter(',');

    // arrangement
    auto* arr = app.add_subcommand("arrangement", "Hyperplane arrangement invariants");
    std::string arr_file, arr_report = "all";
    arr->add_option("--file", arr_file, "One linear form per line")->required()->check(CLI::ExistingFile);
    arr->add_option("--report", arr_report, "What to report")
        ->check(CLI::IsMember({"poincare", "mobius", "os", "h2", "all"}));

    // theta
    auto* theta = app.add_subcommand("theta", "Theta-function identities");
    theta->require_subcommand(1);
    auto* theta_chk = theta->add_subcommand("check", "Quasi-periodicity and factorization residuals");
    std::size_t theta_samples = 50;
    std::uint64_t theta_seed = ThetaSpec{}.seed;
    theta_chk->add_option("--samples", theta_samples, "Number of random points");
    theta_chk->add_option("--seed", theta_seed, "Random seed");

    // run
    auto* run_cmd = app.add_subcommand("run", "Run a problem file");
    std::string problem_file;
    run_cmd->add_option("problem", problem_file, "Problem JSON")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_parse;
    }

    try {
        ProblemSpec spec;
        if (*jac) {
            JacobiSpec s;
            s.W = jac_W;
            s.variables = split_names(jac_vars);
            s.order = jac_order;
            if (!jac_f.empty()) {
                s.frame = "hypersurface";
                s.f = jac_f;
            }
            if (cap >= 0) s.degree_cap = static_cast<unsigned>(cap);
            spec = {"jacobi", s};
        } else if (*kos) {
            KoszulSpec s;
            s.W = kos_W;
            s.variables = split_names(kos_vars);
            if (!kos_caps.empty())
                s.caps = kos_caps;
            else if (cap >= 0)
                s.caps = caps_from(static_cast<unsigned>(cap));
            spec = {"koszul", s};
        } else if (*crit) {
            CriticalSpec s;
            s.f = crit_f;
            s.W = crit_W;
            s.variables = split_names(crit_vars);
            if (!crit_box.empty()) {
                std::vector<double> v;
                for (const auto& part : split_names(crit_box)) {
                    try {
                        v.push_back(std::stod(part));
                    } catch (const std::exception&) {
                        throw ParseError("--box entry '" + part + "' is not a number");
                    }
                }
                s.re = parse_pair(crit_box, 0, v);
                s.im = v.size() >= 4 ? parse_pair(crit_box, 2, v) : std::array<double, 2>{0.0, 0.0};
            }
            if (crit_grid) s.grid = crit_grid;
            if (seed_grid) s.grid = seed_grid;
            if (tol > 0) s.tol = tol;
            spec = {"critical", s};
        } else if (*mf) {
            MfSpec s;
            s.mode = *mf_verify ? "verify" : *mf_hom ? "hom" : "disk";
            s.source = parse_factorization(read_file(mf_file));
            if (!mf_target.empty()) s.target = parse_factorization(read_file(mf_target));
            if (!mf_caps.empty())
                s.caps = mf_caps;
            else if (cap >= 0)
                s.caps = caps_from(static_cast<unsigned>(cap));
            spec = {"mf-" + s.mode, s};
        } else if (*arr) {
            ArrangementSpec s;
            s.report = arr_report;
            const std::string content = read_file(arr_file);
            parse_arrangement(content);  // reports bad input with file line/column
            std::istringstream lines(content);
            std::size_t line_no = 0;
            for (std::string line; std::getline(lines, line);) {
                ++line_no;
                if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
                std::istringstream tokens(line);
                std::vector<std::string> row;
                for (std::string t; tokens >> t;) row.push_back(t);
                if (!row.empty()) s.forms.push_back(std::move(row));
            }
            spec = {"arrangement", s};
        } else if (*theta) {
            ThetaSpec s;
            s.samples = theta_samples;
            s.seed = theta_seed;
            if (tol > 0) s.tol = tol;
            spec = {"theta", s};
        } else {
            spec = parse_problem(read_file(problem_file));
        }

        RunOptions options = run_options_from_env();
        options.threads = threads;
        const ResultRecord rec = run(spec, options);
        const std::string text = rec.to_json().dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw Error("cannot write '" + out_path + "'");
            out << text;
        }
        return rec.conclusive ? exit_ok : exit_inconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
