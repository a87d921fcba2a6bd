// Command-line front end: per-parameter computations (hilbert, min-gens,
// singular-scan), named verification suites, the recursive singular-series
// construction, and spec-file driven sweeps.  Every invocation prints a
// human-readable table and writes a content-addressed record to the store
// directory (env CHEREDNIK_STORE, default ./results).
//
// Exit codes: 0 all checks PASS or EVIDENCE, 1 any FAIL (or a runtime
// error), 2 usage error.

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cherednik/cherednik.hpp"

namespace {

using namespace cherednik;

int worst_exit = 0;

void bump(const ResultRecord& rec) {
    for (const auto& ch : rec.checks)
        if (ch.status == "FAIL") worst_exit = std::max(worst_exit, 1);
}

std::string stored_path(const ResultRecord& rec) {
    return (store_dir() / (rec.content_hash() + ".json")).string();
}

void print_checks(const ResultRecord& rec) {
    for (const auto& ch : rec.checks) {
        std::cout << "  [" << ch.status << "] " << ch.name;
        if (!ch.detail.empty()) std::cout << "\n         " << ch.detail;
        std::cout << "\n";
    }
}

void print_series(const nlohmann::json& h, const std::string& label) {
    const auto coeffs = h.at("coeffs").get<std::vector<std::int64_t>>();
    const bool complete = h.at("complete").get<bool>();
    std::size_t width = 3;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        width = std::max(width, std::to_string(coeffs[d]).size());
        width = std::max(width, std::to_string(d).size());
    }
    std::ostringstream top, bot;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        top << ' ' << std::setw(static_cast<int>(width)) << d;
        bot << ' ' << std::setw(static_cast<int>(width)) << coeffs[d];
    }
    std::int64_t total = 0;
    for (std::int64_t r : coeffs) total += r;
    std::cout << "  " << label << "\n"
              << "    degree |" << top.str() << "\n"
              << "    dim    |" << bot.str() << "\n"
              << "    complete: " << (complete ? "yes" : "no (raise --max-degree)")
              << "    total dimension: " << total << (complete ? "" : "+") << "\n";
}

void print_point_header(const ResultRecord& rec) {
    const auto& s = rec.spec;
    std::cout << "group " << s.at("experiment").get<std::string>() << "  p=" << s.at("p")
              << "  tau=" << s.at("tau").get<std::string>();
    if (s.contains("c"))
        std::cout << "  c=" << s.at("c");
    else
        std::cout << "  c generic";
    std::cout << "\n\n";
}

void print_point_outputs(const ResultRecord& rec) {
    if (rec.outputs.contains("hilbert")) print_series(rec.outputs["hilbert"], "series of L_c");
    if (rec.outputs.contains("min_gens")) {
        const auto& mg = rec.outputs["min_gens"];
        std::cout << "  minimal generator degrees of J_c: {";
        const auto degs = mg.at("degrees").get<std::vector<int>>();
        for (std::size_t i = 0; i < degs.size(); ++i)
            std::cout << (i ? ", " : "") << degs[i];
        std::cout << "}" << (mg.at("complete").get<bool>() ? "" : "  (scan incomplete)") << "\n";
        if (!rec.outputs.contains("hilbert")) print_series(mg.at("hilbert"), "series of L_c");
    }
    if (rec.outputs.contains("singular_scan")) {
        for (const auto& row : rec.outputs["singular_scan"]) {
            std::cout << "  degree " << row.at("degree") << ": singular dimension "
                      << row.at("dim") << "\n";
            if (row.contains("basis"))
                for (const auto& v : row.at("basis"))
                    std::cout << "      " << v.get<std::string>() << "\n";
        }
    }
    if (rec.outputs.contains("recursion")) {
        const auto& r = rec.outputs["recursion"];
        std::cout << "  outcome: " << r.at("outcome").get<std::string>() << " after "
                  << r.at("steps") << " step(s)\n";
        if (r.contains("note")) std::cout << "  note: " << r.at("note").get<std::string>() << "\n";
        int m = 0;
        for (const auto& f : r.at("terms"))
            std::cout << "    F_" << m++ << " = " << f.get<std::string>() << "\n";
        if (r.contains("correction"))
            std::cout << "    correction P = " << r.at("correction").get<std::string>() << "\n";
        if (r.contains("series"))
            std::cout << "  series sum_m c^m F_m (+ c^M P) =\n    "
                      << r.at("series").get<std::string>() << "\n";
    }
}

void print_record_footer(const ResultRecord& rec) {
    std::cout << "\noverall: " << rec.overall() << "   (" << std::fixed << std::setprecision(2)
              << rec.elapsed_seconds << " s)\nrecord: " << stored_path(rec) << "\n";
    std::cout.unsetf(std::ios::fixed);
}

void run_one_point_spec(const ExperimentSpec& spec) {
    const auto recs = sweep(spec);
    const ResultRecord& rec = recs.at(0);
    print_point_header(rec);
    print_point_outputs(rec);
    if (!rec.checks.empty()) {
        std::cout << "\n";
        print_checks(rec);
    }
    print_record_footer(rec);
    bump(rec);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lowest-weight computations for rational Cherednik algebras in "
                 "characteristic p"};
    app.set_version_flag("--version", cherednik::library_version);
    app.require_subcommand(1);

    // Shared option state.
    std::string group = "Sn:3";
    std::string tau = "triv";
    std::uint64_t p = 0;
    std::int64_t c_value = 0;
    bool c_given = false;
    int max_degree = 20;
    int scan_degree = 0;

    auto add_common = [&](CLI::App* sub, bool with_c) {
        sub->add_option("--group", group, "group descriptor, Sn:<n> or Dm:<m>")
            ->capture_default_str();
        sub->add_option("--p", p, "characteristic (prime)")->required();
        sub->add_option("--tau", tau, "lowest weight: triv or rho:<a>")->capture_default_str();
        if (with_c)
            sub->add_option("--c", c_value, "deformation parameter in F_p (omit for generic c)")
                ->each([&](const std::string&) { c_given = true; });
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimensions of L_c");
    add_common(hilbert, true);
    hilbert->add_option("--max-degree", max_degree, "scan depth")->capture_default_str();

    CLI::App* mingens =
        app.add_subcommand("min-gens", "minimal generator degrees of the kernel ideal J_c");
    add_common(mingens, true);
    mingens->add_option("--max-degree", max_degree, "scan depth")->capture_default_str();

    CLI::App* scan =
        app.add_subcommand("singular-scan", "basis of the singular vectors in one degree");
    add_common(scan, true);
    scan->add_option("--degree", scan_degree, "degree to scan")->required();

    // verify
    std::string verify_id;
    cherednik::VerifyParams vp;
    int v_n = 0, v_m = 0, v_a = 0, v_maxd = 0;
    std::uint64_t v_p = 0;
    std::int64_t v_c = 0;
    bool v_c_given = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run one named verification suite");
    verify_cmd->add_option("id", verify_id, "suite id, e.g. T3.2 or C3.6")->required();
    verify_cmd->add_option("--n", v_n, "symmetric rank n");
    verify_cmd->add_option("--m", v_m, "dihedral order m");
    verify_cmd->add_option("--a", v_a, "rho label a");
    verify_cmd->add_option("--p", v_p, "characteristic");
    verify_cmd->add_option("--c", v_c, "deformation parameter")
        ->each([&](const std::string&) { v_c_given = true; });
    verify_cmd->add_option("--max-degree", v_maxd, "override scan depth");

    // recursion
    std::uint64_t r_p = 0;
    int r_n = 0, r_steps = 6;
    std::string r_policy = "heuristic";
    std::vector<std::int64_t> r_a;
    CLI::App* rec_cmd =
        app.add_subcommand("recursion", "recursive singular-series construction for S_n, p | n");
    rec_cmd->add_option("--p", r_p, "characteristic (prime, p | n)")->required();
    rec_cmd->add_option("--n", r_n, "number of variables")->required();
    rec_cmd->add_option("--a", r_a, "start weights a_1,...,a_n")->required()->delimiter(',');
    rec_cmd->add_option("--policy", r_policy, "termination policy: heuristic or never")
        ->capture_default_str();
    rec_cmd->add_option("--steps", r_steps, "step budget")->capture_default_str();

    // sweep
    std::string spec_file;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run every point of a spec file");
    sweep_cmd->add_option("--spec", spec_file, "experiment spec (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        using namespace cherednik;
        if (*hilbert || *mingens || *scan) {
            ExperimentSpec spec;
            spec.group = group;
            spec.p = p;
            spec.tau = tau;
            spec.c_mode = c_given ? "value" : "generic";
            spec.c_value = c_value;
            spec.max_degree = *scan ? std::max(scan_degree, 1) : max_degree;
            if (*hilbert) spec.tasks = {"hilbert"};
            if (*mingens) spec.tasks = {"min-gens"};
            if (*scan) {
                spec.tasks = {"singular-scan"};
                spec.singular_degree = scan_degree;
            }
            run_one_point_spec(spec);
        } else if (*verify_cmd) {
            if (v_n) vp.n = v_n;
            if (v_m) vp.m = v_m;
            if (v_a) vp.a = v_a;
            if (v_p) vp.p = v_p;
            if (v_c_given) vp.c = v_c;
            if (v_maxd) vp.max_degree = v_maxd;
            const ResultRecord rec = verify(verify_id, vp);
            store_record(rec);
            std::cout << "verify " << verify_id << "\n\n";
            print_checks(rec);
            print_record_footer(rec);
            bump(rec);
        } else if (*rec_cmd) {
            ExperimentSpec spec;
            spec.group = "Sn:" + std::to_string(r_n);
            spec.p = r_p;
            spec.c_mode = "generic";
            spec.tasks = {"recursion"};
            spec.recursion_weights = r_a;
            spec.recursion_steps = r_steps;
            spec.recursion_policy = r_policy;
            run_one_point_spec(spec);
        } else if (*sweep_cmd) {
            std::ifstream in(spec_file);
            if (!in) throw IoError("cannot read spec file " + spec_file);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw InvalidInput("malformed spec file: " + std::string(e.what()));
            }
            const ExperimentSpec spec = ExperimentSpec::from_json(j);
            const auto recs = sweep(spec);
            std::cout << "sweep " << spec.group << "  p=" << spec.p << "  tau=" << spec.tau
                      << "  cMode=" << spec.c_mode << "  points: " << recs.size() << "\n\n";
            for (const auto& rec : recs) {
                std::cout << "---\n";
                print_point_header(rec);
                print_point_outputs(rec);
                if (!rec.checks.empty()) print_checks(rec);
                std::cout << "  overall: " << rec.overall() << "   record " << stored_path(rec)
                          << "\n";
                bump(rec);
            }
        }
    } catch (const cherednik::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cherednik::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cherednik::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return worst_exit;
}
