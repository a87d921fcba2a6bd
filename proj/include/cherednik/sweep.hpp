#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cherednik/verify.hpp"

// Parameter sweeps.  An ExperimentSpec names a group, a lowest weight, a
// deformation-parameter mode, and a task list; sweep() expands it into one
// record per parameter point.  Points run concurrently up to the requested
// worker count, results keep the point order, and every record is written
// to the content-addressed store.  Identical specs reproduce identical
// record hashes, so re-running a partially finished sweep reuses the points
// already on disk and only computes the missing ones.

namespace cherednik {

struct GroupDescriptor {
    GroupFamily family = GroupFamily::Symmetric;
    int size = 0; // n for S_n, m for G(m,m,2)
};

// Accepts "Sn:<n>" (symmetric) and "Dm:<m>" (dihedral).
inline GroupDescriptor parse_group(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidInput("group descriptor must look like Sn:3 or Dm:7, got '" + text + "'");
    const std::string head = text.substr(0, colon);
    const std::string num = text.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("group descriptor needs a numeric size, got '" + text + "'");
    GroupDescriptor g;
    g.size = std::stoi(num);
    if (head == "Sn" || head == "S")
        g.family = GroupFamily::Symmetric;
    else if (head == "Dm" || head == "D")
        g.family = GroupFamily::Dihedral;
    else
        throw InvalidInput("unknown group family '" + head + "' (use Sn:<n> or Dm:<m>)");
    return g;
}

inline TauSpec parse_tau(const std::string& text) {
    if (text == "triv" || text.empty()) return TauSpec::trivial();
    if (text.rfind("rho:", 0) == 0) {
        const std::string num = text.substr(4);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("tau label 'rho:<a>' needs a numeric a, got '" + text + "'");
        return TauSpec::rho(std::stoi(num));
    }
    throw InvalidInput("unknown tau label '" + text + "' (use 'triv' or 'rho:<a>')");
}

struct ExperimentSpec {
    std::string group = "Sn:3"; // "Sn:<n>" or "Dm:<m>"
    std::uint64_t p = 5;
    std::string tau = "triv";       // "triv" or "rho:<a>"
    std::string c_mode = "generic"; // "generic" | "value" | "sweep-all-F_p"
    std::int64_t c_value = 0;       // used when c_mode == "value"
    int max_degree = 20;
    std::vector<std::string> tasks; // hilbert | singular-scan | min-gens | verify:<id> | recursion
    int singular_degree = 0;        // 0 = scan every degree 1..max_degree
    std::vector<std::int64_t> recursion_weights;
    int recursion_steps = 6;
    std::string recursion_policy = "heuristic"; // "heuristic" | "never"
    int workers = 1;                            // execution detail, not record identity

    void validate() const;
    nlohmann::json to_json() const;
    static ExperimentSpec from_json(const nlohmann::json& j);
};

namespace sweep_detail {

// Which verification suites make sense for which family.
inline bool verify_id_matches_family(const std::string& id, GroupFamily fam) {
    static const std::vector<std::string> sym = {"T3.1", "T3.2", "T3.4", "R3.5",
                                                 "C3.6", "C3.7", "T5.1"};
    static const std::vector<std::string> dih = {"T4.1", "T4.2", "T4.4", "R4.5"};
    const auto& list = (fam == GroupFamily::Symmetric) ? sym : dih;
    return std::find(list.begin(), list.end(), id) != list.end();
}

inline std::string normalize_c_mode(const std::string& mode) {
    if (mode == "generic" || mode == "value") return mode;
    if (mode == "sweep-all-F_p" || mode == "sweep-all-Fp" || mode == "sweep")
        return "sweep-all-F_p";
    throw InvalidInput("cMode must be generic | value | sweep-all-F_p, got '" + mode + "'");
}

} // namespace sweep_detail

inline void ExperimentSpec::validate() const {
    const GroupDescriptor g = parse_group(group);
    if (g.family == GroupFamily::Symmetric && g.size < 2)
        throw InvalidInput("Sn needs n >= 2");
    if (g.family == GroupFamily::Dihedral && g.size < 3)
        throw InvalidInput("Dm needs m >= 3");
    if (p < 2) throw InvalidInput("p must be a prime >= 2");
    const TauSpec t = parse_tau(tau);
    if (t.kind == TauSpec::Kind::Rho && g.family != GroupFamily::Dihedral)
        throw InvalidInput("tau 'rho:<a>' requires a dihedral group");
    sweep_detail::normalize_c_mode(c_mode);
    if (max_degree < 0) throw InvalidInput("maxDegree must be >= 0");
    if (tasks.empty()) throw InvalidInput("tasks must not be empty");
    if (workers < 1) throw InvalidInput("workers must be >= 1");
    for (const std::string& task : tasks) {
        if (task == "hilbert" || task == "min-gens") continue;
        if (task == "singular-scan") {
            if (singular_degree < 0)
                throw InvalidInput("singularDegree must be >= 0 (0 = scan all)");
            continue;
        }
        if (task == "recursion") {
            if (g.family != GroupFamily::Symmetric)
                throw InvalidInput("task 'recursion' requires a symmetric group");
            if (static_cast<std::uint64_t>(g.size) % p != 0)
                throw InvalidInput("task 'recursion' requires p | n");
            if (static_cast<int>(recursion_weights.size()) != g.size)
                throw InvalidInput("task 'recursion' needs one weight per variable (" +
                                   std::to_string(g.size) + ")");
            if (recursion_policy != "heuristic" && recursion_policy != "never")
                throw InvalidInput("recursionPolicy must be 'heuristic' or 'never'");
            if (recursion_steps < 0) throw InvalidInput("recursionSteps must be >= 0");
            continue;
        }
        if (task.rfind("verify:", 0) == 0) {
            const std::string id = task.substr(7);
            const auto& known = verify_ids();
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw InvalidInput("unknown verification id '" + id + "' in task list");
            if (!sweep_detail::verify_id_matches_family(id, g.family))
                throw InvalidInput("verification id '" + id + "' does not apply to group '" +
                                   group + "'");
            continue;
        }
        throw InvalidInput("unknown task '" + task +
                           "' (hilbert | singular-scan | min-gens | verify:<id> | recursion)");
    }
}

inline nlohmann::json ExperimentSpec::to_json() const {
    nlohmann::json j{{"group", group},
                     {"p", p},
                     {"tau", tau},
                     {"cMode", c_mode},
                     {"maxDegree", max_degree},
                     {"tasks", tasks}};
    if (c_mode == "value") j["c"] = c_value;
    if (singular_degree > 0) j["singularDegree"] = singular_degree;
    for (const std::string& task : tasks)
        if (task == "recursion") {
            j["recursionWeights"] = recursion_weights;
            j["recursionSteps"] = recursion_steps;
            j["recursionPolicy"] = recursion_policy;
            break;
        }
    if (workers != 1) j["workers"] = workers;
    return j;
}

inline ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
    static const std::vector<std::string> allowed = {
        "group", "p", "tau", "cMode", "c", "maxDegree", "tasks",
        "singularDegree", "recursionWeights", "recursionSteps", "recursionPolicy", "workers"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw InvalidInput("unknown field '" + key + "' in experiment spec");
    }
    ExperimentSpec s;
    try {
        s.group = j.at("group").get<std::string>();
        s.p = j.at("p").get<std::uint64_t>();
        if (j.contains("tau")) s.tau = j["tau"].get<std::string>();
        if (j.contains("cMode"))
            s.c_mode = sweep_detail::normalize_c_mode(j["cMode"].get<std::string>());
        if (j.contains("c")) s.c_value = j["c"].get<std::int64_t>();
        if (j.contains("maxDegree")) s.max_degree = j["maxDegree"].get<int>();
        s.tasks = j.at("tasks").get<std::vector<std::string>>();
        if (j.contains("singularDegree")) s.singular_degree = j["singularDegree"].get<int>();
        if (j.contains("recursionWeights"))
            s.recursion_weights = j["recursionWeights"].get<std::vector<std::int64_t>>();
        if (j.contains("recursionSteps")) s.recursion_steps = j["recursionSteps"].get<int>();
        if (j.contains("recursionPolicy"))
            s.recursion_policy = j["recursionPolicy"].get<std::string>();
        if (j.contains("workers")) s.workers = j["workers"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed experiment spec: ") + e.what());
    }
    s.validate();
    return s;
}

namespace sweep_detail {

// Identity of one sweep point: the experiment-spec echo stored in each record.  Must be
// byte-stable across runs and across worker counts, so it contains nothing
// about execution (no worker count, no timings).
inline nlohmann::json point_spec(const ExperimentSpec& spec, std::optional<std::int64_t> c) {
    nlohmann::json j{{"experiment", spec.group},
                     {"p", spec.p},
                     {"tau", spec.tau},
                     {"cMode", normalize_c_mode(spec.c_mode)},
                     {"maxDegree", spec.max_degree},
                     {"tasks", spec.tasks}};
    if (c) j["c"] = *c;
    for (const std::string& task : spec.tasks)
        if (task == "recursion") {
            j["recursionWeights"] = spec.recursion_weights;
            j["recursionSteps"] = spec.recursion_steps;
            j["recursionPolicy"] = spec.recursion_policy;
            break;
        }
    if (spec.singular_degree > 0) j["singularDegree"] = spec.singular_degree;
    return j;
}

inline DunklContext<Fq> dihedral_value_context(std::uint64_t p, int m, TauSpec tau,
                                               std::int64_t c) {
    const RootOfUnity root = primitive_mth_root(p, static_cast<std::uint64_t>(m));
    const FqField F = root.zeta.field();
    std::vector<Fq> cs(m % 2 == 0 ? 2u : 1u, F.from_int(c));
    auto g = dihedral_group<Fq>(F, m, root.zeta, std::move(cs));
    auto t = make_tau(g, tau);
    return make_dunkl_context(std::move(g), std::move(t));
}

template <class K>
void run_series_tasks(ResultRecord& rec, DunklContext<K>& ctx, const ExperimentSpec& spec) {
    for (const std::string& task : spec.tasks) {
        if (task == "hilbert") {
            const HilbertSeries h = hilbert_L(ctx, spec.max_degree);
            rec.outputs["hilbert"] = verify_detail::series_json(h);
        } else if (task == "min-gens") {
            const GeneratorDegrees mg = min_generator_degrees(ctx, spec.max_degree);
            nlohmann::json counts = nlohmann::json::object();
            for (const auto& [d, k] : mg.counts) counts[std::to_string(d)] = k;
            rec.outputs["min_gens"] = {{"degrees", mg.degrees()},
                                       {"counts", counts},
                                       {"complete", mg.complete},
                                       {"hilbert", verify_detail::series_json(mg.hilbert)}};
        } else if (task == "singular-scan") {
            std::vector<int> degrees;
            if (spec.singular_degree > 0)
                degrees.push_back(spec.singular_degree);
            else
                for (int d = 1; d <= spec.max_degree; ++d) degrees.push_back(d);
            nlohmann::json rows = nlohmann::json::array();
            for (int d : degrees) {
                const auto basis = singular_space(ctx, d);
                nlohmann::json row{{"degree", d}, {"dim", basis.size()}};
                if (!basis.empty()) {
                    nlohmann::json vecs = nlohmann::json::array();
                    for (const auto& v : basis) vecs.push_back(render_verma(v));
                    row["basis"] = vecs;
                }
                rows.push_back(row);
            }
            rec.outputs["singular_scan"] = rows;
        }
    }
}

inline void run_recursion_task(ResultRecord& rec, const ExperimentSpec& spec, int n) {
    const FpField F = fp_field(spec.p);
    const auto g = symmetric_group<Fp>(F, n, F.one()); // class parameter unused here
    const TerminationPolicy policy = spec.recursion_policy == "never"
                                         ? TerminationPolicy::Never
                                         : TerminationPolicy::Heuristic;
    const auto run = run_recursion(g, spec.recursion_weights, spec.recursion_steps, policy);
    nlohmann::json out;
    out["steps"] = run.steps();
    switch (run.outcome.kind) {
    case RecursionOutcome::Kind::Terminated: out["outcome"] = "terminated"; break;
    case RecursionOutcome::Kind::Obstructed: out["outcome"] = "obstructed"; break;
    case RecursionOutcome::Kind::Budget: out["outcome"] = "budget-exhausted"; break;
    }
    if (!run.outcome.note.empty()) out["note"] = run.outcome.note;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : run.fs) fs.push_back(render_poly(f));
    out["terms"] = fs;
    if (run.correction) out["correction"] = render_poly(*run.correction);
    if (run.outcome.kind == RecursionOutcome::Kind::Terminated) {
        const RatFuncField<Fp> RF{F};
        const Poly<RatFunc<Fp>> series = assemble_series(run, RF);
        out["series"] = render_poly(series);
        auto gg = symmetric_group<RatFunc<Fp>>(RF, n, RF.c());
        auto tt = make_tau(gg, TauSpec::trivial());
        auto ctx = make_dunkl_context(std::move(gg), std::move(tt));
        rec.add_check("recursion: assembled series is singular over F_p(c)",
                      is_singular(ctx, verify_detail::wrap1(series)),
                      "degree " + std::to_string(series.degree()));
    }
    rec.outputs["recursion"] = out;
}

inline void run_verify_task(ResultRecord& rec, const ExperimentSpec& spec, const std::string& id,
                            const GroupDescriptor& g, const TauSpec& tau,
                            std::optional<std::int64_t> c) {
    VerifyParams params;
    if (g.family == GroupFamily::Symmetric)
        params.n = g.size;
    else
        params.m = g.size;
    params.p = spec.p;
    if (tau.kind == TauSpec::Kind::Rho) params.a = tau.a;
    if (c) params.c = *c;
    const ResultRecord sub = verify(id, params);
    for (const auto& ch : sub.checks) rec.checks.push_back(ch);
    rec.outputs["verify:" + id] = {{"overall", sub.overall()}, {"outputs", sub.outputs}};
}

inline ResultRecord run_point(const ExperimentSpec& spec, std::optional<std::int64_t> c) {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupDescriptor g = parse_group(spec.group);
    const TauSpec tau = parse_tau(spec.tau);
    ResultRecord rec;
    rec.spec = point_spec(spec, c);

    bool series_tasks = false;
    for (const std::string& task : spec.tasks)
        series_tasks = series_tasks || task == "hilbert" || task == "min-gens" ||
                       task == "singular-scan";
    if (series_tasks) {
        if (g.family == GroupFamily::Symmetric && c) {
            auto ctx = verify_detail::sn_value(spec.p, g.size, *c);
            run_series_tasks(rec, ctx, spec);
        } else if (g.family == GroupFamily::Symmetric) {
            auto ctx = verify_detail::sn_generic(spec.p, g.size);
            run_series_tasks(rec, ctx, spec);
        } else if (c) {
            auto ctx = dihedral_value_context(spec.p, g.size, tau, *c);
            run_series_tasks(rec, ctx, spec);
        } else {
            auto ctx = verify_detail::dm_generic(spec.p, g.size, tau);
            run_series_tasks(rec, ctx, spec);
        }
    }
    for (const std::string& task : spec.tasks)
        if (task.rfind("verify:", 0) == 0)
            run_verify_task(rec, spec, task.substr(7), g, tau, c);
    for (const std::string& task : spec.tasks)
        if (task == "recursion") run_recursion_task(rec, spec, g.size);

    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

} // namespace sweep_detail

// Expand an experiment spec into its parameter points: one generic point, one value
// point, or the nonzero residues 1..p-1.
inline std::vector<std::optional<std::int64_t>> sweep_points(const ExperimentSpec& spec) {
    const std::string mode = sweep_detail::normalize_c_mode(spec.c_mode);
    if (mode == "generic") return {std::nullopt};
    if (mode == "value") return {spec.c_value};
    std::vector<std::optional<std::int64_t>> pts;
    for (std::int64_t c = 1; c < static_cast<std::int64_t>(spec.p); ++c) pts.push_back(c);
    return pts;
}

// Run every point of the sweep, reusing any record in the store whose spec
// echo already matches (that is what makes partial sweeps resumable), and
// storing each fresh record.  The result order follows the point order no
// matter how many workers run.
inline std::vector<ResultRecord> sweep(const ExperimentSpec& spec,
                                       std::optional<std::filesystem::path> dir = {}) {
    spec.validate();
    const std::filesystem::path d = dir.value_or(store_dir());
    const auto points = sweep_points(spec);

    // Index the existing store by spec echo.
    std::vector<ResultRecord> cached;
    for (const auto& file : list_records(d)) {
        try {
            cached.push_back(load_record(file));
        } catch (const std::exception&) {
            // Foreign or damaged file: not a resumable point, skip it.
        }
    }

    std::vector<std::optional<ResultRecord>> slots(points.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const nlohmann::json echo = sweep_detail::point_spec(spec, points[i]);
        for (const auto& rec : cached)
            if (rec.spec == echo) {
                slots[i] = rec;
                break;
            }
        if (!slots[i]) todo.push_back(i);
    }

    const unsigned want = static_cast<unsigned>(std::min<std::size_t>(
        static_cast<std::size_t>(spec.workers), todo.empty() ? 1 : todo.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(todo.size());
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= todo.size()) return;
            const std::size_t i = todo[k];
            try {
                ResultRecord rec = sweep_detail::run_point(spec, points[i]);
                store_record(rec, d);
                slots[i] = std::move(rec);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    if (want <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned w = 0; w < want; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<ResultRecord> out;
    out.reserve(points.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

} // namespace cherednik
