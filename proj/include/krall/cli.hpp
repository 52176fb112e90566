#pragma once

#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "krall/identities.hpp"
#include "krall/limits.hpp"
#include "krall/measures.hpp"

namespace krall::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 = pass, 1 = mathematical failure, 2 = usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct RawParams {
    std::string a, b, c, alpha, beta, u, v, s;
    std::optional<int> kappa, sigma, points, j;
};

inline std::optional<Scalar> opt_scalar(const std::string& text, const char* name) {
    if (text.empty())
        return std::nullopt;
    try {
        return parse_scalar(text);
    } catch (const invalid_parameter&) {
        throw invalid_parameter(std::string("flag --") + name + ": cannot parse rational '" +
                                text + "'");
    }
}

inline Scalar need_scalar(const std::string& text, const char* name) {
    auto v = opt_scalar(text, name);
    if (!v)
        throw invalid_parameter(std::string("missing required flag --") + name);
    return *v;
}

inline DeltaMass need_mass(const std::string& text, const char* name) {
    if (text.empty())
        throw invalid_parameter(std::string("missing required flag --") + name);
    if (text == "inf" || text == "infinity")
        return DeltaMass::infinity();
    return DeltaMass(need_scalar(text, name));
}

inline int need_int(const std::optional<int>& v, const char* name) {
    if (!v)
        throw invalid_parameter(std::string("missing required flag --") + name);
    return *v;
}

inline json scalar_vector_json(const std::vector<Scalar>& values) {
    json a = json::array();
    for (const auto& v : values)
        a.push_back(format_ratio(v));
    return a;
}

inline json approx_vector_json(const std::vector<Scalar>& values) {
    json a = json::array();
    for (const auto& v : values)
        a.push_back(approx_decimal(v));
    return a;
}

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

// Builds the polynomial selected by --family plus its parameter echo.
inline Poly build_family_poly(const std::string& family, int n, const RawParams& rp,
                              json& params_echo) {
    auto echo = [&](const char* name, const std::string& value) {
        params_echo[name] = value;
    };
    if (family == "meixner") {
        const Scalar a = need_scalar(rp.a, "a"), c = need_scalar(rp.c, "c");
        echo("a", format_ratio(a));
        echo("c", format_ratio(c));
        return meixner(n, a, c);
    }
    if (family == "laguerre") {
        const Scalar alpha = need_scalar(rp.alpha, "alpha");
        echo("alpha", format_ratio(alpha));
        return laguerre(n, alpha);
    }
    if (family == "jacobi") {
        const Scalar alpha = need_scalar(rp.alpha, "alpha"), beta = need_scalar(rp.beta, "beta");
        echo("alpha", format_ratio(alpha));
        echo("beta", format_ratio(beta));
        return jacobi(n, alpha, beta);
    }
    if (family == "hahn" || family == "dual_hahn") {
        const Scalar a = need_scalar(rp.a, "a"), b = need_scalar(rp.b, "b");
        const Scalar N = Scalar(need_int(rp.points, "N"));
        echo("a", format_ratio(a));
        echo("b", format_ratio(b));
        echo("N", format_ratio(N));
        return family == "hahn" ? hahn(n, a, b, N) : dual_hahn(n, a, b, N);
    }
    if (family == "lambda") {
        const Scalar u = need_scalar(rp.u, "u");
        echo("u", format_ratio(u));
        return lambda_poly(n, u);
    }
    if (family == "theta") {
        const Scalar u = need_scalar(rp.u, "u");
        echo("u", format_ratio(u));
        return theta_poly(u);
    }
    if (family == "krall_laguerre") {
        const int kappa = need_int(rp.kappa, "kappa");
        const DeltaMass u = need_mass(rp.u, "u");
        echo("kappa", std::to_string(kappa));
        echo("u", u.str());
        return krall_laguerre(n, kappa, u);
    }
    if (family == "krall_meixner_i" || family == "krall_meixner_ii") {
        const Scalar a = need_scalar(rp.a, "a"), c = need_scalar(rp.c, "c");
        const int kappa = need_int(rp.kappa, "kappa");
        echo("a", format_ratio(a));
        echo("c", format_ratio(c));
        echo("kappa", std::to_string(kappa));
        return family == "krall_meixner_i" ? krall_meixner_i(n, a, c, kappa)
                                           : krall_meixner_ii(n, a, c, kappa);
    }
    if (family == "krall_jacobi_i") {
        const Scalar alpha = need_scalar(rp.alpha, "alpha");
        const int kappa = need_int(rp.kappa, "kappa");
        const DeltaMass u = need_mass(rp.u, "u");
        echo("alpha", format_ratio(alpha));
        echo("kappa", std::to_string(kappa));
        echo("u", u.str());
        return krall_jacobi_i(n, alpha, kappa, u);
    }
    if (family == "krall_jacobi_ii") {
        const int kappa = need_int(rp.kappa, "kappa"), sigma = need_int(rp.sigma, "sigma");
        const DeltaMass u = need_mass(rp.u, "u"), v = need_mass(rp.v, "v");
        echo("kappa", std::to_string(kappa));
        echo("sigma", std::to_string(sigma));
        echo("u", u.str());
        echo("v", v.str());
        return krall_jacobi_ii(n, kappa, sigma, u, v);
    }
    if (family == "krall_hahn_i" || family == "krall_hahn_ii") {
        const Scalar a = need_scalar(rp.a, "a"), b = need_scalar(rp.b, "b");
        const Scalar N = Scalar(need_int(rp.points, "N"));
        const int kappa = need_int(rp.kappa, "kappa");
        echo("a", format_ratio(a));
        echo("b", format_ratio(b));
        echo("N", format_ratio(N));
        echo("kappa", std::to_string(kappa));
        if (family == "krall_hahn_i")
            return krall_hahn_i(n, a, b, N, kappa);
        const int sigma = need_int(rp.sigma, "sigma");
        echo("sigma", std::to_string(sigma));
        return krall_hahn_ii(n, a, b, N, kappa, sigma);
    }
    throw invalid_parameter("unknown family '" + family + "'");
}

struct MeasureSetup {
    Measure measure;
    std::function<Poly(int)> matching_family;
    json params_echo;
};

inline MeasureSetup build_measure(const std::string& name, const RawParams& rp,
                                  bool allow_nonpositive) {
    auto id = measure_from_name(name);
    if (!id)
        throw invalid_parameter("unknown measure '" + name + "'");
    MeasureParams mp;
    mp.a = opt_scalar(rp.a, "a");
    mp.b = opt_scalar(rp.b, "b");
    mp.c = opt_scalar(rp.c, "c");
    mp.alpha = opt_scalar(rp.alpha, "alpha");
    mp.u = opt_scalar(rp.u, "u");
    mp.v = opt_scalar(rp.v, "v");
    mp.kappa = rp.kappa;
    mp.sigma = rp.sigma;
    mp.points = rp.points;

    json echo = json::object();
    auto echo_scalar = [&](const char* nm, const std::optional<Scalar>& v) {
        if (v)
            echo[nm] = format_ratio(*v);
    };
    echo_scalar("a", mp.a);
    echo_scalar("b", mp.b);
    echo_scalar("c", mp.c);
    echo_scalar("alpha", mp.alpha);
    echo_scalar("u", mp.u);
    echo_scalar("v", mp.v);
    if (mp.kappa)
        echo["kappa"] = *mp.kappa;
    if (mp.sigma)
        echo["sigma"] = *mp.sigma;
    if (mp.points)
        echo["N"] = *mp.points;

    Measure measure = make_named_measure(*id, mp, allow_nonpositive);
    std::function<Poly(int)> family;
    switch (*id) {
    case NamedMeasureId::lagk: {
        const int kappa = *mp.kappa;
        const Scalar u = *mp.u;
        family = [kappa, u](int n) { return krall_laguerre(n, kappa, u); };
        break;
    }
    case NamedMeasureId::mk: {
        const Scalar a = *mp.a, c = *mp.c;
        const int kappa = *mp.kappa;
        family = [a, c, kappa](int n) { return krall_meixner_i(n, a, c, kappa); };
        break;
    }
    case NamedMeasureId::mk2: {
        const Scalar a = *mp.a, c = *mp.c;
        const int kappa = *mp.kappa;
        family = [a, c, kappa](int n) { return krall_meixner_ii(n, a, c, kappa); };
        break;
    }
    case NamedMeasureId::jack: {
        const Scalar alpha = *mp.alpha, u = *mp.u;
        const int kappa = *mp.kappa;
        family = [alpha, kappa, u](int n) { return krall_jacobi_i(n, alpha, kappa, u); };
        break;
    }
    case NamedMeasureId::jack2: {
        const int kappa = *mp.kappa, sigma = *mp.sigma;
        const Scalar u = *mp.u, v = *mp.v;
        family = [kappa, sigma, u, v](int n) { return krall_jacobi_ii(n, kappa, sigma, u, v); };
        break;
    }
    case NamedMeasureId::hw: {
        const Scalar a = *mp.a, b = *mp.b, N = Scalar(*mp.points);
        family = [a, b, N](int n) { return hahn(n, a, b, N); };
        break;
    }
    case NamedMeasureId::hk: {
        const Scalar a = *mp.a, b = *mp.b, N = Scalar(*mp.points);
        const int kappa = *mp.kappa;
        family = [a, b, N, kappa](int n) { return krall_hahn_i(n, a, b, N, kappa); };
        break;
    }
    case NamedMeasureId::hk2: {
        const Scalar a = *mp.a, b = *mp.b, N = Scalar(*mp.points);
        const int kappa = *mp.kappa, sigma = *mp.sigma;
        family = [a, b, N, kappa, sigma](int n) {
            return krall_hahn_ii(n, a, b, N, kappa, sigma);
        };
        break;
    }
    }
    return {std::move(measure), std::move(family), std::move(echo)};
}

inline LimitParams limit_params_from(const RawParams& rp) {
    LimitParams lp;
    lp.a = opt_scalar(rp.a, "a");
    lp.b = opt_scalar(rp.b, "b");
    lp.c = opt_scalar(rp.c, "c");
    lp.alpha = opt_scalar(rp.alpha, "alpha");
    lp.u = opt_scalar(rp.u, "u");
    lp.v = opt_scalar(rp.v, "v");
    lp.s = opt_scalar(rp.s, "s");
    lp.kappa = rp.kappa;
    lp.sigma = rp.sigma;
    return lp;
}

struct LimitRun {
    ConvergenceReport report;
    std::optional<TargetComparison> extrapolation;
    bool stabilized = false;
    bool pass = false;
};

inline LimitRun run_limit(const LimitCase& cse, int n, int t_lo, int t_hi) {
    LimitRun run;
    run.report = run_convergence(cse, n, t_lo, t_hi);
    if (cse.kind == TargetKind::oracle) {
        try {
            run.extrapolation = compare_with_stated_target(cse, n, t_hi);
            run.stabilized = true;
        } catch (const cannot_extrapolate&) {
            run.stabilized = false;
        }
        // Oracle entries certify Cauchy behavior and extrapolation
        // stability; a mismatch with the stated target is flagged in the
        // report rather than failing the run.
        run.pass = run.report.monotone_ok && run.stabilized;
    } else {
        run.pass = run.report.pass;
    }
    return run;
}

inline json limit_run_json(const LimitCase& cse, const LimitRun& run) {
    json entry = json::object();
    entry["case"] = cse.id;
    entry["n"] = run.report.n;
    entry["target_kind"] = cse.kind == TargetKind::stated ? "stated" : "oracle";
    json rows = json::array();
    for (size_t i = 0; i < run.report.errors.size(); ++i) {
        json row = json::object();
        row["t"] = run.report.t_lo + static_cast<int>(i);
        row["error"] = format_ratio(run.report.errors[i]);
        row["approx"] = approx_decimal(run.report.errors[i]);
        if (i < run.report.ratios.size() && run.report.ratios[i])
            row["ratio"] = format_ratio(*run.report.ratios[i]);
        else
            row["ratio"] = nullptr;
        rows.push_back(std::move(row));
    }
    entry["rows"] = std::move(rows);
    entry["monotone_from"] = run.report.monotone_from;
    entry["monotone_ok"] = run.report.monotone_ok;
    entry["final_error"] = format_ratio(run.report.final_error);
    entry["final_error_approx"] = approx_decimal(run.report.final_error);
    entry["below_threshold"] = run.report.below_threshold;
    if (run.report.rate_ok)
        entry["rate_ok"] = *run.report.rate_ok;
    if (cse.kind == TargetKind::oracle) {
        entry["extrapolation_stabilized"] = run.stabilized;
        if (run.extrapolation) {
            json ex = json::object();
            ex["stated_target"] = scalar_vector_json(run.extrapolation->stated.coefficients());
            ex["extrapolated"] = scalar_vector_json(run.extrapolation->extrapolated.coefficients());
            ex["sup_diff"] = format_ratio(run.extrapolation->sup_diff);
            ex["sup_diff_approx"] = approx_decimal(run.extrapolation->sup_diff);
            ex["matches_stated"] = run.extrapolation->sup_diff < ratio(1, 1000000);
            entry["extrapolation"] = std::move(ex);
        }
    }
    entry["pass"] = run.pass;
    return entry;
}

} // namespace detail

// Parses and executes one command line; report text goes to `out`,
// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"Exact construction and verification of classical and Krall orthogonal "
                 "polynomial families"};
    app.require_subcommand(1);

    RawParams rp;
    std::string format = "json";
    std::string out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--a", rp.a, "parameter a (rational p/q)");
        sub->add_option("--b", rp.b, "parameter b (rational p/q)");
        sub->add_option("--c", rp.c, "parameter c (rational p/q)");
        sub->add_option("--alpha", rp.alpha, "parameter alpha (rational p/q)");
        sub->add_option("--beta", rp.beta, "parameter beta (rational p/q)");
        sub->add_option("--u", rp.u, "delta weight u (rational p/q, or 'inf')");
        sub->add_option("--v", rp.v, "delta weight v (rational p/q, or 'inf')");
        sub->add_option("--s", rp.s, "path parameter s (rational p/q)");
        sub->add_option("--kappa", rp.kappa, "parameter kappa (positive integer)");
        sub->add_option("--sigma", rp.sigma, "parameter sigma (positive integer)");
        sub->add_option("--N", rp.points, "parameter N (integer)");
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write the report to this path instead of stdout");
    };

    // --- poly ---
    auto* poly_cmd = app.add_subcommand("poly", "print exact coefficients of one polynomial");
    std::string family;
    int poly_n = 0;
    poly_cmd->add_option("--family", family, "family selector")->required();
    poly_cmd->add_option("--n", poly_n, "degree / index")->required();
    add_common(poly_cmd);

    // --- gram ---
    auto* gram_cmd = app.add_subcommand("gram", "exact Gram matrix orthogonality report");
    std::string measure_name_arg;
    int n_max = 4;
    bool allow_nonpositive = false;
    gram_cmd->add_option("--measure", measure_name_arg, "measure selector")->required();
    gram_cmd->add_option("--n-max", n_max, "largest polynomial index");
    gram_cmd->add_flag("--allow-nonpositive", allow_nonpositive,
                       "construct the measure even outside its positivity window");
    add_common(gram_cmd);

    // --- identity ---
    auto* id_cmd = app.add_subcommand("identity", "randomized exact identity checks");
    std::string identity_arg = "all";
    int draws = 20;
    int id_max_n = 12;
    id_cmd->add_option("--id", identity_arg, "identity name or 'all'");
    id_cmd->add_option("--draws", draws, "random parameter draws per identity");
    id_cmd->add_option("--max-n", id_max_n, "largest random degree");
    add_common(id_cmd);

    // --- limit ---
    auto* limit_cmd = app.add_subcommand("limit", "convergence certification along a parameter path");
    std::string case_arg;
    std::optional<int> limit_n;
    std::string t_range;
    limit_cmd->add_option("--case", case_arg, "catalog case id, or 'all'")->required();
    limit_cmd->add_option("--n", limit_n, "single degree (default: the case's full range)");
    limit_cmd->add_option("--t", t_range, "step range lo..hi (default: the case's range)");
    add_common(limit_cmd);

    // --- catalog ---
    auto* cat_cmd = app.add_subcommand("catalog", "list the built-in limit cases");
    add_common(cat_cmd);

    // --- positivity ---
    auto* pos_cmd = app.add_subcommand("positivity", "exact positivity scan of a measure");
    std::string pos_measure;
    int sample_points = 50;
    pos_cmd->add_option("--measure", pos_measure, "measure selector")->required();
    pos_cmd->add_option("--points", sample_points, "support points to scan (infinite supports)");
    add_common(pos_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed); // CLI11 consumes a reversed argument vector
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    json doc = json::object();
    std::string csv;
    int exit_code = kExitPass;

    try {
        if (poly_cmd->parsed()) {
            json params = json::object();
            const Poly p = build_family_poly(family, poly_n, rp, params);
            doc["verb"] = "poly";
            doc["family"] = family;
            doc["n"] = poly_n;
            doc["params"] = params;
            doc["coefficients"] = scalar_vector_json(p.coefficients());
            doc["approx"] = approx_vector_json(p.coefficients());
            if (format == "csv") {
                csv = "index,coefficient,approx\n";
                const auto& coeffs = p.coefficients();
                for (size_t i = 0; i < coeffs.size(); ++i)
                    csv += std::to_string(i) + "," + format_ratio(coeffs[i]) + "," +
                           approx_decimal(coeffs[i]) + "\n";
            }
        } else if (gram_cmd->parsed()) {
            auto setup = build_measure(measure_name_arg, rp, allow_nonpositive);
            const GramReport report =
                gram_orthogonality_report(setup.measure, setup.matching_family, n_max);
            doc["verb"] = "gram";
            doc["measure"] = measure_name_arg;
            doc["params"] = setup.params_echo;
            doc["n_max"] = report.n_max;
            doc["off_diagonal_zero"] = report.off_diagonal_zero;
            doc["diagonal_positive"] = report.diagonal_positive;
            json failures = json::array();
            for (auto [i, j] : report.failures)
                failures.push_back(json::array({i, j}));
            doc["failures"] = std::move(failures);
            json matrix = json::array(), matrix_approx = json::array();
            for (const auto& row : report.matrix) {
                matrix.push_back(scalar_vector_json(row));
                matrix_approx.push_back(approx_vector_json(row));
            }
            doc["matrix"] = std::move(matrix);
            doc["matrix_approx"] = std::move(matrix_approx);
            if (!report.off_diagonal_zero || !report.diagonal_positive)
                exit_code = kExitMathFailure;
            if (format == "csv") {
                csv = "i,j,value,approx\n";
                for (int i = 0; i <= report.n_max; ++i)
                    for (int j = 0; j <= report.n_max; ++j) {
                        const Scalar& v = report.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
                        csv += std::to_string(i) + "," + std::to_string(j) + "," +
                               format_ratio(v) + "," + approx_decimal(v) + "\n";
                    }
            }
        } else if (id_cmd->parsed()) {
            std::vector<IdentityId> ids;
            if (identity_arg == "all") {
                ids = all_identities();
            } else if (auto id = identity_from_name(identity_arg)) {
                ids = {*id};
            } else {
                throw invalid_parameter("unknown identity '" + identity_arg + "'");
            }
            const std::uint64_t seed = resolve_seed();
            doc["verb"] = "identity";
            doc["seed"] = seed;
            doc["draws"] = draws;
            doc["max_n"] = id_max_n;
            json results = json::array();
            bool all_pass = true;
            csv = "id,draws,max_n,pass,witness\n";
            for (IdentityId id : ids) {
                const auto result = run_identity_suite(id, draws, id_max_n, seed);
                all_pass = all_pass && result.pass;
                json entry = json::object();
                entry["id"] = identity_name(id);
                entry["pass"] = result.pass;
                entry["witness"] = result.witness ? json(*result.witness) : json(nullptr);
                results.push_back(std::move(entry));
                csv += std::string(identity_name(id)) + "," + std::to_string(draws) + "," +
                       std::to_string(id_max_n) + "," + (result.pass ? "true" : "false") + "," +
                       csv_escape(result.witness.value_or("")) + "\n";
            }
            doc["results"] = std::move(results);
            doc["pass"] = all_pass;
            if (!all_pass)
                exit_code = kExitMathFailure;
        } else if (limit_cmd->parsed()) {
            std::vector<LimitCase> cases;
            if (case_arg == "all") {
                cases = limit_catalog();
            } else {
                cases.push_back(make_limit_case(case_arg, limit_params_from(rp)));
            }
            std::optional<std::pair<int, int>> t_override;
            if (!t_range.empty()) {
                const auto dots = t_range.find("..");
                if (dots == std::string::npos)
                    throw invalid_parameter("--t expects lo..hi");
                t_override = {std::stoi(t_range.substr(0, dots)),
                              std::stoi(t_range.substr(dots + 2))};
            }
            struct Task {
                const LimitCase* cse;
                int n, t_lo, t_hi;
            };
            std::vector<Task> tasks;
            for (const auto& cse : cases) {
                const int t_lo = t_override ? t_override->first : cse.t_lo;
                const int t_hi = t_override ? t_override->second : cse.t_hi;
                if (limit_n) {
                    tasks.push_back({&cse, *limit_n, t_lo, t_hi});
                } else {
                    for (int n = cse.min_n; n <= cse.max_n; ++n)
                        tasks.push_back({&cse, n, t_lo, t_hi});
                }
            }
            // Independent (case, n) evaluations fan out; aggregation keeps
            // catalog order regardless of completion order.
            std::vector<std::future<LimitRun>> futures;
            futures.reserve(tasks.size());
            for (const auto& task : tasks)
                futures.push_back(std::async(std::launch::async, [task] {
                    return run_limit(*task.cse, task.n, task.t_lo, task.t_hi);
                }));
            doc["verb"] = "limit";
            json reports = json::array();
            bool all_pass = true;
            csv = "case,n,t,error_num,error_den,ratio,approx\n";
            for (size_t i = 0; i < tasks.size(); ++i) {
                const LimitRun run = futures[i].get();
                all_pass = all_pass && run.pass;
                json entry = limit_run_json(*tasks[i].cse, run);
                if (!tasks[i].cse->params.empty()) {
                    json pj = json::object();
                    for (const auto& [k, v] : tasks[i].cse->params)
                        pj[k] = v;
                    entry["params"] = std::move(pj);
                }
                reports.push_back(std::move(entry));
                for (size_t r = 0; r < run.report.errors.size(); ++r) {
                    const Scalar& e = run.report.errors[r];
                    std::string ratio_s =
                        (r < run.report.ratios.size() && run.report.ratios[r])
                            ? format_ratio(*run.report.ratios[r])
                            : "";
                    csv += tasks[i].cse->id + "," + std::to_string(run.report.n) + "," +
                           std::to_string(run.report.t_lo + static_cast<int>(r)) + "," +
                           numerator(e).str() + "," + denominator(e).str() + "," + ratio_s + "," +
                           approx_decimal(e) + "\n";
                }
            }
            doc["reports"] = std::move(reports);
            doc["pass"] = all_pass;
            if (!all_pass)
                exit_code = kExitMathFailure;
        } else if (cat_cmd->parsed()) {
            doc["verb"] = "catalog";
            json entries = json::array();
            csv = "id,target_kind,expected_rate,n_min,n_max,t_lo,t_hi,params,summary\n";
            for (const auto& cse : limit_catalog()) {
                json entry = json::object();
                entry["id"] = cse.id;
                entry["summary"] = cse.summary;
                entry["target_kind"] = cse.kind == TargetKind::stated ? "stated" : "oracle";
                entry["expected_rate"] =
                    cse.expected_rate ? json(format_ratio(*cse.expected_rate)) : json(nullptr);
                json pj = json::object();
                std::string pcsv;
                for (const auto& [k, v] : cse.params) {
                    pj[k] = v;
                    pcsv += (pcsv.empty() ? "" : ";") + k + "=" + v;
                }
                entry["params"] = std::move(pj);
                entry["n_min"] = cse.min_n;
                entry["n_max"] = cse.max_n;
                entry["t_lo"] = cse.t_lo;
                entry["t_hi"] = cse.t_hi;
                entries.push_back(std::move(entry));
                csv += cse.id + "," + (cse.kind == TargetKind::stated ? "stated" : "oracle") + "," +
                       (cse.expected_rate ? format_ratio(*cse.expected_rate) : "") + "," +
                       std::to_string(cse.min_n) + "," + std::to_string(cse.max_n) + "," +
                       std::to_string(cse.t_lo) + "," + std::to_string(cse.t_hi) + "," +
                       csv_escape(pcsv) + "," + csv_escape(cse.summary) + "\n";
            }
            doc["cases"] = std::move(entries);
        } else if (pos_cmd->parsed()) {
            auto setup = build_measure(pos_measure, rp, /*allow_nonpositive=*/true);
            const PositivityReport report = positivity_check(setup.measure, sample_points);
            doc["verb"] = "positivity";
            doc["measure"] = pos_measure;
            doc["params"] = setup.params_echo;
            doc["points"] = sample_points;
            doc["positive"] = report.positive;
            doc["witness"] = report.witness ? json(format_ratio(*report.witness)) : json(nullptr);
            doc["detail"] = report.detail;
            if (!report.positive)
                exit_code = kExitMathFailure;
            if (format == "csv") {
                csv = "measure,positive,witness,detail\n";
                csv += pos_measure + std::string(",") + (report.positive ? "true" : "false") +
                       "," + (report.witness ? format_ratio(*report.witness) : "") + "," +
                       csv_escape(report.detail) + "\n";
            }
        }
    } catch (const positivity_not_guaranteed& e) {
        err << "error: " << e.what() << " (pass --allow-nonpositive to construct anyway)\n";
        return kExitUsage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string body = format == "csv" ? csv : doc.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output path " << out_path << "\n";
            return kExitUsage;
        }
        file << body;
    } else {
        out << body;
    }
    return exit_code;
}

} // namespace krall::cli
