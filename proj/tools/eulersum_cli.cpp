#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulersum/identities.hpp"
#include "eulersum/oracle.hpp"
#include "eulersum/report.hpp"
#include "eulersum/sumspec.hpp"
#include "eulersum/version.hpp"

namespace {

using namespace eulersum;

long default_base_N() {
    if (const char* env = std::getenv("EULERSUM_DEFAULT_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1000) return v;
        std::cerr << "warning: ignoring invalid EULERSUM_DEFAULT_N\n";
    }
    return 1'000'000;
}

identities::Params parse_params(const std::vector<std::string>& kvs) {
    identities::Params out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("bad --param (want name=value): " + kv);
        out[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    return out;
}

int cmd_list(const std::string& format, const std::string& filter) {
    nlohmann::json arr = nlohmann::json::array();
    std::size_t idw = 2, ew = 8;
    std::vector<const identities::IdentityRecord*> recs;
    for (const auto& r : identities::registry()) {
        if (!identities::matches_filter(r.id, filter)) continue;
        recs.push_back(&r);
        idw = std::max(idw, r.id.size());
        ew = std::max(ew, r.equation.size());
    }
    if (format == "json") {
        for (const auto* r : recs) {
            nlohmann::json e;
            e["id"] = r->id;
            e["equation"] = r->equation;
            e["description"] = r->description;
            e["params"] = r->param_names;
            e["default_tol"] = r->default_tol;
            e["grid_size"] = r->default_grid.size();
            arr.push_back(std::move(e));
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << "id" << std::setw(static_cast<int>(ew) + 2)
                  << "equation" << std::setw(16) << "params" << std::setw(10) << "tol"
                  << "description\n";
        for (const auto* r : recs) {
            std::string ps;
            for (const auto& n : r->param_names) ps += (ps.empty() ? "" : ",") + n;
            std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << r->id
                      << std::setw(static_cast<int>(ew) + 2) << r->equation << std::setw(16) << ps << std::setw(10)
                      << r->default_tol << r->description << '\n';
        }
    }
    return 0;
}

int cmd_eval(const std::string& spec, long base_N, const std::string& format) {
    sumspec::ParsedSum parsed;
    try {
        parsed = sumspec::parse(spec);
    } catch (const sumspec::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    oracle::EvalConfig cfg;
    cfg.base_N = base_N;
    oracle::Oracle orc;
    const RealWithError raw = orc.evaluate(parsed.descriptor, cfg);
    const double scale = to_double(parsed.prefactor);
    const RealWithError v = scale * raw;
    const long N_used = parsed.descriptor.alternating ? 2 * cfg.alt_pairs() : cfg.plain_N(parsed.descriptor.power());
    if (format == "json") {
        nlohmann::json j;
        j["spec"] = spec;
        j["value"] = v.value;
        j["err"] = v.err;
        j["N"] = N_used;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << std::setprecision(15) << v.value << "  (err <= " << std::setprecision(3) << v.err
                  << ", N = " << N_used << ")\n";
    }
    return 0;
}

int cmd_verify(const std::optional<std::string>& id, bool all, const std::string& filter,
               const std::vector<std::string>& param_kvs, std::optional<double> tol, long base_N, int jobs,
               const std::string& format, const std::string& out_path) {
    oracle::EvalConfig cfg;
    cfg.base_N = base_N;
    oracle::Oracle orc;

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<identities::VerificationResult> results;

    if (id) {
        const auto* rec = identities::find(*id);
        if (!rec) {
            std::cerr << "error: unknown identity id: " << *id << '\n';
            return 2;
        }
        identities::Params params;
        try {
            params = parse_params(param_kvs);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
        if (params.empty() && !rec->default_grid.empty()) {
            for (const auto& p : rec->default_grid) results.push_back(identities::verify(*rec, p, cfg, orc));
        } else {
            try {
                results.push_back(identities::verify(*rec, params, cfg, orc));
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
        }
    } else {
        results = identities::verify_all(cfg, orc, all ? filter : filter, jobs);
    }

    if (tol) {
        for (auto& r : results) {
            if (std::isnan(r.residual)) continue;
            r.pass = r.residual <= *tol;
            if (r.status != "unconfirmed") r.status = r.pass ? "pass" : "fail";
        }
    }

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto doc = report::make_report(std::move(results), cfg.base_N, tol, secs);

    std::string text;
    if (format == "json")
        text = report::to_json(doc);
    else if (format == "csv")
        text = report::to_csv(doc);
    else
        text = report::to_table(doc);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 2;
        }
        out << text;
    } else {
        std::cout << text;
        if (format == "json" || format == "csv") std::cout.flush();
    }
    for (const auto& r : doc.results)
        if (r.status == "unconfirmed")
            std::cerr << "warning: " << r.id << " [" << identities::params_to_string(r.params)
                      << "] unconfirmed: " << r.message << '\n';
    return doc.summary.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic-sum identity calculator and verifier"};
    app.set_version_flag("--version", eulersum::kToolVersion);
    app.require_subcommand(1);

    std::string format = "table", filter, out_path, spec;
    std::vector<std::string> param_kvs;
    long base_N = default_base_N();
    int jobs = 1;
    double tol_value = 0.0;
    bool all = false;
    std::optional<std::string> verify_id;
    std::string verify_id_raw;

    auto* list = app.add_subcommand("list", "List the identity registry");
    list->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    list->add_option("--filter", filter, "Shell-style id pattern, e.g. eq-2.*");

    auto* eval = app.add_subcommand("eval", "Evaluate a sum given in the S/Sbar/K/ST grammar");
    eval->add_option("spec", spec, "e.g. \"S[2;0;p=6]\" or \"K[m=1,k=1,r=0,type=zeta]\"")->required();
    eval->add_option("--N", base_N, "Base truncation (default 1e6 or EULERSUM_DEFAULT_N)");
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Verify identities against the oracle");
    verify->add_option("id", verify_id_raw, "Identity id (omit with --all)");
    verify->add_flag("--all", all, "Verify every registered identity");
    verify->add_option("--filter", filter, "Restrict --all to ids matching a pattern");
    verify->add_option("--param", param_kvs, "Parameter assignment name=value (repeatable)");
    auto* tol_opt = verify->add_option("--tol", tol_value, "Override the per-identity tolerance");
    verify->add_option("--N", base_N, "Base truncation (default 1e6 or EULERSUM_DEFAULT_N)");
    verify->add_option("--jobs", jobs, "Run verifications concurrently")->check(CLI::Range(1, 256));
    verify->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));
    verify->add_option("--out", out_path, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) return cmd_list(format == "text" ? "table" : format, filter);
        if (eval->parsed()) return cmd_eval(spec, base_N, format);
        if (verify->parsed()) {
            if (!verify_id_raw.empty()) verify_id = verify_id_raw;
            if (!verify_id && !all && filter.empty()) {
                std::cerr << "error: give an identity id, --all, or --filter\n";
                return 2;
            }
            std::optional<double> tol;
            if (tol_opt->count() > 0) tol = tol_value;
            if (format == "text") format = "table";
            return cmd_verify(verify_id, all, filter, param_kvs, tol, base_N, jobs, format, out_path);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
