#include "eulersum/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "eulersum/version.hpp"

namespace eulersum::report {

using nlohmann::json;

ReportDocument make_report(std::vector<identities::VerificationResult> results, long config_N,
                           std::optional<double> config_tol, double wall_time_seconds) {
    ReportDocument doc;
    doc.tool_version = kToolVersion;
    doc.config_N = config_N;
    doc.config_tol = config_tol;
    doc.results = std::move(results);
    doc.wall_time_seconds = wall_time_seconds;
    doc.summary.total = doc.results.size();
    for (const auto& r : doc.results) {
        if (r.status == "pass")
            ++doc.summary.passed;
        else if (r.status == "unconfirmed")
            ++doc.summary.unconfirmed;
        else
            ++doc.summary.failed;
    }
    return doc;
}

std::string to_json(const ReportDocument& doc) {
    json j;
    j["schema"] = 1;
    j["tool_version"] = doc.tool_version;
    j["config"]["N"] = doc.config_N;
    if (doc.config_tol)
        j["config"]["tol"] = *doc.config_tol;
    else
        j["config"]["tol"] = nullptr;
    j["results"] = json::array();
    for (const auto& r : doc.results) {
        json e;
        e["id"] = r.id;
        e["params"] = identities::params_to_string(r.params);
        e["lhs"] = {{"value", r.lhs.value}, {"err", r.lhs.err}};
        e["rhs"] = {{"value", r.rhs.value}, {"err", r.rhs.err}};
        e["residual"] = r.residual;
        e["pass"] = r.pass;
        e["status"] = r.status;
        if (!r.message.empty()) e["message"] = r.message;
        j["results"].push_back(std::move(e));
    }
    j["summary"] = {{"total", doc.summary.total},
                    {"passed", doc.summary.passed},
                    {"failed", doc.summary.failed},
                    {"unconfirmed", doc.summary.unconfirmed}};
    j["wall_time_seconds"] = doc.wall_time_seconds;
    return j.dump(2);
}

std::string to_csv(const ReportDocument& doc) {
    std::ostringstream os;
    os << "id,params,lhs,rhs,residual,pass,status\n";
    os << std::setprecision(17);
    for (const auto& r : doc.results) {
        os << r.id << ",\"" << identities::params_to_string(r.params) << "\"," << r.lhs.value << ',' << r.rhs.value
           << ',' << r.residual << ',' << (r.pass ? "true" : "false") << ',' << r.status << '\n';
    }
    return os.str();
}

std::string to_table(const ReportDocument& doc) {
    std::size_t idw = 2, pw = 6;
    for (const auto& r : doc.results) {
        idw = std::max(idw, r.id.size());
        pw = std::max(pw, identities::params_to_string(r.params).size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(idw) + 2) << "id" << std::setw(static_cast<int>(pw) + 2) << "params"
       << std::setw(22) << "lhs" << std::setw(22) << "rhs" << std::setw(13) << "residual" << "status\n";
    for (const auto& r : doc.results) {
        std::ostringstream lhs, rhs, res;
        lhs << std::setprecision(12) << r.lhs.value;
        rhs << std::setprecision(12) << r.rhs.value;
        res << std::setprecision(3) << r.residual;
        os << std::left << std::setw(static_cast<int>(idw) + 2) << r.id << std::setw(static_cast<int>(pw) + 2)
           << identities::params_to_string(r.params) << std::setw(22) << lhs.str() << std::setw(22) << rhs.str()
           << std::setw(13) << res.str() << r.status << '\n';
    }
    os << "total " << doc.summary.total << "  passed " << doc.summary.passed << "  failed " << doc.summary.failed
       << "  unconfirmed " << doc.summary.unconfirmed << '\n';
    return os.str();
}

}  // namespace eulersum::report
