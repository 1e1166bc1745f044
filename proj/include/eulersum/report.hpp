#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulersum/identities.hpp"

namespace eulersum::report {

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t unconfirmed = 0;
};

struct ReportDocument {
    std::string tool_version;
    long config_N = 0;
    std::optional<double> config_tol;  // empty: per-identity defaults
    std::vector<identities::VerificationResult> results;
    Summary summary;
    double wall_time_seconds = 0.0;
};

ReportDocument make_report(std::vector<identities::VerificationResult> results, long config_N,
                           std::optional<double> config_tol, double wall_time_seconds);

std::string to_json(const ReportDocument& doc);
std::string to_csv(const ReportDocument& doc);
std::string to_table(const ReportDocument& doc);

}  // namespace eulersum::report
