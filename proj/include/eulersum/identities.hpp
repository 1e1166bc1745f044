#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulersum/oracle.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/real_with_error.hpp"

namespace eulersum::identities {

using Params = std::map<std::string, Rational>;

std::string params_to_string(const Params& p);

struct VerificationResult {
    std::string id;
    Params params;
    RealWithError lhs;
    RealWithError rhs;
    double residual = 0.0;
    bool pass = false;
    std::string status;  // "pass" | "fail" | "unconfirmed"
    std::string config_used;
    std::string message;  // diagnostics for non-passing results
};

/// Evaluation context shared by the identity evaluators.
struct Context {
    oracle::Oracle& oracle;
    oracle::EvalConfig cfg;

    RealWithError ev(const oracle::SumDescriptor& d) { return oracle.evaluate(d, cfg); }
};

struct IdentityRecord {
    std::string id;
    std::string equation;
    std::string description;
    std::vector<std::string> param_names;
    std::function<std::optional<std::string>(const Params&)> domain;  // violation message, or nullopt if ok
    std::function<RealWithError(const Params&, Context&)> lhs;
    std::function<RealWithError(const Params&, Context&)> rhs;
    double default_tol = 1e-6;
    std::vector<Params> default_grid;
    // Records whose right-hand sides quote results from external reductions
    // (section 3 and the golden closed forms): persistent residuals are
    // reported as "unconfirmed" rather than asserted as errors.
    bool quoted_source = false;
};

/// The registry of every verified numbered identity, sorted by id.
const std::vector<IdentityRecord>& registry();

const IdentityRecord* find(const std::string& id);

/// Numbered equations intentionally not carried as registry records, with the
/// reason (definitions, generating functions tested as series properties,
/// proof intermediates).
const std::vector<std::pair<std::string, std::string>>& out_of_scope_notes();

VerificationResult verify(const IdentityRecord& rec, const Params& params, const oracle::EvalConfig& cfg,
                          oracle::Oracle& orc);

/// Throws std::invalid_argument for unknown ids / out-of-domain params.
VerificationResult verify(const std::string& id, const Params& params, const oracle::EvalConfig& cfg,
                          oracle::Oracle& orc);

/// Verify every registered identity on its default parameter grid. `filter`
/// is a shell-style pattern on ids ("eq-2.*"); empty means all. Results are
/// ordered by (id, params) regardless of `jobs`.
std::vector<VerificationResult> verify_all(const oracle::EvalConfig& cfg, oracle::Oracle& orc,
                                           const std::string& filter = "", int jobs = 1);

/// Residuals of one identity at increasing truncations (base_N values).
std::vector<double> residual_scaling(const std::string& id, const Params& params, std::span<const long> Ns,
                                     oracle::Oracle& orc);

bool matches_filter(const std::string& id, const std::string& pattern);

}  // namespace eulersum::identities
