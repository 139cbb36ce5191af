#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"
#include "mcsolve/solver_ml.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace mcs {

enum class Problem { Mcs, Mcis };
enum class Method { Auto, Brute, Tc, Cvd, CvdApprox, Nd, Ml, Cluster };

std::string_view to_string(Problem p);
std::string_view to_string(Method m);
/// Throws ContractError on unknown names.
Problem parse_problem(std::string_view name);
Method parse_method(std::string_view name);

/// Exact rational in (0, 1) from "0.25" or "1/4". Throws ContractError otherwise.
std::pair<long long, long long> parse_eps(std::string_view text);

struct SolveCaps
{
    int oracle = 12;          ///< vertices (MCIS) or edges (MCS) of the smaller input for brute force
    int tc_budget = -1;       ///< < 0: tc(G1) + tc(G2)
    long long cvd_guesses = 10'000'000;
    long long nd_branches = 10'000'000;
    int nd_variables = 64;
    MlCaps ml;
};

/// Applies "key=value" pairs separated by commas, e.g. "oracle=10,ml-nodes=5000".
/// Keys: oracle, tc-budget, cvd-guesses, nd-branches, nd-variables, ml-sequence,
/// ml-skeleton-vertices, ml-skeleton-edges, ml-nodes. Throws ContractError.
void apply_caps(SolveCaps& caps, std::string_view text);
void set_cap(SolveCaps& caps, std::string_view key, long long value);

inline constexpr const char* kCapsEnvironmentVariable = "MCSOLVE_CAPS";
/// Defaults overridden by the environment variable when it is set.
SolveCaps default_caps();

struct SolveRequest
{
    Problem problem = Problem::Mcis;
    Method method = Method::Auto;
    std::optional<std::pair<long long, long long>> eps;
    SolveCaps caps;
};

struct SolveOutcome
{
    EmbeddingCertificate certificate;
    Method method = Method::Auto; ///< the solver that actually ran
    bool exact = true;            ///< false for cvd-approx and for capped ml runs
};

/// Dispatch used by Method::Auto.
Method choose_method(const Graph& g1, const Graph& g2, Problem problem, const SolveCaps& caps);

/// Runs the requested solver. Throws ContractError when the method does not
/// apply to the problem or eps is missing, ResourceError when a cap is hit.
SolveOutcome solve(const Graph& g1, const Graph& g2, const SolveRequest& req);

} // namespace mcs
