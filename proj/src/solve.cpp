#include "mcsolve/solve.hpp"

#include "mcsolve/errors.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solver_cvd.hpp"
#include "mcsolve/solver_nd.hpp"
#include "mcsolve/solver_tc.hpp"
#include "mcsolve/twins.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace mcs {

namespace {

    constexpr std::array<std::pair<Method, std::string_view>, 8> kMethodNames{{
        {Method::Auto, "auto"},
        {Method::Brute, "brute"},
        {Method::Tc, "tc"},
        {Method::Cvd, "cvd"},
        {Method::CvdApprox, "cvd-approx"},
        {Method::Nd, "nd"},
        {Method::Ml, "ml"},
        {Method::Cluster, "cluster"},
    }};

    long long parse_integer(std::string_view text, std::string_view what)
    {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw ContractError("invalid " + std::string(what) + " '" + std::string(text) + "'");
        return v;
    }

    std::string_view trim(std::string_view s)
    {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    }

    bool twin_cover_sum_within(const Graph& g1, const Graph& g2, int k)
    {
        auto c1 = twin_cover_within(g1, k);
        return c1 && twin_cover_within(g2, k - static_cast<int>(c1->size()));
    }

    void require_mcis(const SolveRequest& req)
    {
        if (req.problem != Problem::Mcis)
            throw ContractError("method " + std::string(to_string(req.method)) + " solves mcis only");
    }

} // namespace

std::string_view to_string(Problem p)
{
    return p == Problem::Mcs ? "mcs" : "mcis";
}

std::string_view to_string(Method m)
{
    for (auto [method, name] : kMethodNames)
        if (method == m)
            return name;
    return "?";
}

Problem parse_problem(std::string_view name)
{
    if (name == "mcs")
        return Problem::Mcs;
    if (name == "mcis")
        return Problem::Mcis;
    throw ContractError("unknown problem '" + std::string(name) + "'");
}

Method parse_method(std::string_view name)
{
    for (auto [method, n] : kMethodNames)
        if (n == name)
            return method;
    throw ContractError("unknown method '" + std::string(name) + "'");
}

std::pair<long long, long long> parse_eps(std::string_view text)
{
    long long num = 0, den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = parse_integer(text.substr(0, slash), "eps");
        den = parse_integer(text.substr(slash + 1), "eps");
    } else {
        auto dot = text.find('.');
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
        if (frac.size() > 15 || (whole.empty() && frac.empty()))
            throw ContractError("invalid eps '" + std::string(text) + "'");
        if (!whole.empty() && (whole.front() < '0' || whole.front() > '9'))
            throw ContractError("invalid eps '" + std::string(text) + "'");
        num = whole.empty() ? 0 : parse_integer(whole, "eps");
        for (char c : frac) {
            if (c < '0' || c > '9')
                throw ContractError("invalid eps '" + std::string(text) + "'");
            num = num * 10 + (c - '0');
            den *= 10;
        }
    }
    if (den <= 0 || num <= 0 || num >= den)
        throw ContractError("eps must lie strictly between 0 and 1, got '" + std::string(text) + "'");
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

void set_cap(SolveCaps& caps, std::string_view key, long long value)
{
    if (value < 0 && key != "tc-budget")
        throw ContractError("cap " + std::string(key) + " must be non-negative");
    auto narrow = [&](int& field) {
        if (value > 1'000'000'000)
            throw ContractError("cap " + std::string(key) + " is too large");
        field = static_cast<int>(value);
    };
    if (key == "oracle")
        narrow(caps.oracle);
    else if (key == "tc-budget")
        narrow(caps.tc_budget);
    else if (key == "cvd-guesses")
        caps.cvd_guesses = value;
    else if (key == "nd-branches")
        caps.nd_branches = value;
    else if (key == "nd-variables")
        narrow(caps.nd_variables);
    else if (key == "ml-sequence")
        narrow(caps.ml.sequence_length);
    else if (key == "ml-skeleton-vertices")
        narrow(caps.ml.skeleton_vertices);
    else if (key == "ml-skeleton-edges")
        narrow(caps.ml.skeleton_edges);
    else if (key == "ml-nodes")
        caps.ml.search_nodes = value;
    else
        throw ContractError("unknown cap '" + std::string(key) + "'");
}

void apply_caps(SolveCaps& caps, std::string_view text)
{
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ContractError("cap entry '" + std::string(item) + "' lacks '='");
        set_cap(caps, trim(item.substr(0, eq)), parse_integer(trim(item.substr(eq + 1)), "cap value"));
    }
}

SolveCaps default_caps()
{
    SolveCaps caps;
    if (const char* env = std::getenv(kCapsEnvironmentVariable))
        apply_caps(caps, env);
    return caps;
}

Method choose_method(const Graph& g1, const Graph& g2, Problem problem, const SolveCaps& caps)
{
    const bool mcis = problem == Problem::Mcis;
    if (mcis && is_cluster_graph(g1) && is_cluster_graph(g2))
        return Method::Cluster;
    if (neighborhood_diversity(g1) <= 4 && neighborhood_diversity(g2) <= 4)
        return Method::Nd;
    if (mcis && twin_cover_sum_within(g1, g2, 4))
        return Method::Tc;
    if (mcis && std::min(g1.order(), g2.order()) <= std::min(8, caps.oracle))
        return Method::Brute;
    if (!mcis && std::min(g1.size(), g2.size()) <= std::min(12, caps.oracle))
        return Method::Brute;
    return Method::Ml;
}

SolveOutcome solve(const Graph& g1, const Graph& g2, const SolveRequest& req)
{
    const bool mcis = req.problem == Problem::Mcis;
    const auto& caps = req.caps;
    SolveOutcome out;
    out.method = req.method == Method::Auto ? choose_method(g1, g2, req.problem, caps) : req.method;
    SolveRequest effective = req;
    effective.method = out.method;
    switch (out.method) {
    case Method::Auto:
        break;
    case Method::Brute:
        out.certificate = mcis ? mcis_oracle(g1, g2, caps.oracle) : mcs_oracle(g1, g2, caps.oracle);
        break;
    case Method::Cluster:
        require_mcis(effective);
        if (!is_cluster_graph(g1) || !is_cluster_graph(g2))
            throw ContractError("method cluster needs two cluster graphs");
        out.certificate = mcis_cluster_graphs(g1, g2);
        break;
    case Method::Tc:
        require_mcis(effective);
        out.certificate = mcis_tc(g1, g2, caps.tc_budget).certificate;
        break;
    case Method::Cvd:
        require_mcis(effective);
        out.certificate = mcis_cvd_xp(g1, g2, caps.cvd_guesses).certificate;
        break;
    case Method::CvdApprox:
        require_mcis(effective);
        if (!req.eps)
            throw ContractError("method cvd-approx needs eps");
        out.certificate = mcis_cvd_approx(g1, g2, req.eps->first, req.eps->second, ExactMethod::CvdXp).certificate;
        out.exact = false;
        break;
    case Method::Nd:
        out.certificate = mcis ? mcis_nd(g1, g2, caps.nd_branches).certificate : mcs_nd(g1, g2, caps.nd_variables).certificate;
        break;
    case Method::Ml: {
        auto r = mcis ? mcis_ml(g1, g2, caps.ml) : mcs_ml(g1, g2, caps.ml);
        out.certificate = std::move(r.certificate);
        out.exact = !r.within_caps_only;
        break;
    }
    }
    return out;
}

} // namespace mcs
