#include "mcsolve/certificate.hpp"
#include "mcsolve/errors.hpp"
#include "mcsolve/generators.hpp"
#include "mcsolve/graph.hpp"
#include "mcsolve/oracle.hpp"
#include "mcsolve/parameters.hpp"
#include "mcsolve/solve.hpp"
#include "mcsolve/trails.hpp"
#include "mcsolve/twins.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

using namespace mcs;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kVerify = 3, kResource = 4 };

struct VerifyFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// A file path, or a name such as K4, P5, C6, S3 (star), E2 (edgeless), joined by '+'.
Graph load_graph(const std::string& arg)
{
    if (std::filesystem::exists(arg))
        return read_graph_file(arg);
    static const std::regex part(R"(([KPCSE])(\d+))");
    Graph g;
    std::stringstream ss(arg);
    std::string item;
    bool any = false;
    while (std::getline(ss, item, '+')) {
        std::smatch m;
        if (!std::regex_match(item, m, part))
            throw InputError("cannot open graph file '" + arg + "'");
        const int k = std::stoi(m[2]);
        Graph h;
        switch (m[1].str()[0]) {
        case 'K': h = complete_graph(k); break;
        case 'P': h = path_graph(k); break;
        case 'C': h = cycle_graph(k); break;
        case 'S': h = star_graph(k); break;
        default: h = empty_graph(k); break;
        }
        g = any ? disjoint_union(g, h) : h;
        any = true;
    }
    return g;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

int cmd_params(const std::string& path, bool ml_lower_bound)
{
    const Graph g = load_graph(path);
    int degree = 0;
    for (int v = 0; v < g.order(); ++v)
        degree = std::max(degree, g.degree(v));
    std::optional<int> ml;
    const int lower = max_leaf_lower_bound(g);
    if (!ml_lower_bound) {
        try {
            ml = max_leaf_number(g);
        } catch (const MaxLeafInfeasible&) {
        }
    }
    const int vertices = static_cast<int>(non_degree2_vertices(g).size());
    const int trails = degree2_trails(g).count();
    std::cout << "n " << g.order() << "\n"
              << "m " << g.size() << "\n"
              << "components " << g.components().size() << "\n"
              << "max_degree " << degree << "\n"
              << "nd " << neighborhood_diversity(g) << "\n"
              << "tc " << minimum_twin_cover(g).size() << "\n"
              << "cvd " << minimum_cluster_deletion(g).size() << "\n";
    if (ml)
        std::cout << "ml " << *ml << "\n";
    else
        std::cout << "ml_lower_bound " << lower << "\n";
    std::cout << "non_degree2_vertices " << vertices << "\n"
              << "degree2_trails " << trails << "\n";
    // With only a lower bound, a passing check still proves the bound for ml.
    const long long l = ml ? *ml : lower;
    auto check = [&](const char* name, long long lhs, long long rhs) {
        const char* verdict = lhs <= rhs ? "ok" : (ml ? "violated" : "unknown");
        std::cout << name << " " << lhs << " <= " << rhs << " " << verdict << "\n";
    };
    if (g.order() >= 2)
        check("check_vertices_4ml-6", vertices, 4 * l - 6);
    else
        std::cout << "check_vertices_4ml-6 n/a\n";
    check("check_trails_2ml^2", trails, 2 * l * l);
    return kOk;
}

int cmd_solve(const std::string& p1, const std::string& p2, SolveRequest req, const std::string& out)
{
    if (req.method == Method::CvdApprox && !req.eps)
        throw ContractError("method cvd-approx needs --eps");
    const Graph g1 = load_graph(p1);
    const Graph g2 = load_graph(p2);
    const auto outcome = solve(g1, g2, req);
    const auto check = verify_certificate(g1, g2, outcome.certificate);
    if (!check)
        throw VerifyFailure("internal error: produced certificate fails verification: " + check.message);
    if (!out.empty())
        write_text_file(out, serialize_certificate(outcome.certificate));
    std::cerr << "method " << to_string(outcome.method) << (outcome.exact ? " exact" : " bounded") << "\n";
    std::cout << outcome.certificate.value << "\n";
    return kOk;
}

int cmd_verify(const std::string& p1, const std::string& p2, const std::string& cert_path)
{
    const Graph g1 = load_graph(p1);
    const Graph g2 = load_graph(p2);
    if (!std::filesystem::exists(cert_path))
        throw InputError("cannot open certificate file '" + cert_path + "'");
    const auto cert = parse_certificate(read_text_file(cert_path));
    const auto check = verify_certificate(g1, g2, cert);
    if (!check)
        throw VerifyFailure(check.message);
    std::cout << "ok " << to_string(cert.mode) << " " << cert.value << "\n";
    return kOk;
}

struct GenOptions
{
    std::string kind;
    std::vector<int> sizes;
    int n = 8;
    double p = 0.3;
    int classes = 3;
    std::string base = "K4";
    int factor = 0;
    int max_length = 0;
    unsigned seed = 1;
};

Graph generate(const GenOptions& o, Rng& rng)
{
    if (o.n < 0 || o.p < 0 || o.p > 1)
        throw ContractError("gen needs n >= 0 and p in [0, 1]");
    if (o.kind == "cluster") {
        if (o.sizes.empty() || std::any_of(o.sizes.begin(), o.sizes.end(), [](int s) { return s < 1; }))
            throw ContractError("cluster needs --sizes with positive entries");
        return gen_cluster(o.sizes);
    }
    if (o.kind == "pathforest")
        return gen_path_forest(rng, o.n);
    if (o.kind == "cycleforest")
        return gen_cycle_forest(rng, o.n);
    if (o.kind == "random-gnp")
        return gen_gnp(rng, o.n, o.p);
    if (o.kind == "bounded-nd") {
        if (o.classes < 1 || o.classes > std::max(o.n, 1))
            throw ContractError("bounded-nd needs 1 <= classes <= n");
        return gen_bounded_nd(rng, o.n, o.classes);
    }
    if (o.kind == "subdivide") {
        if ((o.factor > 0) == (o.max_length > 0))
            throw ContractError("subdivide needs exactly one of --factor and --max-length");
        const Graph base = load_graph(o.base);
        return o.factor > 0 ? subdivide(base, o.factor) : gen_subdivision(rng, base, o.max_length);
    }
    throw ContractError("unknown generator '" + o.kind + "'");
}

int cmd_bench(const GenOptions& o, int count, SolveRequest req, bool oracle)
{
    Rng rng(o.seed);
    std::cout << "index n1 m1 n2 m2 value method seconds" << (oracle ? " oracle" : "") << "\n";
    for (int i = 0; i < count; ++i) {
        const Graph g1 = generate(o, rng);
        const Graph g2 = generate(o, rng);
        const auto t0 = std::chrono::steady_clock::now();
        const auto outcome = solve(g1, g2, req);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!verify_certificate(g1, g2, outcome.certificate))
            throw VerifyFailure("internal error: bench certificate fails verification");
        std::cout << i << " " << g1.order() << " " << g1.size() << " " << g2.order() << " " << g2.size() << " "
                  << outcome.certificate.value << " " << to_string(outcome.method) << " " << secs;
        if (oracle) {
            const auto ref = req.problem == Problem::Mcis ? mcis_oracle(g1, g2, req.caps.oracle)
                                                          : mcs_oracle(g1, g2, req.caps.oracle);
            std::cout << " " << ref.value;
        }
        std::cout << "\n";
    }
    return kOk;
}

void add_solve_flags(CLI::App* cmd, std::string& problem, std::string& method, std::string& eps,
    std::vector<std::pair<std::string, long long>>& caps)
{
    cmd->add_option("--problem", problem, "mcs or mcis")->check(CLI::IsMember({"mcs", "mcis"}));
    cmd->add_option("--method", method, "auto, brute, tc, cvd, cvd-approx, nd, ml or cluster")
        ->check(CLI::IsMember({"auto", "brute", "tc", "cvd", "cvd-approx", "nd", "ml", "cluster"}));
    cmd->add_option("--eps", eps, "approximation parameter in (0,1), e.g. 0.25 or 1/4");
    for (const char* key : {"oracle", "tc-budget", "cvd-guesses", "nd-branches", "nd-variables", "ml-sequence",
             "ml-skeleton-vertices", "ml-skeleton-edges", "ml-nodes"}) {
        cmd->add_option_function<long long>(
            std::string("--cap-") + key, [&caps, key](long long v) { caps.emplace_back(key, v); },
            "overrides the " + std::string(key) + " cap");
    }
}

SolveRequest build_request(const std::string& problem, const std::string& method, const std::string& eps,
    const std::vector<std::pair<std::string, long long>>& caps)
{
    SolveRequest req;
    req.problem = parse_problem(problem);
    req.method = parse_method(method);
    if (!eps.empty())
        req.eps = parse_eps(eps);
    req.caps = default_caps();
    for (const auto& [key, value] : caps)
        set_cap(req.caps, key, value);
    return req;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximum common (induced) subgraph solvers"};
    app.require_subcommand(1);

    std::string g1, g2, cert, out, problem = "mcis", method = "auto", eps;
    std::vector<std::pair<std::string, long long>> caps;
    bool ml_lower = false, oracle = false;
    GenOptions gen;
    int count = 10;

    auto* params = app.add_subcommand("params", "print structural parameters of a graph");
    params->add_option("graph", g1, "edge-list file or name such as K4, P5, K2+K3")->required();
    params->add_flag("--ml-lower-bound", ml_lower, "report a cheap max-leaf lower bound instead of ml");

    auto* solve_cmd = app.add_subcommand("solve", "solve mcs or mcis and print the value");
    solve_cmd->add_option("g1", g1)->required();
    solve_cmd->add_option("g2", g2)->required();
    solve_cmd->add_option("--out", out, "certificate output path");
    add_solve_flags(solve_cmd, problem, method, eps, caps);

    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against two graphs");
    verify_cmd->add_option("g1", g1)->required();
    verify_cmd->add_option("g2", g2)->required();
    verify_cmd->add_option("certificate", cert)->required();

    auto add_gen_flags = [&](CLI::App* cmd) {
        cmd->add_option("kind", gen.kind, "cluster, pathforest, cycleforest, random-gnp, subdivide, bounded-nd")
            ->required()
            ->check(CLI::IsMember({"cluster", "pathforest", "cycleforest", "random-gnp", "subdivide", "bounded-nd"}));
        cmd->add_option("--sizes", gen.sizes, "clique sizes for cluster")->delimiter(',');
        cmd->add_option("--n", gen.n, "vertex count");
        cmd->add_option("--p", gen.p, "edge probability for random-gnp");
        cmd->add_option("--classes", gen.classes, "class count for bounded-nd");
        cmd->add_option("--base", gen.base, "base graph for subdivide");
        cmd->add_option("--factor", gen.factor, "path length replacing each edge");
        cmd->add_option("--max-length", gen.max_length, "random path lengths in [1, max-length]");
        cmd->add_option("--seed", gen.seed, "random seed");
    };
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    add_gen_flags(gen_cmd);
    gen_cmd->add_option("--out", out, "output path (stdout when omitted)");

    auto* bench_cmd = app.add_subcommand("bench", "solve generated pairs and print timings");
    add_gen_flags(bench_cmd);
    bench_cmd->add_option("--count", count, "number of pairs")->check(CLI::NonNegativeNumber);
    bench_cmd->add_flag("--oracle", oracle, "also print the brute-force value");
    add_solve_flags(bench_cmd, problem, method, eps, caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*params)
            return cmd_params(g1, ml_lower);
        if (*solve_cmd)
            return cmd_solve(g1, g2, build_request(problem, method, eps, caps), out);
        if (*verify_cmd)
            return cmd_verify(g1, g2, cert);
        if (*gen_cmd) {
            Rng rng(gen.seed);
            emit(serialize_graph(generate(gen, rng)), out);
            return kOk;
        }
        if (*bench_cmd)
            return cmd_bench(gen, count, build_request(problem, method, eps, caps), oracle);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kParse;
    } catch (const ContractError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerify;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerify;
    }
    return kUsage;
}
