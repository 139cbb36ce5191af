#include "mcsolve/graph.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace mcs {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n)), matrix_(static_cast<size_t>(n) * n, 0)
{
    if (n < 0)
        throw ContractError("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ContractError("edge endpoint out of range");
    if (u == v)
        throw ContractError("loops are not allowed in a simple graph");
    if (adjacent(u, v))
        throw ContractError("duplicate edge");
    matrix_[static_cast<size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<size_t>(v) * n_ + u] = 1;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void Graph::remove_edge(int u, int v)
{
    if (!adjacent(u, v))
        throw ContractError("removing a missing edge");
    matrix_[static_cast<size_t>(u) * n_ + v] = 0;
    matrix_[static_cast<size_t>(v) * n_ + u] = 0;
    adj_[u].erase(std::find(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::find(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

int Graph::add_vertex()
{
    Graph bigger(n_ + 1);
    for (auto [u, v] : edges())
        bigger.add_edge(u, v);
    *this = std::move(bigger);
    return n_ - 1;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> Graph::components() const
{
    std::vector<int> seen(static_cast<size_t>(n_), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : adj_[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::connected() const
{
    return components().size() <= 1;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices)
{
    Graph h(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

std::pair<Graph, std::vector<int>> remove_vertices(const Graph& g, std::span<const int> removed)
{
    std::vector<char> drop(static_cast<size_t>(g.order()), 0);
    for (int v : removed)
        drop[v] = 1;
    std::vector<int> kept;
    for (int v = 0; v < g.order(); ++v)
        if (!drop[v])
            kept.push_back(v);
    Graph h = induced_subgraph(g, kept);
    return {std::move(h), std::move(kept)};
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.order(), v + a.order());
    return g;
}

namespace {

    std::vector<std::string_view> split_lines(std::string_view text)
    {
        std::vector<std::string_view> lines;
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                if (start < text.size())
                    lines.push_back(text.substr(start));
                break;
            }
            lines.push_back(text.substr(start, end - start));
            start = end + 1;
        }
        return lines;
    }

    bool blank(std::string_view line)
    {
        return line.find_first_not_of(" \t\r") == std::string_view::npos;
    }

    std::vector<long long> parse_ints(std::string_view line, int lineno)
    {
        std::vector<long long> out;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            if (i >= line.size())
                break;
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc() || ptr != line.data() + j)
                throw ParseError(lineno, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
            out.push_back(value);
            i = j;
        }
        return out;
    }

} // namespace

Graph parse_graph(std::string_view text)
{
    auto lines = split_lines(text);
    if (lines.empty() || blank(lines[0]))
        throw ParseError(1, "missing header 'n m'");
    auto header = parse_ints(lines[0], 1);
    if (header.size() != 2)
        throw ParseError(1, "header must be 'n m'");
    if (header[0] < 0 || header[1] < 0 || header[0] > 1'000'000)
        throw ParseError(1, "header values out of range");
    const int n = static_cast<int>(header[0]);
    const long long m = header[1];
    Graph g(n);
    long long read = 0;
    size_t idx = 1;
    for (; idx < lines.size() && read < m; ++idx) {
        const int lineno = static_cast<int>(idx) + 1;
        auto values = parse_ints(lines[idx], lineno);
        if (values.size() != 2)
            throw ParseError(lineno, "edge line must be 'u v'");
        auto u = values[0], v = values[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u == v)
            throw ParseError(lineno, "loop edge");
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++read;
    }
    if (read < m)
        throw ParseError(static_cast<int>(lines.size()) + 1,
            "expected " + std::to_string(m) + " edges, found " + std::to_string(read));
    for (; idx < lines.size(); ++idx)
        if (!blank(lines[idx]))
            throw ParseError(static_cast<int>(idx) + 1, "trailing content after the edge list");
    return g;
}

std::string serialize_graph(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path)
{
    return parse_graph(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n)
{
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(0, n - 1);
    return g;
}

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph star_graph(int leaves)
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph subdivide(const Graph& g, int factor)
{
    if (factor < 1)
        throw ContractError("subdivision factor must be at least 1");
    auto edges = g.edges();
    Graph out(g.order() + static_cast<int>(edges.size()) * (factor - 1));
    int next = g.order();
    for (auto [u, v] : edges) {
        int prev = u;
        for (int k = 1; k < factor; ++k) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

} // namespace mcs
