#include "mcsolve/certificate.hpp"

#include "mcsolve/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mcs {

std::string_view to_string(Mode mode)
{
    return mode == Mode::Induced ? "induced" : "subgraph";
}

EmbeddingCertificate induced_certificate(const Graph& g1, std::vector<int> image1, std::vector<int> image2)
{
    EmbeddingCertificate cert;
    cert.mode = Mode::Induced;
    cert.h = induced_subgraph(g1, image1);
    cert.eta1 = std::move(image1);
    cert.eta2 = std::move(image2);
    cert.value = cert.h.order();
    return cert;
}

void normalize_subgraph_certificate(EmbeddingCertificate& cert)
{
    std::vector<int> keep;
    for (int v = 0; v < cert.h.order(); ++v)
        if (cert.h.degree(v) > 0)
            keep.push_back(v);
    std::vector<int> e1, e2;
    for (int v : keep) {
        e1.push_back(cert.eta1[v]);
        e2.push_back(cert.eta2[v]);
    }
    cert.h = induced_subgraph(cert.h, keep);
    cert.eta1 = std::move(e1);
    cert.eta2 = std::move(e2);
    cert.value = cert.h.size();
}

EmbeddingCertificate swapped(EmbeddingCertificate cert)
{
    std::swap(cert.eta1, cert.eta2);
    return cert;
}

namespace {

    std::string pair_text(int u, int v)
    {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }

    VerifyResult check_side(const Graph& host, const EmbeddingCertificate& cert, const std::vector<int>& eta, int side)
    {
        using F = VerifyResult::Failure;
        const Graph& h = cert.h;
        const std::string name = "eta" + std::to_string(side);
        if (static_cast<int>(eta.size()) != h.order())
            return {F::SizeMismatch, side, -1, -1,
                name + " has " + std::to_string(eta.size()) + " entries but H has " + std::to_string(h.order()) + " vertices"};
        for (int u = 0; u < h.order(); ++u)
            if (eta[u] < 0 || eta[u] >= host.order())
                return {F::OutOfRange, side, u, -1,
                    name + " maps H vertex " + std::to_string(u) + " outside G" + std::to_string(side)};
        std::vector<int> owner(static_cast<size_t>(host.order()), -1);
        for (int u = 0; u < h.order(); ++u) {
            if (owner[eta[u]] >= 0)
                return {F::NotInjective, side, owner[eta[u]], u,
                    name + " is not injective: H vertices " + pair_text(owner[eta[u]], u) + " both map to "
                        + std::to_string(eta[u])};
            owner[eta[u]] = u;
        }
        for (auto [u, v] : h.edges())
            if (!host.adjacent(eta[u], eta[v]))
                return {F::MissingEdge, side, u, v,
                    "H edge " + pair_text(u, v) + " has no image edge in G" + std::to_string(side)};
        if (cert.mode == Mode::Induced) {
            for (int u = 0; u < h.order(); ++u)
                for (int v = u + 1; v < h.order(); ++v)
                    if (!h.adjacent(u, v) && host.adjacent(eta[u], eta[v]))
                        return {F::InducedViolation, side, u, v,
                            "H pair " + pair_text(u, v) + " is not an edge but its image is an edge of G"
                                + std::to_string(side)};
        }
        return {};
    }

} // namespace

VerifyResult verify_certificate(const Graph& g1, const Graph& g2, const EmbeddingCertificate& cert)
{
    if (auto r = check_side(g1, cert, cert.eta1, 1); !r)
        return r;
    if (auto r = check_side(g2, cert, cert.eta2, 2); !r)
        return r;
    const long long expected = cert.mode == Mode::Induced ? cert.h.order() : cert.h.size();
    if (cert.value != expected)
        return {VerifyResult::Failure::ValueMismatch, 0, -1, -1,
            "value " + std::to_string(cert.value) + " but H has " + std::to_string(expected)
                + (cert.mode == Mode::Induced ? " vertices" : " edges")};
    return {};
}

std::string serialize_certificate(const EmbeddingCertificate& cert)
{
    std::ostringstream out;
    out << "mode " << to_string(cert.mode) << "\n";
    out << "value " << cert.value << "\n";
    out << "h " << cert.h.order() << " " << cert.h.size() << "\n";
    for (auto [u, v] : cert.h.edges())
        out << u << " " << v << "\n";
    out << "eta1";
    for (int x : cert.eta1)
        out << " " << x;
    out << "\neta2";
    for (int x : cert.eta2)
        out << " " << x;
    out << "\n";
    return out.str();
}

namespace {

    struct LineReader
    {
        std::vector<std::string> lines;
        size_t next = 0;

        explicit LineReader(std::string_view text)
        {
            std::string s(text);
            std::istringstream in(s);
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r')
                    line.pop_back();
                lines.push_back(line);
            }
        }

        int lineno() const { return static_cast<int>(next) + 1; }

        std::vector<std::string> tokens(const char* expect_key)
        {
            if (next >= lines.size())
                throw ParseError(lineno(), std::string("missing '") + expect_key + "' line");
            std::istringstream in(lines[next]);
            std::vector<std::string> out;
            std::string tok;
            while (in >> tok)
                out.push_back(tok);
            if (expect_key && (out.empty() || out[0] != expect_key))
                throw ParseError(lineno(), std::string("expected '") + expect_key + "'");
            ++next;
            return out;
        }
    };

    long long to_int(const std::string& tok, int line)
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line, "expected an integer, got '" + tok + "'");
        return value;
    }

} // namespace

EmbeddingCertificate parse_certificate(std::string_view text)
{
    LineReader r(text);
    EmbeddingCertificate cert;

    auto mode = r.tokens("mode");
    if (mode.size() != 2 || (mode[1] != "induced" && mode[1] != "subgraph"))
        throw ParseError(r.lineno() - 1, "mode must be 'induced' or 'subgraph'");
    cert.mode = mode[1] == "induced" ? Mode::Induced : Mode::Subgraph;

    auto value = r.tokens("value");
    if (value.size() != 2)
        throw ParseError(r.lineno() - 1, "value line must be 'value <k>'");
    cert.value = to_int(value[1], r.lineno() - 1);

    auto header = r.tokens("h");
    if (header.size() != 3)
        throw ParseError(r.lineno() - 1, "h line must be 'h <n> <m>'");
    const long long n = to_int(header[1], r.lineno() - 1);
    const long long m = to_int(header[2], r.lineno() - 1);
    if (n < 0 || m < 0)
        throw ParseError(r.lineno() - 1, "negative size");
    cert.h = Graph(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto edge = r.tokens(nullptr);
        const int line = r.lineno() - 1;
        if (edge.size() != 2)
            throw ParseError(line, "edge line must be 'u v'");
        long long u = to_int(edge[0], line), v = to_int(edge[1], line);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v || cert.h.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(line, "invalid H edge");
        cert.h.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    for (auto* key : {"eta1", "eta2"}) {
        auto toks = r.tokens(key);
        auto& eta = std::string(key) == "eta1" ? cert.eta1 : cert.eta2;
        for (size_t i = 1; i < toks.size(); ++i)
            eta.push_back(static_cast<int>(to_int(toks[i], r.lineno() - 1)));
    }
    for (; r.next < r.lines.size(); ++r.next)
        if (r.lines[r.next].find_first_not_of(" \t") != std::string::npos)
            throw ParseError(r.lineno(), "trailing content");
    return cert;
}

} // namespace mcs
