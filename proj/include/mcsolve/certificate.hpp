#pragma once

#include "mcsolve/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mcs {

enum class Mode { Induced, Subgraph };

std::string_view to_string(Mode mode);

/// A common graph H with injections into both inputs.
/// value is |V(H)| in induced mode and |E(H)| in subgraph mode.
struct EmbeddingCertificate
{
    Mode mode = Mode::Induced;
    Graph h;
    std::vector<int> eta1;
    std::vector<int> eta2;
    long long value = 0;

    friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;
};

/// Certificate whose H is G[image1] in the given order (induced mode).
EmbeddingCertificate induced_certificate(const Graph& g1, std::vector<int> image1, std::vector<int> image2);

/// Drops isolated vertices of H (subgraph mode only) and refreshes value.
void normalize_subgraph_certificate(EmbeddingCertificate& cert);

/// Swaps the roles of the two input graphs.
EmbeddingCertificate swapped(EmbeddingCertificate cert);

struct VerifyResult
{
    enum class Failure {
        None,
        SizeMismatch,     ///< an injection does not cover every vertex of H
        OutOfRange,       ///< image outside the host graph
        NotInjective,
        MissingEdge,      ///< H edge without host edge
        InducedViolation, ///< host edge without H edge (induced mode)
        ValueMismatch
    };
    Failure failure = Failure::None;
    int side = 0;          ///< 1 or 2 when the failure concerns one host graph
    int u = -1, v = -1;    ///< offending H vertices
    std::string message;

    bool ok() const { return failure == Failure::None; }
    explicit operator bool() const { return ok(); }
};

VerifyResult verify_certificate(const Graph& g1, const Graph& g2, const EmbeddingCertificate& cert);

/// Structured text:
///   mode <induced|subgraph>
///   value <k>
///   h <n> <m>
///   <u> <v>        (m lines, sorted)
///   eta1 <images...>
///   eta2 <images...>
std::string serialize_certificate(const EmbeddingCertificate& cert);
EmbeddingCertificate parse_certificate(std::string_view text);

} // namespace mcs
