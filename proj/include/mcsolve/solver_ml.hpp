#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"
#include "mcsolve/trails.hpp"

#include <vector>

namespace mcs {

/// One element of an alternating sequence: a non-degree-2 vertex or a trail.
struct SequenceElement
{
    bool trail = false;
    int id = -1;

    friend auto operator<=>(const SequenceElement&, const SequenceElement&) = default;
};

using Sequence = std::vector<SequenceElement>;

/// All valid alternating sequences from `from` to `to` with at most `cap`
/// elements: at least one trail, no repeated vertex except a shared first and
/// last element, consecutive elements incident, inner trails pairwise
/// distinct, and a trail repeated only as the two terminal elements when they
/// enter it from different ends. Sorted lexicographically.
std::vector<Sequence> enumerate_valid_sequences(const Graph& g, const TrailDecomposition& trails, SequenceElement from,
    SequenceElement to, int cap);

struct MlCaps
{
    int sequence_length = 9;        ///< elements per edge sequence
    int skeleton_vertices = 24;
    int skeleton_edges = 16;
    long long search_nodes = 20'000'000;
};

struct MlResult
{
    EmbeddingCertificate certificate;
    bool within_caps_only = false; ///< some guess was cut by a skeleton or sequence cap
    long long states = 0;          ///< skeleton guesses whose length program was solved
    int skeleton_vertices = 0;     ///< skeleton of the returned solution
    int skeleton_edges = 0;
};

/// Exact MCS by skeleton guessing and length programs (given sufficient caps).
MlResult mcs_ml(const Graph& g1, const Graph& g2, const MlCaps& caps = {});

/// Exact MCIS by skeleton guessing and length programs (given sufficient caps).
MlResult mcis_ml(const Graph& g1, const Graph& g2, const MlCaps& caps = {});

} // namespace mcs
