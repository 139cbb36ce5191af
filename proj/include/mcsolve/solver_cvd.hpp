#pragma once

#include "mcsolve/certificate.hpp"
#include "mcsolve/graph.hpp"

#include <vector>

namespace mcs {

inline constexpr long long kDefaultCvdGuessCap = 10'000'000;

struct CvdResult
{
    EmbeddingCertificate certificate;
    long long guesses = 0; ///< isomorphisms phi that reached the matching phase
};

/// Exact MCIS by guessing the retained deletion sets, their partner sets and
/// the bijection between them, then matching cliques with pair_gain weights.
/// Throws ResourceError once more than `guess_cap` bijections were tried.
CvdResult mcis_cvd_xp(const Graph& g1, const Graph& g2, long long guess_cap = kDefaultCvdGuessCap);

/// Sum over neighbourhood patterns X of min(#v in K1 with N(v) & base1 = X,
/// #v in K2 with N(v) & base2 = phi(X)), where phi maps base1[k] to base2[k].
long long pair_gain(const Graph& g1, const std::vector<int>& k1, const std::vector<int>& base1, const Graph& g2,
    const std::vector<int>& k2, const std::vector<int>& base2);

enum class ExactMethod { Oracle, TwinCover, CvdXp };

struct ApproxResult
{
    enum class Branch { Truncated, ClusterPart };
    EmbeddingCertificate certificate;
    Branch branch = Branch::ClusterPart;
    int p = 0;        ///< max(cvd(G1), cvd(G2))
    int cap = 0;      ///< per-class cap ceil(2p / eps); 0 when p == 0
    long long truncated_value = -1; ///< best answer on the truncated graphs, -1 when skipped
    long long cluster_value = 0;    ///< best answer with every vertex in the cluster part
};

/// (1 - eps)-approximate MCIS with eps = eps_num / eps_den in (0, 1).
ApproxResult mcis_cvd_approx(const Graph& g1, const Graph& g2, long long eps_num, long long eps_den,
    ExactMethod exact = ExactMethod::Oracle);

} // namespace mcs
