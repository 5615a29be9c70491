#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "quasik/corpus.hpp"
#include "quasik/verification.hpp"

namespace quasik {

struct CampaignOptions {
    std::vector<Claim> claims;
    bool force_exhaustive = false;
    /// Per (graph, claim) budget in seconds.
    std::optional<double> timeout_seconds;
    std::optional<int> k;
    bool include_timing = false;
};

struct CampaignSummary {
    std::size_t graphs = 0;
    std::size_t verified = 0;
    std::size_t vacuous = 0;
    std::size_t falsified = 0;
    std::size_t inconclusive = 0;
    std::size_t timeout = 0;

    void add(Verdict v);
    nlohmann::json to_json() const;
};

/// Streams one JSON line per (graph, claim) in corpus order, claims in the
/// given order. Graphs are generated spec by spec and never held all at once.
CampaignSummary run_campaign(const std::vector<CorpusSpec>& corpus, const CampaignOptions& options, std::ostream& out);

/// As above, writing to a file. std::runtime_error on IO failure.
CampaignSummary run_campaign(const std::vector<CorpusSpec>& corpus, const CampaignOptions& options,
                             const std::filesystem::path& out);

struct SearchSummary {
    std::size_t graphs = 0;
    std::size_t quasi_5_connected = 0;
    std::size_t hits = 0;
};

/// Looks for contraction-critical quasi 5-connected graphs: every quasi
/// 5-connected corpus graph without a quasi 5-contractible edge is written
/// as a JSON line with its id, graph6 and edge refutations.
SearchSummary search_contraction_critical_quasi5(const std::vector<CorpusSpec>& corpus, bool force_exhaustive,
                                                 std::ostream& out);

}  // namespace quasik
