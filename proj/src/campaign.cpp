#include "quasik/campaign.hpp"

#include <fstream>
#include <ostream>

#include "quasik/contractibility.hpp"
#include "quasik/graph_io.hpp"
#include "quasik/serialize.hpp"

namespace quasik {

void CampaignSummary::add(Verdict v) {
    switch (v) {
        case Verdict::verified: ++verified; break;
        case Verdict::vacuous: ++vacuous; break;
        case Verdict::falsified: ++falsified; break;
        case Verdict::inconclusive: ++inconclusive; break;
        case Verdict::timeout: ++timeout; break;
    }
}

nlohmann::json CampaignSummary::to_json() const {
    return {{"graphs", graphs},           {"verified", verified},         {"vacuous", vacuous},
            {"falsified", falsified},     {"inconclusive", inconclusive}, {"timeout", timeout}};
}

CampaignSummary run_campaign(const std::vector<CorpusSpec>& corpus, const CampaignOptions& options, std::ostream& out) {
    CampaignSummary summary;
    for (const auto& spec : corpus) {
        for (const auto& entry : generate_corpus(spec)) {
            ++summary.graphs;
            for (Claim claim : options.claims) {
                VerifyOptions vo;
                vo.force_exhaustive = options.force_exhaustive;
                vo.k = options.k;
                if (options.timeout_seconds) vo.deadline = Deadline::after(std::chrono::duration<double>(*options.timeout_seconds));
                const auto report = verify_claim(entry.graph, claim, vo, entry.id);
                summary.add(report.verdict());
                out << report_to_json(report, entry.graph, options.include_timing).dump() << '\n';
            }
        }
    }
    out.flush();
    if (!out) throw std::runtime_error("failed writing campaign report");
    return summary;
}

CampaignSummary run_campaign(const std::vector<CorpusSpec>& corpus, const CampaignOptions& options,
                             const std::filesystem::path& out) {
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + out.string() + " for writing");
    return run_campaign(corpus, options, file);
}

SearchSummary search_contraction_critical_quasi5(const std::vector<CorpusSpec>& corpus, bool force_exhaustive,
                                                 std::ostream& out) {
    SearchSummary summary;
    for (const auto& spec : corpus) {
        for (const auto& entry : generate_corpus(spec)) {
            ++summary.graphs;
            const auto q = is_quasi_k_connected(entry.graph, 5, force_exhaustive);
            if (!q) continue;
            ++summary.quasi_5_connected;
            const auto crit = is_contraction_critical(entry.graph, 5, true, force_exhaustive);
            if (!crit) continue;
            ++summary.hits;
            nlohmann::json refutations = nlohmann::json::array();
            for (const auto& r : contraction_reports(entry.graph, 5, force_exhaustive)) {
                refutations.push_back({{"edge", r.edge}, {"kappa_after", r.kappa_after}, {"refuting_preimage", r.refuting_preimage}});
            }
            out << nlohmann::json{{"graph_id", entry.id},
                                  {"n", entry.graph.order()},
                                  {"m", entry.graph.size()},
                                  {"graph6", to_graph6(entry.graph)},
                                  {"kappa", q.kappa},
                                  {"enumeration_mode", to_string(crit.mode)},
                                  {"refutations", std::move(refutations)}}
                       .dump()
                << '\n';
        }
    }
    return summary;
}

}  // namespace quasik
