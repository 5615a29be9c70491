#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasik/connectivity.hpp"
#include "quasik/graph.hpp"

namespace quasik {

enum class Claim {
    theorem1,             // every 5-connected graph has a quasi 5-contractible edge
    theorem2,             // quasi 5-connected + degree sum >= 9 at distance <= 2
    lemma1,               // |N(x) n A| = 1 forces |A| = 2
    lemma2,               // delta(G/xy) >= 4 implies G/xy 4-connected
    lemma3,               // triangle in N(x), x of degree 4: xx4 quasi 5-contractible
    lemma4,               // 4-connected contraction-critical characterisation
    lemma5,               // no degree-4 vertex with independent neighbourhood
    degree_condition_A,   // delta >= floor(5k/4)
    degree_condition_BC,  // degree sums >= 2 floor(5k/4) - 1
};

std::string_view to_string(Claim c);
/// Throws std::invalid_argument for unknown names.
Claim parse_claim(std::string_view name);
const std::vector<Claim>& all_claims();
bool is_lemma(Claim c);

enum class Verdict { verified, vacuous, falsified, inconclusive, timeout };

std::string_view to_string(Verdict v);

class TimeoutError : public std::runtime_error {
public:
    TimeoutError() : std::runtime_error("time budget exhausted") {}
};

/// Cooperative per-(graph, claim) time budget. Default-constructed means none.
class Deadline {
public:
    Deadline() = default;
    static Deadline after(std::chrono::duration<double> budget);

    bool expired() const;
    /// Throws TimeoutError once expired.
    void check() const;

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

struct VerifyOptions {
    /// Enumerate every candidate cut regardless of graph size; also unlocks
    /// the lemma5 criticality search above 16 vertices.
    bool force_exhaustive = false;
    /// Connectivity parameter for the degree-condition claims; kappa(G) if unset.
    std::optional<int> k;
    Deadline deadline;
};

struct VerificationReport {
    std::string graph_id;
    Claim claim = Claim::theorem1;
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
    /// Witness edge, fragment or cut; a counterexample certificate when the
    /// conclusion fails. null when there is nothing to show.
    nlohmann::json witness;
    std::string note;
    /// Number of hypothesis configurations the conclusion was checked on.
    std::size_t configurations = 0;
    EnumerationMode mode = EnumerationMode::exhaustive;
    bool inconclusive = false;
    bool timed_out = false;
    std::chrono::microseconds elapsed{0};

    /// Falsified only when the hypotheses hold, the conclusion fails and the
    /// enumeration behind it was exhaustive.
    Verdict verdict() const;
};

/// One JSON object per report. Timing is left out unless asked for, so that
/// repeated runs produce identical bytes.
nlohmann::json report_to_json(const VerificationReport& r, const Graph& g, bool include_timing = false);

VerificationReport verify_theorem1(const Graph& g, const VerifyOptions& opts = {});
VerificationReport verify_theorem2(const Graph& g, const VerifyOptions& opts = {});
/// which must be one of lemma1..lemma5; std::invalid_argument otherwise.
VerificationReport verify_lemma(const Graph& g, Claim which, const VerifyOptions& opts = {});
VerificationReport verify_degree_condition_A(const Graph& g, const VerifyOptions& opts = {});
VerificationReport verify_degree_condition_BC(const Graph& g, const VerifyOptions& opts = {});

/// Dispatches on the claim, fills graph_id and elapsed, and turns an expired
/// deadline into a timeout report.
VerificationReport verify_claim(const Graph& g, Claim claim, const VerifyOptions& opts = {},
                                const std::string& graph_id = {});

}  // namespace quasik
