#include "quasik/verification.hpp"

#include <algorithm>
#include <map>

#include "quasik/contractibility.hpp"
#include "quasik/degree_conditions.hpp"
#include "quasik/fragments.hpp"
#include "quasik/graph_io.hpp"
#include "quasik/serialize.hpp"

namespace quasik {

namespace {

constexpr std::pair<Claim, std::string_view> kClaims[] = {
    {Claim::theorem1, "theorem1"},
    {Claim::theorem2, "theorem2"},
    {Claim::lemma1, "lemma1"},
    {Claim::lemma2, "lemma2"},
    {Claim::lemma3, "lemma3"},
    {Claim::lemma4, "lemma4"},
    {Claim::lemma5, "lemma5"},
    {Claim::degree_condition_A, "degree_condition_A"},
    {Claim::degree_condition_BC, "degree_condition_BC"},
};

void merge_mode(VerificationReport& r, EnumerationMode m) {
    if (m == EnumerationMode::flow_limited) r.mode = m;
}

VerificationReport vacuous(Claim claim, std::string note, nlohmann::json witness = nullptr) {
    VerificationReport r;
    r.claim = claim;
    r.note = std::move(note);
    r.witness = std::move(witness);
    return r;
}

nlohmann::json refutation(const ContractionReport& cr) {
    return {{"edge", cr.edge}, {"kappa_after", cr.kappa_after}, {"refuting_preimage", cr.refuting_preimage}};
}

// Scans edges in sorted order for a quasi 5-contractible one.
void scan_for_quasi_contractible(const Graph& g, const VerifyOptions& opts, VerificationReport& r) {
    nlohmann::json refutations = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        opts.deadline.check();
        ++r.configurations;
        const auto cr = is_quasi_k_contractible(g, e, 5, false, opts.force_exhaustive);
        merge_mode(r, cr.mode);
        if (cr.quasi_k_contractible) {
            r.conclusion_holds = true;
            r.witness = {{"edge", e}, {"kappa_after", cr.kappa_after}};
            return;
        }
        refutations.push_back(refutation(cr));
    }
    r.conclusion_holds = false;
    r.witness = {{"refutations", std::move(refutations)}};
}

// First quasi 5-contractible edge, if any.
std::optional<Edge> first_quasi_contractible(const Graph& g, const VerifyOptions& opts, VerificationReport& r) {
    for (const auto& e : g.edges()) {
        opts.deadline.check();
        const auto cr = is_quasi_k_contractible(g, e, 5, false, opts.force_exhaustive);
        merge_mode(r, cr.mode);
        if (cr.quasi_k_contractible) return e;
    }
    return std::nullopt;
}

VerificationReport lemma1(const Graph& g, const VerifyOptions& opts) {
    const int kappa = vertex_connectivity(g);
    if (kappa < 5) return vacuous(Claim::lemma1, "not 5-connected (kappa=" + std::to_string(kappa) + ")");
    VerificationReport r;
    r.claim = Claim::lemma1;
    if (auto e = first_quasi_contractible(g, opts, r)) {
        r.note = "not contraction critical quasi 5-connected";
        r.witness = {{"quasi_contractible_edge", *e}};
        return r;
    }
    merge_mode(r, enumeration_mode_for(g, kappa, opts.force_exhaustive));
    r.conclusion_holds = true;
    for_each_separator(
        g, kappa,
        [&](std::span<const Vertex> t) {
            opts.deadline.check();
            for (const auto& f : fragments_of_cut(g, make_cut(g, t))) {
                if (f.kind != FragmentKind::nontrivial) continue;
                for (Vertex x : f.boundary) {
                    const auto& nx = g.neighbors(x);
                    const auto hits = std::count_if(nx.begin(), nx.end(), [&](Vertex w) {
                        return std::binary_search(f.body.begin(), f.body.end(), w);
                    });
                    if (hits != 1) continue;
                    ++r.configurations;
                    if (f.body.size() != 2) {
                        r.conclusion_holds = false;
                        r.witness = {{"fragment", f}, {"x", x}};
                        return false;
                    }
                }
            }
            return true;
        },
        opts.force_exhaustive);
    r.hypotheses_hold = r.configurations > 0;
    if (!r.hypotheses_hold) r.note = "no fragment with a single-neighbour boundary vertex";
    return r;
}

VerificationReport lemma2(const Graph& g, const VerifyOptions& opts) {
    const auto q = is_quasi_k_connected(g, 5, opts.force_exhaustive);
    if (!q) return vacuous(Claim::lemma2, "not quasi 5-connected");
    VerificationReport r;
    r.claim = Claim::lemma2;
    merge_mode(r, q.mode);
    r.conclusion_holds = true;
    for (const auto& e : g.edges()) {
        opts.deadline.check();
        const auto c = contract_edge(g, e);
        if (c.graph.min_degree() < 4) continue;
        ++r.configurations;
        const int kappa = vertex_connectivity(c.graph);
        if (kappa < 4) {
            r.conclusion_holds = false;
            const auto cut = minimum_cut(c.graph);
            r.witness = {{"edge", e}, {"kappa_after", kappa}};
            if (cut) r.witness["refuting_preimage"] = c.preimage(cut->vertices);
            break;
        }
    }
    r.hypotheses_hold = r.configurations > 0;
    if (!r.hypotheses_hold) r.note = "no edge with delta(G/e) >= 4";
    return r;
}

VerificationReport lemma3(const Graph& g, const VerifyOptions& opts) {
    if (g.order() < 8) return vacuous(Claim::lemma3, "fewer than 8 vertices");
    const auto q = is_quasi_k_connected(g, 5, opts.force_exhaustive);
    if (!q) return vacuous(Claim::lemma3, "not quasi 5-connected");
    VerificationReport r;
    r.claim = Claim::lemma3;
    merge_mode(r, q.mode);
    r.conclusion_holds = true;
    std::map<Edge, ContractionReport> cache;
    for (Vertex x : g.vertices_of_degree(4)) {
        const auto& nx = g.neighbors(x);
        for (int skip = 3; skip >= 0; --skip) {
            std::vector<Vertex> tri;
            for (int i = 0; i < 4; ++i) {
                if (i != skip) tri.push_back(nx[i]);
            }
            if (!g.has_edge(tri[0], tri[1]) || !g.has_edge(tri[0], tri[2]) || !g.has_edge(tri[1], tri[2])) continue;
            opts.deadline.check();
            ++r.configurations;
            const Edge e(x, nx[skip]);
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, is_quasi_k_contractible(g, e, 5, false, opts.force_exhaustive)).first;
            merge_mode(r, it->second.mode);
            if (!it->second.quasi_k_contractible) {
                r.conclusion_holds = false;
                r.witness = {{"x", x}, {"triangle", tri}, {"x4", nx[skip]}, {"report", it->second}};
                return r;
            }
        }
    }
    r.hypotheses_hold = r.configurations > 0;
    if (!r.hypotheses_hold) r.note = "no degree-4 vertex with a triangle in its neighbourhood";
    return r;
}

VerificationReport lemma4(const Graph& g, const VerifyOptions& opts) {
    if (g.order() == 0 || vertex_connectivity(g) < 4) return vacuous(Claim::lemma4, "not 4-connected");
    opts.deadline.check();
    VerificationReport r;
    r.claim = Claim::lemma4;
    r.hypotheses_hold = true;
    r.configurations = 1;
    const auto m = check_martinov(g);
    r.conclusion_holds = m.is_critical == m.is_regular_triangular;
    r.witness = {{"is_critical", m.is_critical}, {"is_regular_triangular", m.is_regular_triangular}};
    if (!m.is_critical) {
        for (const auto& e : g.edges()) {
            if (is_k_contractible(g, e, 4)) {
                r.witness["contractible_edge"] = e;
                break;
            }
        }
    }
    return r;
}

VerificationReport lemma5(const Graph& g, const VerifyOptions& opts) {
    const auto q = is_quasi_k_connected(g, 5, opts.force_exhaustive);
    if (!q) return vacuous(Claim::lemma5, "not quasi 5-connected");
    const auto ds = check_degree_sum_condition(g, 9, 2);
    if (!ds) {
        return vacuous(Claim::lemma5, "degree-sum condition fails",
                       {{"violating_pair", {ds.violation->first, ds.violation->second}}});
    }
    VerificationReport r;
    r.claim = Claim::lemma5;
    merge_mode(r, q.mode);
    if (!opts.force_exhaustive && g.order() > 16) {
        r.inconclusive = true;
        r.note = "criticality search above 16 vertices needs exhaustive mode";
        return r;
    }
    if (auto e = first_quasi_contractible(g, opts, r)) {
        r.note = "not contraction critical quasi 5-connected";
        r.witness = {{"quasi_contractible_edge", *e}};
        return r;
    }
    r.conclusion_holds = true;
    for (Vertex x : g.vertices_of_degree(4)) {
        ++r.configurations;
        const auto p = classify_neighborhood(g, x);
        if (p.tag == Pattern4Tag::Empty) {
            r.conclusion_holds = false;
            r.witness = {{"x", x}, {"pattern", p}};
            break;
        }
    }
    r.hypotheses_hold = r.configurations > 0;
    if (!r.hypotheses_hold) r.note = "no vertex of degree four";
    return r;
}

int resolve_k(const Graph& g, const VerifyOptions& opts) {
    return opts.k ? *opts.k : vertex_connectivity(g);
}

void scan_for_k_contractible(const Graph& g, int k, const VerifyOptions& opts, VerificationReport& r) {
    for (const auto& e : g.edges()) {
        opts.deadline.check();
        ++r.configurations;
        if (is_k_contractible(g, e, k)) {
            r.conclusion_holds = true;
            r.witness["edge"] = e;
            return;
        }
    }
    r.conclusion_holds = false;
}

}  // namespace

std::string_view to_string(Claim c) {
    for (auto [claim, name] : kClaims) {
        if (claim == c) return name;
    }
    return "?";
}

Claim parse_claim(std::string_view name) {
    for (auto [claim, n] : kClaims) {
        if (n == name) return claim;
    }
    throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

const std::vector<Claim>& all_claims() {
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> out;
        for (auto [claim, name] : kClaims) out.push_back(claim);
        return out;
    }();
    return claims;
}

bool is_lemma(Claim c) {
    return c == Claim::lemma1 || c == Claim::lemma2 || c == Claim::lemma3 || c == Claim::lemma4 || c == Claim::lemma5;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::vacuous: return "vacuous";
        case Verdict::falsified: return "falsified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::timeout: return "timeout";
    }
    return "?";
}

Deadline Deadline::after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    return d;
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

void Deadline::check() const {
    if (expired()) throw TimeoutError();
}

Verdict VerificationReport::verdict() const {
    if (timed_out) return Verdict::timeout;
    if (inconclusive) return Verdict::inconclusive;
    if (!hypotheses_hold) return Verdict::vacuous;
    if (conclusion_holds) return Verdict::verified;
    return mode == EnumerationMode::exhaustive ? Verdict::falsified : Verdict::inconclusive;
}

nlohmann::json report_to_json(const VerificationReport& r, const Graph& g, bool include_timing) {
    nlohmann::json j{{"graph_id", r.graph_id},
                     {"n", g.order()},
                     {"m", g.size()},
                     {"graph6", to_graph6(g)},
                     {"claim", to_string(r.claim)},
                     {"verdict", to_string(r.verdict())},
                     {"hypotheses_hold", r.hypotheses_hold},
                     {"enumeration_mode", to_string(r.mode)},
                     {"configurations", r.configurations},
                     {"witness", r.witness},
                     {"note", r.note}};
    if (r.timed_out || r.inconclusive) {
        j["conclusion_holds"] = nullptr;
    } else if (!r.hypotheses_hold) {
        j["conclusion_holds"] = "vacuous";
    } else {
        j["conclusion_holds"] = r.conclusion_holds;
    }
    if (include_timing) j["elapsed_ms"] = static_cast<double>(r.elapsed.count()) / 1000.0;
    return j;
}

VerificationReport verify_theorem1(const Graph& g, const VerifyOptions& opts) {
    const int kappa = g.order() == 0 ? 0 : vertex_connectivity(g);
    if (kappa < 5) return vacuous(Claim::theorem1, "not 5-connected (kappa=" + std::to_string(kappa) + ")");
    VerificationReport r;
    r.claim = Claim::theorem1;
    r.hypotheses_hold = true;
    scan_for_quasi_contractible(g, opts, r);
    return r;
}

VerificationReport verify_theorem2(const Graph& g, const VerifyOptions& opts) {
    if (g.order() == 0) return vacuous(Claim::theorem2, "empty graph");
    const auto q = is_quasi_k_connected(g, 5, opts.force_exhaustive);
    if (!q) {
        nlohmann::json w = nullptr;
        if (q.witness) w = {{"cut", *q.witness}};
        return vacuous(Claim::theorem2, "not quasi 5-connected (" + std::string(to_string(q.failure)) + ")", std::move(w));
    }
    const auto ds = check_degree_sum_condition(g, 9, 2);
    if (!ds) {
        return vacuous(Claim::theorem2, "degree-sum condition fails",
                       {{"violating_pair", {ds.violation->first, ds.violation->second}}});
    }
    VerificationReport r;
    r.claim = Claim::theorem2;
    r.hypotheses_hold = true;
    merge_mode(r, q.mode);
    scan_for_quasi_contractible(g, opts, r);
    return r;
}

VerificationReport verify_lemma(const Graph& g, Claim which, const VerifyOptions& opts) {
    if (g.order() == 0) return vacuous(which, "empty graph");
    switch (which) {
        case Claim::lemma1: return lemma1(g, opts);
        case Claim::lemma2: return lemma2(g, opts);
        case Claim::lemma3: return lemma3(g, opts);
        case Claim::lemma4: return lemma4(g, opts);
        case Claim::lemma5: return lemma5(g, opts);
        default: throw std::invalid_argument("unknown lemma '" + std::string(to_string(which)) + "'");
    }
}

VerificationReport verify_degree_condition_A(const Graph& g, const VerifyOptions& opts) {
    if (g.order() == 0) return vacuous(Claim::degree_condition_A, "empty graph");
    const int k = resolve_k(g, opts);
    if (k < 2) return vacuous(Claim::degree_condition_A, "k < 2");
    if (g.is_complete()) return vacuous(Claim::degree_condition_A, "complete graph");
    if (vertex_connectivity(g) < k) return vacuous(Claim::degree_condition_A, "not k-connected");
    if (!check_min_degree_condition(g, k)) {
        return vacuous(Claim::degree_condition_A, "minimum degree below floor(5k/4)", {{"k", k}});
    }
    VerificationReport r;
    r.claim = Claim::degree_condition_A;
    r.hypotheses_hold = true;
    r.witness = {{"k", k}};
    scan_for_k_contractible(g, k, opts, r);
    return r;
}

VerificationReport verify_degree_condition_BC(const Graph& g, const VerifyOptions& opts) {
    if (g.order() == 0) return vacuous(Claim::degree_condition_BC, "empty graph");
    const int k = resolve_k(g, opts);
    if (k < 2) return vacuous(Claim::degree_condition_BC, "k < 2");
    if (g.is_complete()) return vacuous(Claim::degree_condition_BC, "complete graph");
    if (vertex_connectivity(g) < k) return vacuous(Claim::degree_condition_BC, "not k-connected");
    const int bound = 2 * five_quarters_floor(k) - 1;
    // Distance <= 2 form excludes k = 7; the adjacent-only form needs k >= 8.
    const bool distance_two = k != 7 && check_degree_sum_condition(g, bound, 2).holds;
    const bool adjacent = k >= 8 && check_degree_sum_condition(g, bound, 1).holds;
    if (!distance_two && !adjacent) {
        return vacuous(Claim::degree_condition_BC, "degree-sum bound not met", {{"k", k}, {"bound", bound}});
    }
    VerificationReport r;
    r.claim = Claim::degree_condition_BC;
    r.hypotheses_hold = true;
    r.witness = {{"k", k}, {"bound", bound}, {"form", distance_two ? "distance-two" : "adjacent"}};
    scan_for_k_contractible(g, k, opts, r);
    return r;
}

VerificationReport verify_claim(const Graph& g, Claim claim, const VerifyOptions& opts, const std::string& graph_id) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    try {
        switch (claim) {
            case Claim::theorem1: r = verify_theorem1(g, opts); break;
            case Claim::theorem2: r = verify_theorem2(g, opts); break;
            case Claim::degree_condition_A: r = verify_degree_condition_A(g, opts); break;
            case Claim::degree_condition_BC: r = verify_degree_condition_BC(g, opts); break;
            default: r = verify_lemma(g, claim, opts); break;
        }
    } catch (const TimeoutError&) {
        r = VerificationReport{};
        r.claim = claim;
        r.timed_out = true;
        r.note = "time budget exhausted";
    }
    r.graph_id = graph_id;
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

}  // namespace quasik
