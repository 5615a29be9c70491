#include "quasik/serialize.hpp"

namespace quasik {

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }

void to_json(nlohmann::json& j, const Cut& c) {
    j = nlohmann::json{{"vertices", c.vertices}, {"components", c.components}, {"nontrivial", c.nontrivial}};
    if (c.bipartition) {
        j["bipartition"] = nlohmann::json::array({c.bipartition->first, c.bipartition->second});
    } else {
        j["bipartition"] = nullptr;
    }
}

void to_json(nlohmann::json& j, const Fragment& f) {
    j = nlohmann::json{{"body", f.body},
                       {"boundary", f.boundary},
                       {"complement", f.complement},
                       {"kind", to_string(f.kind)},
                       {"source_cut", f.source_cut}};
}

void to_json(nlohmann::json& j, const ContractionReport& r) {
    j = nlohmann::json{{"edge", r.edge},
                       {"k", r.k},
                       {"kappa_after", r.kappa_after},
                       {"k_contractible", r.k_contractible},
                       {"quasi_k_contractible", r.quasi_k_contractible},
                       {"in_E0", r.in_E0},
                       {"enumeration_mode", to_string(r.mode)}};
    if (r.refuting_cut) {
        j["refuting_cut"] = *r.refuting_cut;
        j["refuting_preimage"] = r.refuting_preimage;
    } else {
        j["refuting_cut"] = nullptr;
        j["refuting_preimage"] = nullptr;
    }
}

void to_json(nlohmann::json& j, const Pattern4& p) {
    j = nlohmann::json{{"tag", to_string(p.tag)}, {"roles", p.roles}};
}

}  // namespace quasik
