#pragma once

#include <json.hpp>

#include "quasik/connectivity.hpp"
#include "quasik/contractibility.hpp"
#include "quasik/fragments.hpp"
#include "quasik/graph.hpp"

// nlohmann::json conversions. Vertex lists are always emitted sorted.
namespace quasik {

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const Cut& c);
void to_json(nlohmann::json& j, const Fragment& f);
void to_json(nlohmann::json& j, const ContractionReport& r);
void to_json(nlohmann::json& j, const Pattern4& p);

}  // namespace quasik
