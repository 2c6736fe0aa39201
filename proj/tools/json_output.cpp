#include "json_output.hpp"

namespace scenopt::cli {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& value) {
  return value ? to_json(*value) : json(nullptr);
}

}  // namespace

json to_json(const ScpSolution& s) {
  json j{{"status", to_string(s.status)},
         {"scenarios", s.scenario_count},
         {"seed", s.scenario_seed},
         {"gamma", s.gamma}};
  if (s.optimal()) {
    j["J_star"] = s.value;
    j["x_star"] = s.x;
    j["dual_l1"] = s.dual_l1;
  } else {
    j["J_star"] = nullptr;
    j["x_star"] = nullptr;
    j["dual_l1"] = nullptr;
  }
  return j;
}

json to_json(const IntervalBound& b) { return json{{"width", b.width}, {"branch", to_string(b.branch)}}; }

json to_json(const ConfidenceReport& r) {
  json j{{"kind", to_string(r.kind)},
         {"interval", {r.lo, r.hi}},
         {"eps", r.eps},
         {"beta", r.beta},
         {"samples_used", r.samples_used},
         {"scenario_value", r.scenario_value},
         {"bound", to_json(r.bound)},
         {"guaranteed", r.guaranteed},
         {"notes", r.notes}};
  j["samples_required"] = r.samples_required ? json(*r.samples_required) : json(nullptr);
  return j;
}

json to_json(const SpSolution& s) {
  json members = json::array();
  for (const auto& m : s.per_member) members.push_back(to_json(m));
  json j{{"feasible", s.feasible()}, {"members", members}};
  if (s.feasible()) {
    j["winner"] = *s.winner;
    j["J_star"] = s.value;
    j["x_star"] = s.x;
  } else {
    j["winner"] = nullptr;
    j["J_star"] = nullptr;
    j["x_star"] = nullptr;
  }
  return j;
}

json to_json(const UnionReport& r) {
  json apriori = json::array();
  json aposteriori = json::array();
  for (const auto& b : r.member_apriori) apriori.push_back(optional_json(b));
  for (const auto& b : r.member_aposteriori) aposteriori.push_back(optional_json(b));
  return json{{"samples_required", r.samples_required},
              {"heterogeneous_eps", r.heterogeneous_eps},
              {"partial", r.partial},
              {"rcp_apriori", optional_json(r.rcp_apriori)},
              {"ccp_apriori", optional_json(r.ccp_apriori)},
              {"ccp_aposteriori", optional_json(r.ccp_aposteriori)},
              {"member_apriori", apriori},
              {"member_aposteriori", aposteriori},
              {"notes", r.notes}};
}

}  // namespace scenopt::cli
