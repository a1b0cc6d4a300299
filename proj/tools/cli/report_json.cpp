#include "cli/report_json.hpp"

namespace ctsum::cli {
namespace {

using json = nlohmann::ordered_json;

json check_to_json(const CheckOutcome& c) {
  json entry;
  json params = json::object();
  for (const auto& [key, value] : c.params) {
    std::visit([&params, &key](const auto& v) { params[key] = v; }, value);
  }
  entry["params"] = std::move(params);
  entry["pass"] = c.pass;
  if (c.witness) {
    json w;
    w["lhs"] = c.witness->lhs.to_fraction_string();
    w["rhs"] = c.witness->rhs.to_fraction_string();
    if (c.witness->delta) w["delta"] = c.witness->delta->to_fraction_string();
    entry["witness"] = std::move(w);
  }
  if (!c.error.empty()) entry["error"] = c.error;
  return entry;
}

}  // namespace

json report_to_json(const std::vector<VerificationReport>& reports, std::chrono::milliseconds timing) {
  json root;
  json identities = json::array();
  int failures = 0;
  for (const auto& r : reports) {
    json item;
    item["id"] = r.id;
    item["n_max"] = r.n_max;
    json levels = json::object();
    for (const auto& l : r.levels) {
      json checks = json::array();
      for (const auto& c : l.checks) checks.push_back(check_to_json(c));
      levels[to_string(l.level)] = std::move(checks);
    }
    item["levels"] = std::move(levels);
    if (r.sigma) item["sigma"] = *r.sigma;
    identities.push_back(std::move(item));
    failures += r.failures();
  }
  root["identities"] = std::move(identities);
  root["summary"] = {{"pass", failures == 0}, {"failures", failures}};
  root["timing_ms"] = timing.count();
  return root;
}

}  // namespace ctsum::cli
