#include <sstream>

#include "json.hpp"
#include "trd/verify.hpp"

namespace trd {

namespace {

using Json = nlohmann::ordered_json;

Json source_json(const UniverseSource& source) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, universe::AllLabeled>) {
          j["kind"] = "all_labeled";
          j["min_n"] = s.min_n;
          j["max_n"] = s.max_n;
          j["connected_only"] = s.connected_only;
          j["no_isolated"] = s.no_isolated;
        } else if constexpr (std::is_same_v<T, universe::Families>) {
          j["kind"] = "families";
          Json members = Json::array();
          for (const auto& m : s.members) members.push_back(to_string(m));
          j["members"] = std::move(members);
        } else if constexpr (std::is_same_v<T, universe::RandomGnp>) {
          j["kind"] = "random_gnp";
          j["count"] = s.count;
          j["n"] = s.n;
          j["p"] = s.p;
          j["seed"] = s.seed;
        } else {
          j["kind"] = "graph_list";
          j["label"] = s.label;
          j["count"] = s.graphs.size();
        }
        return j;
      },
      source);
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  Json sources = Json::array();
  for (const auto& s : r.universe.sources) sources.push_back(source_json(s));
  j["universe"] = std::move(sources);
  j["instances_checked"] = r.instances_checked;
  j["outcome"] = std::string(to_string(r.outcome));
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) {
    Json item;
    item["graph6"] = c.graph6;
    item["detail"] = c.detail;
    ces.push_back(std::move(item));
  }
  j["counterexamples"] = std::move(ces);
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) { return report_json(report).dump(indent); }

std::string to_json(const std::vector<VerificationReport>& reports, int indent) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

std::string to_tsv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "theorem_id\toutcome\tinstances_checked\tcounterexamples\n";
  for (const auto& r : reports) {
    os << r.theorem_id << '\t' << to_string(r.outcome) << '\t' << r.instances_checked << '\t';
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) os << (i ? "," : "") << r.counterexamples[i].graph6;
    os << '\n';
  }
  return os.str();
}

std::string describe(const InstanceUniverse& universe) {
  Json sources = Json::array();
  for (const auto& s : universe.sources) sources.push_back(source_json(s));
  return sources.dump();
}

}  // namespace trd
