#include "csep/report.hpp"

namespace csep {

namespace {

const char* to_string(RamseyMode mode) { return mode == RamseyMode::tight ? "tight" : "paper"; }
const char* to_string(FamilyMode mode) { return mode == FamilyMode::pruned ? "pruned" : "faithful"; }
const char* to_string(PairMode mode) { return mode == PairMode::all ? "all" : "maximal-seeded"; }

}  // namespace

Json to_json(const VertexSet& set) { return Json(set.members()); }

Json to_json(const Embedding& embedding) {
  Json out = Json::object();
  for (const auto& [name, hosts] : embedding.blocks) out[name] = hosts;
  return out;
}

Json to_json(const FamilyOptions& options) {
  return Json{{"ramsey_mode", to_string(options.ramsey)},
              {"family_mode", to_string(options.mode)},
              {"allow_empty_s2", options.allow_empty_s2},
              {"singleton_neighborhoods", options.singleton_neighborhoods},
              {"budget", options.budget}};
}

Json to_json(const SeparatorFamily& family) {
  const auto& c = family.counts();
  const int n = family.order();
  const int p = family.p();
  const int q = family.q();

  Json bounds = {
      {"p1_raw", c.p1_raw},
      {"p1_expected_raw", p1_raw_count(n, p)},
      {"p1_bound", "2*n^p"},
      {"p1_within_bound", p1_bound_holds(n, p, c.p1_raw)},
  };
  if (q >= 1) {
    const auto faithful = faithful_triple_count(n, p, family.ramsey_value(), family.options().allow_empty_s2);
    bounds["p2_raw"] = c.p2_raw;
    bounds["p2_bound"] = "n^(2p+2^(2q))";
    bounds["p2_within_bound"] = p2_bound_holds(n, p, q, c.p2_raw);
    bounds["faithful_triples"] = faithful;
    bounds["faithful_within_bound"] = p2_bound_holds(n, p, q, faithful);
  }

  Json partitions = Json::array();
  for (const auto& entry : family.entries()) {
    Json item = {{"x", to_json(entry.partition.x_side())}, {"source", std::string(to_string(entry.provenance.source))}};
    if (entry.provenance.triple) {
      item["k1"] = to_json(entry.provenance.triple->k1);
      item["s1"] = to_json(entry.provenance.triple->s1);
      item["s2"] = to_json(entry.provenance.triple->s2);
    } else {
      item["generator"] = to_json(entry.provenance.generator);
    }
    if (entry.provenance.swapped) item["swapped"] = true;
    partitions.push_back(std::move(item));
  }

  return Json{{"n", n},
              {"p", p},
              {"q", q},
              {"R", family.ramsey_value()},
              {"options", to_json(family.options())},
              {"counts",
               {{"p1_raw", c.p1_raw},
                {"p1_unique", c.p1_unique},
                {"singleton_raw", c.singleton_raw},
                {"p2_raw", c.p2_raw},
                {"p2_unique", c.p2_unique},
                {"total_raw", c.total_raw},
                {"total_unique", family.size()}}},
              {"bounds", bounds},
              {"partitions", partitions}};
}

Json to_json(const WitnessReport& report) {
  const auto& t = report.trace;
  Json trace = {{"K_max", to_json(t.k_max)}, {"S_max", to_json(t.s_max)}};
  if (t.v) trace["v"] = *t.v;
  if (report.branch != SeparatorBranch::intersection_p1) {
    trace["S1_cover"] = to_json(t.s1_cover);
    trace["K1_cover"] = to_json(t.k1_cover);
  }
  if (report.branch == SeparatorBranch::triple_p2) {
    trace["K1"] = to_json(t.k1);
    trace["S1"] = to_json(t.s1);
    trace["Z"] = to_json(t.z);
    trace["SC"] = to_json(t.sc);
    trace["S2"] = to_json(t.s2);
    trace["W"] = to_json(t.w);
  }
  return Json{{"branch", std::string(to_string(report.branch))},
              {"x", to_json(report.partition.x_side())},
              {"y", to_json(report.partition.y_side())},
              {"source", std::string(to_string(report.provenance.source))},
              {"R", report.ramsey_value},
              {"class_member", report.class_member},
              {"s2_within_bound", report.s2_within_bound},
              {"trace", trace}};
}

Json to_json(const CoverageReport& report) {
  Json uncovered = Json::array();
  for (const auto& pair : report.uncovered)
    uncovered.push_back({{"clique", to_json(pair.clique)}, {"stable", to_json(pair.stable)}});
  return Json{{"n", report.n},
              {"p", report.p},
              {"q", report.q},
              {"R", report.ramsey_value},
              {"family_size", report.family_size},
              {"mode", to_string(report.mode)},
              {"class_member", report.class_member},
              {"pairs_checked", report.pairs_checked},
              {"uncovered_count", report.uncovered.size()},
              {"uncovered", uncovered},
              {"witness_runs", report.witness_runs},
              {"witness_agreements", report.witness_agreements},
              {"witness_agreement", report.witness_agreement()},
              {"witness_failures", report.witness_failures}};
}

}  // namespace csep
