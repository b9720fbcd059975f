#pragma once

// Text and JSON renderings of analysis reports and scan results. Field order
// is fixed; see docs/report-schema.md. Points are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quandle/conjecture.hpp"
#include "quandle/constructors.hpp"
#include "quandle/rack.hpp"

namespace quandle {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json points_json(const std::vector<Point>& pts) {
  ordered_json a = ordered_json::array();
  for (Point p : pts) a.push_back(p + 1);
  return a;
}

inline ordered_json cells_json(const std::vector<std::vector<Point>>& cells) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cells) a.push_back(points_json(c));
  return a;
}

inline ordered_json profile_json(const CycleType& ct) {
  ordered_json a = ordered_json::array();
  for (auto [len, mult] : ct.parts) a.push_back({{"length", len}, {"multiplicity", mult}});
  return a;
}

inline std::string cells_text(const std::vector<std::vector<Point>>& cells) {
  std::string s;
  for (const auto& c : cells) {
    if (!s.empty()) s += ' ';
    s += '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += '}';
  }
  return s;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline ordered_json to_json(const AnalysisReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["kind"] = to_string(r.kind);
  j["connected"] = r.connected ? ordered_json(*r.connected) : ordered_json(nullptr);
  j["faithful"] = r.faithful ? ordered_json(*r.faithful) : ordered_json(nullptr);
  j["f"] = r.f ? ordered_json(*r.f) : ordered_json(nullptr);
  j["profile"] = r.profile ? detail::profile_json(r.profile->cycle_type) : ordered_json(nullptr);
  j["primitive"] = r.primitive ? ordered_json(*r.primitive) : ordered_json(nullptr);
  j["block_witness"] = r.block_witness ? detail::cells_json(r.block_witness->cells) : ordered_json(nullptr);
  if (r.hayashi) {
    ordered_json v = ordered_json::array();
    for (auto [s, t] : r.hayashi->violations) v.push_back({s, t});
    j["hayashi"] = {{"holds", r.hayashi->holds}, {"violations", v}};
  } else {
    j["hayashi"] = nullptr;
  }
  if (r.prop_re) {
    ordered_json w = ordered_json::array();
    for (const auto& e : r.prop_re->witnesses) w.push_back({{"y", e.y + 1}, {"intersection_order", e.intersection_order}});
    ordered_json pr;
    pr["base_x"] = r.prop_re->base_x + 1;
    pr["f_order"] = r.prop_re->f_order;
    pr["h_order"] = r.prop_re->h_order;
    pr["trivial_witness"] =
        r.prop_re->trivial_witness ? ordered_json(*r.prop_re->trivial_witness + 1) : ordered_json(nullptr);
    pr["witnesses"] = w;
    if (r.prop_re_check) {
      pr["forward_ok"] = r.prop_re_check->forward_ok;
      pr["converse_ok"] = r.prop_re_check->converse_ok;
      pr["converse_applicable"] = r.prop_re_check->converse_applicable;
    }
    j["prop_re"] = pr;
  } else {
    j["prop_re"] = nullptr;
  }
  j["axiom_violations"] = r.violations;
  j["axiom_witnesses"] = r.witnesses;
  j["fiber_count"] = r.fiber_count;
  j["center_trivial"] = r.center_trivial ? ordered_json(*r.center_trivial) : ordered_json(nullptr);
  j["theorem_prim"] = r.theorem_prim ? ordered_json(to_string(*r.theorem_prim)) : ordered_json(nullptr);
  j["lambda0_above_one"] = r.lambda0_above_one;
  j["beta_bijective"] = r.beta_bijective ? ordered_json(*r.beta_bijective) : ordered_json(nullptr);
  ordered_json lp = ordered_json::array();
  for (const auto& p : r.lambda_parts) lp.push_back({{"k", p.k}, {"size", p.size}, {"count_per_element", p.expected_count}});
  j["lambda_parts"] = lp;
  ordered_json kt = ordered_json::array();
  for (const auto& d : r.k_tilde) {
    kt.push_back({{"k", d.k}, {"forms_partition", d.forms_partition}, {"is_block", d.is_block},
                  {"cells", detail::cells_json(d.cells)}});
  }
  j["k_tilde"] = kt;
  ordered_json sk = ordered_json::object();
  for (const auto& [f, why] : r.skipped) sk[f] = why;
  j["skipped"] = sk;
  return j;
}

inline std::string to_text(const AnalysisReport& r) {
  using detail::yes_no;
  std::string s;
  auto line = [&](const std::string& k, const std::string& v) { s += k + ": " + v + "\n"; };
  auto skipped = [&](const std::string& field) -> std::string {
    for (const auto& [f, why] : r.skipped) {
      if (f == field) return "skipped: " + why;
    }
    return "n/a";
  };
  line("n", std::to_string(r.n));
  line("kind", to_string(r.kind));
  if (r.violations) {
    line("axiom violations", std::to_string(r.violations));
    for (const auto& w : r.witnesses) s += "  " + w + "\n";
  }
  std::string connected = r.connected ? yes_no(*r.connected) : "n/a";
  if (r.beta_bijective) connected += *r.beta_bijective ? " (beta bijective)" : " (beta not bijective)";
  line("connected", connected);
  line("faithful", r.faithful ? yes_no(*r.faithful) : "n/a");
  line("f", r.f ? std::to_string(*r.f) : "n/a");
  std::string profile = r.profile ? r.profile->to_string() : "n/a";
  line("profile", profile);
  std::string primitive = r.primitive ? yes_no(*r.primitive) : r.connected == true ? skipped("primitive") : "n/a";
  line("primitive", primitive);
  if (r.block_witness) line("block witness", detail::cells_text(r.block_witness->cells));
  std::string hayashi = "n/a";
  if (r.hayashi) {
    hayashi = r.hayashi->holds ? "holds" : "fails";
    for (auto [a, b] : r.hayashi->violations) hayashi += " (" + std::to_string(a) + " does not divide " + std::to_string(b) + ")";
  }
  line("hayashi", hayashi);
  if (r.lambda0_above_one) line("note", "rack with lambda_0 > 1 (not a quandle)");
  if (r.prop_re) {
    std::string pr = "x=" + std::to_string(r.prop_re->base_x + 1) + " |F|=" + std::to_string(r.prop_re->f_order) +
                     " |H|=" + std::to_string(r.prop_re->h_order) + " trivial witness ";
    pr += r.prop_re->trivial_witness ? "y=" + std::to_string(*r.prop_re->trivial_witness + 1) : std::string("none");
    if (r.prop_re_check) {
      pr += std::string("; forward ") + (r.prop_re_check->forward_ok ? "ok" : "FAILED") + "; converse " +
            (!r.prop_re_check->converse_applicable ? "n/a" : r.prop_re_check->converse_ok ? "ok" : "FAILED");
    }
    line("prop-re", pr);
  } else {
    line("prop-re", r.connected == true ? skipped("prop_re") : "n/a");
  }
  if (r.center_trivial) line("center trivial", yes_no(*r.center_trivial));
  if (r.theorem_prim) line("primitive theorem", to_string(*r.theorem_prim));
  for (const auto& p : r.lambda_parts) {
    line("lambda-part " + std::to_string(p.k), "size " + std::to_string(p.size) + ", multiplicity " +
                                                    std::to_string(p.expected_count));
  }
  for (const auto& d : r.k_tilde) {
    std::string v = d.forms_partition ? std::string("partition ") + detail::cells_text(d.cells) +
                                            (d.is_block ? " (block system)" : " (not a block system)")
                                      : std::string("not a partition");
    line("k~-part " + std::to_string(d.k), v);
  }
  s += "summary: connected: " + connected + "; profile: " + profile + "; hayashi: " + hayashi +
       "; primitive: " + primitive + "\n";
  return s;
}

inline ordered_json to_json(const AxiomDiagnosis& d, std::size_t n) {
  ordered_json j;
  j["n"] = n;
  j["kind"] = to_string(d.verdict);
  j["violations"] = d.total_violations;
  ordered_json w = ordered_json::array();
  for (const auto& x : d.witnesses) {
    ordered_json t = ordered_json::array();
    for (Point p : x.tuple) t.push_back(p + 1);
    w.push_back({{"axiom", to_string(x.axiom)}, {"tuple", t}, {"missing", x.missing}, {"text", x.describe()}});
  }
  j["witnesses"] = w;
  return j;
}

inline std::string to_text(const AxiomDiagnosis& d, std::size_t n, std::size_t limit = report_witness_limit) {
  std::string s = std::string(to_string(d.verdict)) + ", n=" + std::to_string(n) + "\n";
  std::size_t shown = 0;
  for (const auto& w : d.witnesses) {
    if (shown++ >= limit) break;
    s += "  " + w.describe() + "\n";
  }
  if (d.total_violations > limit) {
    s += "  ... " + std::to_string(d.total_violations - limit) + " more violations\n";
  }
  return s;
}

inline ordered_json to_json(const SymCheckRecord& r) {
  ordered_json j;
  j["cycle_type"] = detail::profile_json(r.record.cycle_type);
  j["class_size"] = r.record.class_size;
  j["class_index"] = r.record.class_index;
  j["split"] = r.record.split;
  j["element_order"] = r.record.element_order;
  j["connected"] = r.record.connected;
  j["faithful"] = r.record.faithful;
  j["profile"] = r.record.profile ? detail::profile_json(r.record.profile->cycle_type) : ordered_json(nullptr);
  j["hayashi"] = r.hayashi ? ordered_json(r.hayashi->holds) : ordered_json(nullptr);
  j["trivial_witness"] = r.trivial_witness ? ordered_json(*r.trivial_witness + 1) : ordered_json(nullptr);
  return j;
}

}  // namespace quandle
