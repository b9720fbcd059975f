#pragma once

// Hayashi's divisibility conjecture: in the profile of a finite connected
// rack every cycle length divides the largest one. Verdicts, the
// centralizer-intersection reformulation, and harnesses for the primitive and
// symmetric-group cases.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle/analysis.hpp"
#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"
#include "quandle/perm.hpp"
#include "quandle/rack.hpp"

namespace quandle {

struct HayashiVerdict {
  bool holds = true;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (lambda_s, lambda_t)
};

inline HayashiVerdict hayashi_check(const Profile& p) {
  HayashiVerdict v;
  const std::size_t top = p.cycle_type.largest();
  for (auto [len, mult] : p.cycle_type.parts) {
    if (top % len != 0) v.violations.emplace_back(len, top);
  }
  v.holds = v.violations.empty();
  return v;
}

struct PropReWitness {
  Point y = 0;
  std::size_t intersection_order = 0;  // |<phi_x> ∩ phi_y H phi_y^-1|
};

struct PropReEvidence {
  Point base_x = 0;
  std::size_t f_order = 0;  // |<phi_x>|
  std::size_t h_order = 0;  // |C_Inn(phi_x)|
  std::vector<PropReWitness> witnesses;
  std::optional<Point> trivial_witness;  // least y with trivial intersection
};

// F = <phi_x>, H = centralizer of phi_x in Inn(X); for every y the order of
// F ∩ phi_y H phi_y^-1, by membership of phi_y^-1 f phi_y in H.
inline PropReEvidence prop_re_evidence(const RackTable& X, Point x,
                                       std::size_t cap = PermutationGroup::default_cap) {
  if (!is_connected(X)) throw PreconditionError("centralizer evidence needs a connected rack");
  if (x >= X.size()) throw PreconditionError("element out of range");
  auto inn = inner_group(X, cap);
  const auto phi_x = phi(X, x);
  auto H = centralizer(inn, phi_x);
  std::vector<Permutation> F{Permutation(X.size())};
  for (auto p = phi_x; !p.is_identity(); p = compose(phi_x, p)) F.push_back(p);

  PropReEvidence ev;
  ev.base_x = x;
  ev.f_order = F.size();
  ev.h_order = H.order();
  std::map<std::vector<Point>, std::size_t> cache;  // phi_y rows repeat across a fiber
  for (Point y = 0; y < X.size(); ++y) {
    auto row = X.row(y);
    std::vector<Point> key(row.begin(), row.end());
    auto it = cache.find(key);
    std::size_t count = 0;
    if (it != cache.end()) {
      count = it->second;
    } else {
      const auto py = phi(X, y);
      const auto py_inv = py.inverse();
      for (const auto& f : F) {
        if (H.contains(compose(py_inv, compose(f, py)))) ++count;
      }
      cache.emplace(std::move(key), count);
    }
    if (ev.f_order % count != 0) throw TheoremFalsified("intersection order does not divide |<phi_x>|");
    ev.witnesses.push_back({y, count});
    if (count == 1 && !ev.trivial_witness) ev.trivial_witness = y;
  }
  return ev;
}

struct PropReCrosscheck {
  bool hayashi = false;
  bool faithful = false;
  bool trivial_witness = false;
  bool forward_ok = false;   // trivial witness => Hayashi
  bool converse_ok = false;  // Hayashi and faithful => trivial witness
  bool converse_applicable = false;
};

inline PropReCrosscheck prop_re_crosscheck(const RackTable& X, Point x = 0,
                                           std::size_t cap = PermutationGroup::default_cap) {
  PropReCrosscheck c;
  auto ev = prop_re_evidence(X, x, cap);
  c.hayashi = hayashi_check(profile(X)).holds;
  c.faithful = is_faithful(X);
  c.trivial_witness = ev.trivial_witness.has_value();
  c.forward_ok = !c.trivial_witness || c.hayashi;
  c.converse_applicable = c.hayashi && c.faithful;
  c.converse_ok = !c.converse_applicable || c.trivial_witness;
  return c;
}

enum class PrimCheck { vacuous_imprimitive, holds };

inline const char* to_string(PrimCheck p) noexcept {
  return p == PrimCheck::holds ? "primitive, hayashi holds" : "imprimitive (vacuous)";
}

// Primitive inner action must imply Hayashi; a violation throws.
inline PrimCheck theorem_prim_check(const RackTable& X) {
  auto prim = inner_action_primitivity(X);
  if (!prim.primitive) return PrimCheck::vacuous_imprimitive;
  auto v = hayashi_check(profile(X));
  if (!v.holds) throw TheoremFalsified("primitive connected rack violating Hayashi divisibility");
  return PrimCheck::holds;
}

struct SymCheckRecord {
  ClassRecord record;
  std::optional<HayashiVerdict> hayashi;
  std::optional<Point> trivial_witness;  // connected classes only
};

namespace detail {

inline std::vector<SymCheckRecord> check_classes(std::vector<ScannedClass> classes, std::size_t cap) {
  std::vector<SymCheckRecord> out;
  for (auto& sc : classes) {
    SymCheckRecord r;
    r.record = std::move(sc.record);
    if (r.record.connected) {
      r.hayashi = hayashi_check(*r.record.profile);
      if (!r.hayashi->holds) {
        throw TheoremFalsified("connected class of type " + r.record.cycle_type.to_string() +
                               " violates Hayashi divisibility");
      }
      auto ev = prop_re_evidence(sc.quandle.rack, 0, cap);
      r.trivial_witness = ev.trivial_witness;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

// Every connected noncentral class of S_d satisfies Hayashi.
inline std::vector<SymCheckRecord> theorem_sym_check(std::size_t d, std::size_t bound = default_scan_bound,
                                                     std::size_t cap = PermutationGroup::default_cap) {
  return detail::check_classes(symmetric_classes(d, bound, cap), cap);
}

// Same for the classes of A_d, split classes included. A missing trivial
// intersection witness is recorded in the result, not thrown.
inline std::vector<SymCheckRecord> alternating_check(std::size_t d, std::size_t bound = default_scan_bound,
                                                     std::size_t cap = PermutationGroup::default_cap) {
  return detail::check_classes(alternating_classes(d, bound, cap), cap);
}

// ---------------------------------------------------------------------------
// Full report

struct LambdaPartSummary {
  std::size_t k = 0;
  std::size_t size = 0;
  std::size_t expected_count = 0;
};

struct AnalysisReport {
  std::size_t n = 0;
  RackKind kind = RackKind::not_a_rack;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;  // first few, 1-based descriptions
  std::optional<bool> connected;
  std::optional<bool> faithful;
  std::optional<std::size_t> f;
  std::size_t fiber_count = 0;
  std::optional<Profile> profile;
  std::optional<bool> primitive;
  std::optional<BlockSystem> block_witness;
  std::optional<HayashiVerdict> hayashi;
  bool lambda0_above_one = false;  // rack instance, conjecture applied beyond quandles
  std::optional<PropReEvidence> prop_re;
  std::optional<PropReCrosscheck> prop_re_check;
  std::optional<PrimCheck> theorem_prim;
  std::optional<bool> center_trivial;
  std::optional<bool> beta_bijective;  // set for affine constructions
  std::vector<LambdaPartSummary> lambda_parts;
  std::vector<KTildeDiagnostic> k_tilde;
  std::vector<std::pair<std::string, std::string>> skipped;  // (field, reason)

  // 0 when every check passes, 1 for a Hayashi counterexample candidate,
  // 2 when an implication that is a theorem fails.
  ExitCode exit_code() const {
    if (prop_re_check && (!prop_re_check->forward_ok || !prop_re_check->converse_ok)) {
      return ExitCode::theorem_falsified;
    }
    if (hayashi && !hayashi->holds) return ExitCode::counterexample;
    return ExitCode::ok;
  }
};

inline constexpr std::size_t report_witness_limit = 20;

// Aggregates every analysis. Sections that hit a resource cap or whose
// precondition fails are listed in `skipped`; theorem failures propagate.
inline AnalysisReport full_report(const RackTable& X, std::size_t cap = PermutationGroup::default_cap) {
  AnalysisReport r;
  r.n = X.size();
  r.kind = X.kind();
  r.violations = X.diagnosis().total_violations;
  for (const auto& w : X.diagnosis().witnesses) {
    if (r.witnesses.size() >= report_witness_limit) break;
    r.witnesses.push_back(w.describe());
  }
  if (!X.is_rack()) {
    r.skipped.emplace_back("analysis", "not a rack");
    return r;
  }
  r.connected = is_connected(X);
  auto fp = fibers(X);
  r.fiber_count = fp.fibers.size();
  r.f = fp.f;
  r.faithful = fp.fibers.size() == X.size();
  auto attempt = [&](const char* field, auto&& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      r.skipped.emplace_back(field, e.what());
    } catch (const BoundExceeded& e) {
      r.skipped.emplace_back(field, e.what());
    }
  };
  if (*r.faithful) {
    attempt("center", [&] { r.center_trivial = center_check(X, cap); });
  } else {
    r.skipped.emplace_back("center", "not faithful");
  }
  if (!*r.connected) {
    for (const char* f : {"profile", "primitive", "hayashi", "prop_re"}) r.skipped.emplace_back(f, "not connected");
    return r;
  }
  r.profile = profile(X);
  r.hayashi = hayashi_check(*r.profile);
  r.lambda0_above_one = r.profile->cycle_type.smallest() > 1;
  attempt("primitive", [&] {
    auto prim = inner_action_primitivity(X);
    r.primitive = prim.primitive;
    r.block_witness = prim.witness_blocks;
    r.theorem_prim = theorem_prim_check(X);
  });
  attempt("prop_re", [&] {
    r.prop_re = prop_re_evidence(X, 0, cap);
    r.prop_re_check = prop_re_crosscheck(X, 0, cap);
  });
  for (auto len : r.profile->lengths()) {
    auto lp = lambda_part(X, len);
    r.lambda_parts.push_back({len, lp.multiset.size(), lp.expected_count});
  }
  attempt("k_tilde", [&] { r.k_tilde = k_tilde_block_diagnostic(X); });
  return r;
}

}  // namespace quandle
