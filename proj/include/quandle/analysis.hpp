#pragma once

// Structural analysis of a validated rack: inner and full automorphism
// groups, connectedness, fibers of x -> phi_x, profile, lambda_s-parts, and
// primitivity of the inner action.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandle/errors.hpp"
#include "quandle/perm.hpp"
#include "quandle/rack.hpp"

namespace quandle {

// Generated by the distinct left translations, in element order.
inline PermutationGroup inner_group(const RackTable& X, std::size_t cap = PermutationGroup::default_cap) {
  X.require_rack();
  std::vector<Permutation> gens;
  PermutationSet seen;
  for (Point x = 0; x < X.size(); ++x) {
    auto p = phi(X, x);
    if (seen.insert(p).second) gens.push_back(std::move(p));
  }
  return PermutationGroup(X.size(), std::move(gens), cap);
}

inline constexpr std::size_t default_aut_bound = 16;

// All automorphisms by backtracking (see detail::MorphismSearch). Verifies
// that every phi_x is among them.
inline PermutationGroup automorphism_group(const RackTable& X, std::size_t bound = default_aut_bound,
                                           std::size_t cap = PermutationGroup::default_cap) {
  X.require_rack();
  if (X.size() > bound) {
    throw BoundExceeded("automorphism search limited to n <= " + std::to_string(bound));
  }
  std::vector<Permutation> autos;
  detail::MorphismSearch search(X, X);
  search.run([&](const std::vector<Point>& f) {
    if (autos.size() >= cap) throw CapExceeded("automorphism count exceeds " + std::to_string(cap));
    autos.push_back(Permutation::from_images(f));
    return true;
  });
  auto aut = PermutationGroup::from_elements(X.size(), std::move(autos), cap);
  for (Point x = 0; x < X.size(); ++x) {
    if (!aut.contains(phi(X, x))) {
      throw TheoremFalsified("phi_" + std::to_string(x + 1) + " is not an automorphism");
    }
  }
  return aut;
}

inline bool is_connected(const RackTable& X) {
  X.require_rack();
  if (X.size() == 0) return false;
  auto sizes = detail::inner_orbit_sizes(X);
  return sizes[0] == X.size();
}

struct FiberPartition {
  std::vector<std::vector<Point>> fibers;  // ordered by least element
  std::optional<std::size_t> f;            // common size when uniform
};

// Groups x, y with phi_x = phi_y. On a connected rack a non-uniform fiber
// size throws TheoremFalsified.
inline FiberPartition fibers(const RackTable& X) {
  X.require_rack();
  std::map<std::vector<Point>, std::size_t> index;
  FiberPartition fp;
  for (Point x = 0; x < X.size(); ++x) {
    auto r = X.row(x);
    std::vector<Point> key(r.begin(), r.end());
    auto [it, inserted] = index.emplace(std::move(key), fp.fibers.size());
    if (inserted) fp.fibers.emplace_back();
    fp.fibers[it->second].push_back(x);
  }
  bool uniform = std::all_of(fp.fibers.begin(), fp.fibers.end(),
                             [&](const auto& c) { return c.size() == fp.fibers.front().size(); });
  if (uniform && !fp.fibers.empty()) fp.f = fp.fibers.front().size();
  if (!uniform && is_connected(X)) {
    throw TheoremFalsified("connected rack with fibers of different sizes");
  }
  return fp;
}

inline bool is_faithful(const RackTable& X) {
  auto fp = fibers(X);
  return fp.fibers.size() == X.size();
}

struct Profile {
  CycleType cycle_type;

  std::string to_string() const { return cycle_type.to_string(); }
  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (auto [len, mult] : cycle_type.parts) out.push_back(len);
    return out;
  }
  friend bool operator==(const Profile&, const Profile&) = default;
};

inline std::vector<CycleType> element_cycle_types(const RackTable& X) {
  std::vector<CycleType> out;
  for (Point x = 0; x < X.size(); ++x) out.push_back(cycle_type(phi(X, x)));
  return out;
}

// Common cycle type of all phi_x. Only defined for connected racks.
inline Profile profile(const RackTable& X) {
  X.require_rack();
  if (!is_connected(X)) throw PreconditionError("profile is undefined: rack is not connected");
  auto types = element_cycle_types(X);
  for (const auto& t : types) {
    if (t != types.front()) throw TheoremFalsified("connected rack whose left translations differ in cycle type");
  }
  return Profile{types.front()};
}

struct LambdaPart {
  std::size_t k = 0;
  std::vector<Point> multiset;       // concatenated k-parts over distinct phi
  std::vector<std::size_t> counts;   // occurrences of each element
  std::size_t expected_count = 0;    // a_s * lambda_s / f
};

// Multiset union of the k-parts of the distinct permutations in Phi(X).
// Checks that every element occurs a_s*lambda_s/f times.
inline LambdaPart lambda_part(const RackTable& X, std::size_t k) {
  auto prof = profile(X);
  if (!prof.cycle_type.contains_length(k)) {
    throw PreconditionError(std::to_string(k) + " is not a length in the profile " + prof.to_string());
  }
  auto fp = fibers(X);
  LambdaPart lp;
  lp.k = k;
  lp.counts.assign(X.size(), 0);
  for (const auto& fiber : fp.fibers) {
    for (Point p : k_part(phi(X, fiber.front()), k)) {
      lp.multiset.push_back(p);
      ++lp.counts[p];
    }
  }
  lp.expected_count = prof.cycle_type.multiplicity(k) * k / *fp.f;
  for (std::size_t c : lp.counts) {
    if (c != lp.expected_count) {
      throw TheoremFalsified("lambda-part occurrence count differs from a_s*lambda_s/f");
    }
  }
  return lp;
}

struct OrbitSizes {
  std::size_t lambda = 0;      // |<phi_x> y|
  std::size_t lambda_bar = 0;  // size of the conjugation orbit of phi_y under <phi_x>
};

inline OrbitSizes orbit_divisibility(const RackTable& X, Point x, Point y) {
  X.require_rack();
  if (x >= X.size() || y >= X.size()) throw PreconditionError("element out of range");
  OrbitSizes os;
  Point z = y;
  do {
    z = X(x, z);
    ++os.lambda;
  } while (z != y);
  // phi_x^k phi_y phi_x^-k = phi_{phi_x^k(y)}, so compare rows along the orbit.
  auto row_y = X.row(y);
  z = y;
  for (;;) {
    z = X(x, z);
    ++os.lambda_bar;
    auto rz = X.row(z);
    if (std::equal(rz.begin(), rz.end(), row_y.begin())) break;
  }
  if (os.lambda % os.lambda_bar != 0) {
    throw TheoremFalsified("lambda_bar does not divide lambda for x=" + std::to_string(x + 1) +
                           " y=" + std::to_string(y + 1));
  }
  return os;
}

struct PrimitivityVerdict {
  bool primitive = false;
  std::optional<BlockSystem> witness_blocks;  // generated by a smallest nontrivial block
};

inline PrimitivityVerdict inner_action_primitivity(const RackTable& X) {
  if (!is_connected(X)) throw PreconditionError("inner action primitivity needs a connected rack");
  auto g = inner_group(X);
  PrimitivityVerdict v;
  const std::size_t n = X.size();
  if (n <= 2) {
    v.primitive = true;
    return v;
  }
  std::optional<BlockSystem> best;
  for (Point b = 1; b < n; ++b) {
    auto bs = block_system(g, 0, b);
    if (bs.cells.size() == 1) continue;
    if (!best || bs.cells.front().size() < best->cells.front().size()) best = std::move(bs);
  }
  v.primitive = !best.has_value();
  v.witness_blocks = std::move(best);
  return v;
}

// True iff Z(Inn(X)) is trivial. Requires a faithful rack.
inline bool center_check(const RackTable& X, std::size_t cap = PermutationGroup::default_cap) {
  if (!is_faithful(X)) throw PreconditionError("center check needs a faithful rack");
  auto g = inner_group(X, cap);
  const auto& elems = g.elements();
  auto gens = g.action_generators();
  std::size_t central = 0;
  for (const auto& e : elems) {
    bool commutes = std::all_of(gens.begin(), gens.end(),
                                [&](const Permutation& s) { return compose(e, s) == compose(s, e); });
    if (commutes) ++central;
  }
  return central == 1;
}

struct QuotientCheck {
  std::size_t inner_order = 0;
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  bool holds = false;
};

namespace detail {

inline RackTable conjugation_rack(const std::vector<Permutation>& sorted_elems) {
  const std::size_t n = sorted_elems.size();
  std::vector<Point> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto c = conjugate(sorted_elems[a], sorted_elems[b]);
      auto it = std::lower_bound(sorted_elems.begin(), sorted_elems.end(), c);
      if (it == sorted_elems.end() || *it != c) throw PreconditionError("set is not closed under conjugation");
      flat[a * n + b] = static_cast<Point>(it - sorted_elems.begin());
    }
  }
  return RackTable::from_table(n, std::move(flat));
}

}  // namespace detail

// For a conjugation rack X inside some symmetric group, compares |Inn(X)|
// with |G|/|Z(G)| where G = <X>.
inline QuotientCheck conjugation_rack_quotient_check(std::vector<Permutation> X,
                                                     std::size_t cap = PermutationGroup::default_cap) {
  if (X.empty()) throw PreconditionError("empty conjugation rack");
  const std::size_t degree = X.front().degree();
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  auto rack = detail::conjugation_rack(X);
  QuotientCheck q;
  q.inner_order = inner_group(rack, cap).order();
  PermutationGroup G(degree, X, cap);
  q.group_order = G.order();
  for (const auto& g : G.elements()) {
    bool central = std::all_of(X.begin(), X.end(), [&](const Permutation& s) { return compose(g, s) == compose(s, g); });
    if (central) ++q.center_order;
  }
  q.holds = q.group_order == q.inner_order * q.center_order;
  return q;
}

// sigma phi_x sigma^-1 = phi_{sigma(x)} for each sigma in `sigmas`.
inline bool conjugation_covariance(const RackTable& X, const std::vector<Permutation>& sigmas) {
  for (const auto& s : sigmas) {
    for (Point x = 0; x < X.size(); ++x) {
      if (conjugate(s, phi(X, x)) != phi(X, s(x))) return false;
    }
  }
  return true;
}

struct KTildeDiagnostic {
  std::size_t k = 0;
  bool forms_partition = false;
  bool is_block = false;
  std::vector<std::vector<Point>> cells;  // distinct k~-parts, sorted
};

// Whether the distinct k~-parts of the phi_x partition X into blocks of the
// inner action, for every proper divisor k > 1 of the largest profile length.
// Reported only; no general relation is claimed.
inline std::vector<KTildeDiagnostic> k_tilde_block_diagnostic(const RackTable& X) {
  auto prof = profile(X);
  auto g = inner_group(X);
  std::vector<KTildeDiagnostic> out;
  const std::size_t top = prof.cycle_type.largest();
  for (std::size_t k = 2; k < top; ++k) {
    if (top % k != 0) continue;
    KTildeDiagnostic d;
    d.k = k;
    for (Point x = 0; x < X.size(); ++x) d.cells.push_back(k_tilde_part(phi(X, x), k));
    std::sort(d.cells.begin(), d.cells.end());
    d.cells.erase(std::unique(d.cells.begin(), d.cells.end()), d.cells.end());
    BlockSystem bs{d.cells};
    d.forms_partition = bs.is_partition_of(X.size());
    if (d.forms_partition) {
      bs.normalize();
      d.cells = bs.cells;
      d.is_block = is_block(g, bs);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace quandle
