#pragma once

// Racks and quandles from group data: conjugacy classes, homogeneous
// quandles (G, H, alpha), affine quandles (A, 1, alpha), plus enumeration of
// small connected quandles up to isomorphism.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "quandle/analysis.hpp"
#include "quandle/errors.hpp"
#include "quandle/perm.hpp"
#include "quandle/rack.hpp"

namespace quandle {

struct ClassQuandle {
  RackTable rack;
  std::vector<Permutation> labels;  // element x of the rack is labels[x]
  std::size_t ambient_degree = 0;
};

// Quandle on the conjugacy class of g under the group generated by
// `G.generators()`. Class elements are sorted by image array.
inline ClassQuandle conjugacy_class_quandle(const PermutationGroup& G, const Permutation& g) {
  if (g.degree() != G.degree()) throw DegreeMismatch(G.degree(), g.degree());
  auto gens = G.action_generators();
  std::vector<Permutation> cls{g};
  PermutationSet seen{g};
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (const auto& s : gens) {
      auto c = conjugate(s, cls[i]);
      if (seen.insert(c).second) {
        if (cls.size() >= G.cap()) throw CapExceeded("conjugacy class larger than " + std::to_string(G.cap()));
        cls.push_back(std::move(c));
      }
    }
  }
  std::sort(cls.begin(), cls.end());
  ClassQuandle cq;
  cq.rack = detail::conjugation_rack(cls);
  cq.labels = std::move(cls);
  cq.ambient_degree = G.degree();
  return cq;
}

// ---------------------------------------------------------------------------
// Homogeneous quandles

struct HomogeneousSpec {
  std::vector<Permutation> group_elements;
  std::vector<Permutation> subgroup_generators;
  // alpha(group_elements[i]) == alpha_images[i]
  std::vector<Permutation> alpha_images;

  static HomogeneousSpec from_function(std::vector<Permutation> elements, std::vector<Permutation> sub,
                                       const std::function<Permutation(const Permutation&)>& alpha) {
    HomogeneousSpec s;
    for (const auto& e : elements) s.alpha_images.push_back(alpha(e));
    s.group_elements = std::move(elements);
    s.subgroup_generators = std::move(sub);
    return s;
  }
};

// Cosets xH ordered by their least element (image-array order); table
//   xH |> yH = x alpha(x^-1 y) H.
inline RackTable homogeneous_quandle(const HomogeneousSpec& spec) {
  if (spec.group_elements.empty()) throw PreconditionError("empty group");
  if (spec.alpha_images.size() != spec.group_elements.size()) {
    throw PreconditionError("alpha must give one image per group element");
  }
  std::vector<std::size_t> order(spec.group_elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return spec.group_elements[a] < spec.group_elements[b]; });
  std::vector<Permutation> elems;
  std::vector<Permutation> alpha;
  for (std::size_t i : order) {
    elems.push_back(spec.group_elements[i]);
    alpha.push_back(spec.alpha_images[i]);
  }
  const std::size_t m = elems.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (elems[i] == elems[i - 1]) throw PreconditionError("duplicate group element");
  }
  auto index_of = [&](const Permutation& p) -> std::size_t {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || *it != p) throw PreconditionError("element outside the group");
    return static_cast<std::size_t>(it - elems.begin());
  };
  std::vector<std::size_t> alpha_idx(m);
  for (std::size_t i = 0; i < m; ++i) alpha_idx[i] = index_of(alpha[i]);
  {
    std::vector<std::size_t> sorted = alpha_idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("alpha is not a bijection of the group");
    }
  }
  std::vector<std::vector<std::size_t>> mult(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mult[a][b] = index_of(compose(elems[a], elems[b]));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (alpha_idx[mult[a][b]] != mult[alpha_idx[a]][alpha_idx[b]]) {
        throw PreconditionError("alpha is not a group homomorphism");
      }
    }
  }
  PermutationGroup H(elems.front().degree(), spec.subgroup_generators);
  std::vector<std::size_t> sub;
  for (const auto& h : H.elements()) sub.push_back(index_of(h));
  for (std::size_t h : sub) {
    if (alpha_idx[h] != h) throw PreconditionError("alpha moves an element of the subgroup");
  }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(m, none);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < m; ++g) {
    if (coset[g] != none) continue;
    for (std::size_t h : sub) coset[mult[g][h]] = reps.size();
    reps.push_back(g);
  }
  std::vector<std::size_t> inv(m);
  for (std::size_t a = 0; a < m; ++a) inv[a] = index_of(elems[a].inverse());
  const std::size_t n = reps.size();
  std::vector<Point> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = reps[i];
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t y = reps[j];
      flat[i * n + j] = static_cast<Point>(coset[mult[x][alpha_idx[mult[inv[x]][y]]]]);
    }
  }
  auto rack = RackTable::from_table(n, std::move(flat));
  if (!rack.is_quandle()) throw TheoremFalsified("homogeneous construction did not yield a quandle");
  return rack;
}

// ---------------------------------------------------------------------------
// Affine quandles

// Elements of A = Z_{o_1} x ... x Z_{o_r} are indexed in row-major order of
// their coordinates (last coordinate fastest).
struct AffineSpec {
  std::vector<std::size_t> cyclic_orders;
  std::vector<std::size_t> alpha;  // alpha[i] = index of alpha(element i)

  std::size_t size() const {
    std::size_t s = 1;
    for (auto o : cyclic_orders) s *= o;
    return s;
  }

  std::vector<std::size_t> coords(std::size_t index) const {
    std::vector<std::size_t> c(cyclic_orders.size());
    for (std::size_t k = cyclic_orders.size(); k-- > 0;) {
      c[k] = index % cyclic_orders[k];
      index /= cyclic_orders[k];
    }
    return c;
  }
  std::size_t index(const std::vector<std::size_t>& c) const {
    std::size_t i = 0;
    for (std::size_t k = 0; k < cyclic_orders.size(); ++k) i = i * cyclic_orders[k] + c[k] % cyclic_orders[k];
    return i;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    auto ca = coords(a), cb = coords(b);
    for (std::size_t k = 0; k < ca.size(); ++k) ca[k] = (ca[k] + cb[k]) % cyclic_orders[k];
    return index(ca);
  }
  std::size_t neg(std::size_t a) const {
    auto ca = coords(a);
    for (std::size_t k = 0; k < ca.size(); ++k) ca[k] = (cyclic_orders[k] - ca[k]) % cyclic_orders[k];
    return index(ca);
  }

  // alpha from the images of the standard generators e_1..e_r, each image a
  // coordinate tuple. Throws if an image's order does not divide o_k.
  static AffineSpec from_generator_images(std::vector<std::size_t> orders,
                                          const std::vector<std::vector<std::size_t>>& images) {
    if (orders.empty()) throw PreconditionError("affine group needs at least one cyclic factor");
    for (auto o : orders) {
      if (o == 0) throw PreconditionError("cyclic orders must be positive");
    }
    if (images.size() != orders.size()) throw PreconditionError("need one image per cyclic factor");
    AffineSpec s;
    s.cyclic_orders = std::move(orders);
    const std::size_t r = s.cyclic_orders.size();
    for (std::size_t k = 0; k < r; ++k) {
      if (images[k].size() != r) throw PreconditionError("generator image has wrong arity");
      for (std::size_t j = 0; j < r; ++j) {
        if ((images[k][j] % s.cyclic_orders[j]) * s.cyclic_orders[k] % s.cyclic_orders[j] != 0) {
          throw PreconditionError("generator image order does not divide the factor order");
        }
      }
    }
    const std::size_t N = s.size();
    s.alpha.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
      auto c = s.coords(i);
      std::vector<std::size_t> img(r, 0);
      for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t j = 0; j < r; ++j) img[j] = (img[j] + c[k] * images[k][j]) % s.cyclic_orders[j];
      }
      s.alpha[i] = s.index(img);
    }
    return s;
  }

  // Z_n with alpha(x) = multiplier * x.
  static AffineSpec cyclic(std::size_t n, std::size_t multiplier) {
    return from_generator_images({n}, {{multiplier % n}});
  }
};

struct AffineQuandle {
  RackTable rack;
  bool beta_bijective = false;  // beta(x) = x - alpha(x)
};

// x |> y = alpha(y - x) + x. Cross-checks beta-bijectivity against the orbit
// computation of connectedness.
inline AffineQuandle affine_quandle(const AffineSpec& spec) {
  const std::size_t N = spec.size();
  if (spec.alpha.size() != N) throw PreconditionError("alpha must give one image per element");
  {
    std::vector<bool> hit(N, false);
    for (auto a : spec.alpha) {
      if (a >= N || hit[a]) throw PreconditionError("alpha is not a bijection of A");
      hit[a] = true;
    }
  }
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      if (spec.alpha[spec.add(a, b)] != spec.add(spec.alpha[a], spec.alpha[b])) {
        throw PreconditionError("alpha is not a homomorphism of A");
      }
    }
  }
  AffineQuandle q;
  std::vector<Point> flat(N * N);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      flat[x * N + y] = static_cast<Point>(spec.add(spec.alpha[spec.add(y, spec.neg(x))], x));
    }
  }
  q.rack = RackTable::from_table(N, std::move(flat));
  if (!q.rack.is_quandle()) throw TheoremFalsified("affine construction did not yield a quandle");
  std::vector<bool> hit(N, false);
  q.beta_bijective = true;
  for (std::size_t x = 0; x < N; ++x) {
    std::size_t b = spec.add(x, spec.neg(spec.alpha[x]));
    if (hit[b]) q.beta_bijective = false;
    hit[b] = true;
  }
  if (q.beta_bijective != is_connected(q.rack)) {
    throw TheoremFalsified("beta-bijectivity disagrees with inner-orbit connectedness");
  }
  return q;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void partitions_of(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                          std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_of(n - k, k, cur, out);
    cur.pop_back();
  }
}

// Cycles laid out on consecutive points, in the given order.
inline Permutation permutation_of_type(std::size_t degree, const std::vector<std::size_t>& lengths) {
  std::vector<std::vector<Point>> cycs;
  Point start = 0;
  for (std::size_t len : lengths) {
    std::vector<Point> c(len);
    std::iota(c.begin(), c.end(), start);
    start += static_cast<Point>(len);
    cycs.push_back(std::move(c));
  }
  if (start != degree) throw PreconditionError("cycle lengths do not sum to the degree");
  return Permutation::from_cycles(degree, cycs);
}

inline void all_permutations_of_type(std::size_t n, const CycleType& ct, std::vector<Permutation>& out) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    auto p = Permutation::from_images_unchecked(img);
    if (cycle_type(p) == ct) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
}

// Row search with phi_0 fixed to a canonical permutation. Closure
// phi_{phi_x(y)} = phi_x phi_y phi_x^-1 is propagated after every choice.
class RowSearch {
 public:
  RowSearch(std::size_t n, const std::vector<Permutation>& candidates, bool quandles_only)
      : n_(n), quandles_only_(quandles_only), rows_(n), assigned_(n, false) {
    by_index_.resize(n);
    for (Point x = 0; x < n; ++x) {
      for (const auto& c : candidates) {
        if (!quandles_only || c(x) == x) by_index_[x].push_back(&c);
      }
    }
  }

  std::vector<RackTable> run(const Permutation& first) {
    found_.clear();
    std::vector<Point> trail;
    if (set_row(0, first, trail) && propagate(trail, 0)) recurse(trail);
    return std::move(found_);
  }

 private:
  bool set_row(Point x, const Permutation& p, std::vector<Point>& trail) {
    if (assigned_[x]) return rows_[x] == p;
    if (quandles_only_ && p(x) != x) return false;
    rows_[x] = p;
    assigned_[x] = true;
    trail.push_back(x);
    return true;
  }

  bool propagate(std::vector<Point>& trail, std::size_t from) {
    for (std::size_t qi = from; qi < trail.size(); ++qi) {
      Point x = trail[qi];
      for (std::size_t zi = 0; zi <= qi; ++zi) {
        Point z = trail[zi];
        if (!set_row(rows_[x](z), conjugate(rows_[x], rows_[z]), trail)) return false;
        if (!set_row(rows_[z](x), conjugate(rows_[z], rows_[x]), trail)) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Point>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      assigned_[trail.back()] = false;
      trail.pop_back();
    }
  }

  void recurse(std::vector<Point>& trail) {
    if (trail.size() == n_) {
      std::vector<Point> flat;
      flat.reserve(n_ * n_);
      for (const auto& r : rows_) flat.insert(flat.end(), r.images().begin(), r.images().end());
      auto t = RackTable::from_table(n_, std::move(flat));
      if (!t.is_rack()) throw TheoremFalsified("closed row assignment failed the rack axioms");
      if (is_connected(t)) found_.push_back(std::move(t));
      return;
    }
    Point x = 0;
    while (assigned_[x]) ++x;
    for (const Permutation* c : by_index_[x]) {
      std::size_t mark = trail.size();
      if (set_row(x, *c, trail) && propagate(trail, mark)) recurse(trail);
      undo(trail, mark);
    }
  }

  std::size_t n_;
  bool quandles_only_;
  std::vector<Permutation> rows_;
  std::vector<bool> assigned_;
  std::vector<std::vector<const Permutation*>> by_index_;
  std::vector<RackTable> found_;
};

// Labelled connected racks whose phi_0 is the canonical permutation of the
// given type with point 0 on a cycle of length `len_of_zero`.
inline std::vector<RackTable> search_cycle_type(std::size_t n, const std::vector<std::size_t>& partition,
                                                std::size_t len_of_zero, bool quandles_only) {
  std::vector<std::size_t> lengths = partition;
  auto it = std::find(lengths.begin(), lengths.end(), len_of_zero);
  std::rotate(lengths.begin(), it, it + 1);
  auto first = permutation_of_type(n, lengths);
  auto ct = CycleType::from_lengths(partition);
  std::vector<Permutation> candidates;
  all_permutations_of_type(n, ct, candidates);
  RowSearch search(n, candidates, quandles_only);
  return search.run(first);
}

inline bool table_less(const RackTable& a, const RackTable& b) {
  return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end());
}

}  // namespace detail

struct EnumerationOptions {
  std::size_t bound = 8;
  bool quandles_only = true;
  unsigned threads = 1;
};

// Connected quandles (or racks) of order n up to isomorphism, sorted by
// fingerprint then table. The representative of each class is the least
// table found for it.
inline std::vector<RackTable> enumerate_connected(std::size_t n, const EnumerationOptions& opt = {}) {
  if (n == 0) throw PreconditionError("order must be positive");
  if (n > opt.bound) throw BoundExceeded("enumeration limited to n <= " + std::to_string(opt.bound));

  // Work items: (cycle type, length of the cycle through point 0).
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> work;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  detail::partitions_of(n, n, cur, parts);
  for (const auto& p : parts) {
    if (opt.quandles_only) {
      if (std::find(p.begin(), p.end(), 1) != p.end()) work.emplace_back(p, 1);
    } else {
      std::vector<std::size_t> lens = p;
      lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
      for (auto l : lens) work.emplace_back(p, l);
    }
  }

  std::vector<std::vector<RackTable>> results(work.size());
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      results[i] = detail::search_cycle_type(n, work[i].first, work[i].second, opt.quandles_only);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
          results[i] = detail::search_cycle_type(n, work[i].first, work[i].second, opt.quandles_only);
        }
      }));
    }
    for (auto& f : pool) f.get();
  }

  // Dedup: fingerprint buckets, then pairwise isomorphism inside a bucket.
  std::map<std::string, std::vector<RackTable>> buckets;
  for (auto& batch : results) {
    for (auto& t : batch) {
      auto& reps = buckets[fingerprint(t)];
      bool dup = false;
      for (auto& r : reps) {
        if (is_isomorphic(r, t).found) {
          if (detail::table_less(t, r)) r = t;
          dup = true;
          break;
        }
      }
      if (!dup) reps.push_back(std::move(t));
    }
  }
  std::vector<RackTable> out;
  for (auto& [fp, reps] : buckets) {
    std::sort(reps.begin(), reps.end(), detail::table_less);
    for (auto& r : reps) out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<RackTable> enumerate_connected_quandles(std::size_t n, std::size_t bound = 8,
                                                           unsigned threads = 1) {
  return enumerate_connected(n, {bound, true, threads});
}

// ---------------------------------------------------------------------------
// Class scans over symmetric and alternating groups

struct ClassRecord {
  CycleType cycle_type;         // of the class elements in the ambient group
  std::size_t class_size = 0;
  std::size_t class_index = 0;  // 0 or 1 for split alternating classes
  bool split = false;
  bool split_predicted = false;
  bool connected = false;
  bool faithful = false;
  std::uint64_t element_order = 0;
  std::optional<Profile> profile;
};

inline constexpr std::size_t default_scan_bound = 7;

// Noncentral classes of S_d, one per partition other than 1^d, in
// decreasing lexicographic order of the partition.
inline std::vector<std::vector<std::size_t>> noncentral_partitions(std::size_t d) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  detail::partitions_of(d, d, cur, parts);
  std::erase_if(parts, [](const auto& p) { return std::all_of(p.begin(), p.end(), [](auto v) { return v == 1; }); });
  return parts;
}

namespace detail {

inline ClassRecord analyze_class(const ClassQuandle& cq, const CycleType& ct) {
  ClassRecord r;
  r.cycle_type = ct;
  r.class_size = cq.rack.size();
  r.element_order = order(cq.labels.front());
  r.connected = is_connected(cq.rack);
  r.faithful = is_faithful(cq.rack);
  if (r.connected) r.profile = profile(cq.rack);
  return r;
}

}  // namespace detail

struct ScannedClass {
  ClassRecord record;
  ClassQuandle quandle;
};

inline std::vector<ScannedClass> symmetric_classes(std::size_t d, std::size_t bound = default_scan_bound,
                                                   std::size_t cap = PermutationGroup::default_cap) {
  if (d == 0) throw PreconditionError("degree must be positive");
  if (d > bound) throw BoundExceeded("class scan limited to d <= " + std::to_string(bound));
  auto sd = PermutationGroup::symmetric(d);
  PermutationGroup G(d, sd.generators(), cap);
  std::vector<ScannedClass> out;
  for (const auto& part : noncentral_partitions(d)) {
    auto g = detail::permutation_of_type(d, part);
    auto cq = conjugacy_class_quandle(G, g);
    auto rec = detail::analyze_class(cq, CycleType::from_lengths(part));
    out.push_back({std::move(rec), std::move(cq)});
  }
  return out;
}

inline std::vector<ClassRecord> symmetric_class_scan(std::size_t d, std::size_t bound = default_scan_bound,
                                                     std::size_t cap = PermutationGroup::default_cap) {
  std::vector<ClassRecord> out;
  for (auto& sc : symmetric_classes(d, bound, cap)) out.push_back(std::move(sc.record));
  return out;
}

// Splitting criterion: all cycle lengths odd and pairwise distinct
// (fixed points included).
inline bool alternating_split_predicted(const CycleType& ct) {
  return std::all_of(ct.parts.begin(), ct.parts.end(),
                     [](const auto& p) { return p.first % 2 == 1 && p.second == 1; });
}

inline std::vector<ScannedClass> alternating_classes(std::size_t d, std::size_t bound = default_scan_bound,
                                                     std::size_t cap = PermutationGroup::default_cap) {
  if (d == 0) throw PreconditionError("degree must be positive");
  if (d > bound) throw BoundExceeded("class scan limited to d <= " + std::to_string(bound));
  auto ad = PermutationGroup::alternating(d);
  PermutationGroup A(d, ad.generators(), cap);
  PermutationGroup S(d, PermutationGroup::symmetric(d).generators(), cap);
  std::vector<ScannedClass> out;
  for (const auto& part : noncentral_partitions(d)) {
    std::size_t transpositions = 0;
    for (auto l : part) transpositions += l - 1;
    if (transpositions % 2 != 0) continue;
    auto ct = CycleType::from_lengths(part);
    auto g = detail::permutation_of_type(d, part);
    const std::size_t full = conjugacy_class_quandle(S, g).rack.size();
    auto first = conjugacy_class_quandle(A, g);
    const bool split = first.rack.size() != full;
    const bool predicted = alternating_split_predicted(ct);
    if (split != predicted) {
      throw TheoremFalsified("alternating class splitting criterion disagrees with orbit computation for type " +
                             ct.to_string());
    }
    std::vector<ClassQuandle> classes;
    classes.push_back(std::move(first));
    if (split) {
      auto t = Permutation::from_cycles(d, {{0, 1}});
      classes.push_back(conjugacy_class_quandle(A, conjugate(t, g)));
      if (classes[0].rack.size() + classes[1].rack.size() != full) {
        throw TheoremFalsified("split alternating classes do not cover the symmetric class");
      }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto rec = detail::analyze_class(classes[i], ct);
      rec.class_index = i;
      rec.split = split;
      rec.split_predicted = predicted;
      out.push_back({std::move(rec), std::move(classes[i])});
    }
  }
  return out;
}

inline std::vector<ClassRecord> alternating_class_scan(std::size_t d, std::size_t bound = default_scan_bound,
                                                       std::size_t cap = PermutationGroup::default_cap) {
  std::vector<ClassRecord> out;
  for (auto& sc : alternating_classes(d, bound, cap)) out.push_back(std::move(sc.record));
  return out;
}

// Standard small instances.

// x |> y = y.
inline RackTable trivial_quandle(std::size_t n) {
  return RackTable::from_operation(n, [](Point, Point y) { return y; });
}

// x |> y = 2x - y mod n.
inline RackTable dihedral_quandle(std::size_t n) {
  return RackTable::from_operation(n, [n](Point x, Point y) {
    return static_cast<Point>((2 * std::size_t{x} + n - y) % n);
  });
}

// x |> y = y + 1 mod n: a connected rack that is not a quandle for n >= 2.
inline RackTable cyclic_rack(std::size_t n) {
  return RackTable::from_operation(n, [n](Point, Point y) { return static_cast<Point>((y + 1) % n); });
}

}  // namespace quandle
