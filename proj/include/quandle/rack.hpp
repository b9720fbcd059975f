#pragma once

// Finite racks as operation tables: table(x, y) = x |> y, x being the acting
// (row) element, so row x holds the images of phi_x.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandle/errors.hpp"
#include "quandle/perm.hpp"

namespace quandle {

enum class RackKind { not_a_rack, rack, quandle };

inline const char* to_string(RackKind k) noexcept {
  switch (k) {
    case RackKind::not_a_rack: return "not-a-rack";
    case RackKind::rack: return "rack";
    case RackKind::quandle: return "quandle";
  }
  return "?";
}

enum class Axiom { a1, a2, a3 };

inline const char* to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::a1: return "A1";
    case Axiom::a2: return "A2";
    case Axiom::a3: return "A3";
  }
  return "?";
}

// One failed axiom instance. Tuples are 0-based:
//   A1: (x, y, z) with x|>(y|>z) != (x|>y)|>(x|>z)
//   A2: (x, z) where z is hit more than once in row x (or missed: z listed
//       with the witness `missing` flag)
//   A3: (x) with x|>x != x
struct AxiomWitness {
  Axiom axiom;
  std::vector<Point> tuple;
  bool missing = false;

  std::string describe() const {
    std::string s = to_string(axiom);
    auto pt = [](Point p) { return std::to_string(p + 1); };
    switch (axiom) {
      case Axiom::a1:
        s += ": x=" + pt(tuple[0]) + " y=" + pt(tuple[1]) + " z=" + pt(tuple[2]) +
             " violates x|>(y|>z) = (x|>y)|>(x|>z)";
        break;
      case Axiom::a2:
        s += ": row " + pt(tuple[0]) + (missing ? " never hits " : " hits more than once ") + pt(tuple[1]);
        break;
      case Axiom::a3:
        s += ": " + pt(tuple[0]) + "|>" + pt(tuple[0]) + " != " + pt(tuple[0]);
        break;
    }
    return s;
  }

  friend bool operator==(const AxiomWitness&, const AxiomWitness&) = default;
};

struct AxiomDiagnosis {
  RackKind verdict = RackKind::not_a_rack;
  std::vector<AxiomWitness> witnesses;  // at most `witness_limit` kept
  std::size_t total_violations = 0;

  bool is_rack() const noexcept { return verdict != RackKind::not_a_rack; }
  std::size_t count(Axiom a) const {
    return static_cast<std::size_t>(
        std::count_if(witnesses.begin(), witnesses.end(), [a](const auto& w) { return w.axiom == a; }));
  }
};

inline constexpr std::size_t default_witness_limit = 10000;

// Scans (A2) row bijectivity, (A1) all n^3 triples and (A3) the diagonal,
// recording every violation up to `witness_limit`. `table` is row-major n*n
// with 0-based entries; out-of-range entries throw.
inline AxiomDiagnosis validate(std::size_t n, std::span<const Point> table,
                               std::size_t witness_limit = default_witness_limit) {
  if (table.size() != n * n) throw PreconditionError("table must have n*n entries");
  for (Point v : table) {
    if (v >= n) throw PreconditionError("table entry out of range");
  }
  AxiomDiagnosis d;
  auto add = [&](AxiomWitness w) {
    ++d.total_violations;
    if (d.witnesses.size() < witness_limit) d.witnesses.push_back(std::move(w));
  };
  auto at = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };

  bool a2_ok = true;
  std::vector<std::uint32_t> hits(n);
  for (Point x = 0; x < n; ++x) {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t y = 0; y < n; ++y) ++hits[at(x, y)];
    for (Point z = 0; z < n; ++z) {
      if (hits[z] > 1) add({Axiom::a2, {x, z}, false});
      if (hits[z] == 0) add({Axiom::a2, {x, z}, true});
      if (hits[z] != 1) a2_ok = false;
    }
  }
  bool a1_ok = true;
  for (Point x = 0; x < n; ++x) {
    const Point* rx = table.data() + std::size_t{x} * n;
    for (Point y = 0; y < n; ++y) {
      const Point* rxy = table.data() + std::size_t{rx[y]} * n;
      const Point* ry = table.data() + std::size_t{y} * n;
      for (Point z = 0; z < n; ++z) {
        if (rx[ry[z]] != rxy[rx[z]]) {
          a1_ok = false;
          add({Axiom::a1, {x, y, z}, false});
        }
      }
    }
  }
  bool a3_ok = true;
  for (Point x = 0; x < n; ++x) {
    if (at(x, x) != x) {
      a3_ok = false;
      add({Axiom::a3, {x}, false});
    }
  }
  if (a1_ok && a2_ok) {
    d.verdict = a3_ok ? RackKind::quandle : RackKind::rack;
  }
  return d;
}

class RackTable {
 public:
  RackTable() = default;

  static RackTable from_table(std::size_t n, std::vector<Point> flat,
                              std::size_t witness_limit = default_witness_limit) {
    RackTable r;
    r.diagnosis_ = validate(n, flat, witness_limit);
    r.n_ = n;
    r.table_ = std::move(flat);
    return r;
  }

  static RackTable from_rows(const std::vector<std::vector<Point>>& rows) {
    std::vector<Point> flat;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw PreconditionError("table is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_table(rows.size(), std::move(flat));
  }

  // Builds x |> y := op(x, y) over {0..n-1}.
  static RackTable from_operation(std::size_t n, const std::function<Point(Point, Point)>& op) {
    std::vector<Point> flat(n * n);
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = op(x, y);
    }
    return from_table(n, std::move(flat));
  }

  std::size_t size() const noexcept { return n_; }
  Point operator()(Point x, Point y) const noexcept { return table_[std::size_t{x} * n_ + y]; }
  std::span<const Point> row(Point x) const noexcept { return {table_.data() + std::size_t{x} * n_, n_}; }
  std::span<const Point> data() const noexcept { return table_; }

  RackKind kind() const noexcept { return diagnosis_.verdict; }
  const AxiomDiagnosis& diagnosis() const noexcept { return diagnosis_; }
  bool is_rack() const noexcept { return diagnosis_.is_rack(); }
  bool is_quandle() const noexcept { return diagnosis_.verdict == RackKind::quandle; }

  void require_rack() const {
    if (!is_rack()) throw PreconditionError("table is not a rack");
  }

  friend bool operator==(const RackTable& a, const RackTable& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  std::size_t n_ = 0;
  std::vector<Point> table_;
  AxiomDiagnosis diagnosis_;
};

// Left translation y -> x |> y.
inline Permutation phi(const RackTable& X, Point x) {
  X.require_rack();
  if (x >= X.size()) throw PreconditionError("element out of range");
  auto r = X.row(x);
  return Permutation::from_images_unchecked(std::vector<Point>(r.begin(), r.end()));
}

inline std::vector<Permutation> phis(const RackTable& X) {
  std::vector<Permutation> out;
  out.reserve(X.size());
  for (Point x = 0; x < X.size(); ++x) out.push_back(phi(X, x));
  return out;
}

// table(x, y) := rows[x](y); the diagnosis records any axiom failure.
inline RackTable from_permutation_rows(const std::vector<Permutation>& rows) {
  const std::size_t n = rows.size();
  std::vector<Point> flat;
  flat.reserve(n * n);
  for (const auto& p : rows) {
    if (p.degree() != n) throw DegreeMismatch(n, p.degree());
    flat.insert(flat.end(), p.images().begin(), p.images().end());
  }
  return RackTable::from_table(n, std::move(flat));
}

// Transports X along f: Y(f(x), f(y)) = f(X(x, y)).
inline RackTable relabel(const RackTable& X, const Permutation& f) {
  const std::size_t n = X.size();
  if (f.degree() != n) throw DegreeMismatch(n, f.degree());
  std::vector<Point> flat(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) flat[std::size_t{f(x)} * n + f(y)] = f(X(x, y));
  }
  return RackTable::from_table(n, std::move(flat));
}

// f(x |> y) = f(x) |>' f(y) for all x, y.
inline bool is_homomorphism(const RackTable& X, const RackTable& Y, std::span<const Point> f) {
  if (f.size() != X.size()) return false;
  for (Point x = 0; x < X.size(); ++x) {
    for (Point y = 0; y < X.size(); ++y) {
      if (f[X(x, y)] != Y(f[x], f[y])) return false;
    }
  }
  return true;
}

namespace detail {

// Orbit sizes of the inner action, from the rows alone.
inline std::vector<std::size_t> inner_orbit_sizes(const RackTable& X) {
  const std::size_t n = X.size();
  UnionFind uf(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) uf.unite(y, X(x, y));
  }
  std::vector<std::size_t> count(n, 0);
  for (Point p = 0; p < n; ++p) ++count[uf.find(p)];
  std::vector<std::size_t> out(n);
  for (Point p = 0; p < n; ++p) out[p] = count[uf.find(p)];
  return out;
}

// Per-element isomorphism invariant used for search pruning.
inline std::vector<std::string> element_signatures(const RackTable& X) {
  const std::size_t n = X.size();
  auto orbit_size = inner_orbit_sizes(X);
  std::vector<std::size_t> column_fixed(n, 0);
  for (Point y = 0; y < n; ++y) {
    for (Point x = 0; x < n; ++x) {
      if (X(y, x) == x) ++column_fixed[x];
    }
  }
  std::vector<std::string> sig(n);
  for (Point x = 0; x < n; ++x) {
    sig[x] = cycle_type(phi(X, x)).to_string() + (X(x, x) == x ? "|i" : "|n") + "|o" +
             std::to_string(orbit_size[x]) + "|c" + std::to_string(column_fixed[x]);
  }
  return sig;
}

// Backtracking over partial bijections X -> Y. Every assignment forces
// f(x |> z) = f(x) |>' f(z) for all assigned pairs, which is propagated to a
// fixpoint before branching.
class MorphismSearch {
 public:
  static constexpr Point unset = std::numeric_limits<Point>::max();

  MorphismSearch(const RackTable& X, const RackTable& Y) : X_(X), Y_(Y), n_(X.size()) {
    auto sx = element_signatures(X);
    auto sy = element_signatures(Y);
    std::map<std::string, int> ids;
    for (const auto& s : sx) ids.emplace(s, static_cast<int>(ids.size()));
    xclass_.resize(n_);
    yclass_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) xclass_[i] = ids.at(sx[i]);
    compatible_ = true;
    std::vector<std::size_t> cx(ids.size(), 0), cy(ids.size(), 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto it = ids.find(sy[i]);
      if (it == ids.end()) {
        compatible_ = false;
        yclass_[i] = -1;
      } else {
        yclass_[i] = it->second;
        ++cy[it->second];
      }
      ++cx[xclass_[i]];
    }
    if (cx != cy) compatible_ = false;
    // Smallest class first.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Point{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Point a, Point b) { return cx[xclass_[a]] < cx[xclass_[b]]; });
    fwd_.assign(n_, unset);
    bwd_.assign(n_, unset);
  }

  // Calls visit(f) for each isomorphism; stops when visit returns false.
  template <class Visitor>
  void run(Visitor&& visit) {
    if (!compatible_ || X_.size() != Y_.size()) return;
    if (n_ == 0) {
      visit(std::vector<Point>{});
      return;
    }
    stop_ = false;
    recurse(visit);
  }

 private:
  bool assign(Point x, Point y) {
    if (fwd_[x] != unset) return fwd_[x] == y;
    if (bwd_[y] != unset || xclass_[x] != yclass_[y]) return false;
    fwd_[x] = y;
    bwd_[y] = x;
    trail_.push_back(x);
    return true;
  }

  bool propagate(std::size_t from) {
    for (std::size_t qi = from; qi < trail_.size(); ++qi) {
      Point x = trail_[qi];
      for (std::size_t zi = 0; zi <= qi; ++zi) {
        Point z = trail_[zi];
        if (!assign(X_(x, z), Y_(fwd_[x], fwd_[z]))) return false;
        if (!assign(X_(z, x), Y_(fwd_[z], fwd_[x]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Point x = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[x]] = unset;
      fwd_[x] = unset;
    }
  }

  template <class Visitor>
  void recurse(Visitor& visit) {
    if (trail_.size() == n_) {
      if (!visit(fwd_)) stop_ = true;
      return;
    }
    Point x = unset;
    for (Point c : order_) {
      if (fwd_[c] == unset) {
        x = c;
        break;
      }
    }
    for (Point y = 0; y < n_ && !stop_; ++y) {
      if (bwd_[y] != unset || yclass_[y] != xclass_[x]) continue;
      std::size_t mark = trail_.size();
      if (assign(x, y) && propagate(mark)) recurse(visit);
      undo(mark);
    }
  }

  const RackTable& X_;
  const RackTable& Y_;
  std::size_t n_;
  std::vector<int> xclass_, yclass_;
  std::vector<Point> order_;
  std::vector<Point> fwd_, bwd_, trail_;
  bool compatible_ = false;
  bool stop_ = false;
};

}  // namespace detail

struct IsoWitness {
  bool found = false;
  std::optional<std::vector<Point>> bijection;  // X -> Y, 0-based
};

inline IsoWitness is_isomorphic(const RackTable& X, const RackTable& Y) {
  X.require_rack();
  Y.require_rack();
  IsoWitness w;
  if (X.size() != Y.size()) return w;
  detail::MorphismSearch search(X, Y);
  search.run([&](const std::vector<Point>& f) {
    w.found = true;
    w.bijection = f;
    return false;
  });
  return w;
}

// Isomorphism-invariant key: sorted multiset of (cycle type of phi_x,
// idempotency of x) and the multiset of inner-orbit sizes. Equal keys do not
// imply isomorphism.
inline std::string fingerprint(const RackTable& X) {
  X.require_rack();
  std::vector<std::string> elems;
  for (Point x = 0; x < X.size(); ++x) {
    elems.push_back(cycle_type(phi(X, x)).to_string() + (X(x, x) == x ? " idem" : " nonidem"));
  }
  std::sort(elems.begin(), elems.end());
  auto sizes = detail::inner_orbit_sizes(X);
  std::vector<std::size_t> orbit_sizes;
  std::vector<bool> seen_root(X.size(), false);
  {
    detail::UnionFind uf(X.size());
    for (Point x = 0; x < X.size(); ++x) {
      for (Point y = 0; y < X.size(); ++y) uf.unite(y, X(x, y));
    }
    for (Point p = 0; p < X.size(); ++p) {
      Point r = uf.find(p);
      if (!seen_root[r]) {
        seen_root[r] = true;
        orbit_sizes.push_back(sizes[p]);
      }
    }
  }
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  std::string s = "n=" + std::to_string(X.size()) + " phi={";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += "; ";
    s += elems[i];
  }
  s += "} orbits={";
  for (std::size_t i = 0; i < orbit_sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orbit_sizes[i]);
  }
  s += "}";
  return s;
}

}  // namespace quandle
