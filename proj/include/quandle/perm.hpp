#pragma once

// Permutations of {0..n-1} in image-array form and finitely generated
// permutation groups with a lazily materialized element set.
//
// Points are 0-based in this API. Text formats (cycle notation, image lists)
// are 1-based.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quandle/errors.hpp"

namespace quandle {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  // Throws PreconditionError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point v : images) {
      if (v >= images.size() || seen[v]) {
        throw PreconditionError("image list is not a bijection");
      }
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // No bijectivity check; for images produced by composing permutations.
  static Permutation from_images_unchecked(std::vector<Point> images) noexcept {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // Product of disjoint cycles given as 0-based point lists.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Point a = cyc[i];
        if (a >= degree || used[a]) {
          throw PreconditionError("cycles are not disjoint or point out of range");
        }
        used[a] = true;
        img[a] = cyc[(i + 1) % cyc.size()];
      }
    }
    Permutation p;
    p.images_ = std::move(img);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image array; this is the deterministic element order.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  struct Hash {
    std::size_t operator()(const Permutation& p) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (Point v : p.images_) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::vector<Point> images_;
};

using PermutationSet = std::unordered_set<Permutation, Permutation::Hash>;

namespace detail {
inline void check_degrees(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
}
}  // namespace detail

// i -> p(q(i)): q is applied first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  detail::check_degrees(p, q);
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(static_cast<Point>(i)));
  return Permutation::from_images_unchecked(std::move(img));
}

// a b a^-1, the conjugation quandle operation a |> b.
inline Permutation conjugate(const Permutation& a, const Permutation& b) {
  detail::check_degrees(a, b);
  // (a b a^-1)(a(i)) = a(b(i))
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) {
    auto pi = static_cast<Point>(i);
    img[a(pi)] = a(b(pi));
  }
  return Permutation::from_images_unchecked(std::move(img));
}

inline Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1u) result = compose(base, result);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

// Disjoint cycles including fixed points; each cycle starts at its least
// point and cycles are ordered by that point.
inline std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> cyc;
    for (Point j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

struct CycleType {
  // (length, multiplicity), lengths strictly increasing.
  std::vector<std::pair<std::size_t, std::size_t>> parts;

  std::size_t degree() const noexcept {
    std::size_t d = 0;
    for (auto [len, mult] : parts) d += len * mult;
    return d;
  }
  std::size_t largest() const noexcept { return parts.empty() ? 0 : parts.back().first; }
  std::size_t smallest() const noexcept { return parts.empty() ? 0 : parts.front().first; }

  bool contains_length(std::size_t len) const noexcept {
    return std::any_of(parts.begin(), parts.end(), [&](const auto& pr) { return pr.first == len; });
  }
  std::size_t multiplicity(std::size_t len) const noexcept {
    for (auto [l, m] : parts) {
      if (l == len) return m;
    }
    return 0;
  }

  // "1^1 2^1 3^1 6^1"
  std::string to_string() const {
    std::string s;
    for (auto [len, mult] : parts) {
      if (!s.empty()) s += ' ';
      s += std::to_string(len) + "^" + std::to_string(mult);
    }
    return s;
  }

  static CycleType from_lengths(std::vector<std::size_t> lengths) {
    std::sort(lengths.begin(), lengths.end());
    CycleType ct;
    for (std::size_t len : lengths) {
      if (!ct.parts.empty() && ct.parts.back().first == len) {
        ++ct.parts.back().second;
      } else {
        ct.parts.emplace_back(len, 1);
      }
    }
    return ct;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(c.size());
  return CycleType::from_lengths(std::move(lengths));
}

inline std::uint64_t order(const Permutation& p) {
  std::uint64_t l = 1;
  for (auto [len, mult] : cycle_type(p).parts) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

// Points lying on cycles of length exactly k, sorted.
inline std::vector<Point> k_part(const Permutation& p, std::size_t k) {
  std::vector<Point> out;
  for (const auto& c : cycles(p)) {
    if (c.size() == k) out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Points lying on cycles whose length divides k, sorted.
inline std::vector<Point> k_tilde_part(const Permutation& p, std::size_t k) {
  std::vector<Point> out;
  for (const auto& c : cycles(p)) {
    if (k % c.size() == 0) out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text forms

// "(1)(2,4,3)(5,9)(6,12,7,10,8,11)": fixed points included.
inline std::string to_cycle_string(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles(p)) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

// Parses 1-based disjoint-cycle notation. Omitted points are fixed. Cycle
// entries are separated by commas and/or whitespace. `line` is only used for
// error positions.
inline Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line = 1) {
  std::vector<std::vector<Point>> cycs;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", line, i + 1);
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point or ')'", line, i + 1);
      }
      std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point out of range 1.." + std::to_string(degree), line, start + 1);
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated", line, start + 1);
      used[v - 1] = true;
      cyc.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    cycs.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycs);
}

// "1 9 4 2 ..." (1-based images of 1..n).
inline std::string to_image_list(const Permutation& p) {
  std::string s;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p(static_cast<Point>(i)) + 1);
  }
  return s;
}

inline Permutation parse_image_list(std::string_view text, std::size_t line = 1) {
  std::vector<Point> img;
  std::vector<std::size_t> cols;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected integer", line, i + 1);
    cols.push_back(i + 1);
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (v > (1u << 30)) throw ParseError("integer too large", line, cols.back());
      ++i;
    }
    if (v == 0) throw ParseError("points are 1-based", line, cols.back());
    img.push_back(static_cast<Point>(v - 1));
  }
  std::vector<bool> seen(img.size(), false);
  for (std::size_t k = 0; k < img.size(); ++k) {
    if (img[k] >= img.size()) throw ParseError("image out of range", line, cols[k]);
    if (seen[img[k]]) throw ParseError("duplicate image " + std::to_string(img[k] + 1), line, cols[k]);
    seen[img[k]] = true;
  }
  return Permutation::from_images(std::move(img));
}

// ---------------------------------------------------------------------------
// Groups

class PermutationGroup {
 public:
  static constexpr std::size_t default_cap = 1'000'000;

  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t cap = default_cap)
      : degree_(degree), generators_(std::move(generators)), cap_(cap), cache_(std::make_shared<Cache>()) {
    for (const auto& g : generators_) {
      if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    }
  }

  // Wraps an element set already known to be a group.
  static PermutationGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                        std::size_t cap = default_cap) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Permutation> gens;
    for (const auto& e : elements) {
      if (!e.is_identity()) gens.push_back(e);
    }
    PermutationGroup g(degree, std::move(gens), std::max(cap, elements.size()));
    std::call_once(g.cache_->once, [&] {
      g.cache_->index.insert(elements.begin(), elements.end());
      g.cache_->elements = std::move(elements);
      g.cache_->ready.store(true, std::memory_order_release);
    });
    return g;
  }

  static PermutationGroup symmetric(std::size_t degree) {
    std::vector<Permutation> gens;
    if (degree >= 2) {
      gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
      std::vector<Point> cyc(degree);
      std::iota(cyc.begin(), cyc.end(), Point{0});
      gens.push_back(Permutation::from_cycles(degree, {cyc}));
    }
    return PermutationGroup(degree, std::move(gens));
  }

  // Generated by the 3-cycles (1,2,k).
  static PermutationGroup alternating(std::size_t degree) {
    std::vector<Permutation> gens;
    for (Point k = 2; k < degree; ++k) gens.push_back(Permutation::from_cycles(degree, {{0, 1, k}}));
    return PermutationGroup(degree, std::move(gens));
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t cap() const noexcept { return cap_; }
  bool is_materialized() const noexcept { return cache_->ready.load(std::memory_order_acquire); }

  // All elements, sorted lexicographically. Throws CapExceeded.
  const std::vector<Permutation>& elements() const {
    materialize();
    return cache_->elements;
  }
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const {
    materialize();
    return cache_->index.count(p) != 0;
  }

  // Generators to use for action computations: the irredundant subset found
  // during materialization when available, otherwise the distinct generators.
  std::vector<Permutation> action_generators() const {
    if (is_materialized() && !cache_->essential.empty()) return cache_->essential;
    std::vector<Permutation> g = generators_;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::erase_if(g, [](const Permutation& p) { return p.is_identity(); });
    return g;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::atomic<bool> ready{false};
    std::vector<Permutation> elements;
    PermutationSet index;
    std::vector<Permutation> essential;
  };

  void materialize() const {
    std::call_once(cache_->once, [this] { fill(); });
  }

  // Adds generators one at a time, skipping those already in the closure of
  // the earlier ones; each stage is a breadth-first closure from identity.
  void fill() const {
    std::vector<Permutation> essential;
    PermutationSet index{Permutation(degree_)};
    std::vector<Permutation> elems{Permutation(degree_)};
    for (const auto& g : generators_) {
      if (index.count(g)) continue;
      essential.push_back(g);
      std::deque<std::size_t> queue;
      for (std::size_t i = 0; i < elems.size(); ++i) queue.push_back(i);
      while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& s : essential) {
          Permutation h = compose(s, elems[i]);
          if (index.insert(h).second) {
            if (elems.size() >= cap_) {
              throw CapExceeded("group element count exceeds " + std::to_string(cap_));
            }
            elems.push_back(std::move(h));
            queue.push_back(elems.size() - 1);
          }
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    cache_->elements = std::move(elems);
    cache_->index = std::move(index);
    cache_->essential = std::move(essential);
    cache_->ready.store(true, std::memory_order_release);
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::size_t cap_;
  std::shared_ptr<Cache> cache_;
};

inline const std::vector<Permutation>& enumerate_elements(const PermutationGroup& g) { return g.elements(); }

inline std::vector<Point> orbit(const PermutationGroup& g, Point point) {
  if (point >= g.degree()) throw PreconditionError("point out of range");
  auto gens = g.action_generators();
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& s : gens) {
      Point q = s(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Orbit partition, cells sorted and ordered by least point.
inline std::vector<std::vector<Point>> orbits(const PermutationGroup& g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> covered(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (covered[p]) continue;
    auto o = orbit(g, p);
    for (Point q : o) covered[q] = true;
    out.push_back(std::move(o));
  }
  return out;
}

// Degree-1 groups count as transitive.
inline bool is_transitive(const PermutationGroup& g) {
  if (g.degree() == 0) return false;
  return orbit(g, 0).size() == g.degree();
}

// Elements of g commuting with p, materialized.
inline PermutationGroup centralizer(const PermutationGroup& g, const Permutation& p) {
  if (p.degree() != g.degree()) throw DegreeMismatch(g.degree(), p.degree());
  std::vector<Permutation> keep;
  for (const auto& e : g.elements()) {
    if (compose(e, p) == compose(p, e)) keep.push_back(e);
  }
  return PermutationGroup::from_elements(g.degree(), std::move(keep), g.cap());
}

struct BlockSystem {
  std::vector<std::vector<Point>> cells;

  // Sorts each cell and orders cells by least point.
  void normalize() {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::erase_if(cells, [](const auto& c) { return c.empty(); });
    std::sort(cells.begin(), cells.end());
  }

  bool is_partition_of(std::size_t n) const {
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (const auto& c : cells) {
      if (c.empty()) return false;
      for (Point p : c) {
        if (p >= n || seen[p]) return false;
        seen[p] = true;
        ++count;
      }
    }
    return count == n;
  }

  bool is_trivial(std::size_t n) const { return cells.size() == 1 || cells.size() == n; }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Point{0}); }
  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root becomes the representative.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Point> parent_;
};

// Finest G-invariant partition in which a and b share a cell.
inline UnionFind block_closure(const std::vector<Permutation>& gens, std::size_t n, Point a, Point b) {
  UnionFind uf(n);
  std::deque<std::pair<Point, Point>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Point u = uf.find(g(x));
      Point v = uf.find(g(y));
      if (uf.unite(u, v)) queue.emplace_back(u, v);
    }
  }
  return uf;
}

}  // namespace detail

// Block system generated by the smallest block containing a and b.
inline BlockSystem block_system(const PermutationGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  if (a >= n || b >= n) throw PreconditionError("point out of range");
  if (a == b) throw PreconditionError("minimal_block needs two distinct points");
  if (!is_transitive(g)) throw PreconditionError("group is not transitive");
  auto uf = detail::block_closure(g.action_generators(), n, a, b);
  std::vector<std::vector<Point>> by_root(n);
  for (Point p = 0; p < n; ++p) by_root[uf.find(p)].push_back(p);
  BlockSystem bs{std::move(by_root)};
  bs.normalize();
  return bs;
}

// Smallest block containing {a, b}; requires a transitive group.
inline std::vector<Point> minimal_block(const PermutationGroup& g, Point a, Point b) {
  auto bs = block_system(g, a, b);
  for (auto& c : bs.cells) {
    if (std::binary_search(c.begin(), c.end(), a)) return c;
  }
  return {};
}

// True iff every generator maps each cell onto a cell.
inline bool is_block(const PermutationGroup& g, const BlockSystem& bs) {
  const std::size_t n = g.degree();
  if (!bs.is_partition_of(n)) throw PreconditionError("cells do not partition the point set");
  std::vector<std::size_t> cell_of(n);
  for (std::size_t c = 0; c < bs.cells.size(); ++c) {
    for (Point p : bs.cells[c]) cell_of[p] = c;
  }
  for (const auto& s : g.action_generators()) {
    for (const auto& cell : bs.cells) {
      std::size_t target = cell_of[s(cell.front())];
      if (bs.cells[target].size() != cell.size()) return false;
      for (Point p : cell) {
        if (cell_of[s(p)] != target) return false;
      }
    }
  }
  return true;
}

// Non-transitive groups are reported as not primitive. Degree 1 and
// transitive degree 2 count as primitive.
inline bool is_primitive(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  if (n == 0) return false;
  if (!is_transitive(g)) return false;
  if (n <= 2) return true;
  auto gens = g.action_generators();
  for (Point b = 1; b < n; ++b) {
    auto uf = detail::block_closure(gens, n, 0, b);
    Point root = uf.find(0);
    for (Point p = 0; p < n; ++p) {
      if (uf.find(p) != root) return false;
    }
  }
  return true;
}

}  // namespace quandle
