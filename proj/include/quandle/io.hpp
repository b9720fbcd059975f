#pragma once

// Text formats.
//
// RTBL:  "rtbl <n>" then n lines of n space-separated 1-based integers; line
//        x lists x|>1 .. x|>n (the images of phi_x). Lines starting with '#'
//        are comments and are kept, in order, after the header on output.
// PERM:  "perm <n>" then one permutation of degree n per line in 1-based
//        disjoint-cycle notation. As a rack file it must hold exactly n rows
//        (row x is phi_x); as a group file any number of generators.
//
// Writers emit canonical text, so write(read(write(X))) == write(X).

#include <cctype>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"
#include "quandle/perm.hpp"
#include "quandle/rack.hpp"

namespace quandle {

enum class FileFormat { rtbl, perm };

struct RackDocument {
  RackTable rack;
  FileFormat format = FileFormat::rtbl;
  std::vector<std::string> comments;  // without the leading '#'

  // Value of a "# key: value" comment, if any.
  std::optional<std::string> comment_value(std::string_view key) const {
    for (const auto& c : comments) {
      std::string_view s = c;
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      if (s.size() > key.size() && s.substr(0, key.size()) == key && s[key.size()] == ':') {
        auto v = s.substr(key.size() + 1);
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        return std::string(v);
      }
    }
    return std::nullopt;
  }
};

struct PermDocument {
  std::size_t degree = 0;
  std::vector<Permutation> permutations;
  std::vector<std::string> comments;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t num = 1;
  while (!text.empty()) {
    auto pos = text.find('\n');
    auto line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({num++, line});
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

inline bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::optional<std::string_view> comment_body(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && s[i] == '#') return s.substr(i + 1);
  return std::nullopt;
}

// Parses "<keyword> <n>" and returns n.
inline std::size_t parse_header(const Line& line, std::string_view keyword) {
  std::string_view s = line.text;
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (s.substr(i, keyword.size()) != keyword) {
    throw ParseError("expected header '" + std::string(keyword) + " <n>'", line.number, i + 1);
  }
  i += keyword.size();
  std::size_t j = i;
  while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
  if (j == i || j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j]))) {
    throw ParseError("expected size after '" + std::string(keyword) + "'", line.number, j + 1);
  }
  std::size_t n = 0;
  std::size_t start = j;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
    n = n * 10 + static_cast<std::size_t>(s[j] - '0');
    if (n > 100000) throw ParseError("size too large", line.number, start + 1);
    ++j;
  }
  if (!is_blank(s.substr(j))) throw ParseError("trailing characters after size", line.number, j + 1);
  if (n == 0) throw ParseError("size must be positive", line.number, start + 1);
  return n;
}

inline std::pair<std::size_t, std::vector<Line>> body_lines(std::string_view text, std::string_view keyword,
                                                            std::vector<std::string>& comments) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && (is_blank(lines[i].text) || comment_body(lines[i].text))) {
    if (auto c = comment_body(lines[i].text)) comments.emplace_back(*c);
    ++i;
  }
  if (i == lines.size()) throw ParseError("empty input", 1, 1);
  std::size_t n = parse_header(lines[i], keyword);
  std::vector<Line> body;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i].text)) continue;
    if (auto c = comment_body(lines[i].text)) {
      comments.emplace_back(*c);
      continue;
    }
    body.push_back(lines[i]);
  }
  return {n, std::move(body)};
}

}  // namespace detail

inline RackDocument parse_rtbl(std::string_view text) {
  RackDocument doc;
  doc.format = FileFormat::rtbl;
  auto [n, body] = detail::body_lines(text, "rtbl", doc.comments);
  if (body.size() != n) {
    std::size_t at = body.size() > n ? body[n].number : (body.empty() ? 1 : body.back().number);
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(body.size()), at, 1);
  }
  std::vector<Point> flat;
  flat.reserve(n * n);
  for (const auto& line : body) {
    std::size_t count = 0;
    std::string_view s = line.text;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("expected integer", line.number, i + 1);
      std::size_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::size_t>(s[i] - '0');
        if (v > n) break;
        ++i;
      }
      if (v < 1 || v > n) throw ParseError("entry out of range 1.." + std::to_string(n), line.number, start + 1);
      if (count == n) throw ParseError("row has more than " + std::to_string(n) + " entries", line.number, start + 1);
      flat.push_back(static_cast<Point>(v - 1));
      ++count;
    }
    if (count != n) {
      throw ParseError("row has " + std::to_string(count) + " entries, expected " + std::to_string(n), line.number,
                       s.size() + 1);
    }
  }
  doc.rack = RackTable::from_table(n, std::move(flat));
  return doc;
}

inline PermDocument parse_perm(std::string_view text) {
  PermDocument doc;
  auto [n, body] = detail::body_lines(text, "perm", doc.comments);
  doc.degree = n;
  for (const auto& line : body) doc.permutations.push_back(parse_cycles(line.text, n, line.number));
  return doc;
}

// Dispatches on the header keyword.
inline RackDocument parse_rack(std::string_view text) {
  auto lines = detail::split_lines(text);
  for (const auto& l : lines) {
    if (detail::is_blank(l.text) || detail::comment_body(l.text)) continue;
    std::string_view s = l.text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (s.substr(0, 4) == "rtbl") return parse_rtbl(text);
    if (s.substr(0, 4) == "perm") {
      auto pd = parse_perm(text);
      if (pd.permutations.size() != pd.degree) {
        throw ParseError("rack PERM file needs " + std::to_string(pd.degree) + " rows, found " +
                             std::to_string(pd.permutations.size()),
                         l.number, 1);
      }
      RackDocument doc;
      doc.format = FileFormat::perm;
      doc.comments = std::move(pd.comments);
      doc.rack = from_permutation_rows(pd.permutations);
      return doc;
    }
    throw ParseError("unknown format: expected 'rtbl <n>' or 'perm <n>'", l.number, 1);
  }
  throw ParseError("empty input", 1, 1);
}

inline std::string write_rtbl(const RackTable& X, const std::vector<std::string>& comments = {}) {
  std::string s = "rtbl " + std::to_string(X.size()) + "\n";
  for (const auto& c : comments) s += "#" + c + "\n";
  for (Point x = 0; x < X.size(); ++x) {
    auto row = X.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (y) s += ' ';
      s += std::to_string(row[y] + 1);
    }
    s += '\n';
  }
  return s;
}

inline std::string write_perm(std::size_t degree, const std::vector<Permutation>& perms,
                              const std::vector<std::string>& comments = {}) {
  std::string s = "perm " + std::to_string(degree) + "\n";
  for (const auto& c : comments) s += "#" + c + "\n";
  for (const auto& p : perms) s += to_cycle_string(p) + "\n";
  return s;
}

inline std::string write_perm(const RackTable& X, const std::vector<std::string>& comments = {}) {
  return write_perm(X.size(), phis(X), comments);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Constructor spec grammar
//
//   conj d=<n> type=<l1,l2,...> [group=sym|alt] [class=0|1]
//   affine orders=<o1,...> alpha=<g1>,<g2>,...     (gk = c1:c2:...:cr, the
//                                                   image of the k-th generator)
//   homog group=<perm file> sub=<perm file | (cycles);(cycles)...> alpha=id|conj:<cycles>
//   trivial n=<n> | dihedral n=<n> | cyclic-rack n=<n>
//
// Missing parts of a conj type are filled with fixed points.

struct ConstructResult {
  RackTable rack;
  std::vector<std::string> comments;  // emitted into RTBL output
  std::optional<bool> beta_bijective;
};

using FileLoader = std::function<std::string(const std::string&)>;

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::size_t to_size(const std::string& s, std::size_t col) {
  if (s.empty()) throw ParseError("expected integer", 1, col);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected integer, got '" + s + "'", 1, col);
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1000000000) throw ParseError("integer too large", 1, col);
  }
  return v;
}

struct SpecArgs {
  std::string kind;
  std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> kv;  // key -> (value, column)

  std::optional<std::pair<std::string, std::size_t>> get(const std::string& key) const {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    return std::nullopt;
  }
  std::pair<std::string, std::size_t> require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw ParseError("'" + kind + "' needs " + key + "=...", 1, 1);
    return *v;
  }
};

inline SpecArgs tokenize_spec(std::string_view spec) {
  SpecArgs a;
  std::size_t i = 0;
  bool first = true;
  while (i < spec.size()) {
    if (std::isspace(static_cast<unsigned char>(spec[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < spec.size() && !std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
    std::string tok(spec.substr(start, i - start));
    if (first) {
      a.kind = tok;
      first = false;
      continue;
    }
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value", 1, start + 1);
    auto key = tok.substr(0, eq);
    for (const auto& [k, v] : a.kv) {
      if (k == key) throw ParseError("duplicate key '" + key + "'", 1, start + 1);
    }
    a.kv.push_back({key, {tok.substr(eq + 1), start + eq + 2}});
  }
  if (a.kind.empty()) throw ParseError("empty constructor spec", 1, 1);
  return a;
}

inline void reject_unknown(const SpecArgs& a, std::initializer_list<std::string_view> known) {
  for (const auto& [k, v] : a.kv) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw ParseError("unknown key '" + k + "' for '" + a.kind + "'", 1, v.second);
    }
  }
}

}  // namespace detail

inline ConstructResult construct_from_spec(std::string_view spec, const FileLoader& load = read_file,
                                           std::size_t cap = PermutationGroup::default_cap) {
  auto a = detail::tokenize_spec(spec);
  ConstructResult out;
  out.comments.push_back(" construct: " + std::string(spec));
  if (a.kind == "conj") {
    detail::reject_unknown(a, {"d", "type", "group", "class"});
    auto [dv, dcol] = a.require("d");
    std::size_t d = detail::to_size(dv, dcol);
    if (d == 0) throw ParseError("d must be positive", 1, dcol);
    auto [tv, tcol] = a.require("type");
    std::vector<std::size_t> lengths;
    std::size_t sum = 0;
    for (const auto& t : detail::split(tv, ',')) {
      auto l = detail::to_size(t, tcol);
      if (l == 0) throw ParseError("cycle lengths must be positive", 1, tcol);
      lengths.push_back(l);
      sum += l;
    }
    if (sum > d) throw ParseError("cycle type exceeds degree", 1, tcol);
    std::sort(lengths.rbegin(), lengths.rend());
    while (sum < d) {
      lengths.push_back(1);
      ++sum;
    }
    std::string group = "sym";
    if (auto gv = a.get("group")) group = gv->first;
    if (group != "sym" && group != "alt") throw ParseError("group must be sym or alt", 1, a.get("group")->second);
    std::size_t cls = 0;
    if (auto cv = a.get("class")) {
      cls = detail::to_size(cv->first, cv->second);
      if (cls > 1) throw ParseError("class must be 0 or 1", 1, cv->second);
    }
    auto g = detail::permutation_of_type(d, lengths);
    if (group == "alt") {
      std::size_t tr = 0;
      for (auto l : lengths) tr += l - 1;
      if (tr % 2) throw PreconditionError("odd permutation has no class in the alternating group");
      if (cls == 1) {
        if (!alternating_split_predicted(CycleType::from_lengths(lengths))) {
          throw PreconditionError("class=1 requested but this class does not split");
        }
        g = conjugate(Permutation::from_cycles(d, {{0, 1}}), g);
      }
      PermutationGroup A(d, PermutationGroup::alternating(d).generators(), cap);
      out.rack = conjugacy_class_quandle(A, g).rack;
    } else {
      if (cls != 0) throw PreconditionError("class=1 only applies to group=alt");
      PermutationGroup S(d, PermutationGroup::symmetric(d).generators(), cap);
      out.rack = conjugacy_class_quandle(S, g).rack;
    }
  } else if (a.kind == "affine") {
    detail::reject_unknown(a, {"orders", "alpha"});
    auto [ov, ocol] = a.require("orders");
    std::vector<std::size_t> orders;
    for (const auto& t : detail::split(ov, ',')) {
      auto o = detail::to_size(t, ocol);
      if (o == 0) throw ParseError("orders must be positive", 1, ocol);
      orders.push_back(o);
    }
    auto [av, acol] = a.require("alpha");
    std::vector<std::vector<std::size_t>> images;
    for (const auto& img : detail::split(av, ',')) {
      std::vector<std::size_t> c;
      for (const auto& t : detail::split(img, ':')) c.push_back(detail::to_size(t, acol));
      images.push_back(std::move(c));
    }
    if (images.size() != orders.size()) throw ParseError("alpha needs one image per cyclic factor", 1, acol);
    std::size_t total = 1;
    for (auto o : orders) {
      total *= o;
      if (total > 4096) throw BoundExceeded("affine group larger than 4096 elements");
    }
    auto q = affine_quandle(AffineSpec::from_generator_images(orders, images));
    out.rack = std::move(q.rack);
    out.beta_bijective = q.beta_bijective;
    out.comments.push_back(std::string(" beta: ") + (q.beta_bijective ? "bijective" : "not bijective"));
  } else if (a.kind == "homog") {
    detail::reject_unknown(a, {"group", "sub", "alpha"});
    auto gdoc = parse_perm(load(a.require("group").first));
    const std::size_t deg = gdoc.degree;
    PermutationGroup G(deg, gdoc.permutations, cap);
    std::vector<Permutation> sub;
    auto [sv, scol] = a.require("sub");
    if (!sv.empty() && sv.front() == '(') {
      for (const auto& c : detail::split(sv, ';')) sub.push_back(parse_cycles(c, deg, 1));
    } else {
      auto sdoc = parse_perm(load(sv));
      if (sdoc.degree != deg) throw DegreeMismatch(deg, sdoc.degree);
      sub = std::move(sdoc.permutations);
    }
    auto [alv, alcol] = a.require("alpha");
    Permutation by(deg);
    if (alv.rfind("conj:", 0) == 0) {
      by = parse_cycles(std::string_view(alv).substr(5), deg, 1);
    } else if (alv != "id") {
      throw ParseError("alpha must be id or conj:<cycles>", 1, alcol);
    }
    auto spec_h = HomogeneousSpec::from_function(G.elements(), sub,
                                                 [&](const Permutation& g) { return conjugate(by, g); });
    out.rack = homogeneous_quandle(spec_h);
  } else if (a.kind == "trivial" || a.kind == "dihedral" || a.kind == "cyclic-rack") {
    detail::reject_unknown(a, {"n"});
    auto [nv, ncol] = a.require("n");
    std::size_t n = detail::to_size(nv, ncol);
    if (n == 0 || n > 4096) throw ParseError("n must be in 1..4096", 1, ncol);
    out.rack = a.kind == "trivial" ? trivial_quandle(n) : a.kind == "dihedral" ? dihedral_quandle(n) : cyclic_rack(n);
  } else {
    throw ParseError("unknown constructor '" + a.kind + "'", 1, 1);
  }
  return out;
}

}  // namespace quandle
