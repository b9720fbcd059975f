#pragma once

// The quandle command-line tool as a function, so tests can drive it without
// spawning processes.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandle/analysis.hpp"
#include "quandle/conjecture.hpp"
#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"
#include "quandle/fixtures.hpp"
#include "quandle/io.hpp"
#include "quandle/rack.hpp"
#include "quandle/report.hpp"

namespace quandle::cli {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string load_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  constexpr std::string_view prefix = "fixture:";
  if (path.starts_with(prefix)) {
    auto body = builtin_fixture(std::string_view(path).substr(prefix.size()));
    if (!body) throw Error("unknown fixture '" + path.substr(prefix.size()) + "'");
    return std::string(*body);
  }
  return read_file(path);
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write " + out_path);
  f << text;
}

inline std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

inline std::string profile_or_na(const std::optional<Profile>& p) { return p ? p->to_string() : "n/a"; }

inline std::string partition_text(const CycleType& ct) {
  std::string s = "[";
  bool first = true;
  for (auto it = ct.parts.rbegin(); it != ct.parts.rend(); ++it) {
    for (std::size_t i = 0; i < it->second; ++i) {
      if (!first) s += ',';
      s += std::to_string(it->first);
      first = false;
    }
  }
  return s + "]";
}

struct ScanOutcome {
  std::string text;
  ordered_json json;
  ExitCode code = ExitCode::ok;
};

inline ScanOutcome scan_classes(const char* mode, std::size_t d, const std::vector<SymCheckRecord>& recs) {
  ScanOutcome o;
  o.json["mode"] = mode;
  o.json["d"] = d;
  ordered_json rows = ordered_json::array();
  std::size_t connected = 0;
  bool all_pass = true;
  for (const auto& r : recs) {
    const auto& c = r.record;
    std::string line = partition_text(c.cycle_type);
    if (c.split) line += " class " + std::to_string(c.class_index);
    line += " size " + std::to_string(c.class_size) + " connected: " + (c.connected ? "yes" : "no");
    line += " profile: " + profile_or_na(c.profile);
    if (r.hayashi) {
      ++connected;
      all_pass = all_pass && r.hayashi->holds;
      line += std::string(" hayashi: ") + (r.hayashi->holds ? "holds" : "fails");
      line += " witness: " + (r.trivial_witness ? "y=" + std::to_string(*r.trivial_witness + 1) : std::string("none"));
    } else {
      line += " hayashi: n/a";
    }
    o.text += line + "\n";
    rows.push_back(to_json(r));
  }
  o.json["classes"] = rows;
  o.json["summary"] = {{"classes", recs.size()}, {"connected", connected}, {"all_pass", all_pass}};
  o.text += "summary: " + std::to_string(recs.size()) + " noncentral classes, " + std::to_string(connected) +
            " connected, " + (all_pass ? "all pass" : "FAILURES") + "\n";
  if (!all_pass) o.code = ExitCode::counterexample;
  return o;
}

inline ScanOutcome scan_enumeration(std::size_t n, const std::vector<RackTable>& found, bool racks,
                                    std::size_t cap) {
  ScanOutcome o;
  o.json["mode"] = racks ? "enumerate-racks" : "enumerate";
  o.json["n"] = n;
  ordered_json rows = ordered_json::array();
  bool all_pass = true;
  std::size_t index = 0;
  for (const auto& X : found) {
    ++index;
    auto rep = full_report(X, cap);
    const bool holds = rep.hayashi && rep.hayashi->holds;
    all_pass = all_pass && holds;
    if (rep.exit_code() == ExitCode::theorem_falsified) o.code = ExitCode::theorem_falsified;
    std::string line = "#" + std::to_string(index) + " " + to_string(X.kind()) +
                       " profile: " + profile_or_na(rep.profile) + " faithful: " + (*rep.faithful ? "yes" : "no") +
                       " primitive: " + (rep.primitive ? (*rep.primitive ? "yes" : "no") : "n/a") +
                       " hayashi: " + (holds ? "holds" : "fails");
    o.text += line + "\n";
    ordered_json row;
    row["index"] = index;
    row["fingerprint"] = fingerprint(X);
    row["report"] = to_json(rep);
    rows.push_back(row);
  }
  o.json["racks"] = rows;
  o.json["summary"] = {{"count", found.size()}, {"all_pass", all_pass}};
  o.text += "summary: " + std::to_string(found.size()) + " connected " + (racks ? "racks" : "quandles") + ", " +
            (all_pass ? "all pass" : "FAILURES") + "\n";
  if (!all_pass && o.code == ExitCode::ok) o.code = ExitCode::counterexample;
  return o;
}

}  // namespace detail

// Returns the process exit code. Output is deterministic for fixed arguments.
inline int run(std::vector<std::string> args, Streams io) {
  CLI::App app{"Finite rack and quandle analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::size_t cap = PermutationGroup::default_cap;
  std::string out_path;
  app.add_flag("--json", json, "Emit JSON");
  app.add_option("--cap", cap, "Group materialization cap")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output to a file");

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check the rack axioms");
  validate_cmd->add_option("path", path, "RTBL or PERM file, '-' for stdin, or fixture:<name>")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report");
  analyze_cmd->add_option("path", path, "RTBL or PERM file, '-' for stdin, or fixture:<name>")->required();

  std::string spec;
  auto* construct_cmd = app.add_subcommand("construct", "Build a rack from a spec and emit RTBL");
  construct_cmd->add_option("spec", spec, "Constructor spec")->required();

  std::optional<std::size_t> sym, alt, enumerate;
  std::optional<std::size_t> bound;
  bool racks = false;
  unsigned threads = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Class scans and connected-quandle enumeration");
  auto* sym_opt = scan_cmd->add_option("--sym", sym, "Classes of S_d");
  auto* alt_opt = scan_cmd->add_option("--alt", alt, "Classes of A_d");
  auto* enum_opt = scan_cmd->add_option("--enumerate", enumerate, "Connected quandles of order n");
  sym_opt->excludes(alt_opt)->excludes(enum_opt);
  alt_opt->excludes(enum_opt);
  scan_cmd->add_option("--bound", bound, "Largest degree or order allowed");
  scan_cmd->add_flag("--racks", racks, "Enumerate racks instead of quandles");
  scan_cmd->add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store;
  argv_store.push_back("quandle");
  for (auto& a : args) argv_store.push_back(std::move(a));
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::input_error);
  }

  try {
    if (*validate_cmd) {
      auto doc = parse_rack(detail::load_input(path, io.in));
      const auto& d = doc.rack.diagnosis();
      std::string text = json ? detail::dump(to_json(d, doc.rack.size())) : to_text(d, doc.rack.size());
      detail::emit(text, out_path, io.out);
      return static_cast<int>(d.is_rack() ? ExitCode::ok : ExitCode::input_error);
    }
    if (*analyze_cmd) {
      auto doc = parse_rack(detail::load_input(path, io.in));
      auto rep = full_report(doc.rack, cap);
      if (auto beta = doc.comment_value("beta")) rep.beta_bijective = *beta == "bijective";
      detail::emit(json ? detail::dump(to_json(rep)) : to_text(rep), out_path, io.out);
      if (!doc.rack.is_rack()) return static_cast<int>(ExitCode::input_error);
      return static_cast<int>(rep.exit_code());
    }
    if (*construct_cmd) {
      auto loader = [&](const std::string& p) { return detail::load_input(p, io.in); };
      auto res = construct_from_spec(spec, loader, cap);
      std::string text;
      if (json) {
        ordered_json j;
        j["n"] = res.rack.size();
        j["kind"] = to_string(res.rack.kind());
        j["beta_bijective"] = res.beta_bijective ? ordered_json(*res.beta_bijective) : ordered_json(nullptr);
        ordered_json rows = ordered_json::array();
        for (Point x = 0; x < res.rack.size(); ++x) {
          ordered_json row = ordered_json::array();
          for (Point y : res.rack.row(x)) row.push_back(y + 1);
          rows.push_back(row);
        }
        j["table"] = rows;
        text = detail::dump(j);
      } else {
        text = write_rtbl(res.rack, res.comments);
      }
      detail::emit(text, out_path, io.out);
      return 0;
    }
    if (*scan_cmd) {
      detail::ScanOutcome o;
      if (sym) {
        o = detail::scan_classes("sym", *sym, theorem_sym_check(*sym, bound.value_or(default_scan_bound), cap));
      } else if (alt) {
        o = detail::scan_classes("alt", *alt, alternating_check(*alt, bound.value_or(default_scan_bound), cap));
      } else if (enumerate) {
        EnumerationOptions opt;
        opt.bound = bound.value_or(opt.bound);
        opt.quandles_only = !racks;
        opt.threads = threads;
        o = detail::scan_enumeration(*enumerate, enumerate_connected(*enumerate, opt), racks, cap);
      } else {
        io.err << "error: scan needs one of --sym, --alt, --enumerate\n";
        return static_cast<int>(ExitCode::input_error);
      }
      detail::emit(json ? detail::dump(o.json) : o.text, out_path, io.out);
      return static_cast<int>(o.code);
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  }
  return 0;
}

}  // namespace quandle::cli
