/* Copyright 2026 The holdef Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holdef/deps.hpp"
#include "holdef/fragment.hpp"
#include "holdef/frontend.hpp"
#include "holdef/model_ext.hpp"

namespace holdef {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUnknown = 2, kExitUsage = 64 };

/// Exit code for an error: resource limits and undecided searches are unknown,
/// everything else is a failed verdict.
inline int exit_for(Errc code) {
  switch (code) {
    case Errc::Resource:
    case Errc::TerminationUnknown:
    case Errc::RequiresInfinity: return kExitUnknown;
    case Errc::Usage: return kExitUsage;
    default: return kExitFail;
  }
}

inline const char* verdict_for(int exit_code) {
  return exit_code == kExitPass ? "pass" : exit_code == kExitUnknown ? "unknown" : "fail";
}

struct CliOptions {
  std::string command;
  std::string theory;
  std::size_t depth = 2;
  std::size_t bound = kDefaultTerminationBound;
  std::size_t carrier_cap = SemOptions{}.carrier_cap;
  std::string json_path;
  std::string dot_path;
  std::optional<std::size_t> update;
  std::optional<std::string> symbol;

  ExtOptions ext() const {
    ExtOptions o;
    o.depth = depth;
    o.termination_bound = bound;
    o.sem.carrier_cap = carrier_cap;
    return o;
  }
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

/// Report skeleton; every command fills "verdict" and its own fields.
inline ordered_json report_head(const CliOptions& o) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = o.command;
  j["inputs"] = {{"theory", o.theory}};
  if (o.update) j["inputs"]["update"] = *o.update;
  if (o.symbol) j["inputs"]["symbol"] = *o.symbol;
  j["bounds"] = {{"depth", o.depth}, {"bound", o.bound}, {"carrier_cap", o.carrier_cap}};
  return j;
}

inline ordered_json error_json(const Error& e) { return {{"code", errc_name(e.code)}, {"message", e.message}}; }

inline ordered_json nodes_json(const std::vector<DepNode>& path) {
  ordered_json a = ordered_json::array();
  for (const auto& n : path) a.push_back(to_string(n));
  return a;
}

inline std::string path_str(const std::vector<DepNode>& path) {
  std::string s;
  for (const auto& n : path) s += (s.empty() ? "" : " -> ") + to_string(n);
  return s;
}

inline bool write_text(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) return true;
  if (path == "-") {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "holdef: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return true;
}

inline int finish(const CliOptions& o, ordered_json report, int code, std::ostream& out, std::ostream& err) {
  report["verdict"] = verdict_for(code);
  if (!write_text(o.json_path, report.dump(2) + "\n", out, err)) return kExitUsage;
  return code;
}

/// Loads the theory; a script that fails to elaborate is reported here.
inline std::optional<Elaborated> load(const CliOptions& o, ordered_json& report, int& code, std::ostream& out,
                                      std::ostream& err) {
  auto text = read_file(o.theory);
  if (!text) {
    err << "holdef: " << text.error().message << "\n";
    code = kExitUsage;
    return std::nullopt;
  }
  auto script = parse_theory(*text);
  if (!script) {
    out << o.theory << ":" << script.error().message << "\n";
    report["error"] = error_json(script.error());
    code = kExitFail;
    return std::nullopt;
  }
  UpdateOptions uo;
  uo.termination_bound = o.bound;
  return elaborate(*script, uo);
}

inline bool require_valid(const CliOptions& o, const Elaborated& e, ordered_json& report, int& code,
                          std::ostream& out) {
  if (!e.error) return true;
  out << o.theory << ":" << e.error->message << "\n";
  report["error"] = error_json(*e.error);
  code = exit_for(e.error->code);
  return false;
}

inline std::size_t pick_update(const CliOptions& o, const Elaborated& e, std::ostream& err) {
  std::size_t k = o.update.value_or(e.entries.size());
  if (k == 0 || k > e.entries.size()) {
    err << "holdef: --update must be between 1 and " << e.entries.size() << "\n";
    return 0;
  }
  return k;
}

inline int cmd_check(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  ordered_json ups = ordered_json::array();
  for (const auto& en : e->entries) {
    std::vector<DepNode> intro = upd_introduces(en.upd);
    out << "ok " << en.index << " " << update_kind(en.upd);
    for (const auto& n : intro) out << " " << to_string(n);
    out << "\n";
    ups.push_back({{"index", en.index}, {"kind", update_kind(en.upd)}, {"introduces", nodes_json(intro)}});
  }
  report["prelude"] = e->prelude;
  report["updates"] = ups;
  if (e->error) {
    out << "rejected " << e->entries.size() + 1 << ": " << e->error->str() << "\n";
    report["error"] = error_json(*e->error);
    code = exit_for(e->error->code);
    if (e->rejected && e->error->code == Errc::DependencyCycle) {
      Context cand = e->ctxt.with(*e->rejected);
      auto edges = dep_edges(cand);
      TerminationVerdict v = check_termination(edges, o.bound);
      if (const auto* cyc = std::get_if<Cycle>(&v)) {
        bool replays = cycle_replays(edges, cyc->path);
        out << "cycle " << path_str(cyc->path) << (replays ? " (replays)" : " (does not replay)") << "\n";
        report["cycle"]["path"] = nodes_json(cyc->path);
        report["cycle"]["replays"] = replays;
      }
    }
  } else {
    out << "theory ok: " << e->entries.size() << " updates\n";
  }
  return finish(o, report, code, out, err);
}

inline std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

inline int cmd_deps(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  // A cyclic update is rejected by check; show the graph it would create.
  Context ctxt = e->rejected ? e->ctxt.with(*e->rejected) : e->ctxt;
  if (e->error && !e->rejected) return require_valid(o, *e, report, code, out), finish(o, report, code, out, err);
  auto edges = dep_edges(ctxt);
  ordered_json ej = ordered_json::array();
  std::string dot = "digraph deps {\n";
  for (const auto& ed : edges) {
    out << to_string(ed.src) << " -> " << to_string(ed.dst) << "  [" << ed.rule << "]\n";
    ej.push_back({{"src", to_string(ed.src)}, {"dst", to_string(ed.dst)}, {"rule", ed.rule}});
    dot += "  \"" + dot_escape(to_string(ed.src)) + "\" -> \"" + dot_escape(to_string(ed.dst)) + "\" [label=\"" +
           std::to_string(ed.rule) + "\"];\n";
  }
  dot += "}\n";
  report["edges"] = ej;
  TerminationVerdict v = check_termination(edges, o.bound);
  ordered_json vj = {{"result", verdict_name(v)}};
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Terminating>) {
          out << "terminating (" << r.expanded << " expansions)\n";
          vj["expanded"] = r.expanded;
        } else if constexpr (std::is_same_v<R, Cycle>) {
          out << "cycle " << path_str(r.path) << "\n";
          vj["path"] = nodes_json(r.path);
          vj["replays"] = cycle_replays(edges, r.path);
          code = kExitFail;
        } else {
          out << "unknown: " << r.reason << "\n";
          vj["reason"] = r.reason;
          code = kExitUnknown;
        }
      },
      v);
  report["termination"] = vj;
  if (!write_text(o.dot_path, dot, out, err)) return kExitUsage;
  return finish(o, report, code, out, err);
}

inline int cmd_indep(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  if (!o.symbol) {
    err << "holdef: indep needs --symbol\n";
    return kExitUsage;
  }
  auto sym = parse_symbol(*o.symbol);
  if (!sym) {
    err << "holdef: --symbol: " << sym.error().message << "\n";
    return kExitUsage;
  }
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  if (!require_valid(o, *e, report, code, out)) return finish(o, report, code, out, err);
  std::size_t k = pick_update(o, *e, err);
  if (k == 0) return kExitUsage;
  FragmentSpec spec = indep_frag_upd_spec(e->after(k));
  spec.bound = std::max<std::size_t>(spec.bound, o.bound);
  report["introduces"] = nodes_json(spec.U);
  bool total = sym->is_type() ? in_total_fragment_types(spec.host, sym->type())
                              : in_total_fragment_consts(spec.host, sym->constant());
  VQuery q = in_V(spec, *sym);
  if (!total) {
    out << "outside fragment: " << to_string(*sym) << " is not a ground symbol of the signature\n";
    report["membership"] = "out";
    report["reason"] = "not in the total fragment";
  } else if (q.answer == Tri::Yes) {
    out << "outside fragment: " << path_str(q.path) << "\n";
    report["membership"] = "out";
    report["path"] = nodes_json(q.path);
  } else if (q.answer == Tri::No) {
    out << "inside fragment: " << to_string(*sym) << "\n";
    report["membership"] = "in";
  } else {
    out << "unknown: reachability search exceeded " << spec.bound << " nodes\n";
    report["membership"] = "unknown";
    code = kExitUnknown;
  }
  return finish(o, report, code, out, err);
}

inline int cmd_model(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  if (!require_valid(o, *e, report, code, out)) return finish(o, report, code, out, err);
  auto model = build_model(e->ctxt, o.ext());
  if (!model) {
    out << "no model: " << model.error().str() << "\n";
    report["error"] = error_json(model.error());
    return finish(o, report, exit_for(model.error().code), out, err);
  }
  ordered_json m = model_to_json(**model, e->ctxt.sig(), o.depth);
  out << "model: " << m["types"].size() << " types, " << m["consts"].size() << " constants at depth " << o.depth
      << "\n";
  if (m.contains("errors")) code = kExitUnknown;
  report["model"] = m;
  return finish(o, report, code, out, err);
}

inline int cmd_conserve(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  if (!require_valid(o, *e, report, code, out)) return finish(o, report, code, out, err);
  std::size_t k = pick_update(o, *e, err);
  if (k == 0) return kExitUsage;
  ExtOptions opt = o.ext();
  Context before = e->before(k);
  const Update& upd = e->entries[k - 1].upd;
  auto base = build_model(before, opt);
  if (!base) {
    out << "no base model: " << base.error().str() << "\n";
    report["error"] = error_json(base.error());
    return finish(o, report, exit_for(base.error().code), out, err);
  }
  ExtOptions lazy = opt;
  lazy.verify = false;
  auto ext = extend_model({*base, before, upd, lazy});
  if (!ext) {
    out << "no extension: " << ext.error().str() << "\n";
    report["error"] = error_json(ext.error());
    return finish(o, report, exit_for(ext.error().code), out, err);
  }
  FragmentSpec spec = indep_frag_upd_spec(before.with(upd), before.sig());
  ConservativityReport rep = check_conservativity(**base, **ext, spec, o.depth, {}, opt.sem);
  ordered_json kept = ordered_json::array();
  for (const auto& en : rep.kept) {
    out << (en.equal ? "kept " : "changed ") << en.symbol << "\n";
    kept.push_back({{"symbol", en.symbol}, {"equal", en.equal}});
  }
  for (const auto& u : rep.unknown) out << "unknown " << u << "\n";
  for (const auto& x : rep.errors) out << "error " << x << "\n";
  report["compared"] = kept;
  report["unknown"] = rep.unknown;
  report["errors"] = rep.errors;
  if (!rep.pass) code = kExitFail;
  else if (!rep.unknown.empty()) code = kExitUnknown;
  out << "conservative: " << verdict_for(code) << " (" << rep.kept.size() << " symbols)\n";
  return finish(o, report, code, out, err);
}

inline int cmd_consist(const CliOptions& o, std::ostream& out, std::ostream& err) {
  ordered_json report = report_head(o);
  int code = kExitPass;
  auto e = load(o, report, code, out, err);
  if (!e) return code == kExitUsage ? code : finish(o, report, code, out, err);
  if (!require_valid(o, *e, report, code, out)) return finish(o, report, code, out, err);
  auto rep = check_consistency(e->ctxt, o.ext());
  if (!rep) {
    out << "not shown consistent: " << rep.error().str() << "\n";
    report["error"] = error_json(rep.error());
    return finish(o, report, exit_for(rep.error().code), out, err);
  }
  ordered_json val = ordered_json::object();
  for (const auto& [key, v] : rep->counterexample.values) val[key.first + ":" + to_string(key.second)] = v.str();
  out << "consistent: |- " << term_to_string(rep->refl.concl) << " checks; x = y fails at";
  for (const auto& [key, v] : rep->counterexample.values) out << " " << key.first << "=" << v.str();
  out << "\n";
  report["refl"] = term_to_string(rep->refl.concl);
  report["counterexample"] = val;
  return finish(o, report, code, out, err);
}

}  // namespace detail

/// Command-line entry point. Output goes to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Definitional theory checker for higher-order logic", "holdef"};
  app.require_subcommand(1);
  CliOptions o;
  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(const CliOptions&, std::ostream&, std::ostream&);
  };
  const Cmd cmds[] = {
      {"check", "check every update of a theory", detail::cmd_check},
      {"deps", "dependency edges and termination verdict", detail::cmd_deps},
      {"indep", "independent-fragment membership of a symbol", detail::cmd_indep},
      {"model", "build and dump a model of the theory", detail::cmd_model},
      {"conserve", "compare fragment values across one update", detail::cmd_conserve},
      {"consist", "consistency via the constructed model", detail::cmd_consist},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("theory", o.theory, "theory file (.thy)")->required();
    sub->add_option("--depth", o.depth, "type depth for bounded checks")->capture_default_str();
    sub->add_option("--bound", o.bound, "termination search bound")->capture_default_str();
    sub->add_option("--carrier-cap", o.carrier_cap, "maximum base-type carrier size")->capture_default_str();
    sub->add_option("--json", o.json_path, "write a JSON report ('-' for stdout)");
    if (std::string(c.name) == "deps") sub->add_option("--dot", o.dot_path, "write the graph in DOT format");
    if (std::string(c.name) == "indep" || std::string(c.name) == "conserve")
      sub->add_option("--update", o.update, "1-based index among the theory's own updates");
    if (std::string(c.name) == "indep") sub->add_option("--symbol", o.symbol, "symbol, e.g. \"(const e (bool))\"");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "holdef: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto& c : cmds) {
    if (app.got_subcommand(c.name)) {
      o.command = c.name;
      try {
        return c.run(o, out, err);
      } catch (const HolError& e) {
        err << "holdef: " << e.what() << "\n";
        return exit_for(e.code());
      }
    }
  }
  return kExitUsage;
}

}  // namespace holdef
