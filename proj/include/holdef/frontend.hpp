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

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "holdef/hol.hpp"
#include "holdef/kernel.hpp"
#include "holdef/model_ext.hpp"
#include "holdef/print.hpp"
#include "holdef/semantics.hpp"
#include "holdef/sexp.hpp"
#include "holdef/update.hpp"

namespace holdef {

//------------------------------------------------------------------------------
// Scripts

struct Statement {
  std::string kind;  // import, newtype, newconst, axiom, typedef, constspec, define
  Sexp form;

  friend bool operator==(const Statement& a, const Statement& b) { return a.kind == b.kind && a.form == b.form; }
};

struct TheoryScript {
  std::vector<Statement> statements;

  friend bool operator==(const TheoryScript&, const TheoryScript&) = default;
};

namespace detail {

inline Error parse_error(const Sexp& at, const std::string& msg) { return Error{Errc::Parse, at.span().str() + ": " + msg}; }

[[noreturn]] inline void fail_at(const Sexp& at, const std::string& msg) { throw HolError(parse_error(at, msg)); }

/// Keyword arguments `:key value` after the first `skip` items of a form.
inline std::map<std::string, Sexp> keywords(const Sexp& form, std::size_t skip) {
  std::map<std::string, Sexp> out;
  for (std::size_t i = skip; i < form.size(); i += 2) {
    const Sexp& k = form[i];
    if (!k.is_atom() || k.text().empty() || k.text()[0] != ':') fail_at(k, "expected a :keyword");
    if (i + 1 >= form.size()) fail_at(k, "keyword " + k.text() + " has no value");
    if (!out.emplace(k.text().substr(1), form[i + 1]).second) fail_at(k, "repeated keyword " + k.text());
  }
  return out;
}

inline const Sexp& required(const std::map<std::string, Sexp>& kw, const std::string& key, const Sexp& form) {
  auto it = kw.find(key);
  if (it == kw.end()) fail_at(form, "missing :" + key);
  return it->second;
}

inline void expect_atom(const Sexp& s, const std::string& what) {
  if (!s.is_atom()) fail_at(s, "expected " + what);
}

inline void check_statement(const Sexp& f) {
  if (!f.is_list() || f.size() == 0 || !f[0].is_atom()) fail_at(f, "expected a statement");
  const std::string& k = f[0].text();
  auto arity = [&](std::size_t n) {
    if (f.size() != n) fail_at(f, "(" + k + " ...) takes " + std::to_string(n - 1) + " arguments");
  };
  if (k == "import") {
    arity(2);
    expect_atom(f[1], "a prelude name");
  } else if (k == "newtype") {
    arity(3);
    expect_atom(f[1], "a type name");
    expect_atom(f[2], "an arity");
    if (f[2].text().find_first_not_of("0123456789") != std::string::npos || f[2].text().empty())
      fail_at(f[2], "arity must be a natural number");
  } else if (k == "newconst") {
    arity(3);
    expect_atom(f[1], "a constant name");
  } else if (k == "axiom") {
    arity(2);
  } else if (k == "typedef") {
    if (f.size() < 2) fail_at(f, "typedef needs a name");
    expect_atom(f[1], "a type name");
    auto kw = keywords(f, 2);
    for (auto key : {"pred", "abs", "rep", "proof"}) required(kw, key, f);
    expect_atom(kw.at("abs"), "an abstraction name");
    expect_atom(kw.at("rep"), "a representation name");
  } else if (k == "constspec") {
    auto kw = keywords(f, 1);
    for (auto key : {"eqs", "prop", "proof"}) required(kw, key, f);
    const Sexp& eqs = kw.at("eqs");
    if (!eqs.is_list()) fail_at(eqs, ":eqs must be a list");
    for (const auto& e : eqs.items()) {
      if (!e.is_list() || e.size() != 2 || !e[0].is_atom()) fail_at(e, "expected (name witness)");
    }
    if (kw.count("overload") && !kw.at("overload").is("true") && !kw.at("overload").is("false"))
      fail_at(kw.at("overload"), ":overload must be true or false");
  } else if (k == "define") {
    if (f.size() < 3) fail_at(f, "define needs a name and a term");
    expect_atom(f[1], "a constant name");
    auto kw = keywords(f, 3);
    if (kw.count("overload") && !kw.at("overload").is("true") && !kw.at("overload").is("false"))
      fail_at(kw.at("overload"), ":overload must be true or false");
  } else {
    fail_at(f[0], "unknown statement " + k);
  }
}

}  // namespace detail

inline Result<TheoryScript> parse_theory(std::string_view text) {
  auto forms = parse_sexps(text);
  if (!forms) return forms.error();
  TheoryScript script;
  try {
    for (const auto& f : *forms) {
      detail::check_statement(f);
      script.statements.push_back({f[0].text(), f});
    }
  } catch (const HolError& e) {
    return e.error();
  }
  return script;
}

/// One statement per line, canonical spacing.
inline std::string print_theory(const TheoryScript& script) {
  std::string out;
  for (const auto& s : script.statements) out += s.form.str() + "\n";
  return out;
}

inline Result<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Error{Errc::Usage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

//------------------------------------------------------------------------------
// Printing types and terms as s-expressions

inline Sexp type_sexp(const Type& ty) {
  if (ty.is_var()) return Sexp::list({Sexp::atom("tyvar"), Sexp::atom(ty.name())});
  if (ty.is_bool()) return Sexp::list({Sexp::atom("bool")});
  if (ty.is_fun()) return Sexp::list({Sexp::atom("fun"), type_sexp(ty.dom()), type_sexp(ty.rng())});
  std::vector<Sexp> items{Sexp::atom("tycon"), Sexp::atom(ty.name())};
  for (const auto& a : ty.args()) items.push_back(type_sexp(a));
  return Sexp::list(std::move(items));
}

/// Fully explicit form; elaborates back to the same term in any scope.
inline Sexp term_sexp(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return Sexp::list({Sexp::atom("var"), Sexp::atom(t.name()), type_sexp(t.type())});
    case TermKind::Const: return Sexp::list({Sexp::atom("const"), Sexp::atom(t.name()), type_sexp(t.type())});
    case TermKind::Comb: return Sexp::list({Sexp::atom("comb"), term_sexp(t.rator()), term_sexp(t.rand())});
    case TermKind::Abs: return Sexp::list({Sexp::atom("abs"), term_sexp(t.binder()), term_sexp(t.body())});
  }
  return Sexp::list({});
}

//------------------------------------------------------------------------------
// Elaboration

namespace detail {

inline Type elab_type(const Sexp& s) {
  if (s.is_atom()) {
    if (s.text().empty()) fail_at(s, "empty type");
    if (s.text() == "bool") return bool_ty();
    if (s.text()[0] == '\'') return tyvar(s.text().substr(1));
    return tyapp(s.text(), {});
  }
  if (s.size() == 0 || !s[0].is_atom()) fail_at(s, "expected a type");
  const std::string& h = s[0].text();
  if (h == "bool") {
    if (s.size() != 1) fail_at(s, "(bool) takes no arguments");
    return bool_ty();
  }
  if (h == "tyvar") {
    if (s.size() != 2 || !s[1].is_atom()) fail_at(s, "expected (tyvar name)");
    return tyvar(s[1].text());
  }
  if (h == "fun") {
    if (s.size() < 3) fail_at(s, "(fun A B ...) needs at least two types");
    Type ty = elab_type(s[s.size() - 1]);
    for (std::size_t i = s.size() - 1; i-- > 1;) ty = fun_ty(elab_type(s[i]), ty);
    return ty;
  }
  std::size_t first = 1;
  std::string name = h;
  if (h == "tycon") {
    if (s.size() < 2 || !s[1].is_atom()) fail_at(s, "expected (tycon name args...)");
    name = s[1].text();
    first = 2;
  }
  std::vector<Type> args;
  for (std::size_t i = first; i < s.size(); ++i) args.push_back(elab_type(s[i]));
  return tyapp(name, std::move(args));
}

class TermElaborator {
 public:
  TermElaborator(const Signature& sig, std::map<std::string, Type> placeholders)
      : sig_(sig), placeholders_(std::move(placeholders)) {}

  Term elab(const Sexp& s) {
    if (s.is_atom()) return atom(s);
    if (s.size() == 0) fail_at(s, "empty term");
    if (s[0].is_atom()) {
      const std::string& h = s[0].text();
      if (h == "var") {
        if (s.size() != 3 || !s[1].is_atom()) fail_at(s, "expected (var name type)");
        return mk_var(s[1].text(), elab_type(s[2]));
      }
      if (h == "const") {
        if (s.size() != 3 || !s[1].is_atom()) fail_at(s, "expected (const name type)");
        return mk_const(s[1].text(), elab_type(s[2]));
      }
      if (h == "comb") {
        if (s.size() != 3) fail_at(s, "expected (comb s t)");
        return apply(s, elab(s[1]), elab(s[2]));
      }
      if (h == "abs" || h == "\\" || h == "lambda") return binder(s, std::nullopt);
      if (h == "forall") return binder(s, "!");
      if (h == "exists") return binder(s, "?");
      if (h == "=") {
        if (s.size() != 3) fail_at(s, "expected (= s t)");
        Term l = elab(s[1]), r = elab(s[2]);
        auto lt = type_of(l), rt = type_of(r);
        if (!lt || !rt || *lt != *rt) fail_at(s, "sides of an equation have different types");
        return mk_eq(l, r);
      }
      if (h == "true" || h == "false") {
        if (s.size() != 1) fail_at(s, "(" + h + ") takes no arguments");
        return mk_const(h == "true" ? "T" : "F", bool_ty());
      }
      static const std::map<std::string, std::pair<std::string, std::size_t>> connectives{
          {"not", {"~", 1}}, {"and", {"/\\", 2}}, {"or", {"\\/", 2}}, {"imp", {"==>", 2}}};
      if (auto it = connectives.find(h); it != connectives.end() && !bound(h) && !placeholders_.count(h)) {
        if (s.size() != it->second.second + 1) fail_at(s, "(" + h + ") takes " + std::to_string(it->second.second) + " arguments");
        Term t = derived::bool_const(it->second.first, it->second.second);
        for (std::size_t i = 1; i < s.size(); ++i) t = apply(s, t, elab(s[i]));
        return t;
      }
      if (!bound(h) && !placeholders_.count(h)) {
        auto it = sig_.tmsof.find(h);
        if (it != sig_.tmsof.end() && !tyvars(it->second).empty()) return poly_apply(s, h, it->second);
      }
    }
    Term t = elab(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) t = apply(s, t, elab(s[i]));
    return t;
  }

  Term var_binding(const Sexp& s) {
    if (s.headed("var")) return elab(s);
    if (!s.is_list() || s.size() != 2 || !s[0].is_atom()) fail_at(s, "expected (name type)");
    return mk_var(s[0].text(), elab_type(s[1]));
  }

 private:
  bool bound(const std::string& n) const {
    return std::any_of(scope_.begin(), scope_.end(), [&](const Term& v) { return v.name() == n; });
  }

  Term atom(const Sexp& s) {
    const std::string& n = s.text();
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name() == n) return *it;
    if (auto it = placeholders_.find(n); it != placeholders_.end()) return mk_var(n, it->second);
    auto it = sig_.tmsof.find(n);
    if (it == sig_.tmsof.end()) fail_at(s, "unknown name " + n);
    if (!tyvars(it->second).empty()) fail_at(s, "polymorphic constant " + n + " needs (const " + n + " TYPE)");
    return mk_const(n, it->second);
  }

  Term binder(const Sexp& s, const std::optional<std::string>& quant) {
    if (s.size() != 3) fail_at(s, "expected (" + s[0].text() + " (x TYPE) body)");
    Term v = var_binding(s[1]);
    scope_.push_back(v);
    Term body = elab(s[2]);
    scope_.pop_back();
    Term lam = mk_abs(v, body);
    if (!quant) return lam;
    if (!has_type(body, bool_ty())) fail_at(s, "quantified body is not a formula");
    return mk_comb(mk_const(*quant, fun_ty(fun_ty(v.type(), bool_ty()), bool_ty())), lam);
  }

  Term apply(const Sexp& at, const Term& f, const Term& x) {
    Term t = mk_comb(f, x);
    if (!welltyped(t)) fail_at(at, "ill-typed application of " + term_to_string(f) + " to " + term_to_string(x));
    return t;
  }

  /// Instance of a polymorphic constant fixed by its argument types.
  Term poly_apply(const Sexp& s, const std::string& name, const Type& schema) {
    std::vector<Term> args;
    for (std::size_t i = 1; i < s.size(); ++i) args.push_back(elab(s[i]));
    std::set<std::string> avoid;
    for (const auto& a : args) {
      auto ty = type_of(a);
      if (!ty) fail_at(s, "ill-typed argument");
      collect_tyvars(*ty, avoid);
    }
    avoid.insert("?r");
    TypeSubst ren = rename_apart(schema, avoid);
    Type sch = apply_subst_type(ren, schema);
    Type want = tyvar("?r");
    for (auto it = args.rbegin(); it != args.rend(); ++it) want = fun_ty(*type_of(*it), want);
    auto mgu = unify_same_vars(sch, want);
    if (!mgu) fail_at(s, "arguments do not fit the type of " + name);
    Type inst = apply_subst_type(*mgu, sch);
    std::set<std::string> left;
    collect_tyvars(inst, left);
    for (const auto& v : left)
      if (!avoid.count(v) || v == "?r") fail_at(s, "cannot infer the type of " + name + "; use (const " + name + " TYPE)");
    Term t = mk_const(name, inst);
    for (const auto& a : args) t = apply(s, t, a);
    return t;
  }

  const Signature& sig_;
  std::map<std::string, Type> placeholders_;
  std::vector<Term> scope_;
};

class ProofElaborator {
 public:
  ProofElaborator(Kernel& k, TermElaborator& te) : k_(k), te_(te) {}

  Derivation elab(const Sexp& s) {
    if (!s.is_list() || s.size() == 0 || !s[0].is_atom()) fail_at(s, "expected a proof step");
    const std::string& r = s[0].text();
    auto n = [&](std::size_t args) {
      if (s.size() != args + 1) fail_at(s, r + " takes " + std::to_string(args) + " arguments");
    };
    auto d = [&](std::size_t i) { return elab(s[i]); };
    auto t = [&](std::size_t i) { return te_.elab(s[i]); };
    try {
      if (r == "ASSUME") return n(1), Derivation::assume(t(1));
      if (r == "REFL") return n(1), Derivation::refl(t(1));
      if (r == "TRANS") return n(2), Derivation::trans(d(1), d(2));
      if (r == "MK_COMB") return n(2), Derivation::mk_comb(d(1), d(2));
      if (r == "ABS") return n(2), Derivation::abs(te_.var_binding(s[1]), t(2));
      if (r == "ABS_CONG") return n(2), Derivation::abs_cong(te_.var_binding(s[1]), d(2));
      if (r == "BETA") return n(1), Derivation::beta(t(1));
      if (r == "EQ_MP") return n(2), Derivation::eq_mp(d(1), d(2));
      if (r == "DEDUCT_ANTISYM") return n(2), Derivation::deduct_antisym(d(1), d(2));
      if (r == "AXIOM") return n(1), Derivation::axiom(t(1));
      if (r == "INST_TYPE") {
        n(2);
        TypeSubst theta;
        if (!s[1].is_list()) fail_at(s[1], "expected ((a TYPE) ...)");
        for (const auto& b : s[1].items()) {
          if (!b.is_list() || b.size() != 2 || !b[0].is_atom()) fail_at(b, "expected (a TYPE)");
          theta.bind(b[0].text(), elab_type(b[1]));
        }
        return Derivation::inst_type(theta, d(2));
      }
      if (r == "INST") {
        n(2);
        TermSubst sigma;
        if (!s[1].is_list()) fail_at(s[1], "expected (((x TYPE) TERM) ...)");
        for (const auto& b : s[1].items()) {
          if (!b.is_list() || b.size() != 2) fail_at(b, "expected ((x TYPE) TERM)");
          sigma.emplace_back(te_.var_binding(b[0]), te_.elab(b[1]));
        }
        return Derivation::inst(sigma, d(2));
      }
      if (r == "SYM") return n(1), derived::sym(k_, d(1));
      if (r == "AP_TERM") return n(2), derived::ap_term(t(1), d(2));
      if (r == "AP_THM") return n(2), derived::ap_thm(d(1), t(2));
      if (r == "TRUTH") return n(0), derived::truth(k_);
      if (r == "EQT_INTRO") return n(1), derived::eqt_intro(k_, d(1));
      if (r == "EQT_ELIM") return n(1), derived::eqt_elim(k_, d(1));
      if (r == "CONJ") return n(2), derived::conj(k_, d(1), d(2));
      if (r == "CONJUNCT1") return n(1), derived::conjunct1(k_, d(1));
      if (r == "CONJUNCT2") return n(1), derived::conjunct2(k_, d(1));
      if (r == "DISCH") return n(2), derived::disch(k_, t(1), d(2));
      if (r == "MP") return n(2), derived::mp(k_, d(1), d(2));
      if (r == "NOT_INTRO") return n(1), derived::not_intro(k_, d(1));
      if (r == "HEAD_BETA") return n(1), derived::head_beta(k_, t(1));
      if (r == "DEF") {
        if (s.size() != 2 && s.size() != 3) fail_at(s, "expected (DEF name [TYPE])");
        if (!s[1].is_atom()) fail_at(s[1], "expected a constant name");
        std::optional<Type> at;
        if (s.size() == 3) at = elab_type(s[2]);
        return derived::definition(k_, s[1].text(), at);
      }
      if (r == "UNFOLD") {
        if (s.size() < 2) fail_at(s, "expected (UNFOLD definition args...)");
        std::vector<Term> args;
        for (std::size_t i = 2; i < s.size(); ++i) args.push_back(t(i));
        return derived::unfold(k_, d(1), args);
      }
    } catch (const HolError& e) {
      if (e.error().code == Errc::Parse) throw;
      fail_at(s, r + ": " + e.error().message);
    }
    fail_at(s[0], "unknown proof rule " + r);
  }

 private:
  Kernel& k_;
  TermElaborator& te_;
};

}  // namespace detail

/// One update produced by a script statement.
struct ElabEntry {
  std::size_t statement = 0;  // 0-based index into the script
  std::size_t index = 0;      // 1-based index among the script's own updates
  Update upd;
  std::optional<Derivation> deriv;
};

struct Elaborated {
  Context ctxt;                      // every accepted update, prelude included
  std::size_t prelude = 0;           // number of updates contributed by imports
  std::vector<ElabEntry> entries;    // the script's own updates, in order
  std::vector<std::size_t> offsets;  // prelude updates preceding each own update
  std::optional<Error> error;        // first rejected statement, if any
  std::optional<Update> rejected;    // its update, when it elaborated but failed update_ok

  /// Context just before the script's k-th own update (1-based).
  Context before(std::size_t k) const { return ctxt.prefix(offsets.at(k - 1) + k - 1); }
  Context after(std::size_t k) const { return ctxt.prefix(offsets.at(k - 1) + k); }
};

namespace detail {

inline std::pair<Update, std::optional<Derivation>> elab_statement(const Statement& st, const Context& ctxt) {
  const Sexp& f = st.form;
  const Signature& sig = ctxt.sig();
  if (st.kind == "newtype") return {NewType{f[1].text(), std::stoul(f[2].text())}, std::nullopt};
  if (st.kind == "newconst") return {NewConst{f[1].text(), elab_type(f[2])}, std::nullopt};
  if (st.kind == "axiom") {
    TermElaborator te(sig, {});
    return {NewAxiom{te.elab(f[1])}, std::nullopt};
  }
  Kernel k(ctxt.thy());
  if (st.kind == "typedef") {
    auto kw = keywords(f, 2);
    TermElaborator te(sig, {});
    Term pred = te.elab(kw.at("pred"));
    ProofElaborator pe(k, te);
    Derivation d = pe.elab(kw.at("proof"));
    return {TypeDefn{f[1].text(), pred, kw.at("abs").text(), kw.at("rep").text()}, d};
  }
  if (st.kind == "constspec") {
    auto kw = keywords(f, 1);
    bool ov = kw.count("overload") && kw.at("overload").is("true");
    std::vector<std::pair<std::string, Term>> eqs;
    std::map<std::string, Type> ph;
    TermElaborator wte(sig, {});
    for (const auto& e : kw.at("eqs").items()) {
      Term w = wte.elab(e[1]);
      auto ty = type_of(w);
      if (!ty) fail_at(e[1], "ill-typed witness");
      eqs.emplace_back(e[0].text(), w);
      ph[e[0].text()] = *ty;
    }
    TermElaborator te(sig, ph);
    Term prop = te.elab(kw.at("prop"));
    ProofElaborator pe(k, te);
    Derivation d = pe.elab(kw.at("proof"));
    return {ConstSpec{ov, std::move(eqs), prop}, d};
  }
  if (st.kind == "define") {
    auto kw = keywords(f, 3);
    bool ov = kw.count("overload") && kw.at("overload").is("true");
    TermElaborator te(sig, {});
    Term rhs = te.elab(f[2]);
    auto ty = type_of(rhs);
    if (!ty) fail_at(f[2], "ill-typed definition");
    Term prop = mk_eq(mk_var(f[1].text(), *ty), rhs);
    return {ConstSpec{ov, {{f[1].text(), rhs}}, prop}, Derivation::assume(prop)};
  }
  fail_at(f, "not an update");
}

}  // namespace detail

/// Replays the script from the initial context. Stops at the first statement
/// that fails to elaborate or is rejected, recording the error.
inline Elaborated elaborate(const TheoryScript& script, const UpdateOptions& opt = {}) {
  Elaborated out{init_ctxt(), 0, {}, {}, {}, {}};
  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    const Statement& st = script.statements[i];
    if (st.kind == "import") {
      if (!st.form[1].is("hol")) {
        out.error = detail::parse_error(st.form[1], "unknown prelude " + st.form[1].text());
        return out;
      }
      const Context prelude = hol::hol_ctxt();
      for (const auto& u : prelude.updates()) {
        std::optional<Derivation> d;
        if (const auto* cs = std::get_if<ConstSpec>(&u)) d = Derivation::assume(cs->prop);
        auto next = extend(out.ctxt, u, d, opt);
        if (!next) {
          out.error = Error{next.error().code, st.form.span().str() + ": prelude: " + next.error().message};
          return out;
        }
        out.ctxt = *next;
        ++out.prelude;
      }
      continue;
    }
    try {
      auto [upd, deriv] = detail::elab_statement(st, out.ctxt);
      auto next = extend(out.ctxt, upd, deriv, opt);
      if (!next) {
        out.error = Error{next.error().code, st.form.span().str() + ": " + next.error().message};
        out.rejected = upd;
        return out;
      }
      out.ctxt = *next;
      out.offsets.push_back(out.prelude);
      out.entries.push_back({i, out.entries.size() + 1, upd, deriv});
    } catch (const HolError& e) {
      out.error = e.error();
      return out;
    }
  }
  return out;
}

inline Result<Elaborated> load_theory_file(const std::string& path, const UpdateOptions& opt = {}) {
  auto text = read_file(path);
  if (!text) return text.error();
  auto script = parse_theory(*text);
  if (!script) return Error{Errc::Parse, path + ":" + script.error().message};
  return elaborate(*script, opt);
}

/// Parses a type, term or constant-instance argument given on a command line.
inline Result<Type> parse_type(const std::string& text) {
  auto forms = parse_sexps(text);
  if (!forms) return forms.error();
  if (forms->size() != 1) return Error{Errc::Parse, "expected one type"};
  try {
    return detail::elab_type(forms->front());
  } catch (const HolError& e) {
    return e.error();
  }
}

inline Result<Term> parse_term(const std::string& text, const Signature& sig) {
  auto forms = parse_sexps(text);
  if (!forms) return forms.error();
  if (forms->size() != 1) return Error{Errc::Parse, "expected one term"};
  try {
    detail::TermElaborator te(sig, {});
    return te.elab(forms->front());
  } catch (const HolError& e) {
    return e.error();
  }
}

/// A dependency node written as (const c TYPE) or as a type.
inline Result<DepNode> parse_symbol(const std::string& text) {
  auto forms = parse_sexps(text);
  if (!forms) return forms.error();
  if (forms->size() != 1) return Error{Errc::Parse, "expected one symbol"};
  const Sexp& s = forms->front();
  try {
    if (s.headed("const")) {
      if (s.size() != 3 || !s[1].is_atom()) return detail::parse_error(s, "expected (const name TYPE)");
      return DepNode(ConstInstance{s[1].text(), detail::elab_type(s[2])});
    }
    return DepNode(detail::elab_type(s));
  } catch (const HolError& e) {
    return e.error();
  }
}

inline std::string symbol_sexp(const DepNode& n) {
  if (n.is_type()) return type_sexp(n.type()).str();
  return Sexp::list({Sexp::atom("const"), Sexp::atom(n.constant().name), type_sexp(n.constant().ty)}).str();
}

//------------------------------------------------------------------------------
// Model files

using ordered_json = nlohmann::ordered_json;

inline constexpr std::size_t kMaxModelValueChars = 1u << 16;

/// Tabulates an interpretation on the total fragment of sig up to `depth`.
/// Values printing longer than `max_chars` are elided to their cardinality;
/// entries that cannot be evaluated are listed under "errors".
inline ordered_json model_to_json(const Interpretation& interp, const Signature& sig, std::size_t depth,
                                  std::size_t max_chars = kMaxModelValueChars) {
  ordered_json types = ordered_json::array(), consts = ordered_json::array(), errors = ordered_json::array();
  auto put = [&](ordered_json entry, const char* field, const HFSet& v) {
    std::string text = v.str();
    if (text.size() <= max_chars) {
      entry[field] = text;
    } else {
      entry["elided"] = true;
      entry["cardinality"] = v.size();
    }
    return entry;
  };
  for (const auto& ty : ground_types(sig, depth)) {
    if (!in_total_fragment_types(sig, ty)) continue;
    auto v = interp.type_value(ty);
    if (!v) {
      errors.push_back(type_sexp(ty).str() + ": " + v.error().message);
      continue;
    }
    types.push_back(put({{"type", type_sexp(ty).str()}}, "carrier", *v));
  }
  for (const auto& c : ground_const_instances(sig, depth)) {
    if (!in_total_fragment_consts(sig, c)) continue;
    auto v = interp.const_value(c);
    if (!v) {
      errors.push_back(c.name + " " + type_sexp(c.ty).str() + ": " + v.error().message);
      continue;
    }
    consts.push_back(put({{"name", c.name}, {"type", type_sexp(c.ty).str()}}, "value", *v));
  }
  ordered_json j;
  j["schema"] = 1;
  j["depth"] = depth;
  j["types"] = types;
  j["consts"] = consts;
  if (!errors.empty()) j["errors"] = errors;
  return j;
}

/// Inverse of model_to_json; elided entries are left out of the tables.
inline Result<std::shared_ptr<FiniteInterpretation>> model_from_json(const ordered_json& j) {
  auto m = std::make_shared<FiniteInterpretation>();
  try {
    if (j.value("schema", 0) != 1) return Error{Errc::Parse, "model file: unsupported schema"};
    for (const auto& e : j.at("types")) {
      if (e.value("elided", false)) continue;
      auto ty = parse_type(e.at("type").get<std::string>());
      auto v = HFSet::parse(e.at("carrier").get<std::string>());
      if (!ty || !v) return Error{Errc::Parse, "model file: bad type entry"};
      m->delta[*ty] = *v;
    }
    for (const auto& e : j.at("consts")) {
      if (e.value("elided", false)) continue;
      auto ty = parse_type(e.at("type").get<std::string>());
      auto v = HFSet::parse(e.at("value").get<std::string>());
      if (!ty || !v) return Error{Errc::Parse, "model file: bad constant entry"};
      m->gamma[ConstInstance{e.at("name").get<std::string>(), *ty}] = *v;
    }
  } catch (const nlohmann::json::exception& e) {
    return Error{Errc::Parse, std::string("model file: ") + e.what()};
  }
  return m;
}

}  // namespace holdef
