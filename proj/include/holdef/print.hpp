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

#include <string>

#include "holdef/syntax.hpp"
#include "holdef/theory.hpp"

namespace holdef {

//------------------------------------------------------------------------------
// Display

inline std::string to_string(const Type& ty) {
  if (ty.is_var()) return ty.name();
  if (ty.is_fun()) {
    std::string d = to_string(ty.dom());
    if (ty.dom().is_fun()) d = "(" + d + ")";
    return d + "->" + to_string(ty.rng());
  }
  if (ty.args().empty()) return ty.name();
  std::string s;
  for (std::size_t i = 0; i < ty.args().size(); ++i) {
    std::string a = to_string(ty.args()[i]);
    if (ty.args()[i].is_fun()) a = "(" + a + ")";
    s += (i ? "," : "") + a;
  }
  return (ty.args().size() == 1 ? s : "(" + s + ")") + " " + ty.name();
}

inline std::string to_string(const DepNode& n) {
  if (n.is_type()) return to_string(n.type());
  return n.constant().name + ":" + to_string(n.constant().ty);
}


namespace detail {

inline bool is_binop(const Term& t, std::string* op) {
  if (!t.is_comb() || !t.rator().is_comb() || !t.rator().rator().is_const()) return false;
  const std::string& n = t.rator().rator().name();
  if (n != "=" && n != "/\\" && n != "\\/" && n != "==>") return false;
  *op = n;
  return true;
}

inline void print_term(const Term& t, std::string& out, bool wrap) {
  std::string op;
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const: out += t.name(); return;
    case TermKind::Abs:
      if (wrap) out += '(';
      out += "\\" + t.binder().name() + ". ";
      print_term(t.body(), out, false);
      if (wrap) out += ')';
      return;
    case TermKind::Comb:
      if (wrap) out += '(';
      if (is_binop(t, &op)) {
        print_term(t.rator().rand(), out, true);
        out += " " + op + " ";
        print_term(t.rand(), out, true);
      } else {
        print_term(t.rator(), out, t.rator().is_abs());
        out += ' ';
        print_term(t.rand(), out, true);
      }
      if (wrap) out += ')';
      return;
  }
}

}  // namespace detail

/// Human-readable rendering with types omitted.
inline std::string term_to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out, false);
  return out;
}

}  // namespace holdef
