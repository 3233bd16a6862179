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

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace holdef {

enum class Errc {
  // update validity
  NameClash,
  IllTypedProp,
  OpenWitness,
  TvarEscape,
  StrayFreeVar,
  BadDerivation,
  MissingDerivation,
  Orthogonality,
  DependencyCycle,
  TerminationUnknown,
  BuiltinRedefinition,
  NotAnInstance,
  BadTypeDefn,
  // kernel
  RuleShape,
  SideCondition,
  PremiseMismatch,
  NotAnAxiom,
  // semantics
  FragmentViolation,
  IllTyped,
  MissingDomain,
  Resource,
  GuardFailure,
  RequiresInfinity,
  Unreachable,
  ModelCheck,
  NotAdmissible,
  // frontend
  Parse,
  Usage,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NameClash: return "name-clash";
    case Errc::IllTypedProp: return "ill-typed-prop";
    case Errc::OpenWitness: return "open-witness";
    case Errc::TvarEscape: return "tvar-escape";
    case Errc::StrayFreeVar: return "stray-free-variable";
    case Errc::BadDerivation: return "invalid-derivation";
    case Errc::MissingDerivation: return "missing-derivation";
    case Errc::Orthogonality: return "orthogonality-violation";
    case Errc::DependencyCycle: return "dependency-cycle";
    case Errc::TerminationUnknown: return "termination-unknown";
    case Errc::BuiltinRedefinition: return "builtin-redefinition";
    case Errc::NotAnInstance: return "not-an-instance";
    case Errc::BadTypeDefn: return "bad-type-definition";
    case Errc::RuleShape: return "wrong-rule-shape";
    case Errc::SideCondition: return "side-condition-failure";
    case Errc::PremiseMismatch: return "premise-mismatch";
    case Errc::NotAnAxiom: return "not-an-axiom";
    case Errc::FragmentViolation: return "fragment-violation";
    case Errc::IllTyped: return "ill-typed";
    case Errc::MissingDomain: return "apply-outside-domain";
    case Errc::Resource: return "resource-limit";
    case Errc::GuardFailure: return "guard-failure";
    case Errc::RequiresInfinity: return "requires-infinity";
    case Errc::Unreachable: return "unreachable-case";
    case Errc::ModelCheck: return "model-check-failure";
    case Errc::NotAdmissible: return "not-admissible";
    case Errc::Parse: return "parse-error";
    case Errc::Usage: return "usage-error";
  }
  return "unknown";
}

struct Error {
  Errc code;
  std::string message;

  std::string str() const { return std::string(errc_name(code)) + ": " + message; }
};

/// Thrown by the semantic layer; converted to Result at API boundaries.
class HolError : public std::runtime_error {
 public:
  HolError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), err_{code, msg} {}
  explicit HolError(Error e) : HolError(e.code, e.message) {}
  const Error& error() const { return err_; }
  Errc code() const { return err_.code; }

 private:
  Error err_;
};

template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw HolError(error().code, error().message);
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!ok()) throw HolError(error().code, error().message);
    return std::get<0>(std::move(v_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }
  const Error& error() const { return std::get<1>(v_); }

 private:
  std::variant<T, Error> v_;
};

struct Unit {};
using Status = Result<Unit>;

inline Status ok_status() { return Unit{}; }

}  // namespace holdef
