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
#include <cctype>
#include <cstdint>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holdef/result.hpp"

namespace holdef {

/// A hereditarily finite set in canonical form: children sorted by the total
/// order (cardinality, then lexicographic on children) with no duplicates.
/// Nodes are hash-consed, so equal sets share one node.
class HFSet {
 public:
  HFSet() : node_(empty_node()) {}

  /// Canonicalises an arbitrary list of elements.
  static HFSet of(std::vector<HFSet> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return from_sorted(std::move(elems));
  }

  const std::vector<HFSet>& elements() const { return node_->elems; }
  std::size_t size() const { return node_->elems.size(); }
  bool empty() const { return node_->elems.empty(); }
  std::size_t hash() const { return node_->hash; }

  bool mem(const HFSet& x) const { return std::binary_search(elements().begin(), elements().end(), x); }

  friend bool operator==(const HFSet& a, const HFSet& b) { return a.node_ == b.node_; }

  friend std::strong_ordering operator<=>(const HFSet& a, const HFSet& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (auto c = a.elements()[i] <=> b.elements()[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// Nested braces, elements separated by commas: {} , {{}} , {{},{{}}}.
  std::string str() const {
    std::string out;
    print(out);
    return out;
  }

  static std::optional<HFSet> parse(std::string_view s) {
    std::size_t pos = 0;
    auto r = parse_at(s, pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (!r || pos != s.size()) return std::nullopt;
    return r;
  }

 private:
  struct Node;

  // Live nodes by hash. Entries are weak; a dying node erases its own entry.
  struct Interner {
    std::mutex mu;
    std::unordered_multimap<std::size_t, std::weak_ptr<const Node>> nodes;
  };

  static Interner& interner() {
    static auto* table = new Interner();  // leaked: nodes may outlive static destruction
    return *table;
  }

  struct Node {
    std::vector<HFSet> elems;
    std::size_t hash;

    Node(std::vector<HFSet> e, std::size_t h) : elems(std::move(e)), hash(h) {}
    Node(const Node&) = delete;
    Node& operator=(const Node&) = delete;
    ~Node() {
      if (elems.empty()) return;
      Interner& in = interner();
      std::lock_guard lock(in.mu);
      auto [lo, hi] = in.nodes.equal_range(hash);
      for (auto it = lo; it != hi;) {
        if (it->second.expired()) it = in.nodes.erase(it);
        else ++it;
      }
    }
  };

  explicit HFSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> empty_node() {
    static const auto e = std::make_shared<const Node>(std::vector<HFSet>{}, 0x9e3779b97f4a7c15ULL);
    return e;
  }

  static bool same_children(const std::vector<HFSet>& a, const std::vector<HFSet>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].node_ != b[i].node_) return false;
    return true;
  }

  static HFSet from_sorted(std::vector<HFSet> elems) {
    if (elems.empty()) return HFSet();
    std::size_t h = 0x84222325cbf29ce4ULL ^ elems.size();
    for (const auto& e : elems) h = (h ^ e.hash()) * 0x100000001b3ULL + (h << 6) + (h >> 2);
    std::shared_ptr<const Node> found;
    std::vector<std::shared_ptr<const Node>> seen;  // released after unlocking
    {
      Interner& in = interner();
      std::lock_guard lock(in.mu);
      auto [lo, hi] = in.nodes.equal_range(h);
      for (auto it = lo; it != hi && !found; ++it) {
        auto live = it->second.lock();
        if (live && same_children(live->elems, elems)) found = std::move(live);
        else if (live) seen.push_back(std::move(live));
      }
      if (!found) {
        found = std::make_shared<const Node>(std::move(elems), h);
        in.nodes.emplace(h, found);
      }
    }
    return HFSet(std::move(found));
  }

  void print(std::string& out) const {
    out += '{';
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ',';
      elements()[i].print(out);
    }
    out += '}';
  }

  static std::optional<HFSet> parse_at(std::string_view s, std::size_t& pos) {
    auto skip = [&] {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip();
    if (pos >= s.size() || s[pos] != '{') return std::nullopt;
    ++pos;
    std::vector<HFSet> elems;
    skip();
    if (pos < s.size() && s[pos] == '}') {
      ++pos;
      return HFSet();
    }
    while (true) {
      auto e = parse_at(s, pos);
      if (!e) return std::nullopt;
      elems.push_back(*e);
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == '}') {
        ++pos;
        break;
      }
      return std::nullopt;
    }
    return of(std::move(elems));
  }

  std::shared_ptr<const Node> node_;
};

//------------------------------------------------------------------------------
// Set-theoretic primitives

namespace hf {

inline HFSet empty() { return HFSet(); }
inline HFSet singleton(const HFSet& x) { return HFSet::of({x}); }
inline HFSet One() { return singleton(empty()); }
inline HFSet False() { return empty(); }
inline HFSet True() { return One(); }
inline HFSet Boolean(bool b) { return b ? True() : False(); }
inline HFSet Boolset() { return HFSet::of({False(), True()}); }

/// Kuratowski pair {{a},{a,b}}.
inline HFSet pair(const HFSet& a, const HFSet& b) { return HFSet::of({singleton(a), HFSet::of({a, b})}); }

/// Components of a Kuratowski pair; nullopt if p is not one.
inline std::optional<std::pair<HFSet, HFSet>> unpair(const HFSet& p) {
  if (p.size() == 1) {
    const HFSet& s = p.elements()[0];
    if (s.size() != 1) return std::nullopt;
    return std::make_pair(s.elements()[0], s.elements()[0]);
  }
  if (p.size() != 2) return std::nullopt;
  const HFSet &s = p.elements()[0], &t = p.elements()[1];
  if (s.size() != 1 || t.size() != 2) return std::nullopt;
  const HFSet& a = s.elements()[0];
  if (!t.mem(a)) return std::nullopt;
  const HFSet& b = t.elements()[0] == a ? t.elements()[1] : t.elements()[0];
  return std::make_pair(a, b);
}

/// Graph of f restricted to s, keeping only pairs whose value lies in r.
inline HFSet Abstract(const HFSet& s, const HFSet& r, const std::function<HFSet(const HFSet&)>& f) {
  std::vector<HFSet> g;
  g.reserve(s.size());
  for (const auto& x : s.elements()) {
    HFSet y = f(x);
    if (r.mem(y)) g.push_back(pair(x, y));
  }
  return HFSet::of(std::move(g));
}

/// Graph of f on s with no codomain restriction.
inline HFSet graph(const HFSet& s, const std::function<HFSet(const HFSet&)>& f) {
  std::vector<HFSet> g;
  g.reserve(s.size());
  for (const auto& x : s.elements()) g.push_back(pair(x, f(x)));
  return HFSet::of(std::move(g));
}

inline Result<HFSet> apply(const HFSet& g, const HFSet& x) {
  for (const auto& p : g.elements()) {
    auto ab = unpair(p);
    if (ab && ab->first == x) return ab->second;
  }
  return Error{Errc::MissingDomain, "apply: argument outside the domain of the graph"};
}

/// |r|^|s|, saturating at SIZE_MAX.
inline std::size_t funspace_size(std::size_t s, std::size_t r) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < s; ++i) {
    if (r != 0 && n > SIZE_MAX / r) return SIZE_MAX;
    n *= r;
  }
  return n;
}

/// All function graphs from s to r; a resource error when more than `cap`.
inline Result<HFSet> Funspace(const HFSet& s, const HFSet& r, std::size_t cap = SIZE_MAX) {
  std::size_t n = funspace_size(s.size(), r.size());
  if (n > cap)
    return Error{Errc::Resource, "function space of " + std::to_string(r.size()) + "^" + std::to_string(s.size()) +
                                     " elements exceeds the carrier cap of " + std::to_string(cap)};
  std::vector<HFSet> out;
  out.reserve(n);
  if (n == 0) return HFSet();
  std::vector<std::size_t> idx(s.size(), 0);
  while (true) {
    std::vector<HFSet> g;
    for (std::size_t i = 0; i < s.size(); ++i) g.push_back(pair(s.elements()[i], r.elements()[idx[i]]));
    out.push_back(HFSet::of(std::move(g)));
    std::size_t p = s.size();
    while (p > 0 && ++idx[p - 1] == r.size()) idx[--p] = 0;
    if (p == 0) break;
  }
  return HFSet::of(std::move(out));
}

inline bool inhabited(const HFSet& s) { return !s.empty(); }

/// Finite ordinal {0, ..., n-1} in von Neumann encoding.
inline HFSet ordinal(std::size_t n) {
  std::vector<HFSet> elems;
  HFSet cur;
  for (std::size_t i = 0; i < n; ++i) {
    elems.push_back(cur);
    cur = HFSet::of(elems);
  }
  return cur;
}

}  // namespace hf

}  // namespace holdef

template <>
struct std::hash<holdef::HFSet> {
  std::size_t operator()(const holdef::HFSet& s) const noexcept { return s.hash(); }
};
