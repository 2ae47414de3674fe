// Copyright 2026 The subsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "subsieve/constraint.hpp"
#include "subsieve/errors.hpp"
#include "subsieve/oracles/coverage.hpp"
#include "subsieve/oracles/cut.hpp"
#include "subsieve/oracles/table.hpp"
#include "subsieve/rational.hpp"

// Plain-text instance formats. All ids are 0-based.
//
//   graph:  `n m directed|undirected`, then m lines `u v w`
//   family: `n_universe n_sets`, a line of universe weights, then one line
//           per ground element listing the covered item ids
//   table:  `n`, then 2^n lines `bitmask value`
//   costs:  `d n`, then d lines of n entries (integer or p/q)

namespace subsieve::io {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line split on whitespace; throws at end of input.
  std::vector<std::string_view> Next(std::string_view what) {
    if (!std::getline(in_, line_)) {
      throw ParseError("unexpected end of input, expected " + std::string(what),
                       line_no_ + 1);
    }
    ++line_no_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    return Split(line_);
  }

  // Rejects trailing non-blank content.
  void ExpectEnd() {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!Split(line_).empty()) throw ParseError("unexpected trailing content", line_no_);
    }
  }

  std::size_t line() const { return line_no_; }

 private:
  static std::vector<std::string_view> Split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
      if (j > i) out.push_back(s.substr(i, j - i));
      i = j;
    }
    return out;
  }

  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
};

inline std::uint64_t ParseCount(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" +
                         std::string(tok) + "'",
                     line);
  }
  return value;
}

inline double ParseWeight(std::string_view tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a decimal number, got '" + std::string(tok) + "'",
                     line);
  }
  if (!(value >= 0.0)) {
    throw ParseError("negative weight '" + std::string(tok) + "'", line);
  }
  return value;
}

inline void ExpectFields(const std::vector<std::string_view>& f,
                         std::size_t count, std::size_t line,
                         std::string_view shape) {
  if (f.size() != count) {
    throw ParseError("expected `" + std::string(shape) + "`", line);
  }
}

// Shortest text that parses back to the same double.
inline std::string Num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

inline std::ifstream Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace detail

inline CutOracle ReadGraph(std::istream& in) {
  detail::LineReader r(in);
  auto head = r.Next("header");
  detail::ExpectFields(head, 3, r.line(), "n m directed|undirected");
  const auto n = detail::ParseCount(head[0], r.line());
  const auto m = detail::ParseCount(head[1], r.line());
  bool directed = false;
  if (head[2] == "directed") {
    directed = true;
  } else if (head[2] != "undirected") {
    throw ParseError("expected 'directed' or 'undirected'", r.line());
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    auto f = r.Next("edge line");
    detail::ExpectFields(f, 3, r.line(), "u v w");
    const auto u = detail::ParseCount(f[0], r.line());
    const auto v = detail::ParseCount(f[1], r.line());
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", r.line());
    edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v),
                     detail::ParseWeight(f[2], r.line())});
  }
  r.ExpectEnd();
  return CutOracle(n, std::move(edges), directed);
}

inline CoverageOracle ReadFamily(std::istream& in) {
  detail::LineReader r(in);
  auto head = r.Next("header");
  detail::ExpectFields(head, 2, r.line(), "n_universe n_sets");
  const auto universe = detail::ParseCount(head[0], r.line());
  const auto n_sets = detail::ParseCount(head[1], r.line());
  auto wline = r.Next("universe weights");
  if (wline.size() != universe) {
    throw ParseError("expected " + std::to_string(universe) + " universe weights",
                     r.line());
  }
  std::vector<double> weights;
  for (auto tok : wline) weights.push_back(detail::ParseWeight(tok, r.line()));
  std::vector<std::vector<std::size_t>> sets(n_sets);
  for (std::uint64_t j = 0; j < n_sets; ++j) {
    for (auto tok : r.Next("covered item ids")) {
      const auto item = detail::ParseCount(tok, r.line());
      if (item >= universe) throw ParseError("universe item out of range", r.line());
      sets[j].push_back(item);
    }
  }
  r.ExpectEnd();
  return CoverageOracle(std::move(weights), std::move(sets));
}

// Rejects tables that are not non-negative and submodular, naming the witness.
inline TableOracle ReadTable(std::istream& in) {
  detail::LineReader r(in);
  auto head = r.Next("header");
  detail::ExpectFields(head, 1, r.line(), "n");
  const auto n = detail::ParseCount(head[0], r.line());
  if (n > kMaxTableElements) {
    throw ParseError("tables support at most " +
                         std::to_string(kMaxTableElements) + " elements",
                     r.line());
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> values(size, 0.0);
  std::vector<bool> seen(size, false);
  for (std::size_t row = 0; row < size; ++row) {
    auto f = r.Next("table row");
    detail::ExpectFields(f, 2, r.line(), "bitmask value");
    const auto mask = detail::ParseCount(f[0], r.line());
    if (mask >= size) throw ParseError("bitmask out of range", r.line());
    if (seen[mask]) throw ParseError("duplicate bitmask", r.line());
    seen[mask] = true;
    values[mask] = detail::ParseWeight(f[1], r.line());
  }
  r.ExpectEnd();
  TableOracle table(n, std::move(values));
  if (auto check = ValidateSubmodular(table); !check) {
    throw ParseError("table is not submodular, witness " +
                         check.witness->Describe(),
                     0);
  }
  return table;
}

inline CostMatrix ReadCosts(std::istream& in) {
  detail::LineReader r(in);
  auto head = r.Next("header");
  detail::ExpectFields(head, 2, r.line(), "d n");
  const auto d = detail::ParseCount(head[0], r.line());
  const auto n = detail::ParseCount(head[1], r.line());
  CostMatrix costs(d, n);
  for (std::uint64_t i = 0; i < d; ++i) {
    auto f = r.Next("cost row");
    if (f.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " costs", r.line());
    }
    for (std::uint64_t j = 0; j < n; ++j) {
      try {
        costs.at(i, j) = ParseRational(f[j]);
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(e.what(), r.line());
      }
    }
  }
  r.ExpectEnd();
  return costs;
}

// Comma- or whitespace-separated rationals, e.g. "10,5" or "3/2 4".
inline std::vector<Rational> ParseCapacities(std::string_view text) {
  std::vector<Rational> caps;
  std::size_t i = 0;
  auto sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  while (i < text.size()) {
    while (i < text.size() && sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !sep(text[j])) ++j;
    if (j > i) caps.push_back(ParseRational(text.substr(i, j - i)));
    i = j;
  }
  return caps;
}

inline void WriteGraph(std::ostream& out, const CutOracle& g) {
  out << g.GroundSize() << ' ' << g.edges().size() << ' '
      << (g.directed() ? "directed" : "undirected") << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << detail::Num(e.w) << '\n';
  }
}

inline void WriteFamily(std::ostream& out, const CoverageOracle& c) {
  out << c.UniverseSize() << ' ' << c.GroundSize() << '\n';
  for (std::size_t i = 0; i < c.weights().size(); ++i) {
    out << (i ? " " : "") << detail::Num(c.weights()[i]);
  }
  out << '\n';
  for (const auto& s : c.sets()) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

inline void WriteTable(std::ostream& out, const TableOracle& t) {
  out << t.GroundSize() << '\n';
  for (std::size_t mask = 0; mask < t.values().size(); ++mask) {
    out << mask << ' ' << detail::Num(t.values()[mask]) << '\n';
  }
}

inline void WriteCosts(std::ostream& out, const CostMatrix& c) {
  out << c.dims() << ' ' << c.elements() << '\n';
  for (std::size_t i = 0; i < c.dims(); ++i) {
    for (std::size_t j = 0; j < c.elements(); ++j) {
      out << (j ? " " : "") << ToString(c.at(i, j));
    }
    out << '\n';
  }
}

inline CutOracle LoadGraph(const std::string& path) {
  auto in = detail::Open(path);
  return ReadGraph(in);
}
inline CoverageOracle LoadFamily(const std::string& path) {
  auto in = detail::Open(path);
  return ReadFamily(in);
}
inline TableOracle LoadTable(const std::string& path) {
  auto in = detail::Open(path);
  return ReadTable(in);
}
inline CostMatrix LoadCosts(const std::string& path) {
  auto in = detail::Open(path);
  return ReadCosts(in);
}

}  // namespace subsieve::io
