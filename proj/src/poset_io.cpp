// Copyright 2026 The posetbounds Authors
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

#include "posetbounds/poset_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "posetbounds/errors.hpp"

namespace posetbounds {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Poset read_poset(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Relation> pairs;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    if (!n) {
      long long value = 0;
      std::string rest;
      if (!(fields >> value) || (fields >> rest) || value < 1) {
        throw ParseError("expected a positive element count", line_no);
      }
      n = static_cast<std::size_t>(value);
      continue;
    }
    long long i = 0, j = 0;
    std::string rest;
    if (!(fields >> i >> j) || (fields >> rest)) {
      throw ParseError("expected a relation line \"i j\"", line_no);
    }
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > *n ||
        static_cast<std::size_t>(j) > *n) {
      throw IndexError("element out of range on line " + std::to_string(line_no));
    }
    pairs.emplace_back(static_cast<Element>(i - 1), static_cast<Element>(j - 1));
  }
  if (!n) throw ParseError("missing element count", line_no);
  return build_poset(*n, pairs);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open poset file: " + path);
  return read_poset(in);
}

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return read_poset(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << p.size() << '\n';
  for (const auto& [i, j] : p.cover_pairs()) out << i + 1 << ' ' << j + 1 << '\n';
}

std::string format_poset(const Poset& p) {
  std::ostringstream out;
  write_poset(out, p);
  return out.str();
}

}  // namespace posetbounds
