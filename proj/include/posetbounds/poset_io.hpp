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

#pragma once

#include <iosfwd>
#include <string>

#include "posetbounds/poset.hpp"

namespace posetbounds {

/**
 * Text format (".poset"): lines starting with '#' and blank lines are
 * ignored; the first significant line holds n; every further line is
 * "i j" with 1-based indices meaning i < j. Relations are closed on read.
 * Throws ParseError (with the 1-based line number) on malformed lines,
 * plus the build_poset errors.
 */
Poset read_poset(std::istream& in);
Poset read_poset_file(const std::string& path);
Poset parse_poset_text(const std::string& text);

/// Writes the transitive reduction in the same format.
void write_poset(std::ostream& out, const Poset& p);
std::string format_poset(const Poset& p);

}  // namespace posetbounds
