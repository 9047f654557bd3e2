// Copyright 2026 The kgeodetic Authors
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

#ifndef KGEODETIC_GROUP_IO_HPP_
#define KGEODETIC_GROUP_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kgeodetic/group.hpp"

namespace kgeodetic {

// Contents of a group-spec file.
//
//   group cyclic 6                       # Z_6; "cyclic 0" is Z
//   group plain Z=1 factors=2,3          # Z * Z_2 * Z_3
//   group product cyclic 0 cyclic 2      # Z x Z_2
//   group table 3                        # followed by 3 rows of 3 indices
//   gen a pow 1
//   gen a' pow 5
//   ball R=2
//
// Element expressions: "pow <e>", "idx <i>", "syl <factor> <exp> ...",
// "id", and "tuple (<expr>) (<expr>) ..." where a bare integer inside a
// tuple stands for "pow <integer>". Without gen lines the standard
// generating set is used.
struct GroupFile {
  GroupSpec spec;
  GenSet gens;
  std::optional<std::size_t> radius;
};

GroupFile parse_group(std::istream& in, std::uint64_t seed = 0x5eed);
GroupFile parse_group(std::string_view text, std::uint64_t seed = 0x5eed);
GroupFile read_group_file(const std::string& path, std::uint64_t seed = 0x5eed);

// Parses one element expression against `spec`.
Element parse_element(const GroupSpec& spec, std::string_view expr);

}  // namespace kgeodetic

#endif  // KGEODETIC_GROUP_IO_HPP_
