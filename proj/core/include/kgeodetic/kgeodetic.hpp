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


#ifndef KGEODETIC_KGEODETIC_HPP_
#define KGEODETIC_KGEODETIC_HPP_

#include "kgeodetic/dot.hpp"
#include "kgeodetic/error.hpp"
#include "kgeodetic/geometry.hpp"
#include "kgeodetic/graph.hpp"
#include "kgeodetic/graph_io.hpp"
#include "kgeodetic/group.hpp"
#include "kgeodetic/group_io.hpp"
#include "kgeodetic/lang.hpp"
#include "kgeodetic/words.hpp"

#endif  // KGEODETIC_KGEODETIC_HPP_
