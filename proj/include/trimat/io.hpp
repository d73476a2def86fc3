// Copyright 2026 The Authors.
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
// Matroid description files: JSON documents naming a base representation or
// a derived operation over children. Parsing then serialising reproduces the
// document exactly.

#ifndef TRIMAT_IO_HPP
#define TRIMAT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "trimat/matroid.hpp"

namespace trimat {

using Json = nlohmann::ordered_json;

/// Descriptor of m; derived matroids carry their children recursively.
Json descriptor(const Matroid& m);
/// Builds a matroid from a descriptor; ValidationError names the violated
/// constraint and the path of the offending node.
Matroid build(const Json& j);

std::string serialize(const Matroid& m, int indent = -1);
Matroid parse_matroid(std::string_view text);

}  // namespace trimat

#endif  // TRIMAT_IO_HPP
