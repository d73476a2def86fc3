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

#ifndef TRIMAT_ERROR_HPP
#define TRIMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trimat {

/// Malformed input: a descriptor, parameter or precondition that can be
/// checked up front.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set or element outside the ground set, overlapping minor sets, etc.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact search could not finish within its configured bound. Never
/// converted into a yes/no answer.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trimat

#endif  // TRIMAT_ERROR_HPP
