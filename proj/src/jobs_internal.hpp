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
#ifndef TRIMAT_SRC_JOBS_INTERNAL_HPP
#define TRIMAT_SRC_JOBS_INTERNAL_HPP

#include <vector>

#include "trimat/jobs.hpp"

namespace trimat::detail {

std::vector<Record> kernel_suite_records(int workers);

}  // namespace trimat::detail

#endif  // TRIMAT_SRC_JOBS_INTERNAL_HPP
