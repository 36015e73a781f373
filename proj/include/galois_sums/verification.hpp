/*
 * Copyright 2026 The galois-sums Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galois_sums/sums.hpp"

namespace galois_sums {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  double tol = 1e-6;
  SumOptions sums;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::vector<std::string> notes;  // first failures and summary lines
};

// gauss-laws, jacobi-pairs, jacobi-triples, recursion, recursion-mk, counting,
// codebook, table2, remark, tilde-cases.
const std::vector<std::string>& suite_names();

// InvalidParams for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace galois_sums
