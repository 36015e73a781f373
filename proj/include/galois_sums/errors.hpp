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

#include <stdexcept>
#include <string>
#include <string_view>

namespace galois_sums {

enum class ErrorKind {
  InvalidParams,
  InvalidModulus,
  SizeLimit,
  NotAUnit,
  NotInBaseRing,
  BadLevel,
  RingMismatch,
  TooLarge,
  DegenerateDimensions,
  NotPrimePower,
  IoError,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True for errors caused by exceeding a configured resource cap.
inline bool is_resource_error(ErrorKind kind) {
  return kind == ErrorKind::SizeLimit || kind == ErrorKind::TooLarge;
}

}  // namespace galois_sums
