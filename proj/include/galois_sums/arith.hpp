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
#include <optional>
#include <utility>
#include <vector>

#include "galois_sums/errors.hpp"

namespace galois_sums {

// Small exact integer helpers shared by the ring and formula code.

inline bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

// Checked power; throws TooLarge on signed 64-bit overflow.
inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw Error(ErrorKind::TooLarge, "integer overflow in power");
    }
  }
  return result;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::TooLarge, "integer overflow in product");
  }
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::TooLarge, "integer overflow in sum");
  }
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Returns (p, s) with v = p^s, or nullopt when v is not a prime power.
inline std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t v) {
  if (v < 2) return std::nullopt;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(v, std::int64_t{1});
  std::int64_t s = 0;
  while (v % p == 0) {
    v /= p;
    ++s;
  }
  if (v != 1) return std::nullopt;
  return std::make_pair(p, s);
}

inline std::vector<std::int64_t> prime_factors(std::int64_t v) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / gcd(a, b), b);
}

}  // namespace galois_sums
