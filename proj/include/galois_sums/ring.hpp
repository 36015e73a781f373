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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galois_sums/errors.hpp"

namespace galois_sums {

// Position of an element in the lexicographic enumeration of coordinate
// tuples (a_0, ..., a_{s-1}); a_0 is the most significant digit.
using ElementIndex = std::int64_t;

inline constexpr std::int64_t kDefaultElementCap = std::int64_t{1} << 20;

struct RingParams {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t s = 0;

  std::int64_t q() const;             // p^s
  std::int64_t char_modulus() const;  // p^n
  std::int64_t size() const;          // q^n

  // Throws InvalidParams unless p is prime and n, s >= 1.
  void validate() const;

  bool operator==(const RingParams&) const = default;
};

// Monic polynomial over Z_m, coefficients stored low degree first.
struct Polynomial {
  std::vector<std::int64_t> coeffs;
  std::int64_t modulus = 0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  Polynomial reduced_mod(std::int64_t m) const;
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;
};

struct RingElement {
  std::vector<std::int64_t> coords;  // coefficients of 1, xi, ..., xi^{s-1}

  bool operator==(const RingElement&) const = default;
};

// x = p^k * u with u a unit of GR(p^{n-k}, .); zero maps to (n, 0).
struct Valuation {
  std::int64_t k = 0;
  RingElement unit;  // coordinates modulo p^{n-k}
};

// Deterministic modulus: the smallest primitive polynomial mod p (coefficients
// compared from the top degree down) lifted to the unique factor of
// x^{q-1} - 1 over Z_{p^n}. For s = 1 the result is x - g with g the
// Teichmuller lift of the smallest primitive root mod p.
Polynomial find_basic_primitive_poly(std::int64_t p, std::int64_t n, std::int64_t s);

// True when the class of x has multiplicative order exactly `order` in
// Z_m[x]/(f), m = f.modulus.
bool x_has_order(const Polynomial& f, std::int64_t order);

// Immutable context for GR(p^n, p^{ns}). Safe to share across threads.
class GaloisRing {
 public:
  static std::shared_ptr<const GaloisRing> create(
      const RingParams& params, std::optional<Polynomial> modulus = std::nullopt,
      std::int64_t element_cap = kDefaultElementCap);

  const RingParams& params() const { return params_; }
  const Polynomial& modulus() const { return modulus_; }
  std::int64_t p() const { return params_.p; }
  std::int64_t n() const { return params_.n; }
  std::int64_t s() const { return params_.s; }
  std::int64_t q() const { return q_; }
  std::int64_t char_modulus() const { return pn_; }
  std::int64_t size() const { return size_; }
  std::int64_t unit_count() const { return size_ - size_ / q_; }
  std::int64_t element_cap() const { return element_cap_; }

  // Enumeration.
  RingElement element(ElementIndex index) const;
  ElementIndex index_of(const RingElement& x) const;
  const std::vector<ElementIndex>& units() const { return units_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement xi() const { return xi_powers_.size() > 1 ? xi_powers_[1] : one(); }
  RingElement from_integer(std::int64_t v) const;
  RingElement p_power(std::int64_t k) const;  // p^k, zero when k >= n

  // Exact arithmetic mod (p^n, h).
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement pow(const RingElement& x, std::int64_t e) const;
  RingElement inv(const RingElement& x) const;  // NotAUnit on M

  // Index-level arithmetic used by the summation kernels.
  ElementIndex add_index(ElementIndex x, ElementIndex y) const;
  ElementIndex sub_index(ElementIndex x, ElementIndex y) const;
  ElementIndex mul_index(ElementIndex x, ElementIndex y) const;
  bool is_unit_index(ElementIndex x) const { return unit_flag_[static_cast<std::size_t>(x)] != 0; }

  bool is_unit(const RingElement& x) const;
  Valuation valuation(const RingElement& x) const;

  // Teichmuller set in the order 0, xi^0, xi^1, ..., xi^{q-2}.
  const std::vector<RingElement>& teichmuller_set() const { return teich_set_; }
  const std::vector<RingElement>& xi_powers() const { return xi_powers_; }
  // Exponent e with t = xi^e, or -1 when t is not in T*.
  std::int64_t teichmuller_log(const RingElement& t) const;
  RingElement teichmuller_lift(const RingElement& x) const;  // c_0 of x
  std::vector<RingElement> teichmuller_decompose(const RingElement& x) const;
  RingElement teichmuller_compose(const std::vector<RingElement>& digits) const;

  RingElement frobenius(const RingElement& x) const;
  std::int64_t trace(const RingElement& x) const;  // value in Z_{p^n}

  // GR(p^{n-k}, p^{(n-k)s}) with modulus h mod p^{n-k}; BadLevel unless 1 <= k <= n-1.
  std::shared_ptr<const GaloisRing> reduced(std::int64_t k) const;
  // Coordinates of tau_{n-k}(x).
  RingElement reduce(const RingElement& x, std::int64_t k) const;
  // Lift of an element of the reduced ring by keeping its coordinates.
  RingElement lift_coordinates(const RingElement& x) const;

  // Same parameters and modulus.
  bool same_ring(const GaloisRing& other) const {
    return params_ == other.params_ && modulus_ == other.modulus_;
  }

  std::string describe() const;  // e.g. "GR(4,16)"

 private:
  GaloisRing(const RingParams& params, Polynomial modulus, std::int64_t element_cap);
  void build_tables();
  void check_element(const RingElement& x) const;

  RingParams params_;
  Polynomial modulus_;
  std::int64_t element_cap_;
  std::int64_t q_ = 0;
  std::int64_t pn_ = 0;
  std::int64_t size_ = 0;
  std::vector<RingElement> xi_powers_;
  std::vector<RingElement> teich_set_;
  std::vector<std::int64_t> teich_log_;        // by element index, -1 off T*
  std::vector<ElementIndex> teich_of_residue_;  // by residue index (base p digits)
  std::vector<std::uint8_t> unit_flag_;
  std::vector<ElementIndex> units_;
};

}  // namespace galois_sums
