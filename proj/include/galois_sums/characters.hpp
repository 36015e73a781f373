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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galois_sums/ring.hpp"

namespace galois_sums {

// Exact value e^{2 pi i numerator / order}.
struct RootOfUnity {
  std::int64_t numerator = 0;
  std::int64_t order = 1;

  RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t ord);

  std::complex<double> to_complex() const;
  RootOfUnity reduced() const;  // lowest terms
  RootOfUnity conj() const { return RootOfUnity(-numerator, order); }
  bool is_one() const { return numerator == 0; }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

// lambda_b(x) = e^{2 pi i tr(bx) / p^n}.
RootOfUnity additive_char_eval(const GaloisRing& ring, const RingElement& b, const RingElement& x);

// R^* = <g_1> x ... x <g_r>, g_1 = xi of order q-1, the rest in 1 + M.
struct UnitGroupBasis {
  std::vector<RingElement> generators;
  std::vector<std::int64_t> orders;
};

UnitGroupBasis decompose_unit_group(const GaloisRing& ring);

class MultCharacter;

// The character group of R^*: unit-group basis, discrete logs of every unit,
// and the chain of reduced groups used by lifting and projection.
class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
 public:
  static std::shared_ptr<const CharacterGroup> create(std::shared_ptr<const GaloisRing> ring);

  const GaloisRing& ring() const { return *ring_; }
  const std::shared_ptr<const GaloisRing>& ring_ptr() const { return ring_; }
  const UnitGroupBasis& basis() const { return basis_; }
  std::size_t rank() const { return basis_.orders.size(); }
  std::int64_t exponent() const { return exponent_; }  // lcm of generator orders
  std::int64_t character_count() const { return ring_->unit_count(); }

  // Exponent tuple of a unit against the basis.
  std::span<const std::int64_t> dlog(ElementIndex unit) const;
  // The basis element product g_1^{e_1} ... g_r^{e_r}.
  RingElement basis_power(std::span<const std::int64_t> exponents) const;
  // Character value for a raw exponent tuple, without building a MultCharacter.
  RootOfUnity evaluate(std::span<const std::int64_t> exponents, ElementIndex unit) const;
  std::vector<std::int64_t> exponents_at(std::int64_t ordinal) const;

  MultCharacter trivial() const;
  MultCharacter character(std::vector<std::int64_t> exponents) const;
  // Mixed-radix ordinal; the first exponent is the most significant digit.
  MultCharacter character_at(std::int64_t ordinal) const;
  std::vector<MultCharacter> enumerate() const;

  // Units of 1 + p^k R for 0 <= k <= n (k = 0 gives all of R^*).
  const std::vector<ElementIndex>& principal_units(std::int64_t k) const;
  // A generating set of 1 + p^k R.
  const std::vector<ElementIndex>& principal_generators(std::int64_t k) const;

  // Character group of GR(p^{n-k}, .), 1 <= k <= n-1.
  std::shared_ptr<const CharacterGroup> reduced(std::int64_t k) const;
  std::shared_ptr<const CharacterGroup> residue_field() const { return reduced(ring_->n() - 1); }

  bool same_group(const CharacterGroup& other) const { return ring_->same_ring(*other.ring_); }

 private:
  explicit CharacterGroup(std::shared_ptr<const GaloisRing> ring);
  void build();

  std::shared_ptr<const GaloisRing> ring_;
  UnitGroupBasis basis_;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> dlog_;  // rank() entries per element, -1 for non-units
  std::vector<std::vector<ElementIndex>> principal_units_;
  std::vector<std::vector<ElementIndex>> principal_generators_;
  std::vector<std::shared_ptr<const CharacterGroup>> reductions_;  // index k
};

// A multiplicative character given by exponents against the unit-group basis:
// chi(g_i) = e^{2 pi i e_i / d_i}.
class MultCharacter {
 public:
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  // 0 for the trivial character, otherwise the least k >= 1 with chi trivial
  // on 1 + p^k R; primitive means level n.
  std::int64_t triviality_level() const { return level_; }
  bool is_trivial() const { return level_ == 0; }
  bool is_primitive() const;
  bool trivial_on(std::int64_t k) const;  // on 1 + p^k R

  const CharacterGroup& group() const { return *group_; }
  const std::shared_ptr<const CharacterGroup>& group_ptr() const { return group_; }
  const GaloisRing& ring() const { return group_->ring(); }
  std::int64_t ordinal() const;

  RootOfUnity eval(ElementIndex unit) const;
  RootOfUnity eval(const RingElement& unit) const;
  // chi(x) on units; on M: 1 for the trivial character, 0 otherwise.
  std::optional<RootOfUnity> extended_exact(ElementIndex x) const;
  std::complex<double> extended(ElementIndex x) const;
  // extended() for every element, indexed by ElementIndex.
  std::vector<std::complex<double>> extended_table() const;

  MultCharacter inverse() const;
  friend MultCharacter operator*(const MultCharacter& a, const MultCharacter& b);
  friend bool operator==(const MultCharacter& a, const MultCharacter& b);

  std::string to_string() const;

 private:
  friend class CharacterGroup;
  MultCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<std::int64_t> exponents);

  std::shared_ptr<const CharacterGroup> group_;
  std::vector<std::int64_t> exponents_;
  std::int64_t level_ = 0;
};

std::vector<MultCharacter> enumerate_characters(const std::shared_ptr<const CharacterGroup>& group);
std::int64_t classify(const MultCharacter& chi);
MultCharacter char_mul(const MultCharacter& a, const MultCharacter& b);  // RingMismatch
MultCharacter char_inv(const MultCharacter& chi);
MultCharacter product(std::span<const MultCharacter> chars);
std::complex<double> extended_eval(const MultCharacter& chi, const RingElement& x);

// phi_a on 1 + p^{n-1}R: phi_a(1 + p^{n-1}x) = e^{2 pi i Tr(a tau_1(x)) / p},
// with a an element of the residue field F_q. Requires n >= 2.
class SubgroupCharacter {
 public:
  SubgroupCharacter(std::shared_ptr<const CharacterGroup> group, RingElement a);

  const RingElement& a() const { return a_; }
  RootOfUnity eval(ElementIndex y) const;  // y in 1 + p^{n-1}R
  bool is_trivial() const;
  bool restricts_from(const MultCharacter& chi) const;  // chi|_{1+p^{n-1}R} == this

 private:
  std::shared_ptr<const CharacterGroup> group_;
  std::shared_ptr<const GaloisRing> field_;
  RingElement a_;
};

SubgroupCharacter phi_a(const std::shared_ptr<const CharacterGroup>& group, const RingElement& a);

// Deterministic choice of the character of R^* extending phi_a.
enum class SectionChoice {
  LexMin,  // lexicographically smallest exponent tuple
  LexMax,  // lexicographically largest exponent tuple
};

std::string to_string(SectionChoice section);
SectionChoice parse_section(const std::string& name);

MultCharacter extend_phi(const std::shared_ptr<const CharacterGroup>& group, const RingElement& a,
                         SectionChoice section = SectionChoice::LexMin);

// chi(x) = psi(tau_{n-k}(x)) for psi a character of target->reduced(k).
MultCharacter lift_character(const MultCharacter& psi,
                             const std::shared_ptr<const CharacterGroup>& target);
// Inverse of lift_character; requires chi trivial on 1 + p^{n-k}R.
MultCharacter project_character(const MultCharacter& chi, std::int64_t k);

}  // namespace galois_sums
