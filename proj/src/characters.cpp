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

#include "galois_sums/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "galois_sums/arith.hpp"

namespace galois_sums {

namespace {

// Closure of `span` (a membership mask) under multiplication by powers of x.
void extend_span(const GaloisRing& ring, std::vector<std::uint8_t>& member,
                 std::vector<ElementIndex>& elements, ElementIndex x) {
  std::vector<ElementIndex> grown;
  for (ElementIndex h : elements) {
    ElementIndex cur = h;
    while (true) {
      cur = ring.mul_index(cur, x);
      if (member[static_cast<std::size_t>(cur)]) break;
      member[static_cast<std::size_t>(cur)] = 1;
      grown.push_back(cur);
    }
  }
  // Products of new elements with x may reach further cosets.
  while (!grown.empty()) {
    elements.insert(elements.end(), grown.begin(), grown.end());
    std::vector<ElementIndex> next;
    for (ElementIndex h : grown) {
      const ElementIndex y = ring.mul_index(h, x);
      if (!member[static_cast<std::size_t>(y)]) {
        member[static_cast<std::size_t>(y)] = 1;
        next.push_back(y);
      }
    }
    grown.swap(next);
  }
}

bool is_principal(const GaloisRing& ring, const RingElement& x, std::int64_t pk) {
  if (mod(x.coords[0] - 1, pk) != 0) return false;
  for (std::size_t i = 1; i < x.coords.size(); ++i) {
    if (x.coords[i] % pk != 0) return false;
  }
  (void)ring;
  return true;
}

}  // namespace

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t ord) : numerator(mod(num, ord)), order(ord) {
  if (ord < 1) throw Error(ErrorKind::InvalidParams, "root of unity order must be positive");
}

std::complex<double> RootOfUnity::to_complex() const {
  const RootOfUnity r = reduced();
  if (r.numerator == 0) return {1.0, 0.0};
  if (2 * r.numerator == r.order) return {-1.0, 0.0};
  if (4 * r.numerator == r.order) return {0.0, 1.0};
  if (4 * r.numerator == 3 * r.order) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r.numerator) /
                       static_cast<double>(r.order);
  return std::polar(1.0, angle);
}

RootOfUnity RootOfUnity::reduced() const {
  const std::int64_t g = gcd(numerator, order);
  if (numerator == 0) return RootOfUnity(0, 1);
  return RootOfUnity(numerator / g, order / g);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t l = lcm(a.order, b.order);
  return RootOfUnity(a.numerator * (l / a.order) + b.numerator * (l / b.order), l).reduced();
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  const RootOfUnity ra = a.reduced();
  const RootOfUnity rb = b.reduced();
  return ra.numerator == rb.numerator && ra.order == rb.order;
}

RootOfUnity additive_char_eval(const GaloisRing& ring, const RingElement& b, const RingElement& x) {
  return RootOfUnity(ring.trace(ring.mul(b, x)), ring.char_modulus());
}

UnitGroupBasis decompose_unit_group(const GaloisRing& ring) {
  UnitGroupBasis basis;
  basis.generators.push_back(ring.xi());
  basis.orders.push_back(ring.q() - 1);

  std::vector<ElementIndex> principal;
  for (ElementIndex u : ring.units()) {
    if (is_principal(ring, ring.element(u), ring.p())) principal.push_back(u);
  }
  const ElementIndex one = ring.index_of(ring.one());
  std::vector<std::uint8_t> member(static_cast<std::size_t>(ring.size()), 0);
  member[static_cast<std::size_t>(one)] = 1;
  std::vector<ElementIndex> span{one};

  while (span.size() < principal.size()) {
    // Order of each element in the quotient by the current span.
    std::int64_t best = 0;
    std::vector<std::int64_t> quotient_order(principal.size(), 0);
    for (std::size_t i = 0; i < principal.size(); ++i) {
      std::int64_t j = 1;
      ElementIndex cur = principal[i];
      while (!member[static_cast<std::size_t>(cur)]) {
        cur = ring.mul_index(cur, principal[i]);
        ++j;
      }
      quotient_order[i] = j;
      best = std::max(best, j);
    }
    // First element whose own order equals the maximal quotient order, so
    // that <g> meets the span trivially.
    ElementIndex chosen = -1;
    for (std::size_t i = 0; i < principal.size() && chosen < 0; ++i) {
      if (quotient_order[i] != best) continue;
      if (ring.pow(ring.element(principal[i]), best) == ring.one()) chosen = principal[i];
    }
    if (chosen < 0) throw Error(ErrorKind::Internal, "unit group decomposition failed");
    basis.generators.push_back(ring.element(chosen));
    basis.orders.push_back(best);
    extend_span(ring, member, span, chosen);
  }
  return basis;
}

std::shared_ptr<const CharacterGroup> CharacterGroup::create(std::shared_ptr<const GaloisRing> ring) {
  if (!ring) throw Error(ErrorKind::InvalidParams, "null ring");
  std::shared_ptr<CharacterGroup> group(new CharacterGroup(std::move(ring)));
  group->build();
  return group;
}

CharacterGroup::CharacterGroup(std::shared_ptr<const GaloisRing> ring) : ring_(std::move(ring)) {}

void CharacterGroup::build() {
  const GaloisRing& ring = *ring_;
  basis_ = decompose_unit_group(ring);
  exponent_ = 1;
  for (std::int64_t d : basis_.orders) exponent_ = lcm(exponent_, d);

  const std::size_t r = rank();
  std::int64_t total = 1;
  for (std::int64_t d : basis_.orders) total = checked_mul(total, d);
  if (total != ring.unit_count()) throw Error(ErrorKind::Internal, "basis orders do not multiply to |R*|");

  std::vector<std::vector<ElementIndex>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    const ElementIndex g = ring.index_of(basis_.generators[i]);
    ElementIndex cur = ring.index_of(ring.one());
    for (std::int64_t e = 0; e < basis_.orders[i]; ++e) {
      powers[i].push_back(cur);
      cur = ring.mul_index(cur, g);
    }
  }

  dlog_.assign(static_cast<std::size_t>(ring.size()) * r, -1);
  for (std::int64_t ord = 0; ord < total; ++ord) {
    const auto exps = exponents_at(ord);
    ElementIndex x = ring.index_of(ring.one());
    for (std::size_t i = 0; i < r; ++i) {
      x = ring.mul_index(x, powers[i][static_cast<std::size_t>(exps[i])]);
    }
    auto* slot = &dlog_[static_cast<std::size_t>(x) * r];
    if (slot[0] != -1) throw Error(ErrorKind::Internal, "unit group basis is not independent");
    std::copy(exps.begin(), exps.end(), slot);
  }

  const std::int64_t n = ring.n();
  principal_units_.assign(static_cast<std::size_t>(n) + 1, {});
  principal_generators_.assign(static_cast<std::size_t>(n) + 1, {});
  principal_units_[0] = ring.units();
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t pk = ipow(ring.p(), k);
    for (ElementIndex u : ring.units()) {
      if (is_principal(ring, ring.element(u), pk)) principal_units_[static_cast<std::size_t>(k)].push_back(u);
    }
  }
  for (std::int64_t k = 0; k <= n; ++k) {
    std::vector<std::uint8_t> member(static_cast<std::size_t>(ring.size()), 0);
    const ElementIndex one = ring.index_of(ring.one());
    member[static_cast<std::size_t>(one)] = 1;
    std::vector<ElementIndex> span{one};
    for (ElementIndex u : principal_units_[static_cast<std::size_t>(k)]) {
      if (member[static_cast<std::size_t>(u)]) continue;
      principal_generators_[static_cast<std::size_t>(k)].push_back(u);
      extend_span(ring, member, span, u);
    }
  }

  reductions_.assign(static_cast<std::size_t>(n), nullptr);
  if (n >= 2) {
    auto child = create(ring.reduced(1));
    reductions_[1] = child;
    for (std::int64_t k = 2; k < n; ++k) reductions_[static_cast<std::size_t>(k)] = child->reduced(k - 1);
  }
}

std::span<const std::int64_t> CharacterGroup::dlog(ElementIndex unit) const {
  if (unit < 0 || unit >= ring_->size() || !ring_->is_unit_index(unit)) {
    throw Error(ErrorKind::NotAUnit, "discrete log requested for a non-unit");
  }
  return {dlog_.data() + static_cast<std::size_t>(unit) * rank(), rank()};
}

RingElement CharacterGroup::basis_power(std::span<const std::int64_t> exponents) const {
  RingElement x = ring_->one();
  for (std::size_t i = 0; i < rank(); ++i) {
    x = ring_->mul(x, ring_->pow(basis_.generators[i], exponents[i]));
  }
  return x;
}

RootOfUnity CharacterGroup::evaluate(std::span<const std::int64_t> exponents, ElementIndex unit) const {
  const auto logs = dlog(unit);
  std::int64_t num = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    num = (num + (exponents[i] * logs[i]) % basis_.orders[i] * (exponent_ / basis_.orders[i])) % exponent_;
  }
  return RootOfUnity(num, exponent_);
}

std::vector<std::int64_t> CharacterGroup::exponents_at(std::int64_t ordinal) const {
  if (ordinal < 0 || ordinal >= character_count()) {
    throw Error(ErrorKind::InvalidParams, "character ordinal out of range");
  }
  std::vector<std::int64_t> exps(rank(), 0);
  for (std::size_t i = rank(); i-- > 0;) {
    exps[i] = ordinal % basis_.orders[i];
    ordinal /= basis_.orders[i];
  }
  return exps;
}

MultCharacter CharacterGroup::trivial() const {
  return character(std::vector<std::int64_t>(rank(), 0));
}

MultCharacter CharacterGroup::character(std::vector<std::int64_t> exponents) const {
  if (exponents.size() != rank()) {
    throw Error(ErrorKind::InvalidParams, "character needs " + std::to_string(rank()) + " exponents");
  }
  return MultCharacter(shared_from_this(), std::move(exponents));
}

MultCharacter CharacterGroup::character_at(std::int64_t ordinal) const {
  return character(exponents_at(ordinal));
}

std::vector<MultCharacter> CharacterGroup::enumerate() const {
  std::vector<MultCharacter> out;
  out.reserve(static_cast<std::size_t>(character_count()));
  for (std::int64_t i = 0; i < character_count(); ++i) out.push_back(character_at(i));
  return out;
}

const std::vector<ElementIndex>& CharacterGroup::principal_units(std::int64_t k) const {
  if (k < 0 || k > ring_->n()) throw Error(ErrorKind::BadLevel, "principal unit level out of range");
  return principal_units_[static_cast<std::size_t>(k)];
}

const std::vector<ElementIndex>& CharacterGroup::principal_generators(std::int64_t k) const {
  if (k < 0 || k > ring_->n()) throw Error(ErrorKind::BadLevel, "principal unit level out of range");
  return principal_generators_[static_cast<std::size_t>(k)];
}

std::shared_ptr<const CharacterGroup> CharacterGroup::reduced(std::int64_t k) const {
  if (k < 1 || k > ring_->n() - 1) throw Error(ErrorKind::BadLevel, "reduction level must satisfy 1 <= k <= n-1");
  return reductions_[static_cast<std::size_t>(k)];
}

MultCharacter::MultCharacter(std::shared_ptr<const CharacterGroup> group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& orders = group_->basis().orders;
  bool trivial = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] = mod(exponents_[i], orders[i]);
    if (exponents_[i] != 0) trivial = false;
  }
  level_ = 0;
  if (!trivial) {
    for (std::int64_t k = 1; k <= group_->ring().n(); ++k) {
      if (trivial_on(k)) {
        level_ = k;
        break;
      }
    }
  }
}

bool MultCharacter::is_primitive() const { return level_ == group_->ring().n(); }

bool MultCharacter::trivial_on(std::int64_t k) const {
  for (ElementIndex g : group_->principal_generators(k)) {
    if (!eval(g).is_one()) return false;
  }
  return true;
}

std::int64_t MultCharacter::ordinal() const {
  std::int64_t ord = 0;
  const auto& orders = group_->basis().orders;
  for (std::size_t i = 0; i < exponents_.size(); ++i) ord = ord * orders[i] + exponents_[i];
  return ord;
}

RootOfUnity MultCharacter::eval(ElementIndex unit) const { return group_->evaluate(exponents_, unit); }

RootOfUnity MultCharacter::eval(const RingElement& unit) const {
  return eval(group_->ring().index_of(unit));
}

std::optional<RootOfUnity> MultCharacter::extended_exact(ElementIndex x) const {
  if (group_->ring().is_unit_index(x)) return eval(x);
  if (is_trivial()) return RootOfUnity(0, 1);
  return std::nullopt;
}

std::complex<double> MultCharacter::extended(ElementIndex x) const {
  const auto v = extended_exact(x);
  return v ? v->to_complex() : std::complex<double>(0.0, 0.0);
}

std::vector<std::complex<double>> MultCharacter::extended_table() const {
  const GaloisRing& ring = group_->ring();
  // Cache the L-th roots of unity once per table.
  const std::int64_t l = group_->exponent();
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(l));
  for (std::int64_t j = 0; j < l; ++j) roots[static_cast<std::size_t>(j)] = RootOfUnity(j, l).to_complex();
  std::vector<std::complex<double>> table(static_cast<std::size_t>(ring.size()),
                                          is_trivial() ? std::complex<double>(1.0, 0.0)
                                                       : std::complex<double>(0.0, 0.0));
  for (ElementIndex u : ring.units()) {
    table[static_cast<std::size_t>(u)] = roots[static_cast<std::size_t>(eval(u).numerator)];
  }
  return table;
}

MultCharacter MultCharacter::inverse() const {
  std::vector<std::int64_t> exps = exponents_;
  for (auto& e : exps) e = -e;
  return MultCharacter(group_, std::move(exps));
}

MultCharacter operator*(const MultCharacter& a, const MultCharacter& b) {
  if (a.group_ != b.group_ && !a.group_->same_group(*b.group_)) {
    throw Error(ErrorKind::RingMismatch, "characters belong to different rings");
  }
  std::vector<std::int64_t> exps = a.exponents_;
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += b.exponents_[i];
  return MultCharacter(a.group_, std::move(exps));
}

bool operator==(const MultCharacter& a, const MultCharacter& b) {
  return (a.group_ == b.group_ || a.group_->same_group(*b.group_)) && a.exponents_ == b.exponents_;
}

std::string MultCharacter::to_string() const {
  std::ostringstream os;
  os << "chi[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << "]";
  return os.str();
}

std::vector<MultCharacter> enumerate_characters(const std::shared_ptr<const CharacterGroup>& group) {
  return group->enumerate();
}

std::int64_t classify(const MultCharacter& chi) { return chi.triviality_level(); }

MultCharacter char_mul(const MultCharacter& a, const MultCharacter& b) { return a * b; }

MultCharacter char_inv(const MultCharacter& chi) { return chi.inverse(); }

MultCharacter product(std::span<const MultCharacter> chars) {
  if (chars.empty()) throw Error(ErrorKind::InvalidParams, "product of no characters");
  MultCharacter acc = chars.front();
  for (std::size_t i = 1; i < chars.size(); ++i) acc = acc * chars[i];
  return acc;
}

std::complex<double> extended_eval(const MultCharacter& chi, const RingElement& x) {
  return chi.extended(chi.ring().index_of(x));
}

SubgroupCharacter::SubgroupCharacter(std::shared_ptr<const CharacterGroup> group, RingElement a)
    : group_(std::move(group)), a_(std::move(a)) {
  if (group_->ring().n() < 2) throw Error(ErrorKind::BadLevel, "phi_a needs n >= 2");
  field_ = group_->residue_field()->ring_ptr();
  (void)field_->index_of(a_);  // validates a as an element of F_q
}

RootOfUnity SubgroupCharacter::eval(ElementIndex y) const {
  const GaloisRing& ring = group_->ring();
  const std::int64_t pn1 = ipow(ring.p(), ring.n() - 1);
  RingElement x = ring.sub(ring.element(y), ring.one());
  RingElement residue = field_->zero();
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] % pn1 != 0) throw Error(ErrorKind::InvalidParams, "element is not in 1 + p^{n-1}R");
    residue.coords[i] = (x.coords[i] / pn1) % ring.p();
  }
  return RootOfUnity(field_->trace(field_->mul(a_, residue)), ring.p());
}

bool SubgroupCharacter::is_trivial() const { return a_ == field_->zero(); }

bool SubgroupCharacter::restricts_from(const MultCharacter& chi) const {
  if (!chi.group().same_group(*group_)) throw Error(ErrorKind::RingMismatch, "character of another ring");
  for (ElementIndex y : group_->principal_units(group_->ring().n() - 1)) {
    if (!(chi.eval(y) == eval(y))) return false;
  }
  return true;
}

SubgroupCharacter phi_a(const std::shared_ptr<const CharacterGroup>& group, const RingElement& a) {
  return SubgroupCharacter(group, a);
}

std::string to_string(SectionChoice section) {
  return section == SectionChoice::LexMin ? "lex-min" : "lex-max";
}

SectionChoice parse_section(const std::string& name) {
  if (name == "lex-min") return SectionChoice::LexMin;
  if (name == "lex-max") return SectionChoice::LexMax;
  throw Error(ErrorKind::InvalidParams, "unknown section '" + name + "' (expected lex-min or lex-max)");
}

MultCharacter extend_phi(const std::shared_ptr<const CharacterGroup>& group, const RingElement& a,
                         SectionChoice section) {
  const SubgroupCharacter phi(group, a);
  // Every section sends a = 0 to the trivial character.
  if (phi.is_trivial()) return group->trivial();
  const auto& gens = group->principal_generators(group->ring().n() - 1);
  std::vector<RootOfUnity> targets;
  targets.reserve(gens.size());
  for (ElementIndex g : gens) targets.push_back(phi.eval(g));

  const std::int64_t count = group->character_count();
  for (std::int64_t step = 0; step < count; ++step) {
    const std::int64_t ord = section == SectionChoice::LexMin ? step : count - 1 - step;
    const auto exps = group->exponents_at(ord);
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      ok = group->evaluate(exps, gens[i]) == targets[i];
    }
    if (ok) return group->character(exps);
  }
  throw Error(ErrorKind::Internal, "no character extends phi_a");
}

MultCharacter lift_character(const MultCharacter& psi, const std::shared_ptr<const CharacterGroup>& target) {
  const GaloisRing& ring = target->ring();
  const std::int64_t k = ring.n() - psi.ring().n();
  if (k < 1 || !target->reduced(k)->same_group(psi.group())) {
    throw Error(ErrorKind::RingMismatch, "character does not live on a reduction of the target ring");
  }
  const auto& basis = target->basis();
  std::vector<std::int64_t> exps(target->rank(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const RootOfUnity v = psi.eval(ring.reduce(basis.generators[i], k));
    if ((v.numerator * basis.orders[i]) % v.order != 0) {
      throw Error(ErrorKind::Internal, "lifted value is not a d_i-th root of unity");
    }
    exps[i] = v.numerator * basis.orders[i] / v.order;
  }
  return target->character(std::move(exps));
}

MultCharacter project_character(const MultCharacter& chi, std::int64_t k) {
  const GaloisRing& ring = chi.ring();
  if (k < 1 || k > ring.n() - 1) throw Error(ErrorKind::BadLevel, "projection level must satisfy 1 <= k <= n-1");
  if (!chi.trivial_on(ring.n() - k)) {
    throw Error(ErrorKind::InvalidParams, "character is not trivial on 1 + p^{n-k}R");
  }
  const auto reduced = chi.group().reduced(k);
  const auto& basis = reduced->basis();
  std::vector<std::int64_t> exps(reduced->rank(), 0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const RootOfUnity v = chi.eval(ring.lift_coordinates(basis.generators[i]));
    if ((v.numerator * basis.orders[i]) % v.order != 0) {
      throw Error(ErrorKind::Internal, "projected value is not a d_i-th root of unity");
    }
    exps[i] = v.numerator * basis.orders[i] / v.order;
  }
  return reduced->character(std::move(exps));
}

}  // namespace galois_sums
