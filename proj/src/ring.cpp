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

#include "galois_sums/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "galois_sums/arith.hpp"

namespace galois_sums {

namespace {

// Product of two residues of Z_m[x]/(f), each of length deg f.
std::vector<std::int64_t> mulmod_poly(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b,
                                      const std::vector<std::int64_t>& f, std::int64_t m) {
  const std::size_t s = f.size() - 1;
  std::vector<std::int64_t> prod(2 * s - 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
    }
  }
  // x^s = -(f_0 + f_1 x + ... + f_{s-1} x^{s-1})
  for (std::size_t d = prod.size(); d-- > s;) {
    const std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < s; ++i) {
      prod[d - s + i] = mod(prod[d - s + i] - c * f[i], m);
    }
  }
  prod.resize(s);
  return prod;
}

std::vector<std::int64_t> x_class(const std::vector<std::int64_t>& f, std::int64_t m) {
  const std::size_t s = f.size() - 1;
  std::vector<std::int64_t> x(s, 0);
  if (s == 1) {
    x[0] = mod(-f[0], m);
  } else {
    x[1] = 1;
  }
  return x;
}

std::vector<std::int64_t> x_pow_mod(const std::vector<std::int64_t>& f, std::int64_t m,
                                    std::int64_t e) {
  const std::size_t s = f.size() - 1;
  std::vector<std::int64_t> result(s, 0);
  result[0] = 1 % m;
  std::vector<std::int64_t> base = x_class(f, m);
  while (e > 0) {
    if (e & 1) result = mulmod_poly(result, base, f, m);
    base = mulmod_poly(base, base, f, m);
    e >>= 1;
  }
  return result;
}

bool is_one(const std::vector<std::int64_t>& v) {
  if (v.empty() || v[0] != 1) return false;
  return std::all_of(v.begin() + 1, v.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t vp(std::int64_t v, std::int64_t p, std::int64_t cap) {
  if (v == 0) return cap;
  std::int64_t k = 0;
  while (v % p == 0 && k < cap) {
    v /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::int64_t RingParams::q() const { return ipow(p, s); }
std::int64_t RingParams::char_modulus() const { return ipow(p, n); }
std::int64_t RingParams::size() const { return ipow(q(), n); }

void RingParams::validate() const {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidParams, "p must be prime");
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be at least 1");
  if (s < 1) throw Error(ErrorKind::InvalidParams, "s must be at least 1");
}

Polynomial Polynomial::reduced_mod(std::int64_t m) const {
  Polynomial out{coeffs, m};
  for (auto& c : out.coeffs) c = mod(c, m);
  return out;
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const std::int64_t c = coeffs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || d == 0) os << c;
    if (d >= 1) os << "x";
    if (d >= 2) os << "^" << d;
  }
  if (first) os << "0";
  return os.str();
}

bool x_has_order(const Polynomial& f, std::int64_t order) {
  if (!is_one(x_pow_mod(f.coeffs, f.modulus, order))) return false;
  for (std::int64_t r : prime_factors(order)) {
    if (is_one(x_pow_mod(f.coeffs, f.modulus, order / r))) return false;
  }
  return true;
}

Polynomial find_basic_primitive_poly(std::int64_t p, std::int64_t n, std::int64_t s) {
  RingParams{p, n, s}.validate();
  const std::int64_t q = ipow(p, s);
  const std::int64_t pn = ipow(p, n);

  if (s == 1) {
    std::int64_t root = 1;
    for (std::int64_t c = 1; c < p; ++c) {
      if (x_has_order(Polynomial{{mod(-c, p), 1}, p}, p - 1)) {
        root = c;
        break;
      }
    }
    // Teichmuller lift: root^{p^{n-1}} mod p^n.
    std::int64_t g = 1;
    const std::int64_t e = ipow(p, n - 1);
    for (std::int64_t i = 0; i < e; ++i) g = (g * root) % pn;
    return Polynomial{{mod(-g, pn), 1}, pn};
  }

  Polynomial h;
  for (std::int64_t v = 0; v < q; ++v) {
    Polynomial f{std::vector<std::int64_t>(static_cast<std::size_t>(s) + 1, 0), p};
    std::int64_t rest = v;
    for (std::int64_t j = 0; j < s; ++j) {
      f.coeffs[static_cast<std::size_t>(j)] = rest % p;
      rest /= p;
    }
    f.coeffs.back() = 1;
    if (f.coeffs[0] == 0) continue;
    if (x_has_order(f, q - 1)) {
      h = f;
      break;
    }
  }
  if (h.coeffs.empty()) throw Error(ErrorKind::Internal, "no primitive polynomial found");

  // Lift one p-adic digit at a time, smallest correction first.
  std::int64_t pj = p;
  for (std::int64_t level = 1; level < n; ++level) {
    const std::int64_t m = pj * p;
    bool found = false;
    for (std::int64_t v = 0; v < q && !found; ++v) {
      Polynomial cand{h.coeffs, m};
      std::int64_t rest = v;
      for (std::int64_t j = 0; j < s; ++j) {
        cand.coeffs[static_cast<std::size_t>(j)] =
            (cand.coeffs[static_cast<std::size_t>(j)] + pj * (rest % p)) % m;
        rest /= p;
      }
      if (is_one(x_pow_mod(cand.coeffs, m, q - 1))) {
        h = cand;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::Internal, "Hensel lift failed");
    pj = m;
  }
  h.modulus = pn;
  return h;
}

std::shared_ptr<const GaloisRing> GaloisRing::create(const RingParams& params,
                                                     std::optional<Polynomial> modulus,
                                                     std::int64_t element_cap) {
  params.validate();
  std::int64_t size = 0;
  try {
    size = params.size();
  } catch (const Error&) {
    throw Error(ErrorKind::SizeLimit, "ring size overflows 64 bits");
  }
  if (element_cap < 1 || size > element_cap) {
    throw Error(ErrorKind::SizeLimit, "ring has " + std::to_string(size) +
                                          " elements, above the cap of " +
                                          std::to_string(element_cap));
  }
  const std::int64_t pn = params.char_modulus();
  const std::int64_t q = params.q();

  Polynomial h;
  if (modulus) {
    h = modulus->reduced_mod(pn);
    if (h.degree() != params.s || !h.is_monic()) {
      throw Error(ErrorKind::InvalidModulus, "modulus must be monic of degree s");
    }
    if (!x_has_order(h.reduced_mod(params.p), q - 1)) {
      throw Error(ErrorKind::InvalidModulus, "modulus is not primitive mod p");
    }
    if (!is_one(x_pow_mod(h.coeffs, pn, q - 1))) {
      throw Error(ErrorKind::InvalidModulus, "modulus does not divide x^(q-1) - 1");
    }
  } else {
    h = find_basic_primitive_poly(params.p, params.n, params.s);
  }

  std::shared_ptr<GaloisRing> ring(new GaloisRing(params, std::move(h), element_cap));
  ring->build_tables();
  return ring;
}

GaloisRing::GaloisRing(const RingParams& params, Polynomial modulus, std::int64_t element_cap)
    : params_(params),
      modulus_(std::move(modulus)),
      element_cap_(element_cap),
      q_(params.q()),
      pn_(params.char_modulus()),
      size_(params.size()) {}

void GaloisRing::build_tables() {
  const auto s = static_cast<std::size_t>(params_.s);

  RingElement xi{x_class(modulus_.coeffs, pn_)};
  xi_powers_.clear();
  xi_powers_.reserve(static_cast<std::size_t>(q_ - 1));
  RingElement cur = one();
  std::unordered_set<ElementIndex> seen;
  for (std::int64_t e = 0; e < q_ - 1; ++e) {
    if (!seen.insert(index_of(cur)).second) {
      throw Error(ErrorKind::InvalidModulus, "xi has order below q - 1");
    }
    xi_powers_.push_back(cur);
    cur = mul(cur, xi);
  }
  if (cur != one()) throw Error(ErrorKind::InvalidModulus, "xi^(q-1) != 1");

  teich_set_.clear();
  teich_set_.push_back(zero());
  teich_set_.insert(teich_set_.end(), xi_powers_.begin(), xi_powers_.end());

  teich_log_.assign(static_cast<std::size_t>(size_), -1);
  for (std::int64_t e = 0; e < q_ - 1; ++e) {
    teich_log_[static_cast<std::size_t>(index_of(xi_powers_[static_cast<std::size_t>(e)]))] = e;
  }

  teich_of_residue_.assign(static_cast<std::size_t>(q_), -1);
  for (const auto& t : teich_set_) {
    if (pow(t, q_) != t) throw Error(ErrorKind::InvalidModulus, "Teichmuller element with t^q != t");
    std::int64_t r = 0;
    for (std::size_t i = 0; i < s; ++i) r = r * params_.p + t.coords[i] % params_.p;
    if (teich_of_residue_[static_cast<std::size_t>(r)] != -1) {
      throw Error(ErrorKind::InvalidModulus, "Teichmuller set does not cover the residue field");
    }
    teich_of_residue_[static_cast<std::size_t>(r)] = index_of(t);
  }

  unit_flag_.assign(static_cast<std::size_t>(size_), 0);
  units_.clear();
  units_.reserve(static_cast<std::size_t>(unit_count()));
  for (ElementIndex i = 0; i < size_; ++i) {
    ElementIndex rest = i;
    bool unit = false;
    for (std::size_t c = 0; c < s; ++c) {
      if ((rest % pn_) % params_.p != 0) unit = true;
      rest /= pn_;
    }
    if (unit) {
      unit_flag_[static_cast<std::size_t>(i)] = 1;
      units_.push_back(i);
    }
  }
}

void GaloisRing::check_element(const RingElement& x) const {
  if (x.coords.size() != static_cast<std::size_t>(params_.s)) {
    throw Error(ErrorKind::InvalidParams, "element has " + std::to_string(x.coords.size()) +
                                              " coordinates, expected " +
                                              std::to_string(params_.s));
  }
  for (std::int64_t c : x.coords) {
    if (c < 0 || c >= pn_) throw Error(ErrorKind::InvalidParams, "coordinate out of range");
  }
}

RingElement GaloisRing::element(ElementIndex index) const {
  if (index < 0 || index >= size_) throw Error(ErrorKind::InvalidParams, "element index out of range");
  RingElement x{std::vector<std::int64_t>(static_cast<std::size_t>(params_.s), 0)};
  for (std::size_t i = x.coords.size(); i-- > 0;) {
    x.coords[i] = index % pn_;
    index /= pn_;
  }
  return x;
}

ElementIndex GaloisRing::index_of(const RingElement& x) const {
  check_element(x);
  ElementIndex idx = 0;
  for (std::int64_t c : x.coords) idx = idx * pn_ + c;
  return idx;
}

RingElement GaloisRing::zero() const {
  return RingElement{std::vector<std::int64_t>(static_cast<std::size_t>(params_.s), 0)};
}

RingElement GaloisRing::one() const { return from_integer(1); }

RingElement GaloisRing::from_integer(std::int64_t v) const {
  RingElement x = zero();
  x.coords[0] = mod(v, pn_);
  return x;
}

RingElement GaloisRing::p_power(std::int64_t k) const {
  if (k >= params_.n) return zero();
  return from_integer(ipow(params_.p, k));
}

RingElement GaloisRing::add(const RingElement& x, const RingElement& y) const {
  check_element(x);
  check_element(y);
  RingElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = (r.coords[i] + y.coords[i]) % pn_;
  return r;
}

RingElement GaloisRing::sub(const RingElement& x, const RingElement& y) const {
  check_element(x);
  check_element(y);
  RingElement r = x;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = mod(r.coords[i] - y.coords[i], pn_);
  return r;
}

RingElement GaloisRing::neg(const RingElement& x) const { return sub(zero(), x); }

RingElement GaloisRing::mul(const RingElement& x, const RingElement& y) const {
  check_element(x);
  check_element(y);
  return RingElement{mulmod_poly(x.coords, y.coords, modulus_.coeffs, pn_)};
}

RingElement GaloisRing::pow(const RingElement& x, std::int64_t e) const {
  if (e < 0) return pow(inv(x), -e);
  RingElement result = one();
  RingElement base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

RingElement GaloisRing::inv(const RingElement& x) const {
  if (!is_unit(x)) throw Error(ErrorKind::NotAUnit, "element lies in the maximal ideal");
  return pow(x, unit_count() - 1);
}

ElementIndex GaloisRing::add_index(ElementIndex x, ElementIndex y) const {
  ElementIndex r = 0;
  ElementIndex place = 1;
  for (std::int64_t i = 0; i < params_.s; ++i) {
    std::int64_t d = x % pn_ + y % pn_;
    if (d >= pn_) d -= pn_;
    r += d * place;
    place *= pn_;
    x /= pn_;
    y /= pn_;
  }
  return r;
}

ElementIndex GaloisRing::sub_index(ElementIndex x, ElementIndex y) const {
  ElementIndex r = 0;
  ElementIndex place = 1;
  for (std::int64_t i = 0; i < params_.s; ++i) {
    std::int64_t d = x % pn_ - y % pn_;
    if (d < 0) d += pn_;
    r += d * place;
    place *= pn_;
    x /= pn_;
    y /= pn_;
  }
  return r;
}

ElementIndex GaloisRing::mul_index(ElementIndex x, ElementIndex y) const {
  return index_of(mul(element(x), element(y)));
}

bool GaloisRing::is_unit(const RingElement& x) const {
  check_element(x);
  return std::any_of(x.coords.begin(), x.coords.end(),
                     [this](std::int64_t c) { return c % params_.p != 0; });
}

Valuation GaloisRing::valuation(const RingElement& x) const {
  check_element(x);
  std::int64_t k = params_.n;
  for (std::int64_t c : x.coords) k = std::min(k, vp(c, params_.p, params_.n));
  Valuation v{k, zero()};
  if (k == params_.n) return v;
  const std::int64_t pk = ipow(params_.p, k);
  const std::int64_t target = ipow(params_.p, params_.n - k);
  for (std::size_t i = 0; i < x.coords.size(); ++i) v.unit.coords[i] = (x.coords[i] / pk) % target;
  return v;
}

std::int64_t GaloisRing::teichmuller_log(const RingElement& t) const {
  return teich_log_[static_cast<std::size_t>(index_of(t))];
}

RingElement GaloisRing::teichmuller_lift(const RingElement& x) const {
  check_element(x);
  std::int64_t r = 0;
  for (std::int64_t c : x.coords) r = r * params_.p + c % params_.p;
  return element(teich_of_residue_[static_cast<std::size_t>(r)]);
}

std::vector<RingElement> GaloisRing::teichmuller_decompose(const RingElement& x) const {
  std::vector<RingElement> digits;
  digits.reserve(static_cast<std::size_t>(params_.n));
  RingElement rest = x;
  for (std::int64_t i = 0; i < params_.n; ++i) {
    RingElement c = teichmuller_lift(rest);
    RingElement diff = sub(rest, c);
    for (auto& coord : diff.coords) coord /= params_.p;  // exact: diff lies in pR
    rest = diff;
    digits.push_back(std::move(c));
  }
  return digits;
}

RingElement GaloisRing::teichmuller_compose(const std::vector<RingElement>& digits) const {
  RingElement acc = zero();
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = add(mul(acc, from_integer(params_.p)), digits[i]);
  }
  return acc;
}

RingElement GaloisRing::frobenius(const RingElement& x) const {
  check_element(x);
  if (params_.s == 1) return x;
  RingElement acc = zero();
  for (std::int64_t i = 0; i < params_.s; ++i) {
    const std::int64_t a = x.coords[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const auto& power = xi_powers_[static_cast<std::size_t>((i * params_.p) % (q_ - 1))];
    acc = add(acc, mul(from_integer(a), power));
  }
  return acc;
}

std::int64_t GaloisRing::trace(const RingElement& x) const {
  RingElement acc = zero();
  RingElement cur = x;
  for (std::int64_t j = 0; j < params_.s; ++j) {
    acc = add(acc, cur);
    cur = frobenius(cur);
  }
  for (std::size_t i = 1; i < acc.coords.size(); ++i) {
    if (acc.coords[i] != 0) throw Error(ErrorKind::NotInBaseRing, "trace left Z_{p^n}");
  }
  return acc.coords[0];
}

std::shared_ptr<const GaloisRing> GaloisRing::reduced(std::int64_t k) const {
  if (k < 1 || k > params_.n - 1) {
    throw Error(ErrorKind::BadLevel, "reduction level must satisfy 1 <= k <= n-1");
  }
  RingParams target{params_.p, params_.n - k, params_.s};
  return create(target, modulus_.reduced_mod(target.char_modulus()), element_cap_);
}

RingElement GaloisRing::reduce(const RingElement& x, std::int64_t k) const {
  if (k < 1 || k > params_.n - 1) {
    throw Error(ErrorKind::BadLevel, "reduction level must satisfy 1 <= k <= n-1");
  }
  check_element(x);
  const std::int64_t target = ipow(params_.p, params_.n - k);
  RingElement r = x;
  for (auto& c : r.coords) c %= target;
  return r;
}

RingElement GaloisRing::lift_coordinates(const RingElement& x) const {
  RingElement r = x;
  check_element(r);
  return r;
}

std::string GaloisRing::describe() const {
  std::ostringstream os;
  if (params_.n == 1) {
    os << "F_" << q_;
  } else if (params_.s == 1) {
    os << "Z_" << pn_;
  } else {
    os << "GR(" << pn_ << "," << size_ << ")";
  }
  return os.str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotInBaseRing: return "NotInBaseRing";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateDimensions: return "DegenerateDimensions";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace galois_sums
