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

#include "galois_sums/serialize.hpp"

namespace galois_sums {

Json ring_to_json(const GaloisRing& ring) {
  return {{"p", ring.p()},
          {"n", ring.n()},
          {"s", ring.s()},
          {"modulus", ring.modulus().coeffs},
          {"size", ring.size()},
          {"units", ring.unit_count()}};
}

Json element_to_json(const RingElement& x) { return x.coords; }

RingElement element_from_json(const GaloisRing& ring, const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidParams, "element must be a coordinate array");
  RingElement x{j.get<std::vector<std::int64_t>>()};
  (void)ring.index_of(x);
  return x;
}

Json character_table_json(const CharacterGroup& group) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < group.rank(); ++i) {
    basis.push_back({{"generator", element_to_json(group.basis().generators[i])}, {"order", group.basis().orders[i]}});
  }
  Json chars = Json::array();
  for (const auto& chi : group.enumerate()) {
    chars.push_back({{"exponents", chi.exponents()}, {"triviality_level", chi.triviality_level()}});
  }
  return {{"ring", ring_to_json(group.ring())}, {"basis", basis}, {"characters", chars}};
}

Json sections_json(const std::shared_ptr<const CharacterGroup>& group, SectionChoice section) {
  const auto field = group->residue_field();
  Json out = Json::array();
  for (std::int64_t i = 0; i < field->ring().size(); ++i) {
    const RingElement a = field->ring().element(i);
    out.push_back({{"a", element_to_json(a)}, {"exponents", extend_phi(group, a, section).exponents()}});
  }
  return out;
}

Json expected_to_json(const Expectation& e) {
  Json j{{"kind", to_string(e.magnitude.kind)}};
  switch (e.magnitude.kind) {
    case MagnitudeKind::PowerOfQ:
      j["twice_exponent"] = e.magnitude.twice_exponent;
      break;
    case MagnitudeKind::ExplicitInteger:
      j["integer"] = e.magnitude.integer;
      break;
    case MagnitudeKind::ScaledPowerOfQ:
      j["coefficient"] = e.magnitude.integer;
      j["twice_exponent"] = e.magnitude.twice_exponent;
      break;
    case MagnitudeKind::ResidueField:
      j["magnitude"] = e.magnitude.numeric;
      break;
    case MagnitudeKind::Zero:
    case MagnitudeKind::Unclassified:
      break;
  }
  if (e.exact) j["exact"] = {e.exact->real(), e.exact->imag()};
  return j;
}

Json sum_to_json(const SumValue& sum) {
  return {{"value", {sum.value.real(), sum.value.imag()}},
          {"expected", expected_to_json(sum.expected)},
          {"lemma", sum.expected.rule},
          {"terms", sum.terms}};
}

Json report_to_json(const EvalReport& r) {
  return {{"N", r.n},
          {"K", r.k},
          {"imax_measured", r.imax_measured},
          {"imax_formula", r.imax_formula},
          {"welch", r.welch},
          {"ratio", r.ratio},
          {"argmax", {r.argmax_i, r.argmax_j}}};
}

Json table2_to_json(const std::vector<Table2Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"q", r.q}, {"N", r.n_rows}, {"K", r.length}, {"imax", r.imax}, {"welch", r.welch}, {"ratio", r.ratio}});
  }
  return out;
}

Json codebook_to_json(const Codebook& cb) {
  const GaloisRing& ring = cb.params.group->ring();
  Json params{{"ring", ring_to_json(ring)},
              {"m", cb.params.m},
              {"k", cb.params.k},
              {"a", element_to_json(cb.params.a)},
              {"psi0", cb.params.psi0},
              {"section", to_string(cb.params.section)}};
  Json rows = Json::array();
  for (std::int64_t i = 0; i < cb.matrix.rows; ++i) {
    Json row = Json::array();
    for (const auto& v : cb.matrix.row(i)) {
      row.push_back(v.real());
      row.push_back(v.imag());
    }
    rows.push_back(std::move(row));
  }
  return {{"params", params}, {"N", cb.n_rows}, {"K", cb.length}, {"rows", rows}};
}

CodebookMatrix matrix_from_json(const Json& j) {
  try {
    CodebookMatrix m;
    for (const auto& row : j.at("rows")) {
      const auto values = row.get<std::vector<double>>();
      if (values.size() % 2 != 0) throw Error(ErrorKind::IoError, "JSON row has an odd number of values");
      const auto cols = static_cast<std::int64_t>(values.size() / 2);
      if (m.rows == 0) m.cols = cols;
      if (cols != m.cols) throw Error(ErrorKind::IoError, "JSON rows have different lengths");
      for (std::size_t t = 0; t < values.size(); t += 2) m.entries.emplace_back(values[t], values[t + 1]);
      ++m.rows;
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, std::string("malformed codebook JSON: ") + e.what());
  }
}

}  // namespace galois_sums
