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

#include <json.hpp>

#include "galois_sums/codebook.hpp"
#include "galois_sums/sums.hpp"

namespace galois_sums {

using Json = nlohmann::json;

Json ring_to_json(const GaloisRing& ring);
Json element_to_json(const RingElement& x);
RingElement element_from_json(const GaloisRing& ring, const Json& j);

// Basis with orders plus one {exponents, triviality_level} entry per character.
Json character_table_json(const CharacterGroup& group);
// One {a, exponents} entry per residue-field element.
Json sections_json(const std::shared_ptr<const CharacterGroup>& group, SectionChoice section);

Json expected_to_json(const Expectation& e);
Json sum_to_json(const SumValue& sum);
Json report_to_json(const EvalReport& report);
Json table2_to_json(const std::vector<Table2Row>& rows);

Json codebook_to_json(const Codebook& codebook);
CodebookMatrix matrix_from_json(const Json& j);

}  // namespace galois_sums
