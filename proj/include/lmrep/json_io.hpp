/*
   Copyright 2026 The lmrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <json.hpp>

#include "lmrep/classgroup.hpp"

namespace lmrep {

/// Row-major array of element strings.
nlohmann::json matrix_entries_json(const RMat& m);

/// Matrix file schema: {"ring": "...", "entries": [[...], ...]}.
nlohmann::json matrix_file_json(const RMat& m);
RMat matrix_from_file_json(const nlohmann::json& j);
RMat matrix_entries_from_json(const RingSpec& spec, const nlohmann::json& entries);

/// Coordinate vector with denominator: {"coords": [...], "den": "..."}.
nlohmann::json field_elem_json(const FieldElem& g);

nlohmann::json degree_one_json(const DegreeOneForm& form, const RingSpec& spec);

/// {"a", "z", "kappa", "C", "charpoly"} plus the ideal HNF.
nlohmann::json representative_json(const Representative& rep);

nlohmann::json class_table_json(const ClassTable& table, const LenstraReport& lenstra);

}   // namespace lmrep
