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

#include "lmrep/json_io.hpp"

namespace lmrep {

nlohmann::json matrix_entries_json(const RMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j), m.spec));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json matrix_file_json(const RMat& m) {
    return {{"ring", m.spec.to_string()}, {"entries", matrix_entries_json(m)}};
}

RMat matrix_entries_from_json(const RingSpec& spec, const nlohmann::json& entries) {
    if (!entries.is_array() || entries.empty())
        throw parse_error("matrix entries must be a non-empty array");
    int rows = static_cast<int>(entries.size());
    int cols = -1;
    for (const auto& row : entries) {
        if (!row.is_array()) throw parse_error("matrix rows must be arrays");
        if (cols < 0) cols = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols) throw parse_error("ragged matrix rows");
    }
    RMat m = RMat::zeros(spec, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const auto& cell = entries[i][j];
            if (cell.is_number_integer())
                m.at(i, j) = ring_from_int(spec, cell.get<long>());
            else if (cell.is_string())
                m.at(i, j) = parse_elem(spec, cell.get<std::string>());
            else
                throw parse_error("matrix entries must be strings or integers");
        }
    return m;
}

RMat matrix_from_file_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("entries"))
        throw parse_error("matrix file needs \"ring\" and \"entries\"");
    RingSpec spec = RingSpec::parse(j.at("ring").get<std::string>());
    return matrix_entries_from_json(spec, j.at("entries"));
}

nlohmann::json field_elem_json(const FieldElem& g) {
    auto parts = split_denominator(g);
    const RingSpec& spec = g.ctx->ring;
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& x : parts.num) coords.push_back(to_string(x, spec));
    return {{"coords", std::move(coords)}, {"den", to_string(parts.den, spec)}};
}

nlohmann::json degree_one_json(const DegreeOneForm& form, const RingSpec& spec) {
    return {{"a", to_string(form.a, spec)}, {"z", to_string(form.z, spec)}};
}

nlohmann::json representative_json(const Representative& rep) {
    const OrderCtx& ctx = *rep.ideal.ctx;
    return {{"ring", ctx.ring.to_string()},
            {"a", to_string(rep.form.a, ctx.ring)},
            {"z", to_string(rep.form.z, ctx.ring)},
            {"kappa", matrix_entries_json(rep.kappa_used)},
            {"C", matrix_entries_json(rep.c)},
            {"charpoly", to_string(ctx.f, ctx.var)},
            {"ideal", matrix_entries_json(rep.ideal.h)}};
}

nlohmann::json class_table_json(const ClassTable& table, const LenstraReport& lenstra) {
    const OrderCtx& ctx = *table.ideals[0].ideal.ctx;
    nlohmann::json classes = nlohmann::json::array();
    for (size_t ci = 0; ci < table.classes.size(); ++ci) {
        const ClassInfo& cls = table.classes[ci];
        nlohmann::json witnesses = nlohmann::json::array();
        for (const auto& w : cls.witnesses) witnesses.push_back(field_elem_json(w));
        nlohmann::json entry = {
            {"representative", matrix_entries_json(table.ideal_of(cls.representative_index).h)},
            {"member_count", cls.member_indices.size()},
            {"witnesses", std::move(witnesses)},
        };
        entry["degree_one"] = cls.degree_one_rep
                                  ? degree_one_json(*cls.degree_one_rep, ctx.ring)
                                  : nlohmann::json();
        if (ci < lenstra.per_class.size()) {
            const LenstraClassReport& r = lenstra.per_class[ci];
            nlohmann::json lj = {{"satisfied", r.satisfied}};
            if (r.member_index)
                lj["member"] = matrix_entries_json(table.ideal_of(*r.member_index).h);
            entry["lenstra"] = std::move(lj);
        }
        classes.push_back(std::move(entry));
    }
    nlohmann::json unresolved = nlohmann::json::array();
    for (auto& [a, b] : table.unresolved)
        unresolved.push_back({{"first", matrix_entries_json(table.ideal_of(a).h)},
                              {"second", matrix_entries_json(table.ideal_of(b).h)}});
    return {{"ring", ctx.ring.to_string()},
            {"f", to_string(ctx.f, ctx.var)},
            {"box", table.box},
            {"ideal_count", table.ideals.size()},
            {"class_count", table.classes.size()},
            {"classes", std::move(classes)},
            {"unresolved", std::move(unresolved)},
            {"lenstra_all_satisfied", lenstra.all_satisfied}};
}

}   // namespace lmrep
