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

#include "lmrep/cli_commands.hpp"

#include <cctype>
#include <functional>
#include <fstream>
#include <sstream>

#include "lmrep/json_io.hpp"
#include "lmrep/selfcheck.hpp"

namespace lmrep {

namespace {

std::string render(const nlohmann::json& j, bool compact) {
    return compact ? j.dump() : j.dump(2);
}

/// The generator symbol of f: the unique identifier that is not the base-ring
/// variable ("x^3+4*x-1" -> x, "y^3+(t^3+t^2+t)" -> y).
std::string infer_main_var(const std::string& text, const RingSpec& spec) {
    std::string found;
    for (size_t i = 0; i < text.size();) {
        if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        std::string ident = text.substr(i, j - i);
        i = j;
        if (spec.kind == RingKind::PolyOverPrimeField && ident == spec.var) continue;
        if (found.empty())
            found = ident;
        else if (found != ident)
            throw parse_error("polynomial uses more than one generator symbol");
    }
    return found.empty() ? "x" : found;
}

struct Session {
    RingSpec spec;
    OrderCtxPtr ctx;
};

Session open_order(const JobConfig& config) {
    if (config.f.empty()) throw parse_error("no defining polynomial given (--f)");
    RingSpec spec = RingSpec::parse(config.ring);
    std::string var = infer_main_var(config.f, spec);
    RPoly f = parse_poly(spec, var, config.f);
    return {spec, OrderCtx::create(spec, f, var, config.assert_irreducible)};
}

CmdResult guard(const JobConfig& config, const std::function<nlohmann::json()>& body) {
    try {
        return {0, render(body(), config.compact_json)};
    } catch (const parse_error& e) {
        return {1, render({{"error", e.what()}}, config.compact_json)};
    } catch (const nlohmann::json::exception& e) {
        return {1, render({{"error", e.what()}}, config.compact_json)};
    } catch (const std::domain_error& e) {
        return {2, render({{"error", e.what()}}, config.compact_json)};
    } catch (const std::exception& e) {
        return {4, render({{"error", std::string("internal: ") + e.what()}},
                          config.compact_json)};
    }
}

}   // namespace

void apply_example_preset(JobConfig& config) {
    if (config.example == 0) return;
    if (config.example != 1 && config.example != 2)
        throw parse_error("unknown example preset (use 1 or 2)");
    if (config.example == 1) {
        config.ring = "Z";
        config.f = "x^3+4*x-1";
        if (config.ideal_text.empty()) config.ideal_text = "3, x-2";
        if (config.prime_bound == 0) config.prime_bound = 50;
        if (config.box == 0) config.box = 6;
    } else {
        config.ring = "GF(2)[t]";
        config.f = "y^3+(t^3+t^2+t)";
        if (config.ideal_text.empty()) config.ideal_text = "t, y";
        if (config.prime_bound == 0) config.prime_bound = 4;
        if (config.box == 0) config.box = 4;
    }
    if (config.exp_bound == 0) config.exp_bound = 2;
}

CmdResult cmd_repr(JobConfig config) {
    return guard(config, [&]() -> nlohmann::json {
        apply_example_preset(config);
        Session s = open_order(config);
        if (config.ideal_text.empty()) throw parse_error("no ideal generators given (--ideal)");
        IdealLat b = ideal_from_text(s.ctx, config.ideal_text);
        Representative rep = representative_for_ideal(b);
        return representative_json(rep);
    });
}

CmdResult cmd_forward(JobConfig config) {
    return guard(config, [&]() -> nlohmann::json {
        apply_example_preset(config);
        Session s = open_order(config);
        if (config.matrix_path.empty()) throw parse_error("no matrix file given (--matrix)");
        std::ifstream in(config.matrix_path);
        if (!in) throw parse_error("cannot open matrix file: " + config.matrix_path);
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("matrix file is not valid JSON: ") + e.what());
        }
        RMat m = matrix_from_file_json(doc);
        if (m.spec != s.spec) throw parse_error("matrix ring does not match --ring");
        IdealLat b = matrix_to_ideal(m, s.ctx);
        nlohmann::json out = {{"ring", s.spec.to_string()},
                              {"ideal", matrix_entries_json(b.h)}};
        std::optional<DegreeOneForm> form;
        if (b.is_unit_ideal())
            form = DegreeOneForm{ring_one(s.spec), ring_zero(s.spec)};
        else
            form = degree_one_form(b);
        if (form) {
            out["degree_one"] = degree_one_json(*form, s.spec);
            out["representative"] = representative_json(representative_for_ideal(b));
        } else {
            out["degree_one"] = nlohmann::json();
        }
        return out;
    });
}

CmdResult cmd_classes(JobConfig config) {
    return guard(config, [&]() -> nlohmann::json {
        apply_example_preset(config);
        Session s = open_order(config);
        if (config.prime_bound <= 0 || config.exp_bound <= 0 || config.box <= 0)
            throw parse_error("classes needs --prime-bound, --exp-bound and --box");
        auto corpus = enumerate_ideals(s.ctx, config.prime_bound, config.exp_bound);
        ClassTable table = classify(std::move(corpus), config.box);
        auto ramified = default_ramified_set(*s.ctx, table.ideals);
        LenstraReport lenstra = verify_lenstra(table, ramified);
        nlohmann::json out = class_table_json(table, lenstra);
        out["prime_bound"] = config.prime_bound;
        out["exp_bound"] = config.exp_bound;
        return out;
    });
}

CmdResult cmd_selfcheck(JobConfig config) {
    SelfcheckOptions options;
    options.seed = config.seed;
    SelfcheckReport report = run_selfcheck(options);
    std::ostringstream os;
    for (const SuiteResult& s : report.suites) {
        if (s.passed)
            os << s.name << ": " << s.cases << " cases ok\n";
        else
            os << s.name << ": FAILED\ncounterexample: " << s.counterexample << "\n";
    }
    os << (report.all_passed ? "selfcheck passed" : "selfcheck FAILED") << "\n";
    return {report.all_passed ? 0 : 3, os.str()};
}

}   // namespace lmrep
