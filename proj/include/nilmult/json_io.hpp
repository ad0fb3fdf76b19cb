#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "nilmult/abelian.hpp"
#include "nilmult/classify.hpp"
#include "nilmult/multiplier.hpp"

namespace nilmult {

using nlohmann::json;

// Serializers for every report-bearing type. Object keys are emitted in
// sorted order by the JSON library, so identical values always serialize to
// identical bytes; from_json inverts to_json exactly, which the round-trip
// tests rely on.

inline void to_json(json& j, const PGroupPartition& p) { j = p.parts(); }

inline void from_json(const json& j, PGroupPartition& p) {
    p = PGroupPartition(j.get<std::vector<long long>>());
}

inline void to_json(json& j, const CaseStatus& s) { j = std::string(to_string(s)); }

inline void from_json(const json& j, CaseStatus& s) {
    const auto text = j.get<std::string>();
    if (text == "confirmed")
        s = CaseStatus::confirmed;
    else if (text == "counterexample")
        s = CaseStatus::counterexample;
    else
        throw std::invalid_argument("unknown case status '" + text + "'");
}

inline void to_json(json& j, const MultiplierStructure::Factor& f) {
    j = json{{"order", f.order}, {"multiplicity", f.multiplicity}};
}

inline void from_json(const json& j, MultiplierStructure::Factor& f) {
    j.at("order").get_to(f.order);
    j.at("multiplicity").get_to(f.multiplicity);
}

inline void to_json(json& j, const MultiplierStructure& m) {
    j = json{{"factors", m.factors()}};
}

inline void from_json(const json& j, MultiplierStructure& m) {
    m = MultiplierStructure(j.at("factors").get<std::vector<MultiplierStructure::Factor>>());
}

inline void to_json(json& j, const PMultiplierStructure::Factor& f) {
    j = json{{"exponent", f.exponent}, {"multiplicity", f.multiplicity}};
}

inline void from_json(const json& j, PMultiplierStructure::Factor& f) {
    j.at("exponent").get_to(f.exponent);
    j.at("multiplicity").get_to(f.multiplicity);
}

inline void to_json(json& j, const PMultiplierStructure& m) {
    j = json{{"factors", m.factors()}};
}

inline void from_json(const json& j, PMultiplierStructure& m) {
    m = PMultiplierStructure(j.at("factors").get<std::vector<PMultiplierStructure::Factor>>());
}

/// Factored orders serialize as objects with decimal-string keys, e.g.
/// {"2": 3, "3": 1}, never as expanded integers.
inline json factored_order_to_json(const FactoredOrder& order) {
    json j = json::object();
    for (const auto& [p, e] : order) j[std::to_string(p)] = e;
    return j;
}

inline FactoredOrder factored_order_from_json(const json& j) {
    FactoredOrder order;
    for (const auto& [key, value] : j.items())
        order[std::stoll(key)] = value.get<long long>();
    return order;
}

inline void to_json(json& j, const CountComparison& c) {
    j = json{{"kind", "count-comparison"}, {"weight", c.weight},   {"letters", c.letters},
             {"formula", c.formula},       {"enumerated", c.enumerated}, {"status", c.status}};
}

inline void from_json(const json& j, CountComparison& c) {
    j.at("weight").get_to(c.weight);
    j.at("letters").get_to(c.letters);
    j.at("formula").get_to(c.formula);
    j.at("enumerated").get_to(c.enumerated);
    j.at("status").get_to(c.status);
}

inline void to_json(json& j, const SchurComparison& c) {
    j = json{{"kind", "schur-comparison"}, {"orders", c.orders},  {"formula", c.formula},
             {"oracle", c.oracle},         {"status", c.status}};
}

inline void from_json(const json& j, SchurComparison& c) {
    j.at("orders").get_to(c.orders);
    j.at("formula").get_to(c.formula);
    j.at("oracle").get_to(c.oracle);
    j.at("status").get_to(c.status);
}

inline void to_json(json& j, const BoundCase& c) {
    j = json{{"kind", "bound"},
             {"n", c.n},
             {"c", c.c},
             {"bound", c.bound},
             {"max_found", c.max_found},
             {"maximizers", c.maximizers},
             {"within_bound", c.within_bound},
             {"status", c.status}};
}

inline void from_json(const json& j, BoundCase& c) {
    j.at("n").get_to(c.n);
    j.at("c").get_to(c.c);
    j.at("bound").get_to(c.bound);
    j.at("max_found").get_to(c.max_found);
    j.at("maximizers").get_to(c.maximizers);
    j.at("within_bound").get_to(c.within_bound);
    j.at("status").get_to(c.status);
}

inline void to_json(json& j, const ClassificationCase& c) {
    j = json{{"kind", "classification"},
             {"n", c.n},
             {"c", c.c},
             {"t", c.t},
             {"target_exponent", c.target_exponent},
             {"expected", c.expected},
             {"solutions", c.solutions},
             {"status", c.status}};
}

inline void from_json(const json& j, ClassificationCase& c) {
    j.at("n").get_to(c.n);
    j.at("c").get_to(c.c);
    j.at("t").get_to(c.t);
    j.at("target_exponent").get_to(c.target_exponent);
    j.at("expected").get_to(c.expected);
    j.at("solutions").get_to(c.solutions);
    j.at("status").get_to(c.status);
}

inline void to_json(json& j, const InequalityFinding& f) {
    j = json{{"kind", "inequality"}, {"name", f.name}, {"parameters", f.parameters},
             {"lhs", f.lhs},         {"rhs", f.rhs},   {"holds", f.holds}};
}

inline void from_json(const json& j, InequalityFinding& f) {
    j.at("name").get_to(f.name);
    j.at("parameters").get_to(f.parameters);
    j.at("lhs").get_to(f.lhs);
    j.at("rhs").get_to(f.rhs);
    j.at("holds").get_to(f.holds);
}

inline void to_json(json& j, const ReportCase& c) {
    std::visit([&](const auto& record) { j = record; }, c);
}

inline void from_json(const json& j, ReportCase& c) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "count-comparison")
        c = j.get<CountComparison>();
    else if (kind == "schur-comparison")
        c = j.get<SchurComparison>();
    else if (kind == "bound")
        c = j.get<BoundCase>();
    else if (kind == "classification")
        c = j.get<ClassificationCase>();
    else if (kind == "inequality")
        c = j.get<InequalityFinding>();
    else
        throw std::invalid_argument("unknown report case kind '" + kind + "'");
}

inline void to_json(json& j, const Summary& s) {
    j = json{{"checked", s.checked},
             {"confirmed", s.confirmed},
             {"counterexamples", s.counterexamples}};
}

inline void from_json(const json& j, Summary& s) {
    j.at("checked").get_to(s.checked);
    j.at("confirmed").get_to(s.confirmed);
    j.at("counterexamples").get_to(s.counterexamples);
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"suite", r.suite}, {"ranges", r.ranges}, {"cases", r.cases},
             {"summary", r.summary}};
}

inline void from_json(const json& j, VerificationReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("ranges").get_to(r.ranges);
    j.at("cases").get_to(r.cases);
    j.at("summary").get_to(r.summary);
}

} // namespace nilmult
