#pragma once

// JSON and CSV serialization of values, labels, tables and reports.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chars.hpp"
#include "cyclotomic.hpp"
#include "oracle.hpp"
#include "roots.hpp"

namespace borelsc {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

/// {"order": M, "num": [...], "den": [...]} in the smallest cyclotomic field holding the value.
inline Json to_json(const CyclotomicNumber& x) {
    CyclotomicNumber v = x.normalized();
    Json num = Json::array(), den = Json::array();
    for (const auto& c : v.coeffs()) {
        num.push_back(to_json(mpz_class(c.get_num())));
        den.push_back(to_json(mpz_class(c.get_den())));
    }
    return {{"order", v.order()}, {"num", num}, {"den", den}};
}

inline Json to_json(const RookPlacement& d) {
    Json a = Json::array();
    for (Root r : d.roots()) a.push_back({r.i, r.j});
    return a;
}
inline Json to_json(const Decoration& phi) {
    Json a = Json::array();
    for (auto v : phi.values) a.push_back(v.value);
    return a;
}
inline Json to_json(const TorusElement& h) {
    Json a = Json::array();
    for (auto v : h.entries) a.push_back(v.value);
    return a;
}

inline Json to_json(const SuperclassLabelU& l) { return {{"D", to_json(l.D)}, {"phi", to_json(l.phi)}}; }
inline Json to_json(const SuperclassLabelG& l) {
    return {{"D", to_json(l.D)}, {"phi", to_json(l.phi)}, {"h", to_json(l.h)}};
}
inline Json to_json(const SupercharLabelG& l) {
    return {{"D", to_json(l.D)}, {"phi", to_json(l.phi)}, {"theta", l.theta}};
}
inline Json to_json(const TableLabel& l) {
    Json j{{"D", to_json(l.D)}, {"phi", to_json(l.phi)}};
    if (l.h) j["h"] = to_json(*l.h);
    if (l.theta) j["theta"] = *l.theta;
    return j;
}

inline Json to_json(const CharacterTable& t) {
    Json rows = Json::array(), cols = Json::array(), degrees = Json::array(), sizes = Json::array(),
         values = Json::array();
    for (const auto& l : t.rows) rows.push_back(to_json(l));
    for (const auto& l : t.cols) cols.push_back(to_json(l));
    for (const auto& d : t.degrees) degrees.push_back(to_json(d));
    for (const auto& s : t.class_sizes) sizes.push_back(to_json(s));
    for (const auto& row : t.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        values.push_back(std::move(r));
    }
    return {{"group", group_name(t.group)}, {"n", t.n},          {"q", t.q},
            {"rows", rows},                 {"cols", cols},      {"degrees", degrees},
            {"class_sizes", sizes},         {"values", values}};
}

/// Complex rendering with 12 significant digits, for display only.
inline std::string cyc_to_complex_text(const CyclotomicNumber& x) {
    auto z = x.to_complex();
    auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", clean(z.real()), clean(z.imag()));
    return buf;
}

inline std::string label_text(const TableLabel& l) {
    std::string s = label_text(SuperclassLabelU{l.D, l.phi});
    if (l.h) {
        s += " h=[";
        for (std::size_t k = 0; k < l.h->entries.size(); ++k) s += (k ? "," : "") + std::to_string(l.h->entries[k].value);
        s += "]";
    }
    if (l.theta) {
        s += " theta=[";
        for (std::size_t k = 0; k < l.theta->size(); ++k) s += (k ? "," : "") + std::to_string((*l.theta)[k]);
        s += "]";
    }
    return s;
}

/// Header row of class labels, a class-size row, then one row per character.
inline std::string to_csv(const CharacterTable& t) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::ostringstream os;
    os << "character";
    for (const auto& c : t.cols) os << "," << quote(label_text(c));
    os << "\nclass_size";
    for (const auto& s : t.class_sizes) os << "," << s.get_str();
    os << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << quote(label_text(t.rows[r]));
        for (const auto& v : t.values[r]) os << "," << cyc_to_complex_text(v);
        os << "\n";
    }
    return os.str();
}

inline Json to_json(const AxiomReport& r) {
    return {{"group", group_name(r.group)},
            {"n", r.n},
            {"q", r.q},
            {"oracle", r.oracle_used},
            {"pass", r.all_pass()},
            {"axioms",
             {{"S1", {{"pass", r.s1_pass}}}, {"S2", {{"pass", r.s2_pass}}}, {"S3", {{"pass", r.s3_pass}}}}},
            {"counts",
             {{"supercharacters", r.supercharacters}, {"superclasses", r.superclasses}, {"match", r.counts_match}}},
            {"partition",
             {{"labels_match_orbits", r.partition_pass},
              {"group_order", r.group_size},
              {"size_total", to_json(r.size_total)},
              {"totals_match", r.totals_pass}}},
            {"formula_matches_oracle", r.formula_pass},
            {"witnesses", r.witnesses}};
}

inline Json to_json(const SignedRoots& s) {
    auto list = [](const std::vector<Root>& v) {
        Json a = Json::array();
        for (Root r : v) a.push_back({r.i, r.j});
        return a;
    };
    return {{"plus", list(s.plus)}, {"minus", list(s.minus)}};
}

}  // namespace borelsc
