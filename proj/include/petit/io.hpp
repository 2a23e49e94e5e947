#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "petit/codes.hpp"

namespace petit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "petit/1";

// ---- element notation ------------------------------------------------------

/// "0", "1", or "w^k" with w the canonical generator of the field.
inline std::string format_element(const FiniteField& field, std::uint32_t code) {
    if (code == 0) return "0";
    if (code == field.one()) return "1";
    std::uint64_t k = field.log(code);
    if (k == 1) return "w";
    return "w^" + std::to_string(k);
}

/// Accepts "0", "w", "w^k", a bare integer (reduced mod p, embedded as a
/// constant), or a coordinate list "c0,c1,..." over F_p, constant term first.
inline std::uint32_t parse_element(const FiniteField& field, std::string_view text) {
    if (text.empty()) throw error("empty element literal");
    if (text == "w") return field.generator();
    if (text.rfind("w^", 0) == 0) {
        std::uint64_t k = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), k);
        if (ec != std::errc() || ptr != text.data() + text.size()) throw error("bad exponent in element literal");
        return field.exp(k);
    }
    if (text.find(',') != std::string_view::npos) {
        std::vector<std::uint32_t> coords;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
            if (ec != std::errc() || ptr != piece.data() + piece.size()) throw error("bad coordinate in element literal");
            coords.push_back(static_cast<std::uint32_t>(v % field.characteristic()));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (coords.size() != field.degree()) throw error("coordinate list has wrong length");
        return field.code_from_coords(coords);
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw error("unrecognized element literal");
    return static_cast<std::uint32_t>(v % field.characteristic());
}

// ---- JSON ------------------------------------------------------------------

inline Json element_json(const FiniteField& field, std::uint32_t code) { return Json(field.coords(code)); }

inline std::uint32_t element_from_json(const FiniteField& field, const Json& j) {
    std::vector<std::uint32_t> coords = j.get<std::vector<std::uint32_t>>();
    return field.code_from_coords(coords);
}

inline Json field_json(const FiniteField& field) {
    return Json{{"p", field.characteristic()}, {"e", field.degree()}, {"modulus", field.modulus()}};
}

inline Json tower_json(const ExtensionTower& tower) {
    return Json{{"q", tower.q()},
                {"n", tower.n()},
                {"base", field_json(tower.base())},
                {"top", field_json(tower.top())}};
}

inline Json skew_poly_json(const SkewPoly& f) {
    Json coeffs = Json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(element_json(f.field(), f.coeff(static_cast<std::size_t>(i))));
    return Json{{"twist", f.twist().exponent()}, {"coeffs", coeffs}};
}

inline SkewPoly skew_poly_from_json(const std::shared_ptr<const ExtensionTower>& tower, const Json& j) {
    GaloisGenerator twist(tower, j.at("twist").get<unsigned>());
    std::vector<std::uint32_t> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(element_from_json(tower->top(), c));
    return SkewPoly(twist, std::move(coeffs));
}

inline Json algebra_json(const PetitAlgebra& A) {
    Json out{{"q", A.tower().q()}, {"n", A.n()}, {"j", A.gen().exponent()}, {"m", A.m()}};
    if (auto a = A.binomial_a())
        out["a"] = element_json(A.coeff_field(), *a);
    else
        out["f"] = skew_poly_json(A.modulus());
    out["right_invariant"] = A.right_invariant_modulus();
    out["proper"] = A.proper();
    return out;
}

inline Json matrix_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_json(m.field(), m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Aligned generator-notation dump for human inspection.
inline std::string matrix_text(const Mat& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells.push_back(format_element(m.field(), m.at(r, c)));
            width = std::max(width, cells.back().size());
        }
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "[ ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string& cell = cells[r * m.cols() + c];
            out << std::string(width - cell.size(), ' ') << cell << (c + 1 < m.cols() ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

inline const char* iso_status_name(IsoStatus s) {
    switch (s) {
        case IsoStatus::kIsomorphic: return "Isomorphic";
        case IsoStatus::kNotIsomorphic: return "NotIsomorphic";
        default: return "Inconclusive";
    }
}

inline Json iso_verdict_json(const IsoVerdict& v, const FiniteField& top) {
    Json out{{"status", iso_status_name(v.status)}, {"reason", v.reason}};
    if (v.witness) {
        out["witness"] = Json{{"tau", v.witness->tau_exponent}, {"k", element_json(top, v.witness->k)}};
    }
    return out;
}

inline const char* isotopy_status_name(IsotopyStatus s) {
    switch (s) {
        case IsotopyStatus::kIsotopic: return "Isotopic";
        case IsotopyStatus::kNotIsotopic: return "NotIsotopic";
        default: return "Unsupported";
    }
}

inline Json isotopy_verdict_json(const IsotopyVerdict& v, const FiniteField& top) {
    Json out{{"status", isotopy_status_name(v.status)}, {"reason", v.reason}};
    if (v.underlying) out["isomorphism"] = iso_verdict_json(*v.underlying, top);
    return out;
}

inline Json census_json(const CensusResult& c) {
    auto tower = ExtensionTower::make(c.q, c.m);
    Json reps = Json::array();
    for (auto r : c.representatives) reps.push_back(element_json(tower->top(), r));
    Json out{{"schema", kSchemaVersion}, {"q", c.q}, {"m", c.m}, {"j", c.j}, {"count", c.class_count}};
    if (c.formula_count) out["formula_count"] = *c.formula_count;
    out["representatives"] = reps;
    return out;
}

inline Json param_set_json(const ParamSet& s) {
    auto tower = ExtensionTower::make(s.q, s.m);
    const FiniteField& base = tower->base();
    const FiniteField& top = tower->top();
    Json out{{"schema", kSchemaVersion}, {"kind", s.kind}, {"q", s.q}, {"m", s.m}, {"j", s.j}};
    Json base_data;
    if (s.kind == "S") {
        base_data["zeta"] = element_json(base, s.zeta);
        base_data["b"] = element_json(base, s.b);
        base_data["beta"] = element_json(top, s.beta);
    } else {
        base_data["c"] = element_json(base, s.c);
        base_data["sqrt_c"] = element_json(top, s.sqrt_c);
    }
    out["base_data"] = std::move(base_data);
    Json members = Json::array();
    for (const auto& m : s.members) {
        Json member{{"value", element_json(top, m.value)}, {"notation", format_element(top, m.value)}};
        if (s.kind == "S") {
            Json idx = Json::array();
            for (unsigned i = 0; i < s.m; ++i)
                if (m.index_set & (1u << i)) idx.push_back(i);
            member["index_set"] = std::move(idx);
        }
        if (!m.tuple.empty()) {
            Json tup = Json::array();
            for (auto t : m.tuple) tup.push_back(element_json(base, t));
            member["tuple"] = std::move(tup);
        }
        members.push_back(std::move(member));
    }
    out["members"] = std::move(members);
    return out;
}

inline Json rank_code_json(const RankCode& code, bool include_codewords = false) {
    Json out{{"schema", kSchemaVersion},
             {"ambient", Json{{"size", code.ambient_size}, {"field", field_json(*code.ambient_field)}}},
             {"linearity_base", code.linearity_base}};
    Json basis = Json::array();
    for (const Mat& b : code.basis) basis.push_back(matrix_json(b));
    out["basis"] = std::move(basis);
    if (include_codewords) {
        Json words = Json::array();
        for (const Mat& w : code.codewords) words.push_back(matrix_json(w));
        out["codewords"] = std::move(words);
    }
    return out;
}

inline Json mrd_report_json(const MrdReport& r) {
    return Json{{"cardinality", r.cardinality},
                {"ambient_size", r.ambient_size},
                {"alphabet", r.alphabet},
                {"min_rank_distance", r.min_distance},
                {"singleton_cardinality", r.singleton_cardinality},
                {"mrd", r.pass}};
}

inline Json consta_code_json(const ConstaCode& code) {
    const FiniteField& top = code.tower->top();
    return Json{{"schema", kSchemaVersion},
                {"m", code.length},
                {"k", code.divisor_degree},
                {"dimension", code.length - code.divisor_degree},
                {"a", element_json(top, code.constant)},
                {"g", skew_poly_json(code.divisor)},
                {"generator_matrix", matrix_json(code.generator_matrix)},
                {"min_hamming_distance", code.min_hamming_distance},
                {"shift_closed", code.shift_closed},
                {"singleton_equality", code.singleton_equality}};
}

inline Json precheck_json(const std::vector<Precheck>& prechecks) {
    Json out = Json::array();
    for (const auto& pc : prechecks) {
        Json item{{"criterion", pc.criterion}, {"applicable", pc.applicable}};
        if (pc.applicable) {
            item["verdict"] = pc.verdict == PrecheckVerdict::kDivision      ? "division"
                              : pc.verdict == PrecheckVerdict::kNotDivision ? "not-division"
                                                                            : "no-conclusion";
            item["detail"] = pc.detail;
        }
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace petit
