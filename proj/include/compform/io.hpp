#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "compform/catalog.hpp"
#include "compform/dioph.hpp"
#include "compform/linstruct.hpp"
#include "compform/multilinear.hpp"
#include "compform/polyring.hpp"

namespace compform {

using json = nlohmann::ordered_json;

// Polynomial: {"vars": [...], "terms": [{"c": "<decimal>", "e": [...]}]},
// terms in graded-lex descending order.

inline json to_json(const Polynomial& p) {
    json terms = json::array();
    const std::size_t nv = p.table()->size();
    for (const auto& [m, c] : p.sorted_terms()) {
        json e = json::array();
        for (std::size_t i = 0; i < nv; ++i) e.push_back(m.exponent(i));
        terms.push_back({{"c", to_decimal(c)}, {"e", std::move(e)}});
    }
    return {{"vars", p.table()->names()}, {"terms", std::move(terms)}};
}

/// Reads a polynomial over a fresh table built from "vars", or over `table`
/// when given (the names must then match it exactly).
inline Polynomial polynomial_from_json(const json& j, VarTablePtr table = nullptr) {
    try {
        auto names = j.at("vars").get<std::vector<std::string>>();
        if (!table) {
            table = VarTable::make(names);
        } else if (table->names() != names) {
            throw Error(ErrorKind::VarTableMismatch, "polynomial variables differ from the expected table");
        }
        Polynomial p(table);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<std::vector<std::uint32_t>>();
            if (e.size() != names.size()) throw Error(ErrorKind::Parse, "exponent vector length");
            Monomial m;
            for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
            p.add_term(m, parse_bigint(t.at("c").get<std::string>()));
        }
        return p;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, ex.what());
    }
}

// LinearStructure: {"n", "h", "params", "coeff": [[ [poly per r] ]]}.

inline json to_json(const LinearStructure& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.order(); ++j) {
            json cell = json::array();
            for (std::size_t r = 0; r < s.coords(); ++r) cell.push_back(to_json(s.coeff(i, j, r)));
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    return {{"n", s.order()}, {"h", s.coords()}, {"params", s.params()->names()}, {"coeff", std::move(rows)}};
}

inline LinearStructure structure_from_json(const json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>(), h = j.at("h").get<std::size_t>();
        LinearStructure s(n, h, VarTable::make(j.at("params").get<std::vector<std::string>>()));
        const json& rows = j.at("coeff");
        if (rows.size() != n) throw Error(ErrorKind::Parse, "coeff rows");
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) throw Error(ErrorKind::Parse, "coeff columns");
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (rows[i][jj].size() != h) throw Error(ErrorKind::Parse, "coeff cell length");
                for (std::size_t r = 0; r < h; ++r) s.set(i, jj, r, polynomial_from_json(rows[i][jj][r], s.params()));
            }
        }
        return s;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, ex.what());
    }
}

// MultilinearMap: {"k", "h", "params", "coeff": [{"i", "j": [...], "c"}]},
// indices 1-based.

inline json to_json(const MultilinearMap& m) {
    json coeff = json::array();
    for (const auto& [k, c] : m.coefficients()) {
        json idx = json::array();
        for (unsigned a = 0; a < m.arity(); ++a) idx.push_back(k[a + 1] + 1);
        coeff.push_back({{"i", k[0] + 1}, {"j", std::move(idx)}, {"c", to_json(c)}});
    }
    return {{"k", m.arity()}, {"h", m.dim()}, {"params", m.params()->names()}, {"coeff", std::move(coeff)}};
}

inline MultilinearMap map_from_json(const json& j) {
    try {
        MultilinearMap m(j.at("k").get<unsigned>(), j.at("h").get<std::size_t>(),
                         VarTable::make(j.at("params").get<std::vector<std::string>>()));
        for (const auto& e : j.at("coeff")) {
            auto idx = e.at("j").get<std::vector<std::size_t>>();
            auto out = e.at("i").get<std::size_t>();
            if (out == 0) throw Error(ErrorKind::Parse, "indices are 1-based");
            for (auto& v : idx) {
                if (v == 0) throw Error(ErrorKind::Parse, "indices are 1-based");
                --v;
            }
            m.add(out - 1, idx, polynomial_from_json(e.at("c"), m.params()));
        }
        return m;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::Parse, ex.what());
    }
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const SolutionVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_decimal(x));
    return a;
}

inline json params_json(const FormFamily& f) {
    if (!f.numeric()) return "symbolic";
    json a = json::array();
    for (const auto& n : f.info.params) a.push_back(to_decimal(f.values.at(n)));
    return a;
}

inline json sequence_to_json(const FormFamily& f, const SequenceSpec& spec, const std::vector<SolutionVec>& seq) {
    json sols = json::array();
    for (const auto& v : seq) sols.push_back(to_json(v));
    json out = {{"family", f.name()}, {"params", params_json(f)}};
    if (spec.mode == SequenceMode::Pairwise) {
        out["mode"] = "pairwise";
        out["step"] = to_json(spec.step);
    } else {
        out["mode"] = "triple";
        out["order"] = spec.order;
        out["argument_order"] = "current, fixed1, fixed2";
        out["fixed1"] = to_json(spec.fixed1);
        out["fixed2"] = to_json(spec.fixed2);
    }
    out["solutions"] = std::move(sols);
    out["verified"] = true;
    return out;
}

inline json to_json(const NotInSpan& w) {
    return {{"row", w.row + 1}, {"col", w.col + 1}, {"residual", to_json(w.residual)},
            {"residual_text", to_text(w.residual)}};
}

}  // namespace compform
