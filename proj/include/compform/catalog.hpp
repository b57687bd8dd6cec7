#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compform/identity.hpp"
#include "compform/linstruct.hpp"
#include "compform/multilinear.hpp"
#include "compform/polyring.hpp"
#include "compform/reference.hpp"

namespace compform {

enum class FamilyKind { Pairwise, ThreeFold };

inline std::string_view to_string(FamilyKind k) { return k == FamilyKind::Pairwise ? "pairwise" : "threefold"; }

struct FamilyInfo {
    std::string name;
    FamilyKind kind = FamilyKind::Pairwise;
    std::vector<std::string> params;  // slot order for numeric values
    std::size_t dim = 0;
    std::string description;
};

/// Every named family, in listing order.
inline const std::vector<FamilyInfo>& registry() {
    static const std::vector<FamilyInfo> list{
        {"quad2x2", FamilyKind::Pairwise, {"p", "q"}, 2,
         "binary quadratic x1^2 + p x1 x2 + q x2^2 of [[x1, x2], [-q x2, x1 + p x2]]"},
        {"cubic3x3", FamilyKind::Pairwise, {"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"}, 3,
         "ternary cubic of the 3x3 structure in lambda1..lambda5"},
        {"quartic4x4", FamilyKind::Pairwise, {"m", "n", "p", "q"}, 4,
         "quaternary quartic, block lift of U(p, q) over A(m, n)"},
        {"sextic6x6", FamilyKind::Pairwise, {"lambda1", "lambda2", "lambda3", "lambda4", "lambda5", "p", "q"}, 6,
         "senary sextic, block lift of U(p, q) over the cubic structure"},
        {"sextic_circulant", FamilyKind::Pairwise, {"q"}, 6,
         "senary sextic f1*f2 of [[C(x1..x3), C(x4..x6)], [q C(x4..x6), C(x1..x3)]], C circulant"},
        {"sextic_uv", FamilyKind::Pairwise, {"q"}, 6,
         "simultaneous pair f1 = u1^2 - q u2^2 and a quartic f2 sharing one composition map"},
        {"octic8x8", FamilyKind::Pairwise, {"m", "n", "p", "q", "r", "s"}, 8,
         "octonary octic, block lift of U(r, s) over the quartic structure"},
        {"threefold_quadratic", FamilyKind::ThreeFold, {"a", "b", "c"}, 2,
         "a x1^2 + b x1 x2 + c x2^2 with trilinear three-fold maps (t^2 replaced by a)"},
        {"threefold4x4", FamilyKind::ThreeFold, {"m", "n", "p", "q", "s", "t"}, 4,
         "three-fold quartic, lift of [[t a1, a2], [p a1 + q a2, -t a1]] over [[s x1, x2], [m x1 + n x2, -s x1]]"},
        {"threefold8x8", FamilyKind::ThreeFold, {"m", "n", "p", "q", "r", "s", "t"}, 8,
         "three-fold octic, U(r, s) over U(p, q) over [[t x1, x2], [m x1 + n x2, -t x1]]"},
    };
    return list;
}

inline const FamilyInfo& family_info(std::string_view name) {
    for (const auto& f : registry())
        if (f.name == name) return f;
    throw Error(ErrorKind::UnknownFamily, "'" + std::string(name) + "'");
}

/// A form with its matrix structure (when it has one) and composition maps.
/// Forms live over params ++ coords; a fully numeric family has no params.
struct FormFamily {
    FamilyInfo info;
    std::map<std::string, BigInt> values;  // assigned parameters
    VarTablePtr params = VarTable::make({});
    std::vector<std::string> coords;
    Polynomial form;
    std::vector<Polynomial> factors;  // printed factorisation or simultaneous components
    bool simultaneous = false;        // a solution must make every factor equal 1
    std::optional<LinearStructure> structure;
    std::optional<ExtractionRecipe> recipe;
    int det_sign = 1;  // form = det_sign * det(instantiate(structure))
    std::optional<MultilinearMap> pair_map;
    std::vector<MultilinearMap> triple_maps;  // [0] is the default variant

    const std::string& name() const noexcept { return info.name; }
    FamilyKind kind() const noexcept { return info.kind; }
    std::size_t dim() const noexcept { return coords.size(); }
    bool numeric() const noexcept { return params->size() == 0; }
    const VarTablePtr& table() const noexcept { return form.table(); }
};

// ---------------------------------------------------------------------------
// Structures

/// Structure read from row-major entry texts, linear in `coords`.
inline LinearStructure structure_from_text(std::size_t n, const std::vector<std::string>& params,
                                           const std::vector<std::string>& coords,
                                           const std::vector<std::string_view>& entries) {
    if (entries.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "need n*n entries");
    VarTablePtr ptab = VarTable::make(params);
    VarTablePtr t = coordinate_table(ptab, {coords});
    PolyMatrix m(n, Polynomial(t));
    for (std::size_t k = 0; k < entries.size(); ++k) m(k / n, k % n) = parse_polynomial(entries[k], t);
    return LinearStructure::from_matrix(m, coords, ptab);
}

namespace structures {

/// [[x1, x2], [-q x2, x1 + p x2]]
inline LinearStructure quadratic(const std::string& p, const std::string& q) {
    return structure_from_text(2, {p, q}, {"x1", "x2"}, {"x1", "x2", "-" + q + " x2", "x1 + " + p + " x2"});
}

/// [[t x1, x2], [b x1 + c x2, -t x1]]; trace zero, closed only for triple products.
inline LinearStructure trace_free(const std::string& t, const std::string& b, const std::string& c) {
    return structure_from_text(2, {t, b, c}, {"x1", "x2"},
                               {t + " x1", "x2", b + " x1 + " + c + " x2", "-" + t + " x1"});
}

/// The 3x3 structure behind the ternary cubic.
inline LinearStructure cubic() {
    return structure_from_text(
        3, {"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"}, {"x1", "x2", "x3"},
        {"x1", "x2", "x3",
         "-lambda3 (lambda1 - lambda2 - lambda3 + lambda5) x2 - lambda3 (lambda2 - lambda4) x3",
         "x1 + lambda1 x2 + lambda2 x3", "lambda3 x2 + lambda3 x3",
         "-lambda3 (lambda2 - lambda4) x2 + (-lambda1 lambda4 + lambda2^2 - lambda2 lambda5 + lambda3 lambda4) x3",
         "lambda2 x2 + lambda4 x3", "x1 + lambda3 x2 + lambda5 x3"});
}

/// 3x3 circulant with first row (x1, x2, x3).
inline LinearStructure circulant3() {
    return structure_from_text(3, {}, {"x1", "x2", "x3"},
                               {"x1", "x2", "x3", "x3", "x1", "x2", "x2", "x3", "x1"});
}

/// [[x1, x2], [q x2, x1]]
inline LinearStructure circulant_outer(const std::string& q) {
    return structure_from_text(2, {q}, {"x1", "x2"}, {"x1", "x2", q + " x2", "x1"});
}

inline LinearStructure quartic() { return block_compose(quadratic("p", "q"), quadratic("m", "n")); }

}  // namespace structures

// ---------------------------------------------------------------------------
// Symbolic construction

namespace detail {

/// Copy of `p` over `target` with t^(2k) replaced by a^k; odd powers of t
/// are rejected.
inline Polynomial t_squared_to_a(const Polynomial& p, const std::string& t, const std::string& a,
                                 const VarTablePtr& target) {
    const VarTable& src = *p.table();
    const auto ti = src.find(t);
    const std::size_t ai = target->index(a);
    std::vector<std::optional<std::size_t>> idx(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!ti || i != *ti) idx[i] = target->find(src.name(i));
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial out;
        for (std::size_t i = 0; i < src.size(); ++i) {
            const std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (ti && i == *ti) {
                if (e % 2) throw Error(ErrorKind::InvalidArgument, "odd power of " + t);
                out.set(ai, out.exponent(ai) + e / 2);
            } else {
                if (!idx[i]) throw Error(ErrorKind::UnknownVariable, "'" + src.name(i) + "'");
                out.set(*idx[i], out.exponent(*idx[i]) + e);
            }
        }
        r.add_term(out, c);
    }
    return r;
}

inline MultilinearMap map_t_squared_to_a(const MultilinearMap& m, const VarTablePtr& params) {
    MultilinearMap r(m.arity(), m.dim(), params);
    for (const auto& [k, c] : m.coefficients()) {
        std::vector<std::size_t> idx(k.begin() + 1, k.begin() + 1 + m.arity());
        r.add(k[0], idx, t_squared_to_a(c, "t", "a", params));
    }
    return r;
}

inline std::vector<Polynomial> parse_all(std::span<const std::string_view> texts, const VarTablePtr& table) {
    std::vector<Polynomial> v;
    for (auto t : texts) v.push_back(parse_polynomial(t, table));
    return v;
}

/// Fills form, recipe and the closure map of a structure-backed family.
inline void populate_from_structure(FormFamily& f, const LinearStructure& s, int det_sign, unsigned threads = 1) {
    f.params = s.params();
    f.coords = coordinate_names("x", s.coords());
    VarTablePtr table = coordinate_table(f.params, {f.coords});
    f.structure = s;
    f.det_sign = det_sign;
    f.form = determinant(instantiate(s, f.coords, table), DeterminantOptions{threads});
    if (det_sign < 0) f.form = -f.form;
    f.recipe = find_recipe(s);
    if (!f.recipe) return;
    if (f.kind() == FamilyKind::Pairwise) {
        ClosureResult pr = verify_pair_closure(s, *f.recipe, {threads});
        if (pr.closed()) f.pair_map = pr.certificate->map;
    } else {
        ClosureResult tr = verify_triple_closure(s, *f.recipe, {threads});
        if (tr.closed()) f.triple_maps.push_back(tr.certificate->map);
    }
    // present parameters in registry order rather than block order
    std::vector<std::string> have = f.params->names(), want = f.info.params;
    std::ranges::sort(have);
    std::ranges::sort(want);
    if (have == want && f.info.params != f.params->names()) {
        f.params = VarTable::make(f.info.params);
        f.form = rebase(f.form, coordinate_table(f.params, {f.coords}));
        if (f.pair_map) f.pair_map = f.pair_map->rebased(f.params);
        for (auto& w : f.triple_maps) w = w.rebased(f.params);
    }
}

/// Argument permutations giving the second and third three-fold variants.
inline constexpr std::array<std::size_t, 3> kVariantTwo{1, 2, 0};
inline constexpr std::array<std::size_t, 3> kVariantThree{2, 0, 1};

inline FormFamily build_symbolic(const FamilyInfo& info) {
    FormFamily f;
    f.info = info;
    const std::string& name = info.name;
    if (name == "quad2x2") {
        populate_from_structure(f, structures::quadratic("p", "q"), 1);
    } else if (name == "cubic3x3") {
        populate_from_structure(f, structures::cubic(), 1);
    } else if (name == "quartic4x4") {
        populate_from_structure(f, structures::quartic(), 1);
    } else if (name == "sextic6x6") {
        populate_from_structure(f, block_compose(structures::quadratic("p", "q"), structures::cubic()), 1);
    } else if (name == "sextic_circulant") {
        populate_from_structure(f, block_compose(structures::circulant_outer("q"), structures::circulant3()), 1);
        VarTablePtr t = f.table();
        f.factors = parse_all(reference::kCirculantFactors, t);
    } else if (name == "sextic_uv") {
        f.params = VarTable::make({"q"});
        f.coords = coordinate_names("u", 6);
        VarTablePtr t = coordinate_table(f.params, {f.coords});
        f.factors = parse_all(reference::kUvForms, t);
        f.form = f.factors[0] * f.factors[1];
        f.simultaneous = true;
        VarTablePtr tw = coordinate_table(f.params, {coordinate_names("u", 6), coordinate_names("v", 6)});
        f.pair_map = MultilinearMap::from_polynomials(parse_all(reference::kUvW, tw),
                                                      {coordinate_names("u", 6), coordinate_names("v", 6)}, f.params);
    } else if (name == "octic8x8") {
        populate_from_structure(f, block_compose(structures::quadratic("r", "s"), structures::quartic()), 1);
    } else if (name == "threefold_quadratic") {
        // Derived from the trace-free structure in (t, b, c), then t^2 -> a.
        FormFamily g;
        g.info = info;
        populate_from_structure(g, structures::trace_free("t", "b", "c"), -1);
        f.params = VarTable::make({"a", "b", "c"});
        f.coords = g.coords;
        f.form = t_squared_to_a(g.form, "t", "a", coordinate_table(f.params, {f.coords}));
        const MultilinearMap w = map_t_squared_to_a(g.triple_maps.at(0), f.params);
        f.triple_maps = {w, w.permute_arguments(kVariantTwo), w.permute_arguments(kVariantThree)};
    } else if (name == "threefold4x4") {
        LinearStructure outer = structure_from_text(2, {"t", "p", "q"}, {"x1", "x2"},
                                                    {"t x1", "x2", "p x1 + q x2", "-t x1"});
        populate_from_structure(f, block_compose(outer, structures::trace_free("s", "m", "n")), 1);
    } else if (name == "threefold8x8") {
        LinearStructure inner = block_compose(structures::quadratic("p", "q"), structures::trace_free("t", "m", "n"));
        populate_from_structure(f, block_compose(structures::quadratic("r", "s"), inner), 1);
    } else {
        throw Error(ErrorKind::UnknownFamily, "'" + name + "'");
    }
    return f;
}

}  // namespace detail

/// Family with every parameter symbolic. Built once per name and cached.
inline FormFamily family(std::string_view name) {
    const FamilyInfo& info = family_info(name);
    static std::mutex mu;
    static std::map<std::string, FormFamily, std::less<>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(info.name, detail::build_symbolic(info)).first;
    return it->second;
}

/// Substitutes integer values for all of the family's parameters.
inline FormFamily specialize(const FormFamily& sym, const std::map<std::string, BigInt>& values) {
    FormFamily f;
    f.info = sym.info;
    std::vector<std::string> rest;
    for (const auto& n : sym.params->names())
        if (!values.contains(n)) rest.push_back(n);
    for (const auto& [n, v] : values)
        if (sym.params->contains(n)) f.values.emplace(n, v);
    f.params = VarTable::make(rest);
    f.coords = sym.coords;
    VarTablePtr t = coordinate_table(f.params, {f.coords});
    f.form = partial_eval(sym.form, f.values, t);
    for (const auto& g : sym.factors) f.factors.push_back(partial_eval(g, f.values, t));
    f.simultaneous = sym.simultaneous;
    f.det_sign = sym.det_sign;
    if (sym.structure) {
        f.structure = sym.structure->specialize(f.values);
        f.recipe = find_recipe(*f.structure);
    }
    if (sym.pair_map) f.pair_map = sym.pair_map->specialize(f.values);
    for (const auto& m : sym.triple_maps) f.triple_maps.push_back(m.specialize(f.values));
    return f;
}

/// Family at integer parameter values given in registry slot order.
inline FormFamily family(std::string_view name, const std::vector<BigInt>& values) {
    const FamilyInfo& info = family_info(name);
    if (values.size() != info.params.size())
        throw Error(ErrorKind::ParamArity, info.name + " takes " + std::to_string(info.params.size()) +
                                               " parameters, got " + std::to_string(values.size()));
    std::map<std::string, BigInt> v;
    for (std::size_t i = 0; i < values.size(); ++i) v.emplace(info.params[i], values[i]);
    return specialize(family(name), v);
}

/// Family built from an arbitrary structure. The kind is whatever closure
/// holds: pairwise first, then three-fold; a structure with neither gets no map.
inline FormFamily family_from_structure(const std::string& name, const LinearStructure& s, int det_sign = 1,
                                        unsigned threads = 1) {
    FormFamily f;
    f.info.name = name;
    f.info.params = s.params()->names();
    f.info.dim = s.coords();
    f.info.description = "custom structure";
    f.info.kind = FamilyKind::Pairwise;
    detail::populate_from_structure(f, s, det_sign, threads);
    if (!f.pair_map && f.recipe) {
        f.info.kind = FamilyKind::ThreeFold;
        ClosureResult tr = verify_triple_closure(s, *f.recipe, {threads});
        if (tr.closed()) f.triple_maps.push_back(tr.certificate->map);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Cubic norm test

struct NormProgression {
    Polynomial c1, c2, c3;  // coefficients of x1^3, x2^3, x3^3 (polynomials in the parameters)
    bool holds = false;     // c1 * c3 == c2^2
};

/// Necessary condition for a ternary cubic to be a norm form: the pure cube
/// coefficients are in geometric progression.
inline NormProgression cubic_norm_progression_test(const Polynomial& form, const std::vector<std::string>& coords) {
    if (coords.size() != 3) throw Error(ErrorKind::NotTernaryCubic, "need exactly three coordinates");
    const VarTable& t = *form.table();
    std::vector<std::size_t> ci;
    for (const auto& c : coords) ci.push_back(t.index(c));
    std::vector<std::string> pnames;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::find(ci.begin(), ci.end(), i) == ci.end()) pnames.push_back(t.name(i));
    VarTablePtr ptab = VarTable::make(pnames);

    std::vector<Polynomial> c(3, Polynomial(ptab));
    for (const auto& [m, coef] : form.terms()) {
        if (partial_degree(m, ci) != 3) throw Error(ErrorKind::NotTernaryCubic, "form is not a cubic in the coordinates");
        for (std::size_t k = 0; k < 3; ++k) {
            if (m.exponent(ci[k]) != 3) continue;
            Monomial pm;
            for (std::size_t i = 0, j = 0; i < t.size(); ++i) {
                if (std::find(ci.begin(), ci.end(), i) != ci.end()) continue;
                pm.set(j++, m.exponent(i));
            }
            c[k].add_term(pm, coef);
        }
    }
    NormProgression r{c[0], c[1], c[2], false};
    r.holds = r.c1 * r.c3 == r.c2 * r.c2;
    return r;
}

inline NormProgression cubic_norm_progression_test(const FormFamily& f) {
    return cubic_norm_progression_test(f.form, f.coords);
}

// ---------------------------------------------------------------------------
// Circulant factorisation

/// Texts checked by circulant_factor_check; defaults are the reference ones.
struct FactorCheckInput {
    std::string f1{reference::kCirculantFactors[0]}, f2{reference::kCirculantFactors[1]};
    std::vector<std::string> z{reference::kCirculantZ.begin(), reference::kCirculantZ.end()};
    std::string uf1{reference::kUvForms[0]}, uf2{reference::kUvForms[1]};
    std::vector<std::string> w{reference::kUvW.begin(), reference::kUvW.end()};
};

struct FactorCheck {
    bool ok = true;
    std::string failed;   // name of the first failing identity
    Polynomial residual;  // its residual
};

/// det = f1 f2 for the circulant sextic; f_k(x) f_k(y) = f_k(z) with the
/// shared map z; the same pair of identities for the u-forms with map w.
/// With `q` unset everything is symbolic in q.
inline FactorCheck circulant_factor_check(std::optional<BigInt> q = std::nullopt, const FactorCheckInput& in = {}) {
    FormFamily sym = family("sextic_circulant");
    std::map<std::string, BigInt> qv;
    if (q) qv.emplace("q", *q);
    VarTablePtr params = VarTable::make(q ? std::vector<std::string>{} : std::vector<std::string>{"q"});
    VarTablePtr qtab = VarTable::make({"q"});

    auto parse_in = [&](const std::vector<std::vector<std::string>>& groups, const std::string& text) {
        Polynomial p = parse_polynomial(text, coordinate_table(qtab, groups));
        return partial_eval(p, qv, coordinate_table(params, groups));
    };
    auto make_map = [&](const std::vector<std::string>& texts, const std::string& a, const std::string& b) {
        std::vector<std::vector<std::string>> groups{coordinate_names(a, 6), coordinate_names(b, 6)};
        std::vector<Polynomial> outs;
        for (const auto& s : texts) outs.push_back(parse_in(groups, s));
        return MultilinearMap::from_polynomials(outs, groups, params);
    };

    FactorCheck res;
    auto check = [&](const std::string& what, Polynomial residual) {
        if (res.ok && !residual.is_zero()) {
            res.ok = false;
            res.failed = what;
            res.residual = std::move(residual);
        }
    };

    const auto xs = coordinate_names("x", 6);
    const auto us = coordinate_names("u", 6);
    Polynomial f1 = parse_in({xs}, in.f1), f2 = parse_in({xs}, in.f2);
    Polynomial det = partial_eval(sym.form, qv, f1.table());
    check("det = f1 f2", det - f1 * f2);
    MultilinearMap z = make_map(in.z, "x", "y");
    check("f1 composition", verify_identity(f1, xs, z).residual);
    check("f2 composition", verify_identity(f2, xs, z).residual);
    Polynomial g1 = parse_in({us}, in.uf1), g2 = parse_in({us}, in.uf2);
    MultilinearMap w = make_map(in.w, "u", "v");
    check("u-form f1 composition", verify_identity(g1, us, w).residual);
    check("u-form f2 composition", verify_identity(g2, us, w).residual);
    return res;
}

}  // namespace compform
