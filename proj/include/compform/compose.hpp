#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compform/catalog.hpp"
#include "compform/identity.hpp"

namespace compform {

using SolutionVec = std::vector<BigInt>;

// ---------------------------------------------------------------------------
// Identity verification for catalog families

/// Direct expands f(map(..)); Structure proves form = sign * det(A) and the
/// matrix identity A(x)A(y)[A(z)] = A(map(..)), which give the same identity
/// through multiplicativity of det. Auto picks Direct up to four coordinates.
enum class IdentityRoute { Auto, Direct, Structure };

struct NamedResult {
    std::string what;
    IdentityResult result;
};

struct IdentityReport {
    std::vector<NamedResult> checks;
    bool zero() const {
        return std::all_of(checks.begin(), checks.end(), [](const NamedResult& c) { return c.result.zero(); });
    }
};

/// Structure route for one map; see IdentityRoute.
inline IdentityResult verify_by_structure(const FormFamily& f, const MultilinearMap& map, unsigned threads = 1) {
    if (!f.structure) throw Error(ErrorKind::InvalidArgument, f.name() + " has no matrix structure");
    const LinearStructure& s = *f.structure;
    IdentityResult r;
    r.route = "structure";

    Polynomial det = determinant(instantiate(s, f.coords, f.table()), DeterminantOptions{threads});
    if (f.det_sign < 0) det = -det;
    r.residual = f.form - det;
    if (!r.residual.is_zero()) return r;

    std::vector<std::string> taken = s.params()->names();
    for (const auto& n : map.params()->names())
        if (std::find(taken.begin(), taken.end(), n) == taken.end()) taken.push_back(n);
    VarTablePtr params = VarTable::make(taken);
    auto groups = argument_groups(taken, s.coords(), map.arity());
    VarTablePtr table = coordinate_table(params, groups);

    PolyMatrix prod = instantiate(s, groups[0], table);
    for (std::size_t g = 1; g < groups.size(); ++g) prod = multiply(prod, instantiate(s, groups[g], table), threads);

    std::vector<std::vector<Polynomial>> args;
    for (const auto& g : groups) args.push_back(variable_vector(table, g));
    std::vector<Polynomial> w = map.apply(args);
    for (std::size_t i = 0; i < s.order(); ++i)
        for (std::size_t j = 0; j < s.order(); ++j) {
            Polynomial e = prod(i, j);
            for (std::size_t k = 0; k < s.coords(); ++k)
                if (!s.coeff(i, j, k).is_zero()) e -= rebase(s.coeff(i, j, k), table) * w[k];
            if (!e.is_zero()) {
                r.residual = std::move(e);
                return r;
            }
        }
    return r;
}

/// Three-fold map w(x, y, z) = z(z(x, y), z) of a pairwise map.
inline MultilinearMap iterate_pair_map(const MultilinearMap& m) {
    if (m.arity() != 2) throw Error(ErrorKind::InvalidArgument, "need a bilinear map");
    const std::size_t h = m.dim();
    auto groups = argument_groups(m.params()->names(), h, 3);
    VarTablePtr table = coordinate_table(m.params(), groups);
    std::vector<std::vector<Polynomial>> xy{variable_vector(table, groups[0]), variable_vector(table, groups[1])};
    std::vector<std::vector<Polynomial>> second{m.apply(xy), variable_vector(table, groups[2])};
    return MultilinearMap::from_polynomials(m.apply(second), groups, m.params());
}

namespace detail {

inline IdentityResult verify_one(const FormFamily& f, const Polynomial& form, const MultilinearMap& map,
                                 IdentityRoute route, unsigned threads, bool whole_form) {
    bool structure = route == IdentityRoute::Structure ||
                     (route == IdentityRoute::Auto && f.dim() > 4 && f.structure.has_value());
    if (structure && whole_form) return verify_by_structure(f, map, threads);
    return verify_identity(form, f.coords, map);
}

}  // namespace detail

/// Checks the family's composition identities: arity 2 uses the pairwise
/// map, arity 3 every three-fold variant (or the iterated pairwise map).
/// Families with a printed factorisation also get one check per factor.
inline IdentityReport verify_family_identity(const FormFamily& f, unsigned arity = 0,
                                             IdentityRoute route = IdentityRoute::Auto, unsigned threads = 1) {
    if (arity == 0) arity = f.kind() == FamilyKind::Pairwise ? 2 : 3;
    std::vector<std::pair<std::string, MultilinearMap>> maps;
    if (arity == 2) {
        if (!f.pair_map) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no pairwise composition map");
        maps.emplace_back("z", *f.pair_map);
    } else if (arity == 3) {
        if (!f.triple_maps.empty()) {
            for (std::size_t v = 0; v < f.triple_maps.size(); ++v)
                maps.emplace_back("w variant " + std::to_string(v + 1), f.triple_maps[v]);
        } else if (f.pair_map) {
            maps.emplace_back("w = z(z(x, y), z)", iterate_pair_map(*f.pair_map));
        } else {
            throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no composition map");
        }
    } else {
        throw Error(ErrorKind::InvalidArgument, "arity must be 2 or 3");
    }

    IdentityReport rep;
    for (const auto& [label, map] : maps) {
        if (!f.simultaneous)
            rep.checks.push_back({"form, " + label, detail::verify_one(f, f.form, map, route, threads, true)});
        for (std::size_t k = 0; k < f.factors.size(); ++k)
            rep.checks.push_back({"factor f" + std::to_string(k + 1) + ", " + label,
                                  detail::verify_one(f, f.factors[k], map, IdentityRoute::Direct, threads, false)});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Numeric composition

namespace detail {

inline void require_numeric(const FormFamily& f) {
    if (!f.numeric())
        throw Error(ErrorKind::UnassignedVariable, f.name() + " still has symbolic parameters; give --params values");
}

inline void require_dim(const FormFamily& f, const SolutionVec& v) {
    if (v.size() != f.dim())
        throw Error(ErrorKind::DimensionMismatch, f.name() + " needs vectors of length " + std::to_string(f.dim()) +
                                                      ", got " + std::to_string(v.size()));
}

}  // namespace detail

/// Composes two vectors with the pairwise map, or three with the default
/// three-fold map.
inline SolutionVec apply_map(const FormFamily& f, const std::vector<SolutionVec>& args) {
    detail::require_numeric(f);
    for (const auto& a : args) detail::require_dim(f, a);
    if (args.size() == 2) {
        if (!f.pair_map) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no pairwise map");
        return f.pair_map->apply(std::span<const SolutionVec>(args));
    }
    if (args.size() == 3) {
        if (f.triple_maps.empty()) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no three-fold map");
        return f.triple_maps[0].apply(std::span<const SolutionVec>(args));
    }
    throw Error(ErrorKind::DimensionMismatch, "compose two or three vectors");
}

/// Value of the form (or of each factor for simultaneous families).
inline std::vector<BigInt> form_values(const FormFamily& f, const SolutionVec& v) {
    detail::require_numeric(f);
    detail::require_dim(f, v);
    std::map<std::string, BigInt> pt;
    for (std::size_t i = 0; i < v.size(); ++i) pt.emplace(f.coords[i], v[i]);
    std::vector<BigInt> out;
    if (f.simultaneous) {
        for (const auto& g : f.factors) out.push_back(eval_int(g, pt));
    } else {
        out.push_back(eval_int(f.form, pt));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Group law

/// (1, 0, ..., 0), after proving z(x, e) = z(e, x) = x symbolically.
inline SolutionVec identity_element(const FormFamily& f) {
    if (!f.pair_map) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no pairwise map");
    const MultilinearMap& m = *f.pair_map;
    const std::size_t h = m.dim();
    auto groups = argument_groups(m.params()->names(), h, 1);
    VarTablePtr table = coordinate_table(m.params(), groups);
    std::vector<Polynomial> x = variable_vector(table, groups[0]);
    std::vector<Polynomial> e(h, Polynomial(table));
    e[0] = Polynomial::constant(table, 1);
    std::vector<std::vector<Polynomial>> xe{x, e}, ex{e, x};
    if (m.apply(xe) != x || m.apply(ex) != x)
        throw Error(ErrorKind::VerificationFailed, "(1, 0, ..., 0) is not a two-sided identity of " + f.name());
    SolutionVec out(h, 0);
    out[0] = 1;
    return out;
}

/// The y with z(x, y) = e, by an exact rational solve of the linear system
/// obtained by fixing the first argument. Non-integral solutions mean x is
/// not a unit.
inline SolutionVec invert(const FormFamily& f, const SolutionVec& x) {
    detail::require_numeric(f);
    detail::require_dim(f, x);
    if (!f.pair_map) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no pairwise map");
    const MultilinearMap& m = *f.pair_map;
    const std::size_t h = m.dim();

    std::vector<std::vector<mpq_class>> a(h, std::vector<mpq_class>(h + 1));
    for (const auto& [k, c] : m.coefficients()) a[k[0]][k[2]] += mpq_class(c.constant_term() * x[k[1]]);
    a[0][h] = 1;

    for (std::size_t col = 0; col < h; ++col) {
        std::size_t piv = col;
        while (piv < h && a[piv][col] == 0) ++piv;
        if (piv == h) throw Error(ErrorKind::SingularMap, "z(x, .) is singular at this x");
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < h; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= h; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    SolutionVec y(h);
    for (std::size_t i = 0; i < h; ++i) {
        mpq_class v = a[i][h] / a[i][i];
        v.canonicalize();
        if (v.get_den() != 1) throw Error(ErrorKind::NotAUnit, "inverse is not integral; f(x) is not a unit");
        y[i] = v.get_num();
    }
    SolutionVec e(h, 0);
    e[0] = 1;
    if (apply_map(f, {x, y}) != e) throw Error(ErrorKind::VerificationFailed, "computed inverse does not compose to e");
    return y;
}

/// apply(apply(x, y), w) - apply(x, apply(y, w)), first nonzero coordinate.
inline IdentityResult associativity(const FormFamily& f) {
    if (!f.pair_map) throw Error(ErrorKind::WrongFamilyKind, f.name() + " has no pairwise map");
    const MultilinearMap& m = *f.pair_map;
    auto groups = argument_groups(m.params()->names(), m.dim(), 3);
    VarTablePtr table = coordinate_table(m.params(), groups);
    auto x = variable_vector(table, groups[0]), y = variable_vector(table, groups[1]),
         w = variable_vector(table, groups[2]);
    std::vector<std::vector<Polynomial>> xy{x, y}, yw{y, w};
    std::vector<std::vector<Polynomial>> left{m.apply(xy), w}, right{x, m.apply(yw)};
    auto l = m.apply(left), r = m.apply(right);
    IdentityResult res;
    res.residual = Polynomial(table);
    for (std::size_t i = 0; i < l.size(); ++i)
        if (!(l[i] == r[i])) {
            res.residual = l[i] - r[i];
            break;
        }
    return res;
}

// ---------------------------------------------------------------------------
// Three-fold families

struct GenuinenessReport {
    Polynomial reduced;          // form at the witness parameters
    bool single_term = false;    // reduced form is c * monomial
    std::optional<bool> negative_definite;  // binary quadratics only
};

/// Specialises a three-fold family at witness parameters and reports the
/// reduced form. Whether a bilinear law can exist is left to the caller.
inline GenuinenessReport verify_threefold_genuineness(const FormFamily& f, const std::vector<BigInt>& witness) {
    if (f.kind() != FamilyKind::ThreeFold) throw Error(ErrorKind::WrongFamilyKind, f.name() + " is not three-fold");
    FormFamily g = family(f.name(), witness);
    GenuinenessReport r;
    r.reduced = g.form;
    r.single_term = g.form.term_count() == 1;
    if (g.dim() == 2 && g.form.total_degree() == 2) {
        Monomial m11, m12, m22;
        m11.set(0, 2);
        m12.set(0, 1);
        m12.set(1, 1);
        m22.set(1, 2);
        BigInt a = g.form.coefficient_of(m11), b = g.form.coefficient_of(m12), c = g.form.coefficient_of(m22);
        r.negative_definite = a < 0 && 4 * a * c - b * b > 0;
    }
    return r;
}

struct Chain {
    SolutionVec u, v, w;
    BigInt value;  // Q(u) = Q(v) = Q(w)
};

/// Three vectors with equal Q-value from the three w-variants applied to
/// (x, y, z).
inline Chain diophantine_chain(const BigInt& a, const BigInt& b, const BigInt& c, const SolutionVec& x,
                               const SolutionVec& y, const SolutionVec& z) {
    FormFamily f = family("threefold_quadratic", {a, b, c});
    std::vector<SolutionVec> args{x, y, z};
    for (const auto& v : args) detail::require_dim(f, v);
    Chain ch;
    ch.u = f.triple_maps[0].apply(std::span<const SolutionVec>(args));
    ch.v = f.triple_maps[1].apply(std::span<const SolutionVec>(args));
    ch.w = f.triple_maps[2].apply(std::span<const SolutionVec>(args));
    ch.value = form_values(f, ch.u)[0];
    if (form_values(f, ch.v)[0] != ch.value || form_values(f, ch.w)[0] != ch.value)
        throw Error(ErrorKind::VerificationFailed, "chain values differ");
    return ch;
}

}  // namespace compform
