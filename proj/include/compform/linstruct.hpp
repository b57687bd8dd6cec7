#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "compform/multilinear.hpp"
#include "compform/polyring.hpp"

namespace compform {

/// Square matrix family whose entries are linear forms in h coordinates:
///   entry(i, j) = sum_r L[i][j][r] * x_r,
/// with each L[i][j][r] a polynomial in the parameters only.
class LinearStructure {
public:
    LinearStructure(std::size_t n, std::size_t h, VarTablePtr params)
        : n_(n), h_(h), params_(std::move(params)), coeff_(n * n * h, Polynomial(params_)) {
        if (n_ == 0 || h_ == 0) throw Error(ErrorKind::InvalidArgument, "structure needs n >= 1 and h >= 1");
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t coords() const noexcept { return h_; }
    const VarTablePtr& params() const noexcept { return params_; }

    const Polynomial& coeff(std::size_t i, std::size_t j, std::size_t r) const { return coeff_.at(slot(i, j, r)); }
    void set(std::size_t i, std::size_t j, std::size_t r, const Polynomial& c) {
        c.check_table(Polynomial(params_));
        coeff_.at(slot(i, j, r)) = c;
    }

    /// Reads the tensor off a matrix whose entries are linear in `coord_names`
    /// with coefficients in the parameters.
    static LinearStructure from_matrix(const PolyMatrix& m, const std::vector<std::string>& coord_names,
                                       const VarTablePtr& params) {
        const std::size_t n = m.order();
        LinearStructure s(n, coord_names.size(), params);
        const VarTable& t = *m(0, 0).table();
        std::vector<int> coord_of(t.size(), -1);
        std::vector<std::optional<std::size_t>> param_of(t.size());
        for (std::size_t r = 0; r < coord_names.size(); ++r) coord_of[t.index(coord_names[r])] = static_cast<int>(r);
        for (std::size_t v = 0; v < t.size(); ++v)
            if (coord_of[v] < 0) param_of[v] = params->find(t.name(v));

        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j).check_table(m(0, 0));
                for (const auto& [mono, c] : m(i, j).terms()) {
                    int coord = -1;
                    std::uint32_t coord_deg = 0;
                    Monomial pm;
                    for (std::size_t v = 0; v < t.size(); ++v) {
                        std::uint32_t e = mono.exponent(v);
                        if (e == 0) continue;
                        if (coord_of[v] >= 0) {
                            coord = coord_of[v];
                            coord_deg += e;
                        } else if (param_of[v]) {
                            pm.set(*param_of[v], e);
                        } else {
                            throw Error(ErrorKind::UnknownVariable, "'" + t.name(v) + "' is neither coordinate nor parameter");
                        }
                    }
                    if (coord_deg != 1)
                        throw Error(ErrorKind::InvalidArgument, "entry (" + std::to_string(i + 1) + "," +
                                                                    std::to_string(j + 1) + ") is not linear in the coordinates");
                    s.coeff_[s.slot(i, j, static_cast<std::size_t>(coord))] += Polynomial::monomial(params, pm, c);
                }
            }
        return s;
    }

    /// Same tensor with parameters renamed (names absent from `rename` are kept).
    LinearStructure rename_params(const std::map<std::string, std::string>& rename) const {
        std::vector<std::string> names;
        for (const auto& n : params_->names()) {
            auto it = rename.find(n);
            names.push_back(it == rename.end() ? n : it->second);
        }
        LinearStructure s(n_, h_, VarTable::make(std::move(names)));
        for (std::size_t k = 0; k < coeff_.size(); ++k) s.coeff_[k] = rebase(coeff_[k], s.params_, rename);
        return s;
    }

    /// Substitutes integer values for some parameters.
    LinearStructure specialize(const std::map<std::string, BigInt>& values) const {
        std::vector<std::string> rest;
        for (const auto& n : params_->names())
            if (!values.contains(n)) rest.push_back(n);
        std::map<std::string, BigInt> used;
        for (const auto& [n, v] : values)
            if (params_->contains(n)) used.emplace(n, v);
        LinearStructure s(n_, h_, VarTable::make(std::move(rest)));
        for (std::size_t k = 0; k < coeff_.size(); ++k) s.coeff_[k] = partial_eval(coeff_[k], used, s.params_);
        return s;
    }

    /// Rank test over the rationals after specializing the parameters at a few
    /// fixed points. Full rank at any point proves the coordinate columns are
    /// independent over the parameter fraction field; a false result means no
    /// tried point certified it.
    bool coordinates_independent() const;

    friend bool operator==(const LinearStructure& a, const LinearStructure& b) {
        if (a.n_ != b.n_ || a.h_ != b.h_) return false;
        try {
            for (std::size_t k = 0; k < a.coeff_.size(); ++k)
                if (!(rebase(b.coeff_[k], a.params_) == a.coeff_[k])) return false;
        } catch (const Error&) {
            return false;
        }
        return true;
    }

private:
    std::size_t slot(std::size_t i, std::size_t j, std::size_t r) const {
        if (i >= n_ || j >= n_ || r >= h_) throw Error(ErrorKind::DimensionMismatch, "structure index");
        return (i * n_ + j) * h_ + r;
    }

    std::size_t n_, h_;
    VarTablePtr params_;
    std::vector<Polynomial> coeff_;
};

inline bool LinearStructure::coordinates_independent() const {
    const std::size_t rows = n_ * n_;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<std::string, BigInt> point;
        static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
        for (std::size_t v = 0; v < params_->size(); ++v)
            point[params_->name(v)] = kPrimes[(v + 3 * attempt) % 16] + attempt;
        std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(h_));
        for (std::size_t e = 0; e < rows; ++e)
            for (std::size_t r = 0; r < h_; ++r) a[e][r] = eval_int(coeff_[e * h_ + r], point);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < h_ && rank < rows; ++col) {
            std::size_t piv = rank;
            while (piv < rows && a[piv][col] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[piv], a[rank]);
            for (std::size_t e = rank + 1; e < rows; ++e) {
                if (a[e][col] == 0) continue;
                mpq_class f = a[e][col] / a[rank][col];
                for (std::size_t c = col; c < h_; ++c) a[e][c] -= f * a[rank][c];
            }
            ++rank;
        }
        if (rank == h_) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Extraction recipes

/// Position (row, col) holding coordinate r as divisor * x_r and no other
/// coordinate; the divisor is an integer times a parameter monomial.
struct RecipeEntry {
    std::size_t row = 0, col = 0;
    Polynomial divisor;
};

struct ExtractionRecipe {
    std::vector<RecipeEntry> entries;  // one per coordinate, in coordinate order
};

/// Checks that `recipe` is diagonal with single-term divisors on `s`.
inline void validate_recipe(const LinearStructure& s, const ExtractionRecipe& recipe) {
    if (recipe.entries.size() != s.coords())
        throw Error(ErrorKind::DimensionMismatch, "recipe must list one position per coordinate");
    for (std::size_t r = 0; r < s.coords(); ++r) {
        const auto& e = recipe.entries[r];
        if (e.divisor.term_count() != 1)
            throw Error(ErrorKind::InvalidArgument, "recipe divisor must be a single nonzero term");
        for (std::size_t k = 0; k < s.coords(); ++k) {
            Polynomial expect = k == r ? rebase(e.divisor, s.params()) : Polynomial(s.params());
            if (!(s.coeff(e.row, e.col, k) == expect))
                throw Error(ErrorKind::InvalidArgument, "recipe position (" + std::to_string(e.row + 1) + "," +
                                                            std::to_string(e.col + 1) + ") does not isolate coordinate " +
                                                            std::to_string(r + 1));
        }
    }
}

/// Finds, for every coordinate, a position whose entry is a single-term
/// multiple of that coordinate alone. Row 0 is preferred, then row-major
/// order; a unit divisor beats a parameter one at equal position rank.
inline std::optional<ExtractionRecipe> find_recipe(const LinearStructure& s) {
    const std::size_t n = s.order();
    auto candidate = [&](std::size_t i, std::size_t j, std::size_t r) -> int {
        const Polynomial& c = s.coeff(i, j, r);
        if (c.term_count() != 1) return 0;
        for (std::size_t k = 0; k < s.coords(); ++k)
            if (k != r && !s.coeff(i, j, k).is_zero()) return 0;
        bool unit = c.is_constant() && (c.constant_term() == 1 || c.constant_term() == -1);
        return unit ? 2 : 1;
    };
    ExtractionRecipe recipe;
    for (std::size_t r = 0; r < s.coords(); ++r) {
        std::optional<RecipeEntry> best;
        int best_rank = 0;
        auto scan = [&](std::size_t i_lo, std::size_t i_hi) {
            for (std::size_t i = i_lo; i < i_hi; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    int rank = candidate(i, j, r);
                    if (rank > best_rank) {
                        best = RecipeEntry{i, j, s.coeff(i, j, r)};
                        best_rank = rank;
                    }
                }
        };
        scan(0, 1);
        if (!best) scan(1, n);
        if (!best) return std::nullopt;
        recipe.entries.push_back(*best);
    }
    return recipe;
}

// ---------------------------------------------------------------------------
// Instantiation and extraction

/// Table params ++ groups (each group a list of coordinate names).
inline VarTablePtr coordinate_table(const VarTablePtr& params, const std::vector<std::vector<std::string>>& groups) {
    std::vector<std::string> names = params->names();
    for (const auto& g : groups)
        for (const auto& n : g) {
            if (std::find(names.begin(), names.end(), n) != names.end())
                throw Error(ErrorKind::NameCollision, "'" + n + "' used twice");
            names.push_back(n);
        }
    return VarTable::make(std::move(names));
}

/// Matrix of the structure on the named coordinates, over `target` (which must
/// contain the parameters and the coordinates).
inline PolyMatrix instantiate(const LinearStructure& s, const std::vector<std::string>& coord_names,
                              const VarTablePtr& target) {
    if (coord_names.size() != s.coords()) throw Error(ErrorKind::DimensionMismatch, "coordinate count");
    for (const auto& c : coord_names)
        if (s.params()->contains(c)) throw Error(ErrorKind::NameCollision, "'" + c + "' is a parameter name");
    std::vector<Polynomial> x = variable_vector(target, coord_names);
    const std::size_t n = s.order();
    PolyMatrix m(n, Polynomial(target));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < s.coords(); ++r) {
                const Polynomial& c = s.coeff(i, j, r);
                if (!c.is_zero()) m(i, j) += rebase(c, target) * x[r];
            }
    return m;
}

/// Matrix over the table params ++ coord_names.
inline PolyMatrix instantiate(const LinearStructure& s, const std::vector<std::string>& coord_names) {
    return instantiate(s, coord_names, coordinate_table(s.params(), {coord_names}));
}

/// First entry (row-major) where a matrix leaves the structure's span;
/// residual = D*M(i,j) - sum_r L[i][j][r]*(D*z_r), D the divisor lcm.
struct NotInSpan {
    std::size_t row = 0, col = 0;
    Polynomial residual;
};

struct Extraction {
    std::vector<Polynomial> coords;
    std::optional<NotInSpan> not_in_span;
    bool ok() const noexcept { return !not_in_span; }
};

namespace detail {

/// lcm of single-term divisors: lcm of integer parts times max exponents.
inline std::pair<BigInt, Monomial> divisor_lcm(const ExtractionRecipe& recipe, const VarTablePtr& params) {
    BigInt l = 1;
    Monomial m;
    for (const auto& e : recipe.entries) {
        const Polynomial d = rebase(e.divisor, params);
        const auto& [dm, dc] = *d.terms().begin();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dc.get_mpz_t());
        for (std::size_t v = 0; v < params->size(); ++v)
            if (dm.exponent(v) > m.exponent(v)) m.set(v, dm.exponent(v));
    }
    return {l, m};
}

}  // namespace detail

/// Reads coordinates z from M at the recipe positions and proves
/// M == instantiate(S, z) entrywise. Works fraction-free: everything is
/// scaled by the divisor lcm D, compared, and only then divided by D.
inline Extraction extract_coordinates(const LinearStructure& s, const ExtractionRecipe& recipe, const PolyMatrix& m) {
    validate_recipe(s, recipe);
    if (m.order() != s.order()) throw Error(ErrorKind::DimensionMismatch, "matrix order differs from structure");
    const VarTablePtr& t = m(0, 0).table();
    for (const auto& name : s.params()->names())
        if (!t->contains(name)) throw Error(ErrorKind::UnknownVariable, "matrix table lacks parameter '" + name + "'");

    auto [dc, dm] = detail::divisor_lcm(recipe, s.params());
    const Polynomial big_d = rebase(Polynomial::monomial(s.params(), dm, dc), t);

    std::vector<Polynomial> scaled;
    scaled.reserve(s.coords());
    for (const auto& e : recipe.entries) {
        const Polynomial d = rebase(e.divisor, s.params());
        const auto& [em, ec] = *d.terms().begin();
        Polynomial factor = rebase(Polynomial::monomial(s.params(), dm / em, BigInt(dc / ec)), t);
        scaled.push_back(m(e.row, e.col) * factor);
    }

    Extraction out;
    for (std::size_t i = 0; i < s.order() && !out.not_in_span; ++i)
        for (std::size_t j = 0; j < s.order(); ++j) {
            Polynomial residual = m(i, j) * big_d;
            for (std::size_t r = 0; r < s.coords(); ++r) {
                const Polynomial& c = s.coeff(i, j, r);
                if (!c.is_zero()) residual -= rebase(c, t) * scaled[r];
            }
            if (!residual.is_zero()) {
                out.not_in_span = NotInSpan{i, j, std::move(residual)};
                break;
            }
        }
    if (out.not_in_span) return out;

    Monomial dm_t = big_d.terms().begin()->first;
    for (auto& z : scaled) out.coords.push_back(divide_by_term(z, dm_t, dc));
    return out;
}

// ---------------------------------------------------------------------------
// Closure checks

/// Product with optional per-row threading; identical result for any count.
inline PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, unsigned threads = 1) {
    const std::size_t n = a.order();
    if (b.order() != n) throw Error(ErrorKind::DimensionMismatch, "matrix orders differ");
    PolyMatrix c(n, a(0, 0).zero());
    auto rows = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Polynomial acc = a(0, 0).zero();
                for (std::size_t k = 0; k < n; ++k)
                    if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
                c(i, j) = std::move(acc);
            }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        rows(0, n);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return c;
}

struct ClosureOptions {
    unsigned threads = 1;
    std::string x = "x", y = "y", z = "z";  // coordinate prefixes
};

/// Successful closure: the extracted map plus supporting evidence.
struct ClosureCertificate {
    MultilinearMap map;
    bool degenerate = false;                   // h == 1
    std::optional<NotInSpan> pairwise_witness; // triple checks only: why two factors fail
};

struct ClosureResult {
    std::optional<ClosureCertificate> certificate;
    std::optional<NotInSpan> not_closed;
    bool closed() const noexcept { return certificate.has_value(); }
};

namespace detail {

inline ClosureResult closure_impl(const LinearStructure& s, const ExtractionRecipe& recipe, unsigned factors,
                                  const ClosureOptions& opt, std::optional<NotInSpan> pair_witness) {
    const std::size_t h = s.coords();
    std::vector<std::vector<std::string>> groups{coordinate_names(opt.x, h), coordinate_names(opt.y, h)};
    if (factors == 3) groups.push_back(coordinate_names(opt.z, h));
    VarTablePtr table = coordinate_table(s.params(), groups);

    PolyMatrix prod = instantiate(s, groups[0], table);
    for (std::size_t g = 1; g < groups.size(); ++g) prod = multiply(prod, instantiate(s, groups[g], table), opt.threads);

    Extraction ex = extract_coordinates(s, recipe, prod);
    ClosureResult res;
    if (!ex.ok()) {
        res.not_closed = std::move(ex.not_in_span);
        return res;
    }
    res.certificate = ClosureCertificate{MultilinearMap::from_polynomials(ex.coords, groups, s.params()), h == 1,
                                         std::move(pair_witness)};
    return res;
}

}  // namespace detail

/// Multiplies A(x)A(y) symbolically and extracts z(x, y).
inline ClosureResult verify_pair_closure(const LinearStructure& s, const ExtractionRecipe& recipe,
                                         const ClosureOptions& opt = {}) {
    return detail::closure_impl(s, recipe, 2, opt, std::nullopt);
}

/// Multiplies A(x)A(y)A(z) and extracts w(x, y, z). The pairwise attempt is
/// run first; when it fails its witness is kept in the certificate.
inline ClosureResult verify_triple_closure(const LinearStructure& s, const ExtractionRecipe& recipe,
                                           const ClosureOptions& opt = {}) {
    ClosureResult pair = verify_pair_closure(s, recipe, opt);
    return detail::closure_impl(s, recipe, 3, opt, pair.not_closed);
}

// ---------------------------------------------------------------------------
// Constructions

/// Block lifting: entry block (I, J) of the result is
///   sum_r L_outer[I][J][r] * inner(slice r),
/// coordinates ordered slice-major (all inner coordinates of slot 1 first).
inline LinearStructure block_compose(const LinearStructure& outer, const LinearStructure& inner) {
    for (const auto& n : inner.params()->names())
        if (outer.params()->contains(n))
            throw Error(ErrorKind::ParameterCollision, "parameter '" + n + "' appears in both factors; rename one");
    VarTablePtr params = concat_tables(*outer.params(), *inner.params());
    const std::size_t no = outer.order(), ni = inner.order(), ho = outer.coords(), hi = inner.coords();
    LinearStructure s(no * ni, ho * hi, params);

    std::vector<Polynomial> lo, li;
    for (std::size_t I = 0; I < no; ++I)
        for (std::size_t J = 0; J < no; ++J)
            for (std::size_t r = 0; r < ho; ++r) lo.push_back(rebase(outer.coeff(I, J, r), params));
    for (std::size_t a = 0; a < ni; ++a)
        for (std::size_t b = 0; b < ni; ++b)
            for (std::size_t r = 0; r < hi; ++r) li.push_back(rebase(inner.coeff(a, b, r), params));

    for (std::size_t I = 0; I < no; ++I)
        for (std::size_t J = 0; J < no; ++J)
            for (std::size_t r = 0; r < ho; ++r) {
                const Polynomial& co = lo[(I * no + J) * ho + r];
                if (co.is_zero()) continue;
                for (std::size_t a = 0; a < ni; ++a)
                    for (std::size_t b = 0; b < ni; ++b)
                        for (std::size_t k = 0; k < hi; ++k) {
                            const Polynomial& ci = li[(a * ni + b) * hi + k];
                            if (ci.is_zero()) continue;
                            std::size_t row = I * ni + a, col = J * ni + b, coord = r * hi + k;
                            s.set(row, col, coord, s.coeff(row, col, coord) + co * ci);
                        }
            }
    return s;
}

/// x1*I + x2*M + ... + xn*M^(n-1) for the companion matrix M of
/// X^n + a1 X^(n-1) + ... + an (superdiagonal ones, last row -(an .. a1)).
inline LinearStructure companion_structure(const std::vector<BigInt>& monic_coeffs) {
    const std::size_t n = monic_coeffs.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "companion structure needs degree >= 1");
    IntMatrix comp(n, BigInt(0));
    for (std::size_t i = 0; i + 1 < n; ++i) comp(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j) comp(n - 1, j) = -monic_coeffs[n - 1 - j];

    VarTablePtr params = VarTable::make({});
    LinearStructure s(n, n, params);
    IntMatrix power(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) power(i, i) = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (power(i, j) != 0) s.set(i, j, r, Polynomial::constant(params, power(i, j)));
        power = power * comp;
    }
    return s;
}

}  // namespace compform
