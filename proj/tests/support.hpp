#pragma once

// Test helpers and independent oracles. Nothing here calls the code under
// test for the quantity it is meant to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "compform/catalog.hpp"
#include "compform/compose.hpp"

namespace testsupport {

using namespace compform;

inline Polynomial P(std::string_view text, const VarTablePtr& table) { return parse_polynomial(text, table); }

inline std::vector<BigInt> V(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

/// Map read from printed component texts over the given argument groups.
template <class Texts>
MultilinearMap map_from_texts(const Texts& texts, const std::vector<std::string>& prefixes,
                              const std::vector<std::string>& params, std::size_t h) {
    VarTablePtr ptab = VarTable::make(params);
    std::vector<std::vector<std::string>> groups;
    for (const auto& p : prefixes) groups.push_back(coordinate_names(p, h));
    VarTablePtr table = coordinate_table(ptab, groups);
    std::vector<Polynomial> outs;
    for (const auto& t : texts) outs.push_back(parse_polynomial(t, table));
    return MultilinearMap::from_polynomials(outs, groups, ptab);
}

/// Matrix read from row-major texts over `table`.
template <class Texts>
PolyMatrix matrix_from_texts(const Texts& texts, std::size_t n, const VarTablePtr& table) {
    PolyMatrix m(n, Polynomial(table));
    std::size_t k = 0;
    for (const auto& t : texts) {
        m(k / n, k % n) = parse_polynomial(t, table);
        ++k;
    }
    return m;
}

/// Leibniz expansion over all permutations; the determinant oracle.
inline Polynomial leibniz_det(const PolyMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial sum(m(0, 0).table());
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial term = m(0, 0).one();
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
        sum = inversions % 2 ? sum - term : sum + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

/// Value of a polynomial at a point by direct term walking with repeated
/// multiplication (no shared code with eval_int).
inline BigInt naive_eval(const Polynomial& p, const std::map<std::string, BigInt>& pt) {
    BigInt sum = 0;
    const VarTable& t = *p.table();
    for (const auto& [m, c] : p.terms()) {
        BigInt term = c;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) term *= pt.at(t.name(i));
        sum += term;
    }
    return sum;
}

/// Random polynomial with up to `terms` terms, total degree <= `deg`.
inline Polynomial random_poly(std::mt19937_64& rng, const VarTablePtr& table, int terms, int deg, int coef = 9) {
    std::uniform_int_distribution<int> c(-coef, coef), e(0, deg), v(0, static_cast<int>(table->size()) - 1);
    Polynomial p(table);
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        int budget = e(rng);
        while (budget-- > 0) {
            std::size_t i = static_cast<std::size_t>(v(rng));
            m.set(i, m.exponent(i) + 1);
        }
        p.add_term(m, c(rng));
    }
    return p;
}

/// Symbolic vector a{prefix}1..a{prefix}h over its own table.
inline std::vector<Polynomial> symbolic_vector(const std::string& prefix, std::size_t h, VarTablePtr& table) {
    table = VarTable::make(coordinate_names(prefix, h));
    return variable_vector(table, table->names());
}

/// Constant vector over `table`.
inline std::vector<Polynomial> constant_vector(const std::vector<BigInt>& v, const VarTablePtr& table) {
    std::vector<Polynomial> out;
    for (const auto& x : v) out.push_back(Polynomial::constant(table, x));
    return out;
}

}  // namespace testsupport
