#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "compform/linstruct.hpp"
#include "compform/multilinear.hpp"
#include "compform/polyring.hpp"

namespace compform {

/// Outcome of an identity check. `residual` is the zero polynomial exactly
/// when the identity holds.
struct IdentityResult {
    Polynomial residual;
    std::string route = "direct";
    bool zero() const noexcept { return residual.is_zero(); }
};

namespace detail {

/// Names of the form's table that are not coordinates, merged with the
/// map's parameters (first-seen order).
inline std::vector<std::string> parameter_names(const Polynomial& form, const std::vector<std::string>& coords,
                                                const MultilinearMap& map) {
    std::vector<std::string> out;
    auto push = [&](const std::string& n) {
        if (std::find(coords.begin(), coords.end(), n) == coords.end() &&
            std::find(out.begin(), out.end(), n) == out.end())
            out.push_back(n);
    };
    for (const auto& n : form.table()->names()) push(n);
    for (const auto& n : map.params()->names()) push(n);
    return out;
}

}  // namespace detail

/// Coordinate groups x1.., y1.., z1.. (first k of them), with the prefixes
/// extended by '_' until no name clashes with `taken`.
inline std::vector<std::vector<std::string>> argument_groups(const std::vector<std::string>& taken, std::size_t h,
                                                             unsigned k) {
    static const char* base[] = {"x", "y", "z"};
    std::vector<std::vector<std::string>> groups;
    for (unsigned g = 0; g < k; ++g) {
        std::string prefix = base[g];
        for (;;) {
            auto names = coordinate_names(prefix, h);
            bool clash = std::any_of(names.begin(), names.end(), [&](const std::string& n) {
                return std::find(taken.begin(), taken.end(), n) != taken.end();
            });
            if (!clash) {
                groups.push_back(std::move(names));
                break;
            }
            prefix += '_';
        }
    }
    return groups;
}

/// Expands f(x)f(y)[f(z)] - f(map(x, y[, z])) with every parameter symbolic.
/// `coords` names the form's coordinate variables in map order.
inline IdentityResult verify_identity(const Polynomial& form, const std::vector<std::string>& coords,
                                      const MultilinearMap& map) {
    if (coords.size() != map.dim()) throw Error(ErrorKind::DimensionMismatch, "form and map dimensions differ");
    std::vector<std::string> params = detail::parameter_names(form, coords, map);
    std::vector<std::string> taken = params;
    taken.insert(taken.end(), coords.begin(), coords.end());
    auto groups = argument_groups(taken, map.dim(), map.arity());
    VarTablePtr table = coordinate_table(VarTable::make(params), groups);

    Polynomial lhs = Polynomial::constant(table, 1);
    for (const auto& g : groups) {
        std::map<std::string, std::string> rename;
        for (std::size_t i = 0; i < coords.size(); ++i) rename[coords[i]] = g[i];
        lhs = lhs * rebase(form, table, rename);
    }

    std::vector<std::vector<Polynomial>> args;
    for (const auto& g : groups) args.push_back(variable_vector(table, g));
    std::vector<Polynomial> w = map.apply(args);
    std::map<std::string, Polynomial> assign;
    for (std::size_t i = 0; i < coords.size(); ++i) assign.emplace(coords[i], w[i]);

    IdentityResult r;
    r.residual = lhs - substitute(form, assign, table);
    return r;
}

}  // namespace compform
