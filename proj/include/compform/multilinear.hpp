#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "compform/polyring.hpp"

namespace compform {

/// Integer multilinear map of arity 2 or 3 on vectors of length h:
///   out_i = sum c[i; j1..jk](params) * arg1_{j1} * ... * argk_{jk}.
/// Coefficients are polynomials over a parameter-only table. Multilinearity
/// holds by construction: every coefficient names one coordinate per argument.
class MultilinearMap {
public:
    /// (output index, argument indices...), unused slots are zero.
    using Key = std::array<std::uint8_t, 4>;

    MultilinearMap(unsigned arity, std::size_t dim, VarTablePtr params)
        : arity_(arity), dim_(dim), params_(std::move(params)) {
        if (arity_ != 2 && arity_ != 3) throw Error(ErrorKind::InvalidArgument, "arity must be 2 or 3");
        if (dim_ == 0 || dim_ > 255) throw Error(ErrorKind::InvalidArgument, "bad map dimension");
    }

    unsigned arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return dim_; }
    const VarTablePtr& params() const noexcept { return params_; }
    const std::map<Key, Polynomial>& coefficients() const noexcept { return coeff_; }

    static Key key(std::size_t out, std::span<const std::size_t> idx) {
        Key k{static_cast<std::uint8_t>(out), 0, 0, 0};
        for (std::size_t a = 0; a < idx.size(); ++a) k[a + 1] = static_cast<std::uint8_t>(idx[a]);
        return k;
    }

    void add(std::size_t out, std::span<const std::size_t> idx, const Polynomial& c) {
        if (idx.size() != arity_ || out >= dim_)
            throw Error(ErrorKind::DimensionMismatch, "coefficient index");
        for (std::size_t j : idx)
            if (j >= dim_) throw Error(ErrorKind::DimensionMismatch, "coefficient index");
        c.check_table(Polynomial(params_));
        auto [it, inserted] = coeff_.try_emplace(key(out, idx), c);
        if (!inserted) it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }

    Polynomial coefficient(std::size_t out, std::span<const std::size_t> idx) const {
        auto it = coeff_.find(key(out, idx));
        return it == coeff_.end() ? Polynomial(params_) : it->second;
    }

    /// Symbolic application; every argument is a vector of polynomials over a
    /// common table that also carries the parameter names.
    std::vector<Polynomial> apply(std::span<const std::vector<Polynomial>> args) const {
        if (args.size() != arity_) throw Error(ErrorKind::DimensionMismatch, "wrong number of arguments");
        for (const auto& a : args)
            if (a.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "argument length");
        const VarTablePtr& target = args[0][0].table();
        std::vector<Polynomial> out(dim_, Polynomial(target));

        // Group by (output, leading indices) so the last argument is combined
        // linearly before multiplying through.
        std::map<std::array<std::uint8_t, 3>, Polynomial> partial;
        for (const auto& [k, c] : coeff_) {
            std::array<std::uint8_t, 3> head{k[0], k[1], arity_ == 3 ? k[2] : std::uint8_t{0}};
            const auto& last = args[arity_ - 1][k[arity_]];
            if (last.is_zero()) continue;
            auto [it, ins] = partial.try_emplace(head, target);
            it->second += rebase(c, target) * last;
        }
        for (const auto& [head, lin] : partial) {
            if (lin.is_zero()) continue;
            Polynomial term = lin * args[0][head[1]];
            if (arity_ == 3) term = term * args[1][head[2]];
            out[head[0]] += term;
        }
        return out;
    }

    /// Numeric application; coefficients must be constant (see specialize).
    std::vector<BigInt> apply(std::span<const std::vector<BigInt>> args) const {
        if (args.size() != arity_) throw Error(ErrorKind::DimensionMismatch, "wrong number of arguments");
        for (const auto& a : args)
            if (a.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "argument length");
        std::vector<BigInt> out(dim_, 0);
        BigInt t;
        for (const auto& [k, c] : coeff_) {
            if (!c.is_constant())
                throw Error(ErrorKind::UnassignedVariable, "map has symbolic parameters; specialize first");
            t = c.constant_term();
            for (unsigned a = 0; a < arity_; ++a) t *= args[a][k[a + 1]];
            out[k[0]] += t;
        }
        return out;
    }

    /// Substitutes integer parameter values; names not in `values` stay symbolic.
    MultilinearMap specialize(const std::map<std::string, BigInt>& values) const {
        std::vector<std::string> rest;
        for (const auto& n : params_->names())
            if (!values.contains(n)) rest.push_back(n);
        std::map<std::string, BigInt> used;
        for (const auto& [n, v] : values)
            if (params_->contains(n)) used.emplace(n, v);
        MultilinearMap r(arity_, dim_, VarTable::make(std::move(rest)));
        for (const auto& [k, c] : coeff_) {
            Polynomial v = partial_eval(c, used, r.params_);
            if (!v.is_zero()) r.coeff_.emplace(k, std::move(v));
        }
        return r;
    }

    /// Same map with coefficients over `params`, matched by name.
    MultilinearMap rebased(const VarTablePtr& params) const {
        MultilinearMap r(arity_, dim_, params);
        for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, rebase(c, params));
        return r;
    }

    /// Map whose arguments are a permutation of this one's:
    ///   result(a_0, .., a_{k-1}) = this(a_{perm[0]}, .., a_{perm[k-1]}).
    MultilinearMap permute_arguments(std::span<const std::size_t> perm) const {
        if (perm.size() != arity_) throw Error(ErrorKind::DimensionMismatch, "permutation size");
        MultilinearMap r(arity_, dim_, params_);
        for (const auto& [k, c] : coeff_) {
            // this slot s reads argument perm[s] of the result
            std::array<std::size_t, 3> idx{};
            for (unsigned s = 0; s < arity_; ++s) idx[perm[s]] = k[s + 1];
            r.add(k[0], std::span<const std::size_t>(idx.data(), arity_), c);
        }
        return r;
    }

    /// Reads off the coefficient tensor from output polynomials that must be
    /// exactly multilinear in the argument groups (one coordinate of each
    /// group per term) with the remaining variables among the parameters.
    static MultilinearMap from_polynomials(const std::vector<Polynomial>& outs,
                                           const std::vector<std::vector<std::string>>& arg_names,
                                           const VarTablePtr& params) {
        const unsigned arity = static_cast<unsigned>(arg_names.size());
        const std::size_t dim = outs.size();
        MultilinearMap map(arity, dim, params);
        if (outs.empty()) return map;
        const VarTable& t = *outs[0].table();
        struct Role {
            int group = -1;
            std::size_t coord = 0;
            std::optional<std::size_t> param;
        };
        std::vector<Role> role(t.size());
        for (unsigned g = 0; g < arity; ++g) {
            if (arg_names[g].size() != dim) throw Error(ErrorKind::DimensionMismatch, "argument names");
            for (std::size_t c = 0; c < dim; ++c) {
                auto i = t.index(arg_names[g][c]);
                role[i].group = static_cast<int>(g);
                role[i].coord = c;
            }
        }
        for (std::size_t i = 0; i < t.size(); ++i)
            if (role[i].group < 0) role[i].param = params->find(t.name(i));

        for (std::size_t out = 0; out < dim; ++out) {
            outs[out].check_table(outs[0]);
            for (const auto& [m, c] : outs[out].terms()) {
                std::array<std::size_t, 3> idx{};
                std::array<int, 3> seen{0, 0, 0};
                Monomial pm;
                for (std::size_t i = 0; i < t.size(); ++i) {
                    std::uint32_t e = m.exponent(i);
                    if (e == 0) continue;
                    if (role[i].group >= 0) {
                        seen[role[i].group] += static_cast<int>(e);
                        idx[role[i].group] = role[i].coord;
                    } else if (role[i].param) {
                        pm.set(*role[i].param, e);
                    } else {
                        throw Error(ErrorKind::InvalidArgument,
                                    "'" + t.name(i) + "' is neither an argument coordinate nor a parameter");
                    }
                }
                for (unsigned g = 0; g < arity; ++g)
                    if (seen[g] != 1)
                        throw Error(ErrorKind::InvalidArgument, "output " + std::to_string(out + 1) +
                                                                    " is not multilinear in the arguments");
                map.add(out, std::span<const std::size_t>(idx.data(), arity), Polynomial::monomial(params, pm, c));
            }
        }
        return map;
    }

    friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
        if (a.arity_ != b.arity_ || a.dim_ != b.dim_ || a.coeff_.size() != b.coeff_.size()) return false;
        for (const auto& [k, c] : a.coeff_) {
            auto it = b.coeff_.find(k);
            if (it == b.coeff_.end()) return false;
            // tables may differ in parameter order; compare by name
            try {
                if (!(rebase(it->second, a.params_) == c)) return false;
            } catch (const Error&) {
                return false;
            }
        }
        return true;
    }

private:
    unsigned arity_;
    std::size_t dim_;
    VarTablePtr params_;
    std::map<Key, Polynomial> coeff_;
};

/// Names prefix1..prefixh.
inline std::vector<std::string> coordinate_names(const std::string& prefix, std::size_t h) {
    std::vector<std::string> v;
    v.reserve(h);
    for (std::size_t i = 1; i <= h; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

/// Vector of the named variables as polynomials over `table`.
inline std::vector<Polynomial> variable_vector(const VarTablePtr& table, const std::vector<std::string>& names) {
    std::vector<Polynomial> v;
    v.reserve(names.size());
    for (const auto& n : names) v.push_back(Polynomial::variable(table, n));
    return v;
}

}  // namespace compform
