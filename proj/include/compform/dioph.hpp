#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "compform/compose.hpp"

namespace compform {

/// f(v) = 1, or every factor equal to 1 for simultaneous families.
inline bool is_solution(const FormFamily& f, const SolutionVec& v) {
    if (v.size() != f.dim()) return false;
    for (const auto& val : form_values(f, v))
        if (val != 1) return false;
    return true;
}

/// f1(v) = f2(v) = 1 for the u-forms at parameter q.
inline bool simultaneous_is_solution(const BigInt& q, const SolutionVec& v) {
    return is_solution(family("sextic_uv", {q}), v);
}

// ---------------------------------------------------------------------------
// Sequences

enum class SequenceMode { Pairwise, Triple };

/// Pairwise: next = z(current, step). Triple: the current vector and the two
/// fixed ones are placed into the slots named by `order`, whose letters
/// x, y, z give the slot of current, fixed1 and fixed2 in that order.
struct SequenceSpec {
    SequenceMode mode = SequenceMode::Pairwise;
    SolutionVec seed;
    SolutionVec step;                // pairwise mode
    SolutionVec fixed1, fixed2;      // triple mode
    std::string order = "xyz";
    std::size_t count = 1;           // number of vectors emitted, seed included
};

namespace detail {

inline std::array<std::size_t, 3> parse_order(const std::string& order) {
    if (order.size() != 3) throw Error(ErrorKind::InvalidArgument, "order must be a permutation of xyz");
    std::array<std::size_t, 3> slot{};
    std::array<bool, 3> used{};
    for (std::size_t i = 0; i < 3; ++i) {
        const char c = order[i];
        if (c < 'x' || c > 'z' || used[c - 'x'])
            throw Error(ErrorKind::InvalidArgument, "order must be a permutation of xyz");
        used[c - 'x'] = true;
        slot[i] = static_cast<std::size_t>(c - 'x');
    }
    return slot;
}

}  // namespace detail

/// Iterates the composition map from the seed; every emitted vector is
/// re-checked with is_solution.
inline std::vector<SolutionVec> generate_sequence(const FormFamily& f, const SequenceSpec& spec) {
    detail::require_numeric(f);
    if (!is_solution(f, spec.seed)) throw Error(ErrorKind::SeedNotSolution, "seed is not a solution");
    std::array<std::size_t, 3> slot{};
    if (spec.mode == SequenceMode::Pairwise) {
        if (!is_solution(f, spec.step)) throw Error(ErrorKind::StepNotSolution, "step is not a solution");
    } else {
        if (!is_solution(f, spec.fixed1)) throw Error(ErrorKind::StepNotSolution, "first fixed vector is not a solution");
        if (!is_solution(f, spec.fixed2)) throw Error(ErrorKind::StepNotSolution, "second fixed vector is not a solution");
        slot = detail::parse_order(spec.order);
    }

    std::vector<SolutionVec> out;
    out.reserve(spec.count);
    SolutionVec cur = spec.seed;
    for (std::size_t k = 0; k < spec.count; ++k) {
        if (k > 0) {
            if (spec.mode == SequenceMode::Pairwise) {
                cur = apply_map(f, {cur, spec.step});
            } else {
                std::vector<SolutionVec> args(3);
                args[slot[0]] = cur;
                args[slot[1]] = spec.fixed1;
                args[slot[2]] = spec.fixed2;
                cur = apply_map(f, args);
            }
            if (!is_solution(f, cur))
                throw Error(ErrorKind::VerificationFailed, "iterate " + std::to_string(k + 1) + " is not a solution");
        }
        out.push_back(cur);
    }
    return out;
}

struct MonotoneReport {
    bool ok = true;
    std::optional<std::string> violation;
};

/// Strict growth of the `increasing` coordinates and positivity of the
/// `positive` ones along the sequence (0-based indices).
inline MonotoneReport check_monotone_positive(const std::vector<SolutionVec>& seq,
                                              const std::vector<std::size_t>& increasing,
                                              const std::vector<std::size_t>& positive) {
    MonotoneReport r;
    auto fail = [&](std::string msg) {
        if (r.ok) {
            r.ok = false;
            r.violation = std::move(msg);
        }
    };
    for (std::size_t k = 0; k < seq.size() && r.ok; ++k) {
        for (std::size_t i : positive)
            if (i >= seq[k].size() || seq[k][i] <= 0)
                fail("term " + std::to_string(k + 1) + ", coordinate " + std::to_string(i + 1) + " is not positive");
        if (k == 0) continue;
        for (std::size_t i : increasing)
            if (i >= seq[k].size() || seq[k][i] <= seq[k - 1][i])
                fail("term " + std::to_string(k + 1) + ", coordinate " + std::to_string(i + 1) + " does not increase");
    }
    return r;
}

/// Default profile: coordinates 1 and 2 for the u-form system, otherwise
/// coordinate 1 increasing and every coordinate positive.
inline MonotoneReport check_monotone_positive(const FormFamily& f, const std::vector<SolutionVec>& seq) {
    if (f.simultaneous) return check_monotone_positive(seq, {0, 1}, {0, 1});
    std::vector<std::size_t> all(f.dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return check_monotone_positive(seq, {0}, all);
}

// ---------------------------------------------------------------------------
// Exhaustive search

inline constexpr double kMaxSearchPoints = 1e9;

/// Every v with max |v_i| <= bound and f(v) = target (each factor = target
/// for simultaneous families), in lexicographic order. The box is split on
/// the first coordinate across threads; the merge keeps that order.
inline std::vector<SolutionVec> brute_force_search(const FormFamily& f, long bound, const BigInt& target = 1,
                                                   unsigned threads = 1) {
    detail::require_numeric(f);
    if (bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be non-negative");
    const std::size_t h = f.dim();
    const double side = 2.0 * static_cast<double>(bound) + 1.0;
    double points = 1;
    for (std::size_t i = 0; i < h; ++i) points *= side;
    if (points > kMaxSearchPoints)
        throw Error(ErrorKind::SearchSpaceTooLarge, std::to_string(static_cast<long double>(points)) + " points");

    // Flattened forms: coefficient and exponent vector per term.
    struct Term {
        BigInt c;
        std::vector<std::uint32_t> e;
    };
    std::vector<std::vector<Term>> polys;
    for (const Polynomial* p : f.simultaneous ? std::vector<const Polynomial*>{&f.factors[0], &f.factors[1]}
                                              : std::vector<const Polynomial*>{&f.form}) {
        std::vector<std::size_t> idx;
        for (const auto& c : f.coords) idx.push_back(p->table()->index(c));
        std::vector<Term> ts;
        for (const auto& [m, c] : p->terms()) {
            Term t{c, {}};
            for (std::size_t i : idx) t.e.push_back(m.exponent(i));
            ts.push_back(std::move(t));
        }
        polys.push_back(std::move(ts));
    }
    std::uint32_t maxdeg = 0;
    for (const auto& ts : polys)
        for (const auto& t : ts)
            for (auto e : t.e) maxdeg = std::max(maxdeg, e);

    const long width = 2 * bound + 1;
    auto search = [&](long first, std::vector<SolutionVec>& found) {
        std::vector<long> v(h, -bound);
        v[0] = first;
        std::vector<std::vector<BigInt>> pw(h, std::vector<BigInt>(maxdeg + 1));
        BigInt acc, term;
        for (;;) {
            for (std::size_t i = 0; i < h; ++i) {
                pw[i][0] = 1;
                for (std::uint32_t d = 1; d <= maxdeg; ++d) pw[i][d] = pw[i][d - 1] * v[i];
            }
            bool all = true;
            for (const auto& ts : polys) {
                acc = 0;
                for (const auto& t : ts) {
                    term = t.c;
                    for (std::size_t i = 0; i < h; ++i)
                        if (t.e[i]) term *= pw[i][t.e[i]];
                    acc += term;
                }
                if (acc != target) {
                    all = false;
                    break;
                }
            }
            if (all) {
                SolutionVec s(h);
                for (std::size_t i = 0; i < h; ++i) s[i] = v[i];
                found.push_back(std::move(s));
            }
            std::size_t i = h;
            while (i > 1) {
                --i;
                if (v[i] < bound) {
                    ++v[i];
                    break;
                }
                v[i] = -bound;
                if (i == 1) return;
            }
            if (h == 1) return;
        }
    };

    std::vector<std::vector<SolutionVec>> per_first(static_cast<std::size_t>(width));
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(width)));
    auto run = [&](unsigned w) {
        for (long k = w; k < width; k += threads) search(k - bound, per_first[static_cast<std::size_t>(k)]);
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<SolutionVec> out;
    for (auto& part : per_first)
        for (auto& s : part) out.push_back(std::move(s));
    return out;
}

}  // namespace compform
