#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients, square matrices over them, and subset-DP determinants.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "compform/error.hpp"

namespace compform {

using BigInt = mpz_class;

inline BigInt parse_bigint(std::string_view s) {
    BigInt v;
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(str.begin());
    if (str.empty() || v.set_str(str, 10) != 0)
        throw Error(ErrorKind::Parse, "not a decimal integer: '" + std::string(s) + "'");
    return v;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// ---------------------------------------------------------------------------
// VarTable

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered list of distinct variable names. Indices are stable for the
/// lifetime of the table; tables are shared immutably between polynomials.
class VarTable {
public:
    static VarTablePtr make(std::vector<std::string> names) {
        return std::shared_ptr<const VarTable>(new VarTable(std::move(names)));
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index(std::string_view name) const {
        auto i = find(name);
        if (!i) throw Error(ErrorKind::UnknownVariable, "'" + std::string(name) + "'");
        return *i;
    }

    bool contains(std::string_view name) const { return find(name).has_value(); }

private:
    explicit VarTable(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline constexpr std::size_t kMaxVars = 48;

inline VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
        throw Error(ErrorKind::TooManyVariables,
                    std::to_string(names_.size()) + " > " + std::to_string(kMaxVars));
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw Error(ErrorKind::NameCollision, "duplicate variable '" + names_[i] + "'");
    }
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && a->names() == b->names());
}

/// Concatenation of tables; a name present in both is an error.
inline VarTablePtr concat_tables(const VarTable& a, const VarTable& b) {
    std::vector<std::string> names = a.names();
    for (const auto& n : b.names()) {
        if (a.contains(n)) throw Error(ErrorKind::NameCollision, "'" + n + "' appears twice");
        names.push_back(n);
    }
    return VarTable::make(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

/// Exponent vector over a VarTable (positions beyond the table are zero).
/// Ordering is graded lexicographic: total degree, then exponents compared
/// left to right.
class Monomial {
public:
    Monomial() = default;

    std::uint32_t exponent(std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const noexcept { return deg_; }
    bool is_one() const noexcept { return deg_ == 0; }

    void set(std::size_t i, std::uint32_t v) {
        if (i >= kMaxVars) throw Error(ErrorKind::TooManyVariables, "monomial index");
        if (v > 255) throw Error(ErrorKind::ExponentOverflow, "exponent > 255");
        deg_ = deg_ - e_[i] + v;
        e_[i] = static_cast<std::uint8_t>(v);
    }

    static Monomial variable(std::size_t i, std::uint32_t power = 1) {
        Monomial m;
        m.set(i, power);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            unsigned s = unsigned(a.e_[i]) + b.e_[i];
            if (s > 255) throw Error(ErrorKind::ExponentOverflow, "exponent > 255");
            r.e_[i] = static_cast<std::uint8_t>(s);
        }
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    /// Precondition: divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] - divisor.e_[i];
        r.deg_ = deg_ - divisor.deg_;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.deg_ == b.deg_ && a.e_ == b.e_;
    }

    /// Graded lexicographic comparison; true when a ranks strictly above b.
    friend bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
        if (a.deg_ != b.deg_) return a.deg_ > b.deg_;
        return std::lexicographical_compare(b.e_.begin(), b.e_.end(), a.e_.begin(), a.e_.end());
    }

    std::size_t hash() const noexcept {
        std::uint64_t w[kMaxVars / 8];
        std::memcpy(w, e_.data(), sizeof(w));
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t x : w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// ---------------------------------------------------------------------------
// Polynomial

class Polynomial {
public:
    using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

    /// Zero over the empty table.
    Polynomial() : table_(empty_table()) {}
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

    static const VarTablePtr& empty_table() {
        static const VarTablePtr t = VarTable::make({});
        return t;
    }

    static Polynomial constant(VarTablePtr table, const BigInt& c) {
        Polynomial p(std::move(table));
        p.add_term(Monomial{}, c);
        return p;
    }

    static Polynomial variable(VarTablePtr table, std::string_view name) {
        Polynomial p(table);
        p.add_term(Monomial::variable(table->index(name)), 1);
        return p;
    }

    static Polynomial monomial(VarTablePtr table, const Monomial& m, const BigInt& c) {
        Polynomial p(std::move(table));
        p.add_term(m, c);
        return p;
    }

    const VarTablePtr& table() const noexcept { return table_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    BigInt constant_term() const { return coefficient_of(Monomial{}); }

    BigInt coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    /// Highest power of variable i occurring in any term.
    std::uint32_t degree_in(std::size_t i) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(i));
        return d;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// this += sign * a * b for a single pair of terms; zeros are left in place
    /// and removed by prune().
    void add_product_unpruned(const Monomial& m, const BigInt& a, const BigInt& b) {
        auto [it, inserted] = terms_.try_emplace(m);
        mpz_addmul(it->second.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }

    void prune() {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    void reserve(std::size_t n) { terms_.reserve(n); }

    /// Terms in graded-lex descending order (the canonical serialization order).
    std::vector<std::pair<Monomial, BigInt>> sorted_terms() const {
        std::vector<std::pair<Monomial, BigInt>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
        return v;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_table(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const BigInt& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const BigInt& s) { return a *= s; }
    friend Polynomial operator*(const BigInt& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_table(b);
        const Polynomial& small = a.term_count() <= b.term_count() ? a : b;
        const Polynomial& large = a.term_count() <= b.term_count() ? b : a;
        Polynomial r(a.table_);
        if (small.is_zero()) return r;
        r.terms_.reserve(large.term_count() * std::min<std::size_t>(small.term_count(), 8));
        for (const auto& [ms, cs] : small.terms_)
            for (const auto& [ml, cl] : large.terms_) r.add_product_unpruned(ms * ml, cs, cl);
        r.prune();
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
    }

    void check_table(const Polynomial& o) const {
        if (!same_table(table_, o.table_))
            throw Error(ErrorKind::VarTableMismatch, "operands live over different variable tables");
    }

    Polynomial zero() const { return Polynomial(table_); }
    Polynomial one() const { return constant(table_, 1); }

private:
    VarTablePtr table_;
    TermMap terms_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline std::size_t term_count(const Polynomial& a) { return a.term_count(); }
inline BigInt coefficient_of(const Polynomial& a, const Monomial& m) { return a.coefficient_of(m); }

inline Polynomial pow(const Polynomial& base, unsigned e) {
    Polynomial r = base.one();
    Polynomial b = base;
    while (e) {
        if (e & 1U) r *= b;
        e >>= 1U;
        if (e) b *= b;
    }
    return r;
}

/// Builds a monomial from (name, exponent) pairs over a table.
inline Monomial make_monomial(const VarTable& t,
                              std::initializer_list<std::pair<std::string_view, unsigned>> powers) {
    Monomial m;
    for (const auto& [name, e] : powers) m.set(t.index(name), m.exponent(t.index(name)) + e);
    return m;
}

// ---------------------------------------------------------------------------
// Variable remapping, substitution, evaluation

/// Reinterprets `a` over `target`, matching variables by name (optionally
/// through `rename`). Every variable that occurs in `a` must exist in target.
inline Polynomial rebase(const Polynomial& a, const VarTablePtr& target,
                         const std::map<std::string, std::string>& rename = {}) {
    if (same_table(a.table(), target) && rename.empty()) {
        Polynomial r(target);
        for (const auto& [m, c] : a.terms()) r.add_term(m, c);
        return r;
    }
    const VarTable& src = *a.table();
    std::vector<std::optional<std::size_t>> idx(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = rename.find(src.name(i));
        idx[i] = target->find(it == rename.end() ? src.name(i) : it->second);
    }
    Polynomial r(target);
    r.reserve(a.term_count());
    for (const auto& [m, c] : a.terms()) {
        Monomial t;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (!idx[i]) throw Error(ErrorKind::UnknownVariable, "'" + src.name(i) + "' missing from target table");
            t.set(*idx[i], t.exponent(*idx[i]) + m.exponent(i));
        }
        r.add_term(t, c);
    }
    return r;
}

/// Replaces variables of `a` by polynomials over `target`. Unassigned
/// variables map to the same-named variable of `target`.
inline Polynomial substitute(const Polynomial& a, const std::map<std::string, Polynomial>& assignment,
                             const VarTablePtr& target) {
    const VarTable& src = *a.table();
    for (const auto& [name, poly] : assignment) {
        if (!src.contains(name)) throw Error(ErrorKind::UnknownVariable, "'" + name + "' not in source table");
        if (!same_table(poly.table(), target))
            throw Error(ErrorKind::VarTableMismatch, "substituted value for '" + name + "' is not over target");
    }
    struct Slot {
        const Polynomial* value = nullptr;
        std::optional<std::size_t> target_index;
        std::vector<Polynomial> powers;  // powers[k] = value^k
    };
    std::vector<Slot> slots(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignment.find(src.name(i));
        if (it != assignment.end()) {
            slots[i].value = &it->second;
        } else {
            slots[i].target_index = target->find(src.name(i));
        }
    }
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& s = slots[i];
        if (s.powers.empty()) s.powers.push_back(s.value->one());
        while (s.powers.size() <= e) s.powers.push_back(s.powers.back() * *s.value);
        return s.powers[e];
    };

    // Group terms by their exponents on the assigned variables so that each
    // distinct product of powers is expanded once.
    std::unordered_map<Monomial, Polynomial, MonomialHash> groups;
    for (const auto& [m, c] : a.terms()) {
        Monomial assigned_part;
        Monomial kept;
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (slots[i].value) {
                assigned_part.set(i, e);
            } else {
                if (!slots[i].target_index)
                    throw Error(ErrorKind::UnknownVariable, "'" + src.name(i) + "' missing from target table");
                kept.set(*slots[i].target_index, e);
            }
        }
        auto [it, ins] = groups.try_emplace(assigned_part, target);
        it->second.add_term(kept, c);
    }

    Polynomial result(target);
    for (const auto& [assigned_part, rest] : groups) {
        Polynomial prod = rest;
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::uint32_t e = assigned_part.exponent(i);
            if (e) prod = prod * power_of(i, e);
            if (prod.is_zero()) break;
        }
        result += prod;
    }
    return result;
}

/// Exact evaluation at an integer point. Variables that occur in `a` must be
/// assigned; names absent from the table are rejected.
inline BigInt eval_int(const Polynomial& a, const std::map<std::string, BigInt>& point) {
    const VarTable& t = *a.table();
    std::vector<std::optional<BigInt>> val(t.size());
    for (const auto& [name, v] : point) val[t.index(name)] = v;
    BigInt sum = 0, term, pw;
    for (const auto& [m, c] : a.terms()) {
        term = c;
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (!val[i]) throw Error(ErrorKind::UnassignedVariable, "'" + t.name(i) + "'");
            mpz_pow_ui(pw.get_mpz_t(), val[i]->get_mpz_t(), e);
            term *= pw;
        }
        sum += term;
    }
    return sum;
}

/// Substitutes integer values for some variables and rebases the remainder
/// onto `target` (by name).
inline Polynomial partial_eval(const Polynomial& a, const std::map<std::string, BigInt>& values,
                               const VarTablePtr& target) {
    const VarTable& src = *a.table();
    std::vector<const BigInt*> val(src.size(), nullptr);
    std::vector<std::optional<std::size_t>> idx(src.size());
    for (const auto& [name, v] : values) val[src.index(name)] = &v;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!val[i]) idx[i] = target->find(src.name(i));
    Polynomial r(target);
    BigInt coef, pw;
    for (const auto& [m, c] : a.terms()) {
        coef = c;
        Monomial t;
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (val[i]) {
                mpz_pow_ui(pw.get_mpz_t(), val[i]->get_mpz_t(), e);
                coef *= pw;
            } else {
                if (!idx[i]) throw Error(ErrorKind::UnknownVariable, "'" + src.name(i) + "' missing from target table");
                t.set(*idx[i], e);
            }
        }
        r.add_term(t, coef);
    }
    return r;
}

/// Exact division by c * m; throws NonExactDivision when some term is not a
/// multiple.
inline Polynomial divide_by_term(const Polynomial& a, const Monomial& m, const BigInt& c) {
    if (c == 0) throw Error(ErrorKind::NonExactDivision, "division by zero");
    Polynomial r(a.table());
    BigInt q;
    for (const auto& [am, ac] : a.terms()) {
        if (!m.divides(am) || !mpz_divisible_p(ac.get_mpz_t(), c.get_mpz_t()))
            throw Error(ErrorKind::NonExactDivision, "term not divisible");
        mpz_divexact(q.get_mpz_t(), ac.get_mpz_t(), c.get_mpz_t());
        r.add_term(am / m, q);
    }
    return r;
}

/// True when every occurring variable is one of `names`.
inline bool only_uses(const Polynomial& a, const std::vector<std::string>& names) {
    const VarTable& t = *a.table();
    std::vector<bool> allowed(t.size(), false);
    for (const auto& n : names)
        if (auto i = t.find(n)) allowed[*i] = true;
    for (const auto& [m, c] : a.terms())
        for (std::size_t i = 0; i < t.size(); ++i)
            if (m.exponent(i) && !allowed[i]) return false;
    return true;
}

/// Total degree restricted to the given variable indices, for every term.
inline std::uint32_t partial_degree(const Monomial& m, std::span<const std::size_t> vars) {
    std::uint32_t d = 0;
    for (std::size_t i : vars) d += m.exponent(i);
    return d;
}

// ---------------------------------------------------------------------------
// Text rendering and parsing

inline std::string monomial_text(const VarTable& t, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::uint32_t e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += t.name(i);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

/// Human-readable form, graded-lex descending, e.g. "x1^2 + p*x1*x2 - 3*x2^2".
inline std::string to_text(const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a.sorted_terms()) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(*a.table(), m);
        if (mono.empty()) {
            out += to_decimal(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_decimal(mag) + "*" + mono;
        }
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view src, VarTablePtr table) : s_(src), table_(std::move(table)) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    bool factor_start() {
        char c = peek();
        return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
    }

    Polynomial expr() {
        Polynomial acc(table_);
        bool first = true;
        while (true) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            Polynomial t = term();
            if (sign < 0) acc -= t;
            else acc += t;
            first = false;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                acc *= power();
            } else if (factor_start()) {
                acc *= power();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = compform::pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial::constant(table_, parse_bigint(s_.substr(start, pos_ - start)));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            return Polynomial::variable(table_, s_.substr(start, pos_ - start));
        }
        fail("expected a factor");
    }

    std::string_view s_;
    VarTablePtr table_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "+ - * ^ ( )" expressions with integer literals and identifiers from
/// `table`. Juxtaposed factors multiply ("2 m x1^3 x2").
inline Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table) {
    return detail::PolyParser(text, table).parse();
}

// ---------------------------------------------------------------------------
// Square matrices over a commutative ring

inline BigInt one_like(const BigInt&) { return 1; }
inline BigInt zero_like(const BigInt&) { return 0; }
inline bool is_zero(const BigInt& v) { return v == 0; }
inline Polynomial one_like(const Polynomial& p) { return p.one(); }
inline Polynomial zero_like(const Polynomial& p) { return p.zero(); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

template <class R>
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, const R& fill) : n_(n), data_(n * n, fill) {}

    std::size_t order() const noexcept { return n_; }
    R& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    std::size_t n_;
    std::vector<R> data_;
};

using PolyMatrix = SquareMatrix<Polynomial>;
using IntMatrix = SquareMatrix<BigInt>;

template <class R>
SquareMatrix<R> operator*(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
    const std::size_t n = a.order();
    if (b.order() != n) throw Error(ErrorKind::DimensionMismatch, "matrix orders differ");
    SquareMatrix<R> c(n, zero_like(a(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R acc = zero_like(a(0, 0));
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(a(i, k)) || is_zero(b(k, j))) continue;
                acc += a(i, k) * b(k, j);
            }
            c(i, j) = std::move(acc);
        }
    return c;
}

struct DeterminantOptions {
    unsigned threads = 1;
};

/// Determinant by dynamic programming over column subsets: D[S] is the minor
/// on the first |S| rows and the columns in S, expanded along its last row.
/// Needs O(2^n n) ring multiplications and no division.
template <class R>
R determinant(const SquareMatrix<R>& m, DeterminantOptions opts = {}) {
    const std::size_t n = m.order();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty matrix");
    if (n > 20) throw Error(ErrorKind::DimensionMismatch, "order too large for subset expansion");
    const std::size_t full = std::size_t{1} << n;
    const R zero = zero_like(m(0, 0));

    std::vector<std::optional<R>> prev(full), cur(full);
    prev[0] = one_like(m(0, 0));

    for (std::size_t row = 0; row < n; ++row) {
        std::vector<std::size_t> masks;
        for (std::size_t mask = 0; mask < full; ++mask)
            if (std::popcount(mask) == static_cast<int>(row + 1)) masks.push_back(mask);

        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t) {
                const std::size_t mask = masks[t];
                R acc = zero;
                int above = std::popcount(mask) - 1;  // set bits above the current column
                for (std::size_t j = 0; j < n; ++j) {
                    if (!(mask & (std::size_t{1} << j))) continue;
                    const auto& sub = prev[mask ^ (std::size_t{1} << j)];
                    if (sub && !is_zero(*sub) && !is_zero(m(row, j))) {
                        if (above % 2 == 0) acc += m(row, j) * *sub;
                        else acc -= m(row, j) * *sub;
                    }
                    --above;
                }
                cur[mask] = std::move(acc);
            }
        };

        unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(masks.size())));
        if (threads == 1) {
            work(0, masks.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (masks.size() + threads - 1) / threads;
            for (unsigned w = 0; w < threads; ++w) {
                std::size_t b = w * chunk, e = std::min(masks.size(), b + chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }
        std::swap(prev, cur);
        for (auto& slot : cur) slot.reset();
    }
    return std::move(*prev[full - 1]);
}

}  // namespace compform
