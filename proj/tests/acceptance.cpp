// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "compform/dioph.hpp"

using namespace compform;

namespace {

SolutionVec V(std::initializer_list<const char*> xs) {
    SolutionVec v;
    for (const char* x : xs) v.emplace_back(x);
    return v;
}

struct Check {
    std::ostringstream log;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
};

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

// 1. pairwise identities, all parameters symbolic
void symbolic_identities(Check& c) {
    for (const char* name : {"quad2x2", "cubic3x3", "quartic4x4", "sextic6x6", "sextic_circulant", "octic8x8"}) {
        FormFamily f = family(name);
        IdentityReport rep = verify_family_identity(f, 2);
        for (const auto& r : rep.checks)
            c.expect(r.result.zero(), std::string(name) + " " + r.what + " [" + r.result.route + "]");
    }
    // the derived maps are the printed ones
    const std::vector<std::string> lam{"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"};
    c.expect(*family("cubic3x3").pair_map == map_from_texts(reference::kCubicZ, {"x", "y"}, lam, 3), "cubic z");
    c.expect(*family("quartic4x4").pair_map ==
                 map_from_texts(reference::kQuarticZ, {"x", "y"}, {"m", "n", "p", "q"}, 4),
             "quartic z");
    std::vector<std::string> sp = lam;
    sp.insert(sp.end(), {"p", "q"});
    c.expect(*family("sextic6x6").pair_map == map_from_texts(reference::kSexticZ, {"x", "y"}, sp, 6), "sextic z");
    c.expect(*family("sextic_circulant").pair_map == map_from_texts(reference::kCirculantZ, {"x", "y"}, {"q"}, 6),
             "circulant z");
    c.expect(*family("octic8x8").pair_map ==
                 map_from_texts(reference::kOcticZ, {"x", "y"}, {"m", "n", "p", "q", "r", "s"}, 8),
             "octic z");
    // a perturbed map must leave a residual
    FormFamily q = family("quad2x2");
    MultilinearMap bad = *q.pair_map;
    std::array<std::size_t, 2> idx{0, 1};
    bad.add(0, idx, Polynomial::constant(bad.params(), 1));
    c.expect(!verify_identity(q.form, q.coords, bad).zero(), "perturbed quad2x2 map detected");
}

// 2. three-fold identities, non-closure in pairs, degenerate reductions
void threefold(Check& c) {
    FormFamily tq = family("threefold_quadratic");
    c.expect(tq.triple_maps.size() == 3, "three w-variants");
    for (const auto& r : verify_family_identity(tq, 3, IdentityRoute::Direct).checks)
        c.expect(r.result.zero(), "threefold_quadratic " + r.what);
    for (const char* name : {"threefold4x4", "threefold8x8"})
        for (const auto& r : verify_family_identity(family(name), 3).checks)
            c.expect(r.result.zero(), std::string(name) + " " + r.what + " [" + r.result.route + "]");
    c.expect(family("threefold4x4").triple_maps[0] == map_from_texts(reference::kTripleQuarticW, {"x", "y", "z"},
                                                                     {"m", "n", "p", "q", "s", "t"}, 4),
             "threefold4x4 w");

    std::vector<std::pair<std::string, LinearStructure>> structs{
        {"trace-free 2x2", structures::trace_free("t", "b", "c")},
        {"threefold4x4", *family("threefold4x4").structure},
        {"threefold8x8", *family("threefold8x8").structure}};
    for (const auto& [label, s] : structs) {
        auto rec = find_recipe(s);
        c.expect(rec.has_value(), label + " recipe");
        if (!rec) continue;
        Extraction ex = extract_coordinates(s, *rec, [&] {
            std::vector<std::vector<std::string>> g{coordinate_names("x", s.coords()), coordinate_names("y", s.coords())};
            VarTablePtr t = coordinate_table(s.params(), g);
            return multiply(instantiate(s, g[0], t), instantiate(s, g[1], t));
        }());
        c.expect(!ex.ok(), label + " pairwise extraction gives NotInSpan");
    }

    GenuinenessReport g4 = verify_threefold_genuineness(family("threefold4x4"), {0, 1, 0, 2, 0, 0});
    c.expect(g4.reduced == parse_polynomial("4 x4^4", g4.reduced.table()), "threefold4x4 reduces to 4 x4^4");
    GenuinenessReport g8 = verify_threefold_genuineness(family("threefold8x8"), {0, 2, 0, 0, 0, 0, 0});
    c.expect(g8.reduced == parse_polynomial("16 x2^8", g8.reduced.table()), "threefold8x8 reduces to 16 x2^8");
}

// 3. printed form, sextic term count, circulant factorisation
void form_cross_checks(Check& c) {
    FormFamily q = family("quartic4x4");
    Polynomial det = determinant(instantiate(*q.structure, q.coords, q.table()));
    c.expect(det == parse_polynomial(reference::kQuarticForm, q.table()), "quartic determinant = printed form");
    std::size_t terms = term_count(family("sextic6x6").form);
    c.expect(terms == 11926, "sextic term count " + std::to_string(terms));
    FormFamily circ = family("sextic_circulant");
    Polynomial cd = determinant(instantiate(*circ.structure, circ.coords, circ.table()));
    Polynomial f1 = parse_polynomial(reference::kCirculantFactors[0], circ.table());
    Polynomial f2 = parse_polynomial(reference::kCirculantFactors[1], circ.table());
    c.expect(cd == f1 * f2, "det(P_circulant) = f1 f2");
    FactorCheck fc = circulant_factor_check();
    c.expect(fc.ok, "circulant factor identities: " + fc.failed);
}

std::vector<SolutionVec> run_pairwise(const FormFamily& f, const SolutionVec& seed, std::size_t n) {
    SequenceSpec s;
    s.seed = s.step = seed;
    s.count = n;
    return generate_sequence(f, s);
}

std::vector<SolutionVec> run_triple(const FormFamily& f, const SolutionVec& seed, std::size_t n) {
    SequenceSpec s;
    s.mode = SequenceMode::Triple;
    s.seed = s.fixed2 = seed;
    s.fixed1 = SolutionVec(f.dim(), 0);
    s.fixed1[0] = 1;
    s.count = n;
    return generate_sequence(f, s);
}

// 4. printed solution sequences
void sequences(Check& c) {
    c.expect(run_pairwise(family("quartic4x4", {5, -23, 2, -7}), V({"6", "2", "3", "1"}), 4) ==
                 std::vector<SolutionVec>{V({"6", "2", "3", "1"}), V({"352", "121", "192", "66"}),
                                          V({"22336", "7680", "12215", "4200"}),
                                          V({"1420011", "488257", "776628", "267036"})},
             "quartic sequence");

    FormFamily u = family("sextic_uv", {3});
    auto us = run_pairwise(u, V({"2", "1", "3", "-1", "3", "-4"}), 4);
    c.expect(us == std::vector<SolutionVec>{V({"2", "1", "3", "-1", "3", "-4"}), V({"7", "4", "67", "20", "20", "-30"}),
                                            V({"26", "15", "459", "525", "-255", "459"}),
                                            V({"97", "56", "-6240", "3640", "-7224", "12577"})},
             "sextic system sequence");
    for (const auto& v : us) c.expect(form_values(u, v) == SolutionVec{1, 1}, "f1 = f2 = 1 along the sextic sequence");

    c.expect(run_pairwise(family("octic8x8", {0, -5, 0, -3, 0, -14}), V({"4", "2", "2", "1", "14", "7", "8", "4"}), 4) ==
                 std::vector<SolutionVec>{
                     V({"4", "2", "2", "1", "14", "7", "8", "4"}),
                     V({"12285", "5460", "7092", "3152", "468", "208", "270", "120"}),
                     V({"578740", "258910", "334134", "149481", "729790", "326485", "421344", "188496"}),
                     V({"612075793", "273723336", "353382120", "158034240", "45691800", "20433600", "26380172",
                        "11797344"})},
             "octic sequence");

    c.expect(run_triple(family("threefold4x4", {-1, -4, 1, -1, 1, 1}), V({"21", "8", "33", "13"}), 4) ==
                 std::vector<SolutionVec>{V({"21", "8", "33", "13"}), V({"2462", "961", "3983", "1555"}),
                                          V({"294753", "115068", "476920", "186184"}),
                                          V({"35291917", "13777548", "57103521", "22292541"})},
             "threefold4x4 sequence");

    c.expect(run_triple(family("threefold8x8", {3, -1, 0, -3, 0, -14, 1}), V({"2", "6", "1", "3", "7", "21", "4", "12"}),
                        4) ==
                 std::vector<SolutionVec>{
                     V({"2", "6", "1", "3", "7", "21", "4", "12"}),
                     V({"13650", "45045", "7880", "26004", "520", "1716", "300", "990"}),
                     V({"1660070", "5482800", "958437", "3165480", "2093345", "6913800", "1208592", "3991680"}),
                     V({"4520236757", "14929326951", "2609759880", "8619450840", "337438200", "1114482600",
                        "194820028", "643446804"})},
             "threefold8x8 sequence");
}

// 5. identity, inverse, associativity
void group_law(Check& c) {
    for (const char* name : {"quartic4x4", "octic8x8"}) {
        FormFamily sym = family(name);
        SolutionVec e = identity_element(sym);
        c.expect(e[0] == 1 && std::all_of(e.begin() + 1, e.end(), [](const BigInt& v) { return v == 0; }),
                 std::string(name) + " identity element");
        c.expect(associativity(sym).zero(), std::string(name) + " symbolic associativity");
    }
    FormFamily q = family("quartic4x4", {5, -23, 2, -7});
    SolutionVec x = V({"6", "2", "3", "1"});
    SolutionVec y = invert(q, x);
    FormFamily sym = family("quartic4x4");
    std::map<std::string, BigInt> pt{{"m", 5}, {"n", -23}, {"p", 2}, {"q", -7}};
    for (std::size_t i = 0; i < 4; ++i) pt[sym.coords[i]] = x[i];
    SolutionVec printed;
    for (const auto& t : reference::kQuarticInverse) printed.push_back(eval_int(parse_polynomial(t, sym.table()), pt));
    c.expect(y == printed, "quartic inverse of (6, 2, 3, 1) matches the closed form");
    c.expect(apply_map(q, {x, y}) == identity_element(q), "x composed with its inverse is e");

    FormFamily o = family("octic8x8", {0, -5, 0, -3, 0, -14});
    auto seq = run_pairwise(o, V({"4", "2", "2", "1", "14", "7", "8", "4"}), 4);
    for (const auto& v : seq) {
        SolutionVec inv = invert(o, v);
        c.expect(apply_map(o, {v, inv}) == identity_element(o) && apply_map(o, {inv, v}) == identity_element(o),
                 "octic inverse round trip");
    }
}

// 6. exhaustive search against a separate enumeration
void search_oracle(Check& c) {
    FormFamily q = family("quartic4x4", {5, -23, 2, -7});
    auto found = brute_force_search(q, 6);
    std::vector<SolutionVec> oracle;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long d = -6; d <= 6; ++d)
                for (long e = -6; e <= 6; ++e) {
                    std::map<std::string, BigInt> pt{{"x1", a}, {"x2", b}, {"x3", d}, {"x4", e}};
                    if (eval_int(q.form, pt) == 1) oracle.push_back({a, b, d, e});
                }
    std::sort(oracle.begin(), oracle.end());
    c.expect(found == oracle, "search = independent enumeration (" + std::to_string(found.size()) + " solutions)");
    auto has = [&](const SolutionVec& v) { return std::find(found.begin(), found.end(), v) != found.end(); };
    c.expect(has(V({"1", "0", "0", "0"})), "contains (1, 0, 0, 0)");
    c.expect(has(V({"6", "2", "3", "1"})), "contains (6, 2, 3, 1)");
}

// 7. block lifting
void block_lifting(Check& c) {
    LinearStructure m44 = block_compose(structures::quadratic("p", "q"), structures::quadratic("m", "n"));
    auto xs4 = coordinate_names("x", 4);
    PolyMatrix a = instantiate(m44, xs4);
    bool same = true;
    for (std::size_t k = 0; k < 16; ++k)
        same = same && a(k / 4, k % 4) == parse_polynomial(reference::kQuarticMatrix[k], a(0, 0).table());
    c.expect(same, "4x4 lift entrywise");

    LinearStructure p66 = block_compose(structures::quadratic("p", "q"), structures::cubic());
    PolyMatrix b = instantiate(p66, coordinate_names("x", 6));
    const auto& t = b(0, 0).table();
    std::map<std::string, Polynomial> shift{
        {"x1", Polynomial::variable(t, "x4")}, {"x2", Polynomial::variable(t, "x5")}, {"x3", Polynomial::variable(t, "x6")}};
    Polynomial p = Polynomial::variable(t, "p"), qv = Polynomial::variable(t, "q");
    same = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial a1 = parse_polynomial(reference::kCubicMatrix[3 * i + j], t), a2 = substitute(a1, shift, t);
            same = same && b(i, j) == a1 && b(i, j + 3) == a2 && b(i + 3, j) == -(qv * a2) &&
                   b(i + 3, j + 3) == a1 + p * a2;
        }
    c.expect(same, "6x6 lift entrywise");

    auto closes = [](const LinearStructure& s, bool triple) {
        auto rec = find_recipe(s);
        return rec && (triple ? verify_triple_closure(s, *rec) : verify_pair_closure(s, *rec)).closed();
    };
    c.expect(closes(m44, false), "pair-closed over pair-closed: pair closed");
    c.expect(closes(p66, false), "quadratic over cubic: pair closed");
    LinearStructure mixed4 = *family("threefold4x4").structure;
    LinearStructure mixed8 = *family("threefold8x8").structure;
    for (const auto& [label, s] : std::vector<std::pair<std::string, LinearStructure>>{{"4x4", mixed4}, {"8x8", mixed8}}) {
        c.expect(!closes(s, false), "three-fold " + label + " lift: not pair closed");
        c.expect(closes(s, true), "three-fold " + label + " lift: triple closed");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"symbolic pairwise identities (quad, cubic, quartic, sextic, circulant, octic)", symbolic_identities},
        {"three-fold identities, pairwise NotInSpan, degenerate reductions", threefold},
        {"quartic determinant, sextic term count, circulant factorisation", form_cross_checks},
        {"solution sequences (quartic, sextic system, octic, three-fold quartic and octic)", sequences},
        {"identity, inverse and associativity (quartic, octic)", group_law},
        {"exhaustive search against independent enumeration", search_oracle},
        {"block lifting entries and closure classes", block_lifting},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)\n"
                  << c.log.str();
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
