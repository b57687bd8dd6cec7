#include <gtest/gtest.h>

#include "compform/dioph.hpp"
#include "compform/io.hpp"
#include "support.hpp"

using namespace compform;
using namespace testsupport;

namespace {

FormFamily quartic_example() { return family("quartic4x4", V({5, -23, 2, -7})); }

std::vector<SolutionVec> pairwise(const FormFamily& f, SolutionVec seed, SolutionVec step, std::size_t count) {
    SequenceSpec s;
    s.seed = std::move(seed);
    s.step = std::move(step);
    s.count = count;
    return generate_sequence(f, s);
}

std::vector<SolutionVec> triple(const FormFamily& f, SolutionVec seed, std::size_t count) {
    SequenceSpec s;
    s.mode = SequenceMode::Triple;
    s.fixed1 = SolutionVec(f.dim(), 0);
    s.fixed1[0] = 1;
    s.fixed2 = seed;
    s.seed = std::move(seed);
    s.count = count;
    return generate_sequence(f, s);
}

/// Composition with fixed vectors as a linear map of a symbolic vector a..
std::vector<Polynomial> symbolic_update(const MultilinearMap& m, const std::string& prefix,
                                        const std::vector<SolutionVec>& fixed, VarTablePtr& table) {
    std::vector<Polynomial> a = symbolic_vector(prefix, m.dim(), table);
    std::vector<std::vector<Polynomial>> args{a};
    for (const auto& v : fixed) args.push_back(constant_vector(v, table));
    return m.apply(args);
}

template <class Texts>
std::vector<Polynomial> parse_all(const Texts& texts, const VarTablePtr& table) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(P(t, table));
    return out;
}

TEST(IsSolution, Examples) {
    FormFamily q = quartic_example();
    EXPECT_TRUE(is_solution(q, V({6, 2, 3, 1})));
    EXPECT_TRUE(is_solution(q, V({1, 0, 0, 0})));
    EXPECT_FALSE(is_solution(q, V({2, 0, 0, 0})));
    EXPECT_FALSE(is_solution(q, V({1, 0, 0})));
    EXPECT_TRUE(is_solution(family("octic8x8", V({0, -5, 0, -3, 0, -14})), V({4, 2, 2, 1, 14, 7, 8, 4})));
}

TEST(IsSolution, SimultaneousSystem) {
    EXPECT_TRUE(simultaneous_is_solution(3, V({2, 1, 3, -1, 3, -4})));
    EXPECT_TRUE(simultaneous_is_solution(3, V({1, 0, 0, 0, 0, 0})));
    // f1 = 1 at (2, 1, 0, 0, 0, 0) but f2 is not
    auto ut = VarTable::make(coordinate_names("u", 6));
    std::map<std::string, BigInt> pt{{"u1", 2}, {"u2", 1}, {"u3", 0}, {"u4", 0}, {"u5", 0}, {"u6", 0}};
    BigInt f1 = naive_eval(P("u1^2 - 3 u2^2", ut), pt), f2 = naive_eval(P(reference::kUvQuarticExample, ut), pt);
    EXPECT_EQ(f1, 1);
    EXPECT_EQ(f2, 37);  // u1^4 + 3 u1^2 u2^2 + 9 u2^4
    EXPECT_EQ(simultaneous_is_solution(3, V({2, 1, 0, 0, 0, 0})), f1 == 1 && f2 == 1);
    // f1 = f2 = -1 would give f1 f2 = 1 without solving the system
    FormFamily u = family("sextic_uv", V({3}));
    for (const auto& v : brute_force_search(u, 2, 1)) EXPECT_TRUE(simultaneous_is_solution(3, v));
}

TEST(Sequence, Quartic) {
    auto seq = pairwise(quartic_example(), V({6, 2, 3, 1}), V({6, 2, 3, 1}), 4);
    std::vector<SolutionVec> expected{V({6, 2, 3, 1}), V({352, 121, 192, 66}), V({22336, 7680, 12215, 4200}),
                                      V({1420011, 488257, 776628, 267036})};
    EXPECT_EQ(seq, expected);
}

TEST(Sequence, SexticSystem) {
    FormFamily u = family("sextic_uv", V({3}));
    auto seq = pairwise(u, V({2, 1, 3, -1, 3, -4}), V({2, 1, 3, -1, 3, -4}), 4);
    std::vector<SolutionVec> expected{V({2, 1, 3, -1, 3, -4}), V({7, 4, 67, 20, 20, -30}),
                                      V({26, 15, 459, 525, -255, 459}), V({97, 56, -6240, 3640, -7224, 12577})};
    EXPECT_EQ(seq, expected);
    for (const auto& v : seq) EXPECT_EQ(form_values(u, v), V({1, 1}));
}

TEST(Sequence, Octic) {
    auto seq = pairwise(family("octic8x8", V({0, -5, 0, -3, 0, -14})), V({4, 2, 2, 1, 14, 7, 8, 4}),
                        V({4, 2, 2, 1, 14, 7, 8, 4}), 4);
    std::vector<SolutionVec> expected{
        V({4, 2, 2, 1, 14, 7, 8, 4}), V({12285, 5460, 7092, 3152, 468, 208, 270, 120}),
        V({578740, 258910, 334134, 149481, 729790, 326485, 421344, 188496}),
        V({612075793, 273723336, 353382120, 158034240, 45691800, 20433600, 26380172, 11797344})};
    EXPECT_EQ(seq, expected);
}

TEST(Sequence, ThreeFoldQuartic) {
    auto seq = triple(family("threefold4x4", V({-1, -4, 1, -1, 1, 1})), V({21, 8, 33, 13}), 4);
    std::vector<SolutionVec> expected{V({21, 8, 33, 13}), V({2462, 961, 3983, 1555}),
                                      V({294753, 115068, 476920, 186184}),
                                      V({35291917, 13777548, 57103521, 22292541})};
    EXPECT_EQ(seq, expected);
}

TEST(Sequence, ThreeFoldOctic) {
    auto seq = triple(family("threefold8x8", V({3, -1, 0, -3, 0, -14, 1})), V({2, 6, 1, 3, 7, 21, 4, 12}), 4);
    ASSERT_EQ(seq.size(), 4u);
    EXPECT_EQ(seq[1], V({13650, 45045, 7880, 26004, 520, 1716, 300, 990}));
    EXPECT_EQ(seq[2], V({1660070, 5482800, 958437, 3165480, 2093345, 6913800, 1208592, 3991680}));
    SolutionVec last{BigInt("4520236757"), BigInt("14929326951"), BigInt("2609759880"), BigInt("8619450840"),
                     BigInt("337438200"),  BigInt("1114482600"),  BigInt("194820028"),  BigInt("643446804")};
    EXPECT_EQ(seq[3], last);
}

TEST(Sequence, ArgumentOrderMatters) {
    FormFamily f = family("threefold4x4", V({-1, -4, 1, -1, 1, 1}));
    SequenceSpec s;
    s.mode = SequenceMode::Triple;
    s.seed = s.fixed2 = V({21, 8, 33, 13});
    s.fixed1 = V({1, 0, 0, 0});
    s.count = 2;
    s.order = "xyz";
    auto a = generate_sequence(f, s);
    s.order = "zyx";
    auto b = generate_sequence(f, s);
    EXPECT_EQ(a[0], b[0]);
    for (const auto& v : b) EXPECT_TRUE(is_solution(f, v));
    s.order = "xxy";
    EXPECT_THROW(generate_sequence(f, s), Error);
}

TEST(Sequence, Deterministic) {
    FormFamily f = quartic_example();
    EXPECT_EQ(pairwise(f, V({6, 2, 3, 1}), V({3, 1, 0, 0}), 6), pairwise(f, V({6, 2, 3, 1}), V({3, 1, 0, 0}), 6));
}

TEST(Sequence, RejectsNonSolutions) {
    FormFamily f = quartic_example();
    try {
        pairwise(f, V({2, 0, 0, 0}), V({6, 2, 3, 1}), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SeedNotSolution);
    }
    try {
        pairwise(f, V({6, 2, 3, 1}), V({6, 2, 3, 2}), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::StepNotSolution);
    }
}

TEST(UpdateMatrices, QuarticStep) {
    VarTablePtr t;
    auto got = symbolic_update(*quartic_example().pair_map, "a1", {V({6, 2, 3, 1})}, t);
    EXPECT_EQ(got, parse_all(reference::kQuarticUpdate, t));
}

TEST(UpdateMatrices, SexticSystemStep) {
    VarTablePtr t;
    auto got = symbolic_update(*family("sextic_uv", V({3})).pair_map, "a1", {V({2, 1, 3, -1, 3, -4})}, t);
    EXPECT_EQ(got, parse_all(reference::kUvUpdate, t));
}

TEST(UpdateMatrices, OcticStep) {
    VarTablePtr t;
    auto got = symbolic_update(*family("octic8x8", V({0, -5, 0, -3, 0, -14})).pair_map, "a",
                               {V({4, 2, 2, 1, 14, 7, 8, 4})}, t);
    EXPECT_EQ(got, parse_all(reference::kOcticUpdate, t));
}

TEST(UpdateMatrices, ThreeFoldQuarticStep) {
    VarTablePtr t;
    FormFamily f = family("threefold4x4", V({-1, -4, 1, -1, 1, 1}));
    auto got = symbolic_update(f.triple_maps[0], "a1", {V({1, 0, 0, 0}), V({21, 8, 33, 13})}, t);
    EXPECT_EQ(got, parse_all(reference::kTripleQuarticUpdate, t));
}

TEST(UpdateMatrices, ThreeFoldOcticStep) {
    VarTablePtr t;
    FormFamily f = family("threefold8x8", V({3, -1, 0, -3, 0, -14, 1}));
    auto got = symbolic_update(f.triple_maps[0], "a1", {V({1, 0, 0, 0, 0, 0, 0, 0}), V({2, 6, 1, 3, 7, 21, 4, 12})}, t);
    EXPECT_EQ(got, parse_all(reference::kTripleOcticUpdate, t));
}

TEST(Monotone, PrintedSequences) {
    FormFamily q = quartic_example();
    auto seq = pairwise(q, V({6, 2, 3, 1}), V({6, 2, 3, 1}), 4);
    EXPECT_TRUE(check_monotone_positive(q, seq).ok);
    FormFamily u = family("sextic_uv", V({3}));
    auto useq = pairwise(u, V({2, 1, 3, -1, 3, -4}), V({2, 1, 3, -1, 3, -4}), 4);
    MonotoneReport r = check_monotone_positive(u, useq);
    EXPECT_TRUE(r.ok);
    // the later coordinates change sign, so the full positivity profile must fail there
    EXPECT_FALSE(check_monotone_positive(useq, {0}, {0, 1, 2, 3, 4, 5}).ok);
}

TEST(Monotone, ConstantSequenceViolates) {
    FormFamily q = quartic_example();
    MonotoneReport r = check_monotone_positive(q, {V({1, 0, 0, 0}), V({1, 0, 0, 0})});
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.violation);
    EXPECT_FALSE(r.violation->empty());
}

std::vector<SolutionVec> enumerate_box(const FormFamily& f, long bound) {
    // plain nested odometer over the box, values from naive_eval on the form
    std::vector<SolutionVec> out;
    std::vector<long> v(f.dim(), -bound);
    for (;;) {
        std::map<std::string, BigInt> pt;
        for (std::size_t i = 0; i < v.size(); ++i) pt[f.coords[i]] = v[i];
        if (naive_eval(f.form, pt) == 1) out.emplace_back(v.begin(), v.end());
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
        if (i == 0) break;
        ++v[i - 1];
    }
    return out;
}

TEST(Search, QuarticMatchesIndependentEnumeration) {
    FormFamily f = quartic_example();
    auto found = brute_force_search(f, 6);
    EXPECT_EQ(found, enumerate_box(f, 6));
    EXPECT_NE(std::find(found.begin(), found.end(), V({1, 0, 0, 0})), found.end());
    EXPECT_NE(std::find(found.begin(), found.end(), V({6, 2, 3, 1})), found.end());
    EXPECT_EQ(found.size(), 10u);
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
    EXPECT_EQ(brute_force_search(f, 6, 1, 4), found);
}

TEST(Search, BoundZeroIsEmpty) {
    for (const char* name : {"quad2x2", "quartic4x4"}) {
        FormFamily f = family(name, std::vector<BigInt>(family_info(name).params.size(), 1));
        EXPECT_TRUE(brute_force_search(f, 0).empty());
    }
}

TEST(Search, ThreeFoldQuarticContainsIdentity) {
    auto found = brute_force_search(family("threefold4x4", V({-1, -4, 1, -1, 1, 1})), 1);
    EXPECT_NE(std::find(found.begin(), found.end(), V({1, 0, 0, 0})), found.end());
}

TEST(Search, TargetOtherThanOne) {
    FormFamily f = family("quad2x2", V({0, 1}));
    auto found = brute_force_search(f, 3, 5);
    EXPECT_EQ(found, (std::vector<SolutionVec>{V({-2, -1}), V({-2, 1}), V({-1, -2}), V({-1, 2}), V({1, -2}),
                                               V({1, 2}), V({2, -1}), V({2, 1})}));
}

TEST(Search, GuardsLargeBoxes) {
    try {
        brute_force_search(family("octic8x8", V({0, -5, 0, -3, 0, -14})), 20);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SearchSpaceTooLarge);
    }
}

TEST(Json, SequenceOutput) {
    FormFamily f = quartic_example();
    SequenceSpec s;
    s.seed = s.step = V({6, 2, 3, 1});
    s.count = 2;
    json j = sequence_to_json(f, s, generate_sequence(f, s));
    EXPECT_EQ(j["family"], "quartic4x4");
    EXPECT_EQ(j["params"], json({"5", "-23", "2", "-7"}));
    EXPECT_EQ(j["mode"], "pairwise");
    EXPECT_EQ(j["solutions"][1], json({"352", "121", "192", "66"}));
    EXPECT_EQ(j["verified"], true);
}

}  // namespace
