#include <gtest/gtest.h>

#include "compform/io.hpp"
#include "support.hpp"

using namespace compform;
using namespace testsupport;

namespace {

VarTablePtr xy_table() { return VarTable::make({"p", "q", "x1", "x2", "y1", "y2"}); }

TEST(VarTable, RejectsDuplicatesAndUnknownNames) {
    EXPECT_THROW(VarTable::make({"x1", "x1"}), Error);
    auto t = VarTable::make({"a", "b"});
    EXPECT_EQ(t->index("b"), 1u);
    try {
        t->index("c");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
    }
}

TEST(VarTable, TooManyVariables) {
    try {
        VarTable::make(coordinate_names("v", kMaxVars + 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyVariables);
    }
}

TEST(Add, AdditiveInverseIsZero) {
    auto t = xy_table();
    auto x1 = Polynomial::variable(t, "x1");
    EXPECT_TRUE(add(x1, -x1).is_zero());
    EXPECT_EQ(term_count(add(x1, -x1)), 0u);
}

TEST(Add, BinaryQuadraticShape) {
    auto t = xy_table();
    Polynomial a = P("x1^2 + p x1 x2", t), b = P("q x2^2", t);
    EXPECT_EQ(add(a, b), P("x1^2 + p x1 x2 + q x2^2", t));
    EXPECT_EQ(term_count(add(a, b)), 3u);
}

TEST(Add, TableMismatch) {
    auto a = Polynomial::variable(VarTable::make({"x1"}), "x1");
    auto b = Polynomial::variable(VarTable::make({"x1", "x2"}), "x1");
    try {
        add(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::VarTableMismatch);
    }
    EXPECT_THROW(mul(a, b), Error);
}

TEST(Mul, HandExpansion) {
    auto t = xy_table();
    Polynomial a = P("x1^2 - 3 x2^2", t), b = P("y1^2 - 3 y2^2", t);
    EXPECT_EQ(mul(a, b), P("x1^2 y1^2 - 3 x1^2 y2^2 - 3 x2^2 y1^2 + 9 x2^2 y2^2", t));
    EXPECT_EQ(mul(a, a.one()), a);
    EXPECT_TRUE(mul(a, a.zero()).is_zero());
}

TEST(Mul, RespectsEvaluationAtRandomPoints) {
    std::mt19937_64 rng(7);
    auto t = VarTable::make({"a", "b", "c", "d"});
    std::uniform_int_distribution<long> pick(-50, 50);
    for (int round = 0; round < 100; ++round) {
        Polynomial a = random_poly(rng, t, 6, 4), b = random_poly(rng, t, 6, 4);
        std::map<std::string, BigInt> pt;
        for (const auto& n : t->names()) pt[n] = pick(rng);
        EXPECT_EQ(naive_eval(a * b, pt), naive_eval(a, pt) * naive_eval(b, pt));
        EXPECT_EQ(eval_int(a * b, pt), naive_eval(a * b, pt));
    }
}

TEST(Ring, AxiomsOnRandomPolynomials) {
    std::mt19937_64 rng(11);
    auto t = VarTable::make({"a", "b", "c", "d"});
    for (int round = 0; round < 40; ++round) {
        Polynomial a = random_poly(rng, t, 8, 4), b = random_poly(rng, t, 8, 4), c = random_poly(rng, t, 8, 4);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Ring, PowMatchesRepeatedProduct) {
    auto t = xy_table();
    Polynomial a = P("x1 + 2 x2 - p", t);
    EXPECT_EQ(pow(a, 0), a.one());
    EXPECT_EQ(pow(a, 5), a * a * a * a * a);
}

TEST(Ring, BigCoefficientsDoNotOverflow) {
    auto t = VarTable::make({"x"});
    Polynomial a = P("9223372036854775807 x + 1", t);
    Polynomial sq = a * a;
    EXPECT_EQ(to_decimal(sq.coefficient_of(make_monomial(*t, {{"x", 2}}))), "85070591730234615847396907784232501249");
}

TEST(Substitute, Renaming) {
    auto t = VarTable::make({"x1", "x2", "y1", "y2"});
    Polynomial a = P("x1 + x2", t);
    std::map<std::string, Polynomial> as{{"x1", Polynomial::variable(t, "y1")}, {"x2", Polynomial::variable(t, "y2")}};
    EXPECT_EQ(substitute(a, as, t), P("y1 + y2", t));
}

TEST(Substitute, BinaryQuadraticComposition) {
    auto t = xy_table();
    Polynomial f = P("x1^2 + p x1 x2 + q x2^2", t);
    Polynomial z1 = P("x1 y1 - q x2 y2", t), z2 = P("x1 y2 + x2 y1 + p x2 y2", t);
    Polynomial fy = P("y1^2 + p y1 y2 + q y2^2", t);
    EXPECT_EQ(substitute(f, {{"x1", z1}, {"x2", z2}}, t), f * fy);
}

TEST(Substitute, CommutesWithEvaluation) {
    std::mt19937_64 rng(3);
    auto t = VarTable::make({"a", "b", "c"});
    std::uniform_int_distribution<long> pick(-20, 20);
    for (int round = 0; round < 30; ++round) {
        Polynomial f = random_poly(rng, t, 5, 3), ga = random_poly(rng, t, 3, 2), gb = random_poly(rng, t, 3, 2);
        std::map<std::string, BigInt> pt;
        for (const auto& n : t->names()) pt[n] = pick(rng);
        Polynomial s = substitute(f, {{"a", ga}, {"b", gb}}, t);
        std::map<std::string, BigInt> inner{{"a", naive_eval(ga, pt)}, {"b", naive_eval(gb, pt)}, {"c", pt["c"]}};
        EXPECT_EQ(naive_eval(s, pt), naive_eval(f, inner));
    }
}

TEST(Substitute, UnknownVariable) {
    auto t = VarTable::make({"x1"});
    try {
        substitute(P("x1", t), {{"w", Polynomial::variable(t, "x1")}}, t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
    }
}

TEST(EvalInt, PellUnit) {
    auto t = VarTable::make({"x1", "x2"});
    EXPECT_EQ(eval_int(P("x1^2 - 3 x2^2", t), {{"x1", 2}, {"x2", 1}}), 1);
}

TEST(EvalInt, ZeroPointGivesConstantTerm) {
    auto t = xy_table();
    Polynomial a = P("7 + x1 y2 - p^3", t);
    std::map<std::string, BigInt> zero;
    for (const auto& n : t->names()) zero[n] = 0;
    EXPECT_EQ(eval_int(a, zero), 7);
}

TEST(EvalInt, QuarticAtKnownSolution) {
    auto t = VarTable::make(coordinate_names("x", 4));
    EXPECT_EQ(eval_int(P(reference::kQuarticExample, t), {{"x1", 6}, {"x2", 2}, {"x3", 3}, {"x4", 1}}), 1);
}

TEST(EvalInt, Errors) {
    auto t = VarTable::make({"x1", "x2"});
    try {
        eval_int(P("x1 x2", t), {{"x1", 1}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnassignedVariable);
    }
    try {
        eval_int(P("x1", t), {{"x1", 1}, {"x9", 2}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownVariable);
    }
}

TEST(Determinant, BinaryQuadraticStructure) {
    auto t = xy_table();
    PolyMatrix m(2, Polynomial(t));
    m(0, 0) = P("x1", t);
    m(0, 1) = P("x2", t);
    m(1, 0) = P("-q x2", t);
    m(1, 1) = P("x1 + p x2", t);
    EXPECT_EQ(determinant(m), P("x1^2 + p x1 x2 + q x2^2", t));
}

TEST(Determinant, ConstantIdentity) {
    auto t = VarTable::make({"x"});
    for (std::size_t n = 1; n <= 6; ++n) {
        PolyMatrix m(n, Polynomial(t));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m(i, i).one();
        EXPECT_EQ(determinant(m), Polynomial::constant(t, 1));
    }
}

TEST(Determinant, CubicStructureMatchesLeibniz) {
    auto params = VarTable::make({"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"});
    auto table = coordinate_table(params, {coordinate_names("x", 3)});
    PolyMatrix m = matrix_from_texts(reference::kCubicMatrix, 3, table);
    EXPECT_EQ(determinant(m), leibniz_det(m));
    std::map<std::string, BigInt> lam{{"lambda1", 1}, {"lambda2", 0}, {"lambda3", 1}, {"lambda4", 0}, {"lambda5", 0}};
    auto xt = VarTable::make(coordinate_names("x", 3));
    PolyMatrix s(3, Polynomial(xt));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s(i, j) = partial_eval(m(i, j), lam, xt);
    EXPECT_EQ(determinant(s), leibniz_det(s));
}

TEST(Determinant, RandomMatricesMatchLeibnizAndThreads) {
    std::mt19937_64 rng(5);
    auto t = VarTable::make({"a", "b", "c"});
    for (std::size_t n = 1; n <= 5; ++n) {
        PolyMatrix m(n, Polynomial(t));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, t, 3, 2);
        Polynomial d = determinant(m);
        EXPECT_EQ(d, leibniz_det(m)) << "n=" << n;
        EXPECT_EQ(determinant(m, DeterminantOptions{4}), d);
    }
}

TEST(Determinant, Multiplicative) {
    std::mt19937_64 rng(9);
    auto t = VarTable::make({"a", "b", "c", "d"});
    for (int round = 0; round < 5; ++round) {
        PolyMatrix m(3, Polynomial(t)), n(3, Polynomial(t));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                m(i, j) = random_poly(rng, t, 3, 1);
                n(i, j) = random_poly(rng, t, 3, 1);
            }
        EXPECT_EQ(determinant(m * n), determinant(m) * determinant(n));
    }
}

TEST(Determinant, IntegerMatrix) {
    IntMatrix m(3, BigInt(0));
    long vals[9] = {2, -1, 0, 3, 5, 7, -4, 1, 6};
    for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = vals[k];
    // 2(30-7) + 1(18+28) + 0
    EXPECT_EQ(determinant(m), 92);
}

TEST(TermCount, Basics) {
    auto t = xy_table();
    EXPECT_EQ(term_count(Polynomial(t)), 0u);
    EXPECT_EQ(term_count(P("x1^2 + p x1 x2 + q x2^2", t)), 3u);
}

TEST(CoefficientOf, Lookup) {
    auto t = VarTable::make({"x1", "x2", "x3"});
    Polynomial a = P("x1^3 + 2 x2^3", t);
    EXPECT_EQ(coefficient_of(a, make_monomial(*t, {{"x2", 3}})), 2);
    EXPECT_EQ(coefficient_of(a, make_monomial(*t, {{"x3", 3}})), 0);
    auto params = VarTable::make({"lambda1", "lambda2", "lambda3", "lambda4", "lambda5"});
    auto ct = coordinate_table(params, {coordinate_names("x", 3)});
    EXPECT_EQ(coefficient_of(P(reference::kCubicForm, ct), make_monomial(*ct, {{"x1", 3}})), 1);
}

TEST(Monomial, GradedLexOrder) {
    auto t = VarTable::make({"a", "b"});
    Monomial a2 = make_monomial(*t, {{"a", 2}}), ab = make_monomial(*t, {{"a", 1}, {"b", 1}}),
             b3 = make_monomial(*t, {{"b", 3}});
    EXPECT_TRUE(grlex_greater(b3, a2));
    EXPECT_TRUE(grlex_greater(a2, ab));
    EXPECT_FALSE(grlex_greater(ab, a2));
}

TEST(Monomial, ExponentOverflow) {
    Monomial m;
    try {
        m.set(0, 256);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ExponentOverflow);
    }
}

TEST(Text, RoundTripAndOrdering) {
    auto t = xy_table();
    Polynomial a = P("q x2^2 + x1^2 + p x1 x2", t);
    EXPECT_EQ(to_text(a), "p*x1*x2 + q*x2^2 + x1^2");
    EXPECT_EQ(P(to_text(a), t), a);
    EXPECT_EQ(to_text(Polynomial(t)), "0");
}

TEST(Parse, Errors) {
    auto t = VarTable::make({"x"});
    EXPECT_THROW(P("x +", t), Error);
    EXPECT_THROW(P("y", t), Error);
    EXPECT_THROW(P("x^", t), Error);
}

TEST(Json, PolynomialRoundTrip) {
    std::mt19937_64 rng(13);
    auto t = VarTable::make({"a", "b", "c", "d"});
    for (int round = 0; round < 20; ++round) {
        Polynomial a = random_poly(rng, t, 10, 4, 1000000);
        json j = to_json(a);
        EXPECT_EQ(polynomial_from_json(j, t), a);
        EXPECT_EQ(to_json(polynomial_from_json(j)).dump(), j.dump());
    }
}

TEST(Json, PolynomialFormat) {
    auto t = VarTable::make({"x1", "x2"});
    json j = to_json(P("3 x2 - 5 x1^2", t));
    EXPECT_EQ(j.dump(), R"({"vars":["x1","x2"],"terms":[{"c":"-5","e":[2,0]},{"c":"3","e":[0,1]}]})");
}

}  // namespace
