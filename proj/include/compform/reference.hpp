#pragma once

// Reference expansions of the catalog forms, maps and matrices, kept as text
// in the syntax accepted by parse_polynomial. The catalog builds every object
// from its structure; these strings exist so the two routes can be compared.

#include <array>
#include <string_view>

namespace compform::reference {

/// Cubic 3x3 structure in x1..x3 with parameters lambda1..lambda5. Row-major, order 3.
inline constexpr std::array<std::string_view, 9> kCubicMatrix{
    "x1", "x2", "x3",
    "- lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x2 - lambda3 ( lambda2 - lambda4 ) x3", "x1 + lambda1 x2 + lambda2 x3", "lambda3 x2 + lambda3 x3",
    "- lambda3 ( lambda2 - lambda4 ) x2 + ( - lambda1 lambda4 + lambda2^2 - lambda2 lambda5 + lambda3 lambda4 ) x3", "lambda2 x2 + lambda4 x3", "x1 + lambda3 x2 + lambda5 x3",
};

/// Cubic composition map z(x, y).
inline constexpr std::array<std::string_view, 3> kCubicZ{
    "x1 y1 - lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x2 y2 - lambda3 ( lambda2 - lambda4 ) x2 "
    "y3 - lambda3 ( lambda2 - lambda4 ) x3 y2 + ( - lambda1 lambda4 + lambda2^2 - lambda2 lambda5 + "
    "lambda3 lambda4 ) x3 y3",
    "x1 y2 + x2 y1 + lambda1 x2 y2 + lambda2 x2 y3 + lambda2 x3 y2 + lambda4 x3 y3",
    "x1 y3 + lambda3 x2 y2 + lambda3 x2 y3 + x3 y1 + lambda3 x3 y2 + lambda5 x3 y3",
};

/// Expanded ternary cubic form.
inline constexpr std::string_view kCubicForm =
    "x1^3 + ( lambda1 + lambda3 ) x1^2 x2 + ( lambda2 + lambda5 ) x1^2 x3 + lambda3 ( 2 lambda1 - 2 "
    "lambda2 - lambda3 + lambda5 ) x1 x2^2 + ( lambda1 lambda5 + 2 lambda2 lambda3 - 3 lambda3 lambda4 ) "
    "x1 x2 x3 + ( lambda1 lambda4 - lambda2^2 + 2 lambda2 lambda5 - 2 lambda3 lambda4 ) x1 x3^2 + "
    "lambda3^2 ( lambda1 - 2 lambda2 - lambda3 + lambda4 + lambda5 ) x2^3 - lambda3 ( 2 lambda1 lambda4 - "
    "lambda1 lambda5 - 2 lambda2^2 - lambda2 lambda3 + 3 lambda2 lambda5 - lambda3 lambda4 + lambda3 "
    "lambda5 - lambda5^2 ) x2^2 x3 + ( lambda1^2 lambda4 - lambda1 lambda2^2 + lambda1 lambda2 lambda5 - "
    "3 lambda1 lambda3 lambda4 + lambda2^2 lambda3 + lambda2 lambda3 lambda4 + 2 lambda3^2 lambda4 - 2 "
    "lambda3 lambda4 lambda5 ) x2 x3^2 + ( lambda1 lambda2 lambda4 - lambda2^3 + lambda2^2 lambda5 - 2 "
    "lambda2 lambda3 lambda4 + lambda3 lambda4^2 ) x3^3";

/// Quartic 4x4 structure in x1..x4 with parameters m, n, p, q. Row-major, order 4.
inline constexpr std::array<std::string_view, 16> kQuarticMatrix{
    "x1", "x2", "x3", "x4",
    "- n x2", "x1 + m x2", "- n x4", "x3 + m x4",
    "- q x3", "- q x4", "x1 + p x3", "x2 + p x4",
    "q n x4", "- q ( x3 + m x4 )", "- n x2 - p n x4", "x1 + m x2 + p ( x3 + m x4 )",
};

/// Quartic composition map z(x, y).
inline constexpr std::array<std::string_view, 4> kQuarticZ{
    "x1 y1 - n x2 y2 - q x3 y3 + q n x4 y4",
    "x1 y2 + x2 y1 + m x2 y2 - q x3 y4 - q x4 y3 - m q x4 y4",
    "x1 y3 - n x2 y4 + x3 y1 + p x3 y3 - n x4 y2 - n p x4 y4",
    "x1 y4 + x2 y3 + m x2 y4 + x3 y2 + p x3 y4 + x4 y1 + m x4 y2 + p x4 y3 + m p x4 y4",
};

/// Expanded quartic form.
inline constexpr std::string_view kQuarticForm =
    "x1^4 + 2 m x1^3 x2 + 2 p x1^3 x3 + m p x1^3 x4 + ( m^2 + 2 n ) x1^2 x2^2 + 3 m p x1^2 x2 x3 + ( m^2 "
    "+ 2 n ) p x1^2 x2 x4 + ( p^2 + 2 q ) x1^2 x3^2 + ( p^2 + 2 q ) m x1^2 x3 x4 + ( m^2 q + n p^2 - 2 n "
    "q ) x1^2 x4^2 + 2 m n x1 x2^3 + ( m^2 + 2 n ) p x1 x2^2 x3 + 3 m n p x1 x2^2 x4 + ( p^2 + 2 q ) m x1 "
    "x2 x3^2 + ( m^2 p^2 + 8 n q ) x1 x2 x3 x4 + ( p^2 + 2 q ) m n x1 x2 x4^2 + 2 p q x1 x3^3 + 3 m p q "
    "x1 x3^2 x4 + ( m^2 + 2 n ) p q x1 x3 x4^2 + m n p q x1 x4^3 + n^2 x2^4 + m n p x2^3 x3 + 2 n^2 p "
    "x2^3 x4 + ( m^2 q + n p^2 - 2 n q ) x2^2 x3^2 + ( p^2 + 2 q ) m n x2^2 x3 x4 + ( p^2 + 2 q ) n^2 "
    "x2^2 x4^2 + m p q x2 x3^3 + ( m^2 + 2 n ) p q x2 x3^2 x4 + 3 m n p q x2 x3 x4^2 + 2 n^2 p q x2 x4^3 "
    "+ q^2 x3^4 + 2 m q^2 x3^3 x4 + ( m^2 + 2 n ) q^2 x3^2 x4^2 + 2 m n q^2 x3 x4^3 + n^2 q^2 x4^4";

/// Closed-form inverse y(x) on the unit set of the quartic form.
inline constexpr std::array<std::string_view, 4> kQuarticInverse{
    "x1^3 + 2 m x1^2 x2 + 2 p x1^2 x3 + m p x1^2 x4 + ( m^2 + n ) x1 x2^2 + 3 m p x1 x2 x3 + p ( m^2 + 2 "
    "n ) x1 x2 x4 + ( p^2 + q ) x1 x3^2 + m ( p^2 + 2 q ) x1 x3 x4 + ( m^2 q + n p^2 - n q ) x1 x4^2 + m "
    "n x2^3 + m^2 p x2^2 x3 + 2 m n p x2^2 x4 + m p^2 x2 x3^2 + ( m^2 p^2 + 2 n q ) x2 x3 x4 + m n ( p^2 "
    "+ q ) x2 x4^2 + p q x3^3 + 2 m p q x3^2 x4 + p q ( m^2 + n ) x3 x4^2 + m n p q x4^3",
    "- x1^2 x2 - m x1 x2^2 - 2 p x1 x2 x3 - m p x1 x2 x4 - 2 q x1 x3 x4 - m q x1 x4^2 - n x2^3 - m p x2^2 "
    "x3 - 2 n p x2^2 x4 + ( - p^2 + q ) x2 x3^2 - m p^2 x2 x3 x4 - n ( p^2 + q ) x2 x4^2 - p q x3^2 x4 - "
    "m p q x3 x4^2 - n p q x4^3",
    "- x1^2 x3 - 2 m x1 x2 x3 - 2 n x1 x2 x4 - p x1 x3^2 - m p x1 x3 x4 - n p x1 x4^2 + ( - m^2 + n ) "
    "x2^2 x3 - m n x2^2 x4 - m p x2 x3^2 - m^2 p x2 x3 x4 - m n p x2 x4^2 - q x3^3 - 2 m q x3^2 x4 - q ( "
    "m^2 + n ) x3 x4^2 - m n q x4^3",
    "- x1^2 x4 + 2 x1 x2 x3 + m x2^2 x3 + n x2^2 x4 + p x2 x3^2 + m p x2 x3 x4 + n p x2 x4^2 + q x3^2 x4 "
    "+ m q x3 x4^2 + n q x4^3",
};

/// Quartic form at (m, n, p, q) = (5, -23, 2, -7).
inline constexpr std::string_view kQuarticExample =
    "x1^4 + 10 x1^3 x2 + 4 x1^3 x3 + 10 x1^3 x4 - 21 x1^2 x2^2 + 30 x1^2 x2 x3 - 42 x1^2 x2 x4 - 10 x1^2 "
    "x3^2 - 50 x1^2 x3 x4 - 589 x1^2 x4^2 - 230 x1 x2^3 - 42 x1 x2^2 x3 - 690 x1 x2^2 x4 - 50 x1 x2 x3^2 "
    "+ 1388 x1 x2 x3 x4 + 1150 x1 x2 x4^2 - 28 x1 x3^3 - 210 x1 x3^2 x4 + 294 x1 x3 x4^2 + 1610 x1 x4^3 + "
    "529 x2^4 - 230 x2^3 x3 + 2116 x2^3 x4 - 589 x2^2 x3^2 + 1150 x2^2 x3 x4 - 5290 x2^2 x4^2 - 70 x2 "
    "x3^3 + 294 x2 x3^2 x4 + 4830 x2 x3 x4^2 - 14812 x2 x4^3 + 49 x3^4 + 490 x3^3 x4 - 1029 x3^2 x4^2 - "
    "11270 x3 x4^3 + 25921 x4^4";

/// Quartic step: composition with (6, 2, 3, 1), in terms of a11..a14.
inline constexpr std::array<std::string_view, 4> kQuarticUpdate{
    "6 a11 + 46 a12 + 21 a13 + 161 a14",
    "2 a11 + 16 a12 + 7 a13 + 56 a14",
    "3 a11 + 23 a12 + 12 a13 + 92 a14",
    "a11 + 8 a12 + 4 a13 + 32 a14",
};

/// Sextic 6x6 composition map z(x, y).
inline constexpr std::array<std::string_view, 6> kSexticZ{
    "x1 y1 - lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x2 y2 - lambda3 ( lambda2 - lambda4 ) x2 "
    "y3 - lambda3 ( lambda2 - lambda4 ) x3 y2 + ( - lambda1 lambda4 + lambda2^2 - lambda2 lambda5 + "
    "lambda3 lambda4 ) x3 y3 - q x4 y4 + q lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x5 y5 + q "
    "lambda3 ( lambda2 - lambda4 ) x5 y6 + q lambda3 ( lambda2 - lambda4 ) x6 y5 + q ( lambda1 lambda4 - "
    "lambda2^2 + lambda2 lambda5 - lambda3 lambda4 ) x6 y6",
    "x1 y2 + x2 y1 + lambda1 x2 y2 + lambda2 x2 y3 + lambda2 x3 y2 + lambda4 x3 y3 - q x4 y5 - q x5 y4 - "
    "lambda1 q x5 y5 - lambda2 q x5 y6 - lambda2 q x6 y5 - lambda4 q x6 y6",
    "x1 y3 + lambda3 x2 y2 + lambda3 x2 y3 + x3 y1 + lambda3 x3 y2 + lambda5 x3 y3 - q x4 y6 - q lambda3 "
    "x5 y5 - q lambda3 x5 y6 - q x6 y4 - q lambda3 x6 y5 - lambda5 q x6 y6",
    "x1 y4 - lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x2 y5 - lambda3 ( lambda2 - lambda4 ) x2 "
    "y6 - lambda3 ( lambda2 - lambda4 ) x3 y5 + ( - lambda1 lambda4 + lambda2^2 - lambda2 lambda5 + "
    "lambda3 lambda4 ) x3 y6 + x4 y1 + p x4 y4 - lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) x5 y2 "
    "- lambda3 ( lambda2 - lambda4 ) x5 y3 - lambda3 ( lambda1 - lambda2 - lambda3 + lambda5 ) p x5 y5 - "
    "lambda3 ( lambda2 - lambda4 ) p x5 y6 - lambda3 ( lambda2 - lambda4 ) x6 y2 + ( - lambda1 lambda4 + "
    "lambda2^2 - lambda2 lambda5 + lambda3 lambda4 ) x6 y3 - lambda3 ( lambda2 - lambda4 ) p x6 y5 - p ( "
    "lambda1 lambda4 - lambda2^2 + lambda2 lambda5 - lambda3 lambda4 ) x6 y6",
    "x1 y5 + x2 y4 + lambda1 x2 y5 + lambda2 x2 y6 + lambda2 x3 y5 + lambda4 x3 y6 + x4 y2 + p x4 y5 + x5 "
    "y1 + lambda1 x5 y2 + lambda2 x5 y3 + p x5 y4 + lambda1 p x5 y5 + lambda2 p x5 y6 + lambda2 x6 y2 + "
    "lambda4 x6 y3 + lambda2 p x6 y5 + lambda4 p x6 y6",
    "x1 y6 + lambda3 x2 y5 + lambda3 x2 y6 + x3 y4 + lambda3 x3 y5 + lambda5 x3 y6 + x4 y3 + p x4 y6 + "
    "lambda3 x5 y2 + lambda3 x5 y3 + lambda3 p x5 y5 + lambda3 p x5 y6 + x6 y1 + lambda3 x6 y2 + lambda5 "
    "x6 y3 + p x6 y4 + lambda3 p x6 y5 + lambda5 p x6 y6",
};

/// Circulant sextic 6x6 structure with parameter q. Row-major, order 6.
inline constexpr std::array<std::string_view, 36> kCirculantMatrix{
    "x1", "x2", "x3", "x4", "x5", "x6",
    "x3", "x1", "x2", "x6", "x4", "x5",
    "x2", "x3", "x1", "x5", "x6", "x4",
    "q x4", "q x5", "q x6", "x1", "x2", "x3",
    "q x6", "q x4", "q x5", "x3", "x1", "x2",
    "q x5", "q x6", "q x4", "x2", "x3", "x1",
};

/// Factors f1, f2 of the circulant sextic form.
inline constexpr std::array<std::string_view, 2> kCirculantFactors{
    "( x1 + x2 + x3 )^2 - q ( x4 + x5 + x6 )^2",
    "x1^4 - ( 2 x2 + 2 x3 ) x1^3 + ( 3 x2^2 + 3 x3^2 - 2 q x4^2 + 2 q x4 x5 + 2 q x4 x6 + q x5^2 - 4 q x5 "
    "x6 + q x6^2 ) x1^2 + ( - 2 x2^3 + 2 q x2 x4^2 - 8 q x2 x4 x5 + 4 q x2 x4 x6 + 2 q x2 x5^2 + 4 q x2 "
    "x5 x6 - 4 q x2 x6^2 - 2 x3^3 + 2 q x3 x4^2 + 4 q x3 x4 x5 - 8 q x3 x4 x6 - 4 q x3 x5^2 + 4 q x3 x5 "
    "x6 + 2 q x3 x6^2 ) x1 + x2^4 - 2 x2^3 x3 + 3 x2^2 x3^2 + q x2^2 x4^2 + 2 q x2^2 x4 x5 - 4 q x2^2 x4 "
    "x6 - 2 q x2^2 x5^2 + 2 q x2^2 x5 x6 + q x2^2 x6^2 - 2 x2 x3^3 - 4 q x2 x3 x4^2 + 4 q x2 x3 x4 x5 + 4 "
    "q x2 x3 x4 x6 + 2 q x2 x3 x5^2 - 8 q x2 x3 x5 x6 + 2 q x2 x3 x6^2 + x3^4 + q x3^2 x4^2 - 4 q x3^2 x4 "
    "x5 + 2 q x3^2 x4 x6 + q x3^2 x5^2 + 2 q x3^2 x5 x6 - 2 q x3^2 x6^2 + q^2 x4^4 - 2 q^2 x4^3 x5 - 2 "
    "q^2 x4^3 x6 + 3 q^2 x4^2 x5^2 + 3 q^2 x4^2 x6^2 - 2 q^2 x4 x5^3 - 2 q^2 x4 x6^3 + q^2 x5^4 - 2 q^2 "
    "x5^3 x6 + 3 q^2 x5^2 x6^2 - 2 q^2 x5 x6^3 + q^2 x6^4",
};

/// Shared composition map of the circulant factors.
inline constexpr std::array<std::string_view, 6> kCirculantZ{
    "x1 y1 + x2 y3 + x3 y2 + q x4 y4 + q x5 y6 + q x6 y5",
    "x1 y2 + x2 y1 + x3 y3 + q x4 y5 + q x5 y4 + q x6 y6",
    "x1 y3 + x2 y2 + x3 y1 + q x4 y6 + q x5 y5 + q x6 y4",
    "x1 y4 + x2 y6 + x3 y5 + x4 y1 + x5 y3 + x6 y2",
    "x1 y5 + x2 y4 + x3 y6 + x4 y2 + x5 y1 + x6 y3",
    "x1 y6 + x2 y5 + x3 y4 + x4 y3 + x5 y2 + x6 y1",
};

/// Forms f1, f2 in u1..u6 with parameter q.
inline constexpr std::array<std::string_view, 2> kUvForms{
    "u1^2 - q u2^2",
    "u1^4 - ( 6 u3 + 6 u6 ) u1^3 + ( q u2^2 - 6 q u2 u5 + 15 u3^2 + 24 u3 u6 - 3 q u4^2 + 6 q u4 u5 + 6 q "
    "u5^2 + 15 u6^2 ) u1^2 + ( - 6 q u2^2 u6 - 12 q u2 u3 u4 + 12 q u2 u3 u5 + 12 q u2 u4 u6 + 24 q u2 u5 "
    "u6 - 18 u3^3 - 36 u3^2 u6 + 18 q u3 u4^2 - 18 q u3 u5^2 - 36 u3 u6^2 - 36 q u4 u5 u6 - 18 q u5^2 u6 "
    "- 18 u6^3 ) u1 + q^2 u2^4 - 6 q^2 u2^3 u4 - 6 q^2 u2^3 u5 + 15 q^2 u2^2 u4^2 + 24 q^2 u2^2 u4 u5 + "
    "15 q^2 u2^2 u5^2 - 18 q^2 u2 u4^3 - 36 q^2 u2 u4^2 u5 - 36 q^2 u2 u4 u5^2 - 18 q^2 u2 u5^3 + 9 q^2 "
    "u4^4 + 18 q^2 u4^3 u5 + 27 q^2 u4^2 u5^2 + 18 q^2 u4 u5^3 + 9 q^2 u5^4 - 3 q u2^2 u3^2 + 6 q u2^2 u3 "
    "u6 + 6 q u2^2 u6^2 + 18 q u2 u3^2 u4 - 36 q u2 u3 u5 u6 - 18 q u2 u4 u6^2 - 18 q u2 u5 u6^2 - 18 q "
    "u3^2 u4^2 - 18 q u3^2 u4 u5 + 9 q u3^2 u5^2 - 18 q u3 u4^2 u6 + 36 q u3 u4 u5 u6 + 36 q u3 u5^2 u6 + "
    "9 q u4^2 u6^2 + 36 q u4 u5 u6^2 + 9 q u5^2 u6^2 + 9 u3^4 + 18 u3^3 u6 + 27 u3^2 u6^2 + 18 u3 u6^3 + "
    "9 u6^4",
};

/// Simultaneous composition map w(u, v) of the u-forms.
inline constexpr std::array<std::string_view, 6> kUvW{
    "u1 v1 + q u2 v2",
    "u1 v2 + u2 v1",
    "u1 v3 + q u2 v4 + u3 v1 - 2 u3 v3 - u3 v6 + q u4 v2 - 2 q u4 v4 - q u4 v5 - q u5 v4 + q u5 v5 - u6 "
    "v3 + u6 v6",
    "u1 v4 + u2 v6 - u3 v4 + u3 v5 + u4 v1 - u4 v3 - 2 u4 v6 + u5 v3 - u5 v6 + u6 v2 - 2 u6 v4 - u6 v5",
    "u1 v5 + u2 v3 + u3 v2 - u3 v4 - 2 u3 v5 - u4 v3 + u4 v6 + u5 v1 - 2 u5 v3 - u5 v6 + u6 v4 - u6 v5",
    "u1 v6 + q u2 v2 - q u2 v4 - q u2 v5 + u3 v3 - u3 v6 - q u4 v2 + q u4 v4 + 2 q u4 v5 - q u5 v2 + 2 q "
    "u5 v4 + q u5 v5 + u6 v1 - u6 v3 - 2 u6 v6",
};

/// The u-form f2 at q = 3.
inline constexpr std::string_view kUvQuarticExample =
    "u1^4 - 6 u1^3 u3 - 6 u1^3 u6 + 3 u1^2 u2^2 - 18 u1^2 u2 u5 + 15 u1^2 u3^2 + 24 u1^2 u3 u6 - 9 u1^2 "
    "u4^2 + 18 u1^2 u4 u5 + 18 u1^2 u5^2 + 15 u1^2 u6^2 - 18 u1 u2^2 u6 - 36 u1 u2 u3 u4 + 36 u1 u2 u3 u5 "
    "+ 36 u1 u2 u4 u6 + 72 u1 u2 u5 u6 - 18 u1 u3^3 - 36 u1 u3^2 u6 + 54 u1 u3 u4^2 - 54 u1 u3 u5^2 - 36 "
    "u1 u3 u6^2 - 108 u1 u4 u5 u6 - 54 u1 u5^2 u6 - 18 u1 u6^3 + 9 u2^4 - 54 u2^3 u4 - 54 u2^3 u5 - 9 "
    "u2^2 u3^2 + 18 u2^2 u3 u6 + 135 u2^2 u4^2 + 216 u2^2 u4 u5 + 135 u2^2 u5^2 + 18 u2^2 u6^2 + 54 u2 "
    "u3^2 u4 - 108 u2 u3 u5 u6 - 162 u2 u4^3 - 324 u2 u4^2 u5 - 324 u2 u4 u5^2 - 54 u2 u4 u6^2 - 162 u2 "
    "u5^3 - 54 u2 u5 u6^2 + 9 u3^4 + 18 u3^3 u6 - 54 u3^2 u4^2 - 54 u3^2 u4 u5 + 27 u3^2 u5^2 + 27 u3^2 "
    "u6^2 - 54 u3 u4^2 u6 + 108 u3 u4 u5 u6 + 108 u3 u5^2 u6 + 18 u3 u6^3 + 81 u4^4 + 162 u4^3 u5 + 243 "
    "u4^2 u5^2 + 27 u4^2 u6^2 + 162 u4 u5^3 + 108 u4 u5 u6^2 + 81 u5^4 + 27 u5^2 u6^2 + 9 u6^4";

/// Sextic system step: composition with (2, 1, 3, -1, 3, -4), in a11..a16.
inline constexpr std::array<std::string_view, 6> kUvUpdate{
    "2 a11 + 3 a12",
    "a11 + 2 a12",
    "3 a11 - 3 a12 + 12 a15 - 7 a16",
    "- a11 - 4 a12 + 4 a13 + 7 a14 + 7 a15",
    "3 a11 + 3 a12 - 4 a13 - 7 a14 - 4 a16",
    "- 4 a11 - 3 a12 + 7 a13 + 12 a14 + 7 a16",
};

/// Octic composition map z(x, y).
inline constexpr std::array<std::string_view, 8> kOcticZ{
    "x1 y1 - n x2 y2 - q x3 y3 + q n x4 y4 - s x5 y5 + s n x6 y6 + s q x7 y7 - s q n x8 y8",
    "x1 y2 + x2 y1 + m x2 y2 - q x3 y4 - q x4 y3 - q m x4 y4 - s x5 y6 - s x6 y5 - s m x6 y6 + s q x7 y8 "
    "+ s q x8 y7 + s q m x8 y8",
    "x1 y3 - n x2 y4 + x3 y1 + p x3 y3 - n x4 y2 - n p x4 y4 - s x5 y7 + s n x6 y8 - s x7 y5 - s p x7 y7 "
    "+ s n x8 y6 + s n p x8 y8",
    "x1 y4 + x2 y3 + m x2 y4 + x3 y2 + p x3 y4 + x4 y1 + m x4 y2 + p x4 y3 + p m x4 y4 - s x5 y8 - s x6 "
    "y7 - s m x6 y8 - s x7 y6 - s p x7 y8 - s x8 y5 - s m x8 y6 - s p x8 y7 - s p m x8 y8",
    "x1 y5 - n x2 y6 - q x3 y7 + q n x4 y8 + x5 y1 + r x5 y5 - n x6 y2 - n r x6 y6 - q x7 y3 - q r x7 y7 "
    "+ q n x8 y4 + n q r x8 y8",
    "x1 y6 + x2 y5 + m x2 y6 - q x3 y8 - q x4 y7 - q m x4 y8 + x5 y2 + r x5 y6 + x6 y1 + m x6 y2 + r x6 "
    "y5 + r m x6 y6 - q x7 y4 - q r x7 y8 - q x8 y3 - q m x8 y4 - q r x8 y7 - q r m x8 y8",
    "x1 y7 - n x2 y8 + x3 y5 + p x3 y7 - n x4 y6 - n p x4 y8 + x5 y3 + r x5 y7 - n x6 y4 - n r x6 y8 + x7 "
    "y1 + p x7 y3 + r x7 y5 + r p x7 y7 - n x8 y2 - n p x8 y4 - n r x8 y6 - r n p x8 y8",
    "x1 y8 + x2 y7 + m x2 y8 + x3 y6 + p x3 y8 + x4 y5 + m x4 y6 + p x4 y7 + p m x4 y8 + x5 y4 + r x5 y8 "
    "+ x6 y3 + m x6 y4 + r x6 y7 + r m x6 y8 + x7 y2 + p x7 y4 + r x7 y6 + r p x7 y8 + x8 y1 + m x8 y2 + "
    "p x8 y3 + p m x8 y4 + r x8 y5 + r m x8 y6 + r p x8 y7 + r p m x8 y8",
};

/// Octic step: composition with (4, 2, 2, 1, 14, 7, 8, 4), in a1..a8.
inline constexpr std::array<std::string_view, 8> kOcticUpdate{
    "4 a1 + 10 a2 + 6 a3 + 15 a4 + 196 a5 + 490 a6 + 336 a7 + 840 a8",
    "2 a1 + 4 a2 + 3 a3 + 6 a4 + 98 a5 + 196 a6 + 168 a7 + 336 a8",
    "2 a1 + 5 a2 + 4 a3 + 10 a4 + 112 a5 + 280 a6 + 196 a7 + 490 a8",
    "a1 + 2 a2 + 2 a3 + 4 a4 + 56 a5 + 112 a6 + 98 a7 + 196 a8",
    "14 a1 + 35 a2 + 24 a3 + 60 a4 + 4 a5 + 10 a6 + 6 a7 + 15 a8",
    "7 a1 + 14 a2 + 12 a3 + 24 a4 + 2 a5 + 4 a6 + 3 a7 + 6 a8",
    "8 a1 + 20 a2 + 14 a3 + 35 a4 + 2 a5 + 5 a6 + 4 a7 + 10 a8",
    "4 a1 + 8 a2 + 7 a3 + 14 a4 + a5 + 2 a6 + 2 a7 + 4 a8",
};

/// Trilinear phi1, phi2 for Q = a x1^2 + b x1 x2 + c x2^2.
inline constexpr std::array<std::string_view, 2> kTripleQuadPhi{
    "a x1 y1 z1 + b x1 y2 z1 + c x1 y2 z2 - c x2 y1 z2 + c x2 y2 z1",
    "a x1 y1 z2 - a x1 y2 z1 + a x2 y1 z1 + b x2 y1 z2 + c x2 y2 z2",
};

/// Trace-free 2x2 structure with parameters t, b, c. Row-major, order 2.
inline constexpr std::array<std::string_view, 4> kTripleQuadMatrix{
    "t x1", "x2",
    "b x1 + c x2", "- t x1",
};

/// Triple product map w(x, y, z) of that structure.
inline constexpr std::array<std::string_view, 2> kTripleQuadW{
    "t^2 x1 y1 z1 + b x1 y2 z1 + c x1 y2 z2 - c x2 y1 z2 + c x2 y2 z1",
    "t^2 x1 y1 z2 - t^2 x1 y2 z1 + t^2 x2 y1 z1 + b x2 y1 z2 + c x2 y2 z2",
};

/// Expanded three-fold quartic form, parameters m, n, p, q, s, t.
inline constexpr std::string_view kTripleQuarticForm =
    "s^4 t^4 x1^4 + 2 s^2 t^4 m x1^3 x2 + 2 s^4 t^2 p x1^3 x3 + s^2 t^2 m p x1^3 x4 + ( m^2 + 2 s^2 n ) "
    "t^4 x1^2 x2^2 + 3 s^2 t^2 m p x1^2 x2 x3 + ( m^2 + 2 s^2 n ) t^2 p x1^2 x2 x4 + ( p^2 + 2 t^2 q ) "
    "s^4 x1^2 x3^2 + ( p^2 + 2 t^2 q ) s^2 m x1^2 x3 x4 + ( s^2 n p^2 + t^2 m^2 q - 2 s^2 t^2 n q ) x1^2 "
    "x4^2 + 2 t^4 m n x1 x2^3 + ( m^2 + 2 s^2 n ) t^2 p x1 x2^2 x3 + 3 t^2 m n p x1 x2^2 x4 + ( p^2 + 2 "
    "t^2 q ) s^2 m x1 x2 x3^2 + ( m^2 p^2 + 8 s^2 t^2 n q ) x1 x2 x3 x4 + ( p^2 + 2 t^2 q ) m n x1 x2 "
    "x4^2 + 2 s^4 p q x1 x3^3 + 3 s^2 m p q x1 x3^2 x4 + ( m^2 + 2 s^2 n ) p q x1 x3 x4^2 + m n p q x1 "
    "x4^3 + t^4 n^2 x2^4 + t^2 m n p x2^3 x3 + 2 t^2 n^2 p x2^3 x4 + ( s^2 n p^2 + t^2 m^2 q - 2 s^2 t^2 "
    "n q ) x2^2 x3^2 + ( p^2 + 2 t^2 q ) m n x2^2 x3 x4 + ( p^2 + 2 t^2 q ) n^2 x2^2 x4^2 + s^2 m p q x2 "
    "x3^3 + ( m^2 + 2 s^2 n ) p q x2 x3^2 x4 + 3 m n p q x2 x3 x4^2 + 2 n^2 p q x2 x4^3 + s^4 q^2 x3^4 + "
    "2 s^2 m q^2 x3^3 x4 + ( m^2 + 2 s^2 n ) q^2 x3^2 x4^2 + 2 m n q^2 x3 x4^3 + n^2 q^2 x4^4";

/// Three-fold quartic map w(x, y, z).
inline constexpr std::array<std::string_view, 4> kTripleQuarticW{
    "s^2 t^2 x1 y1 z1 + m t^2 x1 y2 z1 + n t^2 x1 y2 z2 - n t^2 x2 y1 z2 + n t^2 x2 y2 z1 + p s^2 x1 y3 "
    "z1 + q s^2 x1 y3 z3 - q s^2 x3 y1 z3 + q s^2 x3 y3 z1 + m p x1 y4 z1 + m q x1 y4 z3 - m q x3 y2 z3 + "
    "m q x3 y4 z1 + n p x1 y4 z2 - n p x2 y3 z2 + n p x2 y4 z1 + n q x1 y4 z4 - n q x2 y3 z4 + n q x2 y4 "
    "z3 - n q x3 y2 z4 + n q x3 y4 z2 + n q x4 y1 z4 - n q x4 y2 z3 - n q x4 y3 z2 + n q x4 y4 z1",
    "s^2 t^2 x1 y1 z2 - s^2 t^2 x1 y2 z1 + s^2 t^2 x2 y1 z1 + m t^2 x2 y1 z2 + n t^2 x2 y2 z2 + p s^2 x1 "
    "y3 z2 - p s^2 x1 y4 z1 + p s^2 x2 y3 z1 + q s^2 x1 y3 z4 - q s^2 x1 y4 z3 + q s^2 x2 y3 z3 - q s^2 "
    "x3 y1 z4 + q s^2 x3 y2 z3 + q s^2 x3 y3 z2 - q s^2 x3 y4 z1 - q s^2 x4 y1 z3 + q s^2 x4 y3 z1 + m p "
    "x2 y3 z2 + m q x2 y3 z4 - m q x4 y1 z4 + m q x4 y3 z2 + n p x2 y4 z2 + n q x2 y4 z4 - n q x4 y2 z4 + "
    "n q x4 y4 z2",
    "s^2 t^2 x1 y1 z3 - s^2 t^2 x1 y3 z1 + s^2 t^2 x3 y1 z1 + m t^2 x1 y2 z3 - m t^2 x1 y4 z1 + m t^2 x3 "
    "y2 z1 + n t^2 x1 y2 z4 - n t^2 x1 y4 z2 - n t^2 x2 y1 z4 + n t^2 x2 y2 z3 + n t^2 x2 y3 z2 - n t^2 "
    "x2 y4 z1 + n t^2 x3 y2 z2 - n t^2 x4 y1 z2 + n t^2 x4 y2 z1 + p s^2 x3 y1 z3 + q s^2 x3 y3 z3 + m p "
    "x3 y2 z3 + m q x3 y4 z3 + n p x3 y2 z4 - n p x4 y1 z4 + n p x4 y2 z3 + n q x3 y4 z4 - n q x4 y3 z4 + "
    "n q x4 y4 z3",
    "s^2 t^2 x1 y1 z4 - s^2 t^2 x1 y2 z3 - s^2 t^2 x1 y3 z2 + s^2 t^2 x1 y4 z1 + s^2 t^2 x2 y1 z3 - s^2 "
    "t^2 x2 y3 z1 + s^2 t^2 x3 y1 z2 - s^2 t^2 x3 y2 z1 + s^2 t^2 x4 y1 z1 + m t^2 x2 y1 z4 - m t^2 x2 y3 "
    "z2 + m t^2 x4 y1 z2 + n t^2 x2 y2 z4 - n t^2 x2 y4 z2 + n t^2 x4 y2 z2 + p s^2 x3 y1 z4 - p s^2 x3 "
    "y2 z3 + p s^2 x4 y1 z3 + q s^2 x3 y3 z4 - q s^2 x3 y4 z3 + q s^2 x4 y3 z3 + m p x4 y1 z4 + m q x4 y3 "
    "z4 + n p x4 y2 z4 + n q x4 y4 z4",
};

/// Three-fold quartic at (m, n, p, q, s, t) = (-1, -4, 1, -1, 1, 1).
inline constexpr std::string_view kTripleQuarticExample =
    "x1^4 - 2 x1^3 x2 + 2 x1^3 x3 - x1^3 x4 - 7 x1^2 x2^2 - 3 x1^2 x2 x3 - 7 x1^2 x2 x4 - x1^2 x3^2 + "
    "x1^2 x3 x4 - 13 x1^2 x4^2 + 8 x1 x2^3 - 7 x1 x2^2 x3 + 12 x1 x2^2 x4 + x1 x2 x3^2 + 33 x1 x2 x3 x4 - "
    "4 x1 x2 x4^2 - 2 x1 x3^3 + 3 x1 x3^2 x4 + 7 x1 x3 x4^2 - 4 x1 x4^3 + 16 x2^4 + 4 x2^3 x3 + 32 x2^3 "
    "x4 - 13 x2^2 x3^2 - 4 x2^2 x3 x4 - 16 x2^2 x4^2 + x2 x3^3 + 7 x2 x3^2 x4 - 12 x2 x3 x4^2 - 32 x2 "
    "x4^3 + x3^4 - 2 x3^3 x4 - 7 x3^2 x4^2 + 8 x3 x4^3 + 16 x4^4";

/// Three-fold quartic step (current, e, (21, 8, 33, 13)), in a11..a14.
inline constexpr std::array<std::string_view, 4> kTripleQuarticUpdate{
    "21 a11 + 32 a12 + 33 a13 + 52 a14",
    "8 a11 + 13 a12 + 13 a13 + 20 a14",
    "33 a11 + 52 a12 + 54 a13 + 84 a14",
    "13 a11 + 20 a12 + 21 a13 + 33 a14",
};

/// Inner 4x4 of the three-fold octic, parameters m, n, p, q, t. Row-major, order 4.
inline constexpr std::array<std::string_view, 16> kTripleOcticInner{
    "t x1", "x2", "t x3", "x4",
    "m x1 + n x2", "- t x1", "m x3 + n x4", "- t x3",
    "- q t x3", "- q x4", "t x1 + p t x3", "x2 + p x4",
    "- q ( m x3 + n x4 )", "q t x3", "m x1 + n x2 + p ( m x3 + n x4 )", "- t x1 - p t x3",
};

/// Three-fold octic matrix at (m, n, p, q, r, s, t) = (3, -1, 0, -3, 0, -14, 1). Row-major, order 8.
inline constexpr std::array<std::string_view, 64> kTripleOcticExampleMatrix{
    "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8",
    "3 x1 - x2", "- x1", "3 x3 - x4", "- x3", "3 x5 - x6", "- x5", "3 x7 - x8", "- x7",
    "3 x3", "3 x4", "x1", "x2", "3 x7", "3 x8", "x5", "x6",
    "9 x3 - 3 x4", "- 3 x3", "3 x1 - x2", "- x1", "9 x7 - 3 x8", "- 3 x7", "3 x5 - x6", "- x5",
    "14 x5", "14 x6", "14 x7", "14 x8", "x1", "x2", "x3", "x4",
    "42 x5 - 14 x6", "- 14 x5", "42 x7 - 14 x8", "- 14 x7", "3 x1 - x2", "- x1", "3 x3 - x4", "- x3",
    "42 x7", "42 x8", "14 x5", "14 x6", "3 x3", "3 x4", "x1", "x2",
    "126 x7 - 42 x8", "- 42 x7", "42 x5 - 14 x6", "- 14 x5", "9 x3 - 3 x4", "- 3 x3", "3 x1 - x2", "- x1",
};

/// Three-fold octic step (current, e, (2, 6, 1, 3, 7, 21, 4, 12)), in a11..a18.
inline constexpr std::array<std::string_view, 8> kTripleOcticUpdate{
    "2 a11 + 6 a12 + 3 a13 + 9 a14 + 98 a15 + 294 a16 + 168 a17 + 504 a18",
    "6 a11 + 20 a12 + 9 a13 + 30 a14 + 294 a15 + 980 a16 + 504 a17 + 1680 a18",
    "a11 + 3 a12 + 2 a13 + 6 a14 + 56 a15 + 168 a16 + 98 a17 + 294 a18",
    "3 a11 + 10 a12 + 6 a13 + 20 a14 + 168 a15 + 560 a16 + 294 a17 + 980 a18",
    "7 a11 + 21 a12 + 12 a13 + 36 a14 + 2 a15 + 6 a16 + 3 a17 + 9 a18",
    "21 a11 + 70 a12 + 36 a13 + 120 a14 + 6 a15 + 20 a16 + 9 a17 + 30 a18",
    "4 a11 + 12 a12 + 7 a13 + 21 a14 + a15 + 3 a16 + 2 a17 + 6 a18",
    "12 a11 + 40 a12 + 21 a13 + 70 a14 + 3 a15 + 10 a16 + 6 a17 + 20 a18",
};

}  // namespace compform::reference
