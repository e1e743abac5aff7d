#pragma once

// Reference supports for m = 4, position p = 0..15 left to right.

#include <array>
#include <string_view>

namespace qrm::golden_m4 {

struct Row {
  std::string_view set;
  std::string_view bits;
};

inline constexpr std::array<Row, 16> kVA = {{
    {"{}", "1111111111111111"},
    {"{1}", "0101010101010101"},
    {"{2}", "0011001100110011"},
    {"{3}", "0000111100001111"},
    {"{4}", "0000000011111111"},
    {"{1,2}", "0001000100010001"},
    {"{1,3}", "0000010100000101"},
    {"{1,4}", "0000000001010101"},
    {"{2,3}", "0000001100000011"},
    {"{2,4}", "0000000000110011"},
    {"{3,4}", "0000000000001111"},
    {"{1,2,3}", "0000000100000001"},
    {"{1,2,4}", "0000000000010001"},
    {"{1,3,4}", "0000000000000101"},
    {"{2,3,4}", "0000000000000011"},
    {"{1,2,3,4}", "0000000000000001"},
}};

inline constexpr std::array<Row, 5> kGX = {{
    {"{}", "1111111111111111"},
    {"{1}", "0101010101010101"},
    {"{2}", "0011001100110011"},
    {"{3}", "0000111100001111"},
    {"{4}", "0000000011111111"},
}};

inline constexpr std::array<Row, 5> kGZ = {{
    {"{}", "1111111111111111"},
    {"{1}", "0101010101010101"},
    {"{2}", "0011001100110011"},
    {"{3}", "0000111100001111"},
    {"{4}", "0000000011111111"},
}};

inline constexpr std::array<Row, 6> kLogicalX = {{
    {"{1,2}", "0001000100010001"},
    {"{1,3}", "0000010100000101"},
    {"{1,4}", "0000000001010101"},
    {"{3,4}", "0000000000001111"},
    {"{2,4}", "0000000000110011"},
    {"{2,3}", "0000001100000011"},
}};

inline constexpr std::array<Row, 6> kLogicalZ = {{
    {"{1,2}", "0000000000001111"},
    {"{1,3}", "0000000000110011"},
    {"{1,4}", "0000001100000011"},
    {"{3,4}", "0001000100010001"},
    {"{2,4}", "0000010100000101"},
    {"{2,3}", "0000000001010101"},
}};

inline constexpr std::array<Row, 5> kHX = {{
    {"{}", "1111111100000000"},
    {"{1}", "0101010101010101"},
    {"{2}", "0011001100110011"},
    {"{3}", "0000111100001111"},
    {"{4}", "0000000011111111"},
}};

inline constexpr std::array<Row, 5> kHZ = {{
    {"{}", "1111111100000000"},
    {"{1}", "0101010101010101"},
    {"{2}", "0011001100110011"},
    {"{3}", "0000111100001111"},
    {"{4}", "0000000011111111"},
}};

struct GateRow {
  std::string_view pairs;  // K as "(i,j) (i,j)"
  std::string_view gates;
};

// Logical action of U_P(Q(K)).
inline constexpr std::array<GateRow, 4> kFoldPhase = {{
    {"", "CZ11(1,4) CZ11(2,5) CZ11(3,6)"},
    {"(1,2)", "CZ11(1,4) CZ11(2,5) CZ11(3,6) CZ00(2,3)"},
    {"(3,4)", "CZ11(1,4) CZ11(2,5) CZ11(3,6) CZ00(2,6)"},
    {"(1,2) (3,4)", "CZ11(1,4) CZ11(2,5) CZ11(3,6) CZ00(2,3) CZ00(2,6) S(2)"},
}};

// Logical action of the product of U_P(Q(L)) over all L in K.
inline constexpr std::array<GateRow, 4> kFoldProduct = {{
    {"", "CZ11(1,4) CZ11(2,5) CZ11(3,6)"},
    {"(1,2)", "CZ00(2,3)"},
    {"(3,4)", "CZ00(2,6)"},
    {"(1,2) (3,4)", "S(2)"},
}};

struct ImageTable {
  std::string_view layer;  // "US" or "UP" followed by the permutation
  std::string_view gates;
  std::array<std::string_view, 12> images;  // X1, Z1, X2, Z2, ..., Z6
};

inline constexpr std::array<ImageTable, 4> kLayerImages = {{
    {"US P(1,2)",
     "SW(2,6) SW(3,5)",
     {"+X1", "+Z1", "+X6", "+Z6", "+X5", "+Z5", "+X4", "+Z4", "+X3", "+Z3", "+X2", "+Z2"}},
    {"UP P(1,2)",
     "CZ11(1,4) CZ00(2,3) CZ00(5,6)",
     {"+X1 Z4", "+Z1", "-X2 Z3", "+Z2", "-X3 Z2", "+Z3", "+X4 Z1", "+Z4", "-X5 Z6", "+Z5", "-X6 Z5", "+Z6"}},
    {"US Q(1,2)",
     "CX(2,6) CX(3,5)",
     {"+X1", "+Z1", "+X2 X6", "+Z2", "+X3 X5", "+Z3", "+X4", "+Z4", "+X5", "+Z5 Z3", "+X6", "+Z6 Z2"}},
    {"UP Q(1,2)",
     "CZ11(1,4) CZ11(2,5) CZ11(3,6) CZ00(2,3)",
     {"+X1 Z4", "+Z1", "-X2 Z3 Z5", "+Z2", "-X3 Z2 Z6", "+Z3", "+X4 Z1", "+Z4", "+X5 Z2", "+Z5", "+X6 Z3", "+Z6"}},
}};

}  // namespace qrm::golden_m4
