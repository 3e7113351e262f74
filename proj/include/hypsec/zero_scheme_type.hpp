#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace hypsec {

/// The five shapes of the zero scheme of a nonzero tangent vector field on P2.
enum class ZeroSchemeType {
  A_ThreeDistinctPoints,
  B_TwoPointsOneDouble,
  C_OneTriplePoint,
  D_LinePlusPoint,
  E_LineEmbeddedPoint,
};

inline constexpr std::array<ZeroSchemeType, 5> kAllZeroSchemeTypes = {
    ZeroSchemeType::A_ThreeDistinctPoints, ZeroSchemeType::B_TwoPointsOneDouble, ZeroSchemeType::C_OneTriplePoint,
    ZeroSchemeType::D_LinePlusPoint, ZeroSchemeType::E_LineEmbeddedPoint};

/// "a" .. "e".
constexpr std::string_view type_letter(ZeroSchemeType t) {
  constexpr std::string_view letters[] = {"a", "b", "c", "d", "e"};
  return letters[static_cast<int>(t)];
}

constexpr int type_index(ZeroSchemeType t) { return static_cast<int>(t); }

constexpr bool has_line(ZeroSchemeType t) {
  return t == ZeroSchemeType::D_LinePlusPoint || t == ZeroSchemeType::E_LineEmbeddedPoint;
}

std::string_view type_description(ZeroSchemeType t);

/// "a".."e" or "inconsistent" for nullopt.
inline std::string type_label(const std::optional<ZeroSchemeType>& t) {
  return t ? std::string(type_letter(*t)) : std::string("inconsistent");
}

}  // namespace hypsec
