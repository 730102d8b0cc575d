#ifndef RANDIC_SIXTH_ROOT_HPP
#define RANDIC_SIXTH_ROOT_HPP

#include <complex>
#include <numbers>
#include <string_view>

namespace randic {

/// A sixth root of unity e^{i pi k / 3}, stored by its exponent k in [0, 6).
///
/// Gains derived from a mixed graph only ever take the values 1, w and
/// conj(w) with w = (1 + i sqrt 3) / 2 = e^{i pi / 3}, so every product of
/// such gains stays inside this group and can be tracked exactly.
class SixthRoot {
 public:
  constexpr SixthRoot() = default;
  constexpr explicit SixthRoot(int exponent) : k_(((exponent % 6) + 6) % 6) {}

  static constexpr SixthRoot one() { return SixthRoot(0); }
  static constexpr SixthRoot omega() { return SixthRoot(1); }
  static constexpr SixthRoot omega_bar() { return SixthRoot(5); }
  static constexpr SixthRoot minus_one() { return SixthRoot(3); }

  constexpr int exponent() const { return k_; }
  constexpr SixthRoot inverse() const { return SixthRoot(-k_); }
  constexpr SixthRoot operator*(SixthRoot other) const { return SixthRoot(k_ + other.k_); }
  constexpr SixthRoot& operator*=(SixthRoot other) { return *this = *this * other; }
  constexpr SixthRoot operator-() const { return SixthRoot(k_ + 3); }
  constexpr bool operator==(const SixthRoot&) const = default;

  std::complex<double> to_complex() const {
    return std::polar(1.0, std::numbers::pi * k_ / 3.0);
  }

 private:
  int k_ = 0;
};

enum class CycleGainClass { Positive, Negative, SemiPositive, SemiNegative };

/// 1 -> Positive, -1 -> Negative, w or conj(w) -> SemiPositive,
/// -w or -conj(w) -> SemiNegative.
constexpr CycleGainClass classify(SixthRoot g) {
  switch (g.exponent()) {
    case 0: return CycleGainClass::Positive;
    case 3: return CycleGainClass::Negative;
    case 1:
    case 5: return CycleGainClass::SemiPositive;
    default: return CycleGainClass::SemiNegative;  // 2, 4
  }
}

constexpr std::string_view to_string(CycleGainClass c) {
  switch (c) {
    case CycleGainClass::Positive: return "positive";
    case CycleGainClass::Negative: return "negative";
    case CycleGainClass::SemiPositive: return "semi-positive";
    case CycleGainClass::SemiNegative: return "semi-negative";
  }
  return "?";
}

}  // namespace randic

#endif  // RANDIC_SIXTH_ROOT_HPP
