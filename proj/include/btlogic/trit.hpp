#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btlogic/errors.hpp"

namespace bt {

/// A balanced ternary digit. The only three values are -1, 0 and +1.
enum class Trit : std::int8_t { N = -1, Z = 0, P = 1 };

constexpr int to_int(Trit t) noexcept { return static_cast<int>(t); }

/// Checked conversion from an integer; anything outside {-1,0,1} is rejected.
inline Trit trit_of(long long v) {
  if (v < -1 || v > 1)
    throw range_error("not a balanced ternary value: " + std::to_string(v));
  return static_cast<Trit>(v);
}

constexpr Trit tmin(Trit a, Trit b) noexcept { return to_int(a) <= to_int(b) ? a : b; }
constexpr Trit tmax(Trit a, Trit b) noexcept { return to_int(a) >= to_int(b) ? a : b; }

/// n-ary min/max, defined by folding the binary operation.
Trit tmin_n(std::span<const Trit> xs);
Trit tmax_n(std::span<const Trit> xs);

/// Standard ternary inverter: -1|0|1 -> 1|0|-1.
constexpr Trit sti(Trit a) noexcept { return static_cast<Trit>(-to_int(a)); }
/// Positive ternary inverter: -1|0|1 -> 1|1|-1.
constexpr Trit pti(Trit a) noexcept { return a == Trit::P ? Trit::N : Trit::P; }
/// Negative ternary inverter: -1|0|1 -> 1|-1|-1.
constexpr Trit nti(Trit a) noexcept { return a == Trit::N ? Trit::P : Trit::N; }

inline const char* trit_name(Trit t) noexcept {
  switch (t) {
  case Trit::N: return "-1";
  case Trit::Z: return "0";
  default: return "1";
  }
}

/// Parses "-1" / "0" / "1" and the letter forms "N" / "Z" / "P" (and "+1").
std::optional<Trit> parse_trit(std::string_view s) noexcept;

/// Symmetric three-level voltage mapping: -1 -> -vdd, 0 -> 0, +1 -> +vdd.
class LevelMap {
public:
  explicit LevelMap(double vdd = 1.0) : vdd_(vdd) {
    if (!(vdd > 0.0))
      throw range_error("vdd must be positive");
  }

  double vdd() const noexcept { return vdd_; }

  double to_voltage(Trit t) const noexcept { return vdd_ * to_int(t); }

  /// Quantizer with thresholds at +-vdd/2; |v| == vdd/2 reads as 0.
  Trit to_trit(double v) const {
    if (!std::isfinite(v))
      throw range_error("cannot quantize a non-finite voltage");
    if (v < -vdd_ / 2.0) return Trit::N;
    if (v > vdd_ / 2.0) return Trit::P;
    return Trit::Z;
  }

private:
  double vdd_;
};

/// Balanced ternary word, least significant trit first.
struct BalancedWord {
  std::vector<Trit> trits;

  int width() const noexcept { return static_cast<int>(trits.size()); }
};

/// Largest magnitude representable in `width` trits: (3^width - 1) / 2.
std::int64_t word_max(int width);

std::int64_t word_to_int(const BalancedWord& w);

/// Unique balanced ternary encoding of n; |n| must fit in `width` trits.
BalancedWord int_to_word(std::int64_t n, int width);

} // namespace bt
