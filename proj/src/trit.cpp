#include "btlogic/trit.hpp"

namespace bt {

Trit tmin_n(std::span<const Trit> xs) {
  if (xs.empty())
    throw arity_error("tmin of an empty input list");
  Trit r = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    r = tmin(r, xs[i]);
  return r;
}

Trit tmax_n(std::span<const Trit> xs) {
  if (xs.empty())
    throw arity_error("tmax of an empty input list");
  Trit r = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i)
    r = tmax(r, xs[i]);
  return r;
}

std::optional<Trit> parse_trit(std::string_view s) noexcept {
  if (s == "-1" || s == "N" || s == "n") return Trit::N;
  if (s == "0" || s == "Z" || s == "z") return Trit::Z;
  if (s == "1" || s == "+1" || s == "P" || s == "p") return Trit::P;
  return std::nullopt;
}

std::int64_t word_max(int width) {
  if (width < 0 || width > 39)
    throw range_error("unsupported word width " + std::to_string(width));
  std::int64_t p = 1;
  for (int i = 0; i < width; ++i)
    p *= 3;
  return (p - 1) / 2;
}

std::int64_t word_to_int(const BalancedWord& w) {
  std::int64_t value = 0;
  std::int64_t weight = 1;
  for (Trit t : w.trits) {
    value += weight * to_int(t);
    weight *= 3;
  }
  return value;
}

BalancedWord int_to_word(std::int64_t n, int width) {
  if (std::llabs(n) > word_max(width))
    throw range_error(std::to_string(n) + " does not fit in " + std::to_string(width) +
                      " balanced trits");
  BalancedWord w;
  w.trits.reserve(static_cast<std::size_t>(width));
  std::int64_t rest = n;
  for (int i = 0; i < width; ++i) {
    // Truncated division remainder is in {-2..2}; fold it into a balanced digit.
    std::int64_t r = rest % 3;
    rest /= 3;
    if (r > 1) {
      r -= 3;
      rest += 1;
    } else if (r < -1) {
      r += 3;
      rest -= 1;
    }
    w.trits.push_back(static_cast<Trit>(r));
  }
  return w;
}

} // namespace bt
