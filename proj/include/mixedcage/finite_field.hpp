#ifndef MIXEDCAGE_FINITE_FIELD_HPP
#define MIXEDCAGE_FINITE_FIELD_HPP

// Arithmetic over F_q for q prime (integers mod q) and q = 4.
//
// GF(4) is encoded as 0 -> 0, 1 -> 1, a -> 2, a^2 -> 3, where a is a root of
// x^2 + x + 1 over GF(2); addition and multiplication go through fixed tables.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixedcage {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True for every field order this library can do arithmetic in.
constexpr bool is_supported_field_order(std::uint32_t q) {
  return q == 4 || is_prime(q);
}

namespace detail {

// Rows/columns indexed by the encoding above.
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kGf4Add{{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kGf4Mul{{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

}  // namespace detail

struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t order = 2;

  friend constexpr auto operator<=>(const FieldElement&,
                                    const FieldElement&) = default;
  friend constexpr bool operator==(const FieldElement&,
                                   const FieldElement&) = default;
};

inline FieldElement make_element(std::uint32_t value, std::uint32_t order) {
  if (!is_supported_field_order(order))
    throw FieldError("unsupported field order " + std::to_string(order));
  if (value >= order)
    throw FieldError("value " + std::to_string(value) +
                     " out of range for field of order " +
                     std::to_string(order));
  return FieldElement{value, order};
}

namespace detail {

inline void require_same_order(const FieldElement& a, const FieldElement& b) {
  if (a.order != b.order)
    throw FieldError("field order mismatch: " + std::to_string(a.order) +
                     " vs " + std::to_string(b.order));
}

}  // namespace detail

inline FieldElement fe_add(FieldElement a, FieldElement b) {
  detail::require_same_order(a, b);
  if (a.order == 4) return {detail::kGf4Add[a.value][b.value], 4};
  return {static_cast<std::uint32_t>(
              (static_cast<std::uint64_t>(a.value) + b.value) % a.order),
          a.order};
}

inline FieldElement fe_mul(FieldElement a, FieldElement b) {
  detail::require_same_order(a, b);
  if (a.order == 4) return {detail::kGf4Mul[a.value][b.value], 4};
  return {static_cast<std::uint32_t>(
              (static_cast<std::uint64_t>(a.value) * b.value) % a.order),
          a.order};
}

inline FieldElement fe_neg(FieldElement a) {
  if (a.order == 4) return a;  // characteristic 2
  return {a.value == 0 ? 0 : a.order - a.value, a.order};
}

inline FieldElement fe_sub(FieldElement a, FieldElement b) {
  return fe_add(a, fe_neg(b));
}

inline FieldElement fe_inv(FieldElement a) {
  if (a.value == 0) throw FieldError("zero has no multiplicative inverse");
  if (a.order == 4) {
    for (std::uint32_t v = 1; v < 4; ++v)
      if (detail::kGf4Mul[a.value][v] == 1) return {v, 4};
  }
  // a^(q-2) by square-and-multiply.
  std::uint64_t result = 1, base = a.value, exp = a.order - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % a.order;
    base = base * base % a.order;
    exp >>= 1;
  }
  return {static_cast<std::uint32_t>(result), a.order};
}

/// All elements of F_q in encoding order.
inline std::vector<FieldElement> field_elements(std::uint32_t q) {
  if (!is_supported_field_order(q))
    throw FieldError("unsupported field order " + std::to_string(q));
  std::vector<FieldElement> out;
  out.reserve(q);
  for (std::uint32_t v = 0; v < q; ++v) out.push_back({v, q});
  return out;
}

/// Renders an element the way labels print it: GF(4) uses 0,1,a,a2.
inline std::string to_string(const FieldElement& e) {
  if (e.order == 4) {
    static constexpr std::array<const char*, 4> names{"0", "1", "a", "a2"};
    return names[e.value];
  }
  return std::to_string(e.value);
}

/// Inverse of to_string for a known field order.
inline FieldElement parse_element(const std::string& text, std::uint32_t q) {
  if (q == 4) {
    if (text == "0") return {0, 4};
    if (text == "1") return {1, 4};
    if (text == "a") return {2, 4};
    if (text == "a2") return {3, 4};
    throw FieldError("'" + text + "' is not an element of GF(4)");
  }
  if (text.empty() || text.size() > 10 ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw FieldError("'" + text + "' is not a field element");
  return make_element(static_cast<std::uint32_t>(std::stoull(text)), q);
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_FINITE_FIELD_HPP
