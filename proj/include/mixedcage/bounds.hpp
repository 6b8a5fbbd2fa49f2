#ifndef MIXEDCAGE_BOUNDS_HPP
#define MIXEDCAGE_BOUNDS_HPP

// Order bounds for cages and mixed cages.
//
//   moore_bound(r, g)          classical Moore bound n0[r,g]
//   ahm_bound(r, g)            order of the mixed Moore tree T_{r,g}, a lower
//                              bound on n[1,r;g]
//   mixed_lower_bound(z,r,g)   n[z,g] + ahm_bound(r,g) - g with n[z,g] taken
//                              as z(g-1)+1
//   bounds_report(...)         all of the above plus 4q^2 for the family

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "mixedcage/generators.hpp"

namespace mixedcage {

class BoundsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("bound exceeds 64 bits");
  return a + b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw std::overflow_error("bound exceeds 64 bits");
  return a * b;
}

// sum_{i=0}^{k-1} (r-1)^i
inline std::uint64_t geometric_sum(std::uint64_t r, std::uint64_t k) {
  std::uint64_t sum = 0, term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum = checked_add(sum, term);
    if (i + 1 < k) term = checked_mul(term, r - 1);
  }
  return sum;
}

}  // namespace detail

/// n0[r,g]: g = 2k gives 2 * sum_{i<k} (r-1)^i, g = 2k+1 gives
/// 1 + r * sum_{i<k} (r-1)^i.
inline std::uint64_t moore_bound(std::uint64_t r, std::uint64_t g) {
  if (r < 2 || g < 3)
    throw BoundsError("moore_bound needs r >= 2 and g >= 3");
  const std::uint64_t k = g / 2;
  if (g % 2 == 0) return detail::checked_mul(2, detail::geometric_sum(r, k));
  return detail::checked_add(1,
                             detail::checked_mul(r, detail::geometric_sum(r, k)));
}

/// n_AHM[1,r;g] = 2(1 + sum_{i=1}^{k-1} n0[r,2i+1]), plus n0[r,g] when
/// g = 2k+1 is odd.
inline std::uint64_t ahm_bound(std::uint64_t r, std::uint64_t g) {
  if (r < 2 || g < 4) throw BoundsError("ahm_bound needs r >= 2 and g >= 4");
  const std::uint64_t k = g / 2;
  std::uint64_t inner = 1;
  for (std::uint64_t i = 1; i + 1 <= k; ++i)
    inner = detail::checked_add(inner, moore_bound(r, 2 * i + 1));
  std::uint64_t total = detail::checked_mul(2, inner);
  if (g % 2 == 1) total = detail::checked_add(total, moore_bound(r, g));
  return total;
}

struct MixedLowerBound {
  std::uint64_t value = 0;
  /// Set when n[z,g] = z(g-1)+1 is only conjectured for this z.
  bool assumes_conjecture = false;
};

/// z(g-1) + 1 + ahm_bound(r,g) - g.
inline MixedLowerBound mixed_lower_bound(std::uint64_t z, std::uint64_t r,
                                         std::uint64_t g) {
  if (z < 1) throw BoundsError("mixed_lower_bound needs z >= 1");
  if (r < 2 || g < 4)
    throw BoundsError("mixed_lower_bound needs r >= 2 and g >= 4");
  const std::uint64_t digraph =
      detail::checked_add(detail::checked_mul(z, g - 1), 1);
  const std::uint64_t value = detail::checked_add(digraph, ahm_bound(r, g)) - g;
  return {value, z >= 5};
}

struct BoundsReport {
  std::uint64_t z = 0, r = 0, g = 0;
  std::uint64_t moore = 0;
  std::uint64_t ahm = 0;
  MixedLowerBound mixed_lower;
  /// 4q^2, present only when a matching family member exists.
  std::optional<std::uint64_t> family_upper;
};

/// When q is given, (z, r, g) must be the parameters of gen_family(q).
inline BoundsReport bounds_report(std::uint64_t z, std::uint64_t r,
                                  std::uint64_t g,
                                  std::optional<std::uint32_t> q = std::nullopt) {
  BoundsReport rep;
  rep.z = z;
  rep.r = r;
  rep.g = g;
  rep.moore = moore_bound(r, g);
  rep.ahm = ahm_bound(r, g);
  rep.mixed_lower = mixed_lower_bound(z, r, g);
  if (q) {
    FamilyParams fp;
    try {
      fp = family_params(*q);
    } catch (const GeneratorError& e) {
      throw BoundsError(e.what());
    }
    if (fp.z != z || fp.r != r || g != 6)
      throw BoundsError("q = " + std::to_string(*q) +
                        " gives a [" + std::to_string(fp.z) + "," +
                        std::to_string(fp.r) + ";6] family, not [" +
                        std::to_string(z) + "," + std::to_string(r) + ";" +
                        std::to_string(g) + "]");
    rep.family_upper = 4ULL * *q * *q;
  }
  return rep;
}

}  // namespace mixedcage

#endif  // MIXEDCAGE_BOUNDS_HPP
