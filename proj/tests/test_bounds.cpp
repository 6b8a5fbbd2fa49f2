#include <catch2/catch_amalgamated.hpp>

#include "mixedcage/analysis.hpp"
#include "mixedcage/bounds.hpp"
#include "mixedcage/generators.hpp"
#include "support.hpp"

using namespace mixedcage;

TEST_CASE("moore_bound") {
  CHECK(moore_bound(5, 6) == 42);
  CHECK(moore_bound(3, 5) == 10);  // Petersen
  CHECK(moore_bound(3, 6) == 14);  // Heawood
  CHECK(moore_bound(3, 8) == 30);  // Tutte-Coxeter
  for (std::uint64_t r = 2; r <= 9; ++r) CHECK(moore_bound(r, 3) == r + 1);
  for (std::uint64_t r = 2; r <= 9; ++r) CHECK(moore_bound(r, 4) == 2 * r);
  CHECK_THROWS_AS(moore_bound(1, 6), BoundsError);
  CHECK_THROWS_AS(moore_bound(3, 2), BoundsError);
  CHECK_THROWS_AS(moore_bound(1000, 40), std::overflow_error);
}

TEST_CASE("Moore bound at g = 6 is met by projective incidence graphs") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u})
    CHECK(moore_bound(q + 1, 6) == gen_projective_incidence(q).order());
}

TEST_CASE("ahm_bound") {
  CHECK(ahm_bound(5, 6) == 66);
  CHECK(ahm_bound(3, 6) == 30);
  CHECK(ahm_bound(3, 5) == 20);
  CHECK(ahm_bound(3, 4) == 10);
  CHECK_THROWS_AS(ahm_bound(3, 3), BoundsError);
  CHECK_THROWS_AS(ahm_bound(1, 6), BoundsError);
}

TEST_CASE("ahm_bound equals the independent Moore tree count") {
  for (std::uint64_t r = 2; r <= 6; ++r)
    for (std::uint64_t g = 4; g <= 8; ++g) {
      CAPTURE(r, g);
      CHECK(ahm_bound(r, g) == testing::moore_tree_count(r, g));
      CHECK(gen_moore_tree(r, g).order() == ahm_bound(r, g));
    }
}

TEST_CASE("mixed_lower_bound") {
  // 2*5 + 1 + 66 - 6.
  CHECK(mixed_lower_bound(2, 5, 6).value == 71);
  CHECK(mixed_lower_bound(3, 11, 6).value == 16 + ahm_bound(11, 6) - 6);
  for (std::uint64_t r = 2; r <= 6; ++r)
    for (std::uint64_t g = 4; g <= 8; ++g)
      CHECK(mixed_lower_bound(1, r, g).value == ahm_bound(r, g));
  CHECK_FALSE(mixed_lower_bound(4, 3, 6).assumes_conjecture);
  CHECK(mixed_lower_bound(5, 3, 6).assumes_conjecture);
  CHECK_THROWS_AS(mixed_lower_bound(0, 3, 6), BoundsError);
}

TEST_CASE("lower bound witness order equals mixed_lower_bound") {
  for (std::uint64_t z = 1; z <= 3; ++z)
    for (std::uint64_t r = 3; r <= 5; ++r)
      for (std::uint64_t g = 5; g <= 6; ++g) {
        CAPTURE(z, r, g);
        const auto w = gen_lower_bound_witness(z, r, g);
        CHECK(w.order() == mixed_lower_bound(z, r, g).value);
        CHECK(girth(w).girth == g);
      }
}

TEST_CASE("bounds_report") {
  const auto rep = bounds_report(2, 5, 6);
  CHECK(rep.moore == 42);
  CHECK(rep.ahm == 66);
  CHECK(rep.mixed_lower.value == 71);
  CHECK_FALSE(rep.family_upper);

  const auto fam = bounds_report(2, 7, 6, 7);
  REQUIRE(fam.family_upper);
  CHECK(*fam.family_upper == 196);
  CHECK(*bounds_report(3, 13, 6, 13).family_upper == 676);

  CHECK_THROWS_AS(bounds_report(2, 5, 6, 5), BoundsError);  // q=5 gives z=1
  CHECK_THROWS_AS(bounds_report(2, 7, 5, 7), BoundsError);
  CHECK_THROWS_AS(bounds_report(2, 4, 6, 4), BoundsError);
}
