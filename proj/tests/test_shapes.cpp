#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "flagorbit/shapes.hpp"

using namespace flagorbit;

TEST_CASE("flag dimensions") {
  CHECK(dim_flag(FlagShape(4, {2})) == 4);
  CHECK(dim_flag(FlagShape(4, {1, 2})) == 5);
  CHECK(dim_flag(FlagShape(4, {1, 2, 3})) == 6);
  CHECK(dim_flag(FlagShape(7, {})) == 0);
  CHECK(dim_flag(FlagShape(10, {1, 8})) == 1 * 7 + 8 * 2);
  // Full flag: n(n-1)/2.
  CHECK(dim_flag(FlagShape(6, {1, 2, 3, 4, 5})) == 15);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(FlagShape(4, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FlagShape(4, {4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FlagShape(4, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FlagShape(4, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(FlagShape(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(ProductSpec({}), std::invalid_argument);
  CHECK_THROWS_AS(ProductSpec({FlagShape(4, {1}), FlagShape(5, {1})}),
                  std::invalid_argument);
}

TEST_CASE("product bookkeeping") {
  const ProductSpec p = self_product(FlagShape(4, {1, 2}), 3);
  CHECK(p.n() == 4);
  CHECK(p.arity() == 3);
  CHECK(p.is_self_product());
  CHECK(dim_product(p) == 15);
  CHECK(expected_stab_dim(p) == 0);

  CHECK(expected_stab_dim(self_product(FlagShape(4, {2}), 4)) == -1);
  CHECK(is_trivially_sparse(self_product(FlagShape(4, {2}), 4)));
  CHECK(expected_stab_dim(self_product(FlagShape(4, {2}), 1)) == 11);

  const DimensionBudget b = dimension_budget(p);
  CHECK(b.n == 4);
  CHECK(b.dim_product == 15);
  CHECK(b.dim_pgl == 15);
  CHECK(b.expected_stab == 0);
}

TEST_CASE("canonical factor order") {
  const ProductSpec a({FlagShape(4, {1, 3}), FlagShape(4, {1}), FlagShape(4, {1, 2})});
  const ProductSpec b({FlagShape(4, {1, 2}), FlagShape(4, {1, 3}), FlagShape(4, {1})});
  CHECK(a == b);
  CHECK(a.factors().front().ks() == std::vector<Int>{1});
  CHECK_FALSE(a.is_self_product());
}

TEST_CASE("without_points") {
  const ProductSpec p({FlagShape(5, {}), FlagShape(5, {1, 2}), FlagShape(5, {})});
  CHECK(p.without_points().arity() == 1);
  CHECK(p.without_points().factors().front().ks() == std::vector<Int>{1, 2});
  const ProductSpec only_points({FlagShape(5, {}), FlagShape(5, {})});
  CHECK(only_points.without_points().arity() == 1);
  CHECK(only_points.without_points().factors().front().is_point());
}

TEST_CASE("duality") {
  CHECK(dual_shape(FlagShape(5, {1, 2})) == FlagShape(5, {3, 4}));
  CHECK(dual_shape(FlagShape(4, {1, 3})) == FlagShape(4, {1, 3}));
  CHECK(dual_shape(FlagShape(4, {2})) == FlagShape(4, {2}));
  CHECK(dual_shape(FlagShape(7, {})) == FlagShape(7, {}));

  // Involution and dimension preservation across all shapes with n <= 9.
  for (Int n = 2; n <= 9; ++n) {
    const Int limit = Int{1} << (n - 1);
    for (Int mask = 0; mask < limit; ++mask) {
      std::vector<Int> ks;
      for (Int k = 1; k < n; ++k)
        if (mask & (Int{1} << (k - 1))) ks.push_back(k);
      const FlagShape f(n, ks);
      CHECK(dual_shape(dual_shape(f)) == f);
      CHECK(dim_flag(dual_shape(f)) == dim_flag(f));
    }
  }
}

TEST_CASE("derived sequences") {
  CHECK(derived_sequence({2, 5, 7}, 3) == std::vector<Int>{2, 4});
  CHECK(derived_sequence({2, 5, 7}, 0) == std::vector<Int>{2, 5, 7});
  CHECK(derived_sequence({1, 2, 3}, 3).empty());
  CHECK(derived_sequence({1, 2, 3}, 5).empty());
  CHECK(derived_sequence({}, 2).empty());
  CHECK(derived_sequence({3, 6}, 2) == std::vector<Int>{1, 4});

  // Entries stay positive and strictly increasing for arbitrary cuts.
  for (Int d = 0; d <= 8; ++d) {
    const auto ks = derived_sequence({1, 3, 4, 7}, d);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      CHECK(ks[i] > 0);
      if (i > 0) CHECK(ks[i] > ks[i - 1]);
    }
  }
}

TEST_CASE("expected stabilizer of full-flag powers") {
  // 2 * expected == (2 - m) r^2 + (4 - m) r for F(1..r;r+1)^m: a closed form
  // double-checking dim_flag and the budget arithmetic together.
  for (Int r = 2; r <= 10; ++r) {
    for (Int m = 3; m <= 8; ++m) {
      std::vector<Int> ks;
      for (Int k = 1; k <= r; ++k) ks.push_back(k);
      const ProductSpec p = self_product(FlagShape(r + 1, ks), m);
      CHECK(2 * expected_stab_dim(p) == (2 - m) * r * r + (4 - m) * r);
    }
  }
}

TEST_CASE("formatting") {
  CHECK(format_shape(FlagShape(4, {1, 2})) == "F(1,2;4)");
  CHECK(format_shape(FlagShape(7, {})) == "F(;7)");
  CHECK(format_product(self_product(FlagShape(4, {1, 2}), 3)) == "F(1,2;4)^3");
  CHECK(format_product(ProductSpec({FlagShape(4, {1}), FlagShape(4, {1, 2}),
                                    FlagShape(4, {1, 2})})) ==
        "F(1;4) x F(1,2;4)^2");
  CHECK(format_product(ProductSpec({FlagShape(5, {2})})) == "F(2;5)");
}
