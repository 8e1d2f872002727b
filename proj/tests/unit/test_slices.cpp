#include <doctest.h>

#include "nhk/module_slice.hpp"
#include "nhk/weyl.hpp"

using namespace nhk;

TEST_CASE("polynomial module slice passes the criterion: A1, depth 5") {
  RootDatum d = RootDatum::build("A1");
  GradedModuleSlice slice = GradedModuleSlice::sym_t(d, 5);
  ExtensionReport r = module_extension_check(d, slice, 1);
  CHECK(r.bijective_on_range);
  for (const auto& deg : r.degrees) {
    CHECK(deg.bijective());
    // Both eigenspaces in the A1 polynomial ring are at most a line.
    CHECK(deg.dim_plus <= 1);
    CHECK(deg.dim_minus <= 1);
  }
  REQUIRE(r.theta.has_value());
  CHECK(r.theta_square_zero);
  CHECK(r.commutation_ok);
}

TEST_CASE("polynomial module slice: A2, both simple roots") {
  RootDatum d = RootDatum::build("A2");
  GradedModuleSlice slice = GradedModuleSlice::sym_t(d, 4);
  for (int i = 1; i <= 2; ++i) {
    ExtensionReport r = module_extension_check(d, slice, i);
    CHECK(r.bijective_on_range);
    CHECK(r.theta.has_value());
    CHECK(r.theta_square_zero);
    CHECK(r.commutation_ok);
  }
}

TEST_CASE("degree-zero slice reports an empty examined range") {
  RootDatum d = RootDatum::build("A1");
  // Regular representation of W = Z/2 in degree 0 only, no coordinate maps.
  GradedModuleSlice m;
  m.max_degree = 0;
  m.dims = {2};
  QMat swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  m.s = {{swap}};
  m.x = {{}};
  ExtensionReport r = module_extension_check(d, m, 1);
  CHECK(r.degrees.empty());
  CHECK(!r.theta.has_value());
  CHECK(r.summary.find("nothing checkable") != std::string::npos);
}

TEST_CASE("doubled module with swap inherits bijectivity") {
  RootDatum d = RootDatum::build("A1");
  GradedModuleSlice twice = GradedModuleSlice::sym_t_double_swap(d, 4);
  ExtensionReport r = module_extension_check(d, twice, 1);
  CHECK(r.bijective_on_range);
  // The plus eigenspace is the diagonal copy.
  for (const auto& deg : r.degrees) CHECK(deg.dim_plus == deg.dim_minus);
  CHECK(r.theta.has_value());
  CHECK(r.theta_square_zero);
  CHECK(r.commutation_ok);
}

TEST_CASE("malformed slices are rejected") {
  RootDatum d = RootDatum::build("A1");
  GradedModuleSlice bad = GradedModuleSlice::sym_t(d, 2);
  bad.s[0][1].at(0, 0) += 1;  // break the involution
  CHECK_THROWS_AS(module_extension_check(d, bad, 1), std::invalid_argument);

  GradedModuleSlice wrong_shape = GradedModuleSlice::sym_t(d, 2);
  wrong_shape.dims.push_back(7);
  CHECK_THROWS_AS(module_extension_check(d, wrong_shape, 1), std::invalid_argument);
}

TEST_CASE("emitted theta matrices lower degree by one") {
  RootDatum d = RootDatum::build("A1");
  GradedModuleSlice slice = GradedModuleSlice::sym_t(d, 5);
  ExtensionReport r = module_extension_check(d, slice, 1);
  REQUIRE(r.theta.has_value());
  const auto& theta = *r.theta;
  REQUIRE(theta.size() == 6);
  for (int deg = 1; deg <= 5; ++deg) {
    CHECK(theta[deg].rows() == slice.dims[deg - 1]);
    CHECK(theta[deg].cols() == slice.dims[deg]);
  }
  // Explicit values in the monomial basis: theta(x^2) = x (divided
  // difference of x^2 is (s(x^2)-x^2)/x = 0... the operator here satisfies
  // s = x theta + 1, so theta(x^k) = (( -x)^k - x^k)/x^{k}ial: on the line
  // M_2 = <x^2>, (s-1)(x^2) = 0, so theta(x^2) = 0; on M_1, (s-1)(x) = -2x
  // and the coroot map sends 1 to x, so theta(x) = -2.
  CHECK(theta[1].at(0, 0) == -2);
  CHECK(theta[2].at(0, 0) == 0);
  CHECK(theta[3].at(0, 0) == -2);
}
