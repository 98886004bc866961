#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gpjac/gp_graph.hpp"
#include "gpjac/int_matrix.hpp"
#include "oracles.hpp"

using namespace gpjac;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("det_bareiss small cases") {
  CHECK(det_bareiss(IntegerMatrix::identity(3)) == 1);
  CHECK(det_bareiss(IntegerMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(det_bareiss(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_bareiss(IntegerMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det_bareiss(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_bareiss reduced Laplacian of GP(3,2) is 75") {
  const IntegerMatrix l = laplacian(build_gp(3, 2));
  CHECK(det_bareiss(l.without(5, 5)) == 75);
}

TEST_CASE("det_bareiss agrees with cofactor expansion on random 4x4") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, 4, 4, -9, 9);
    REQUIRE(det_bareiss(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}) == ints({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix(2, 2)) == ints({0, 0}));
  CHECK(smith_normal_form(IntegerMatrix{{4, 0}, {0, 6}}) == ints({2, 12}));
  // Non-square: diagonal has min(rows, cols) entries.
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}}) == ints({2, 6}));
}

TEST_CASE("smith_normal_form of L(GP(3,2)) has factors 5, 15 and one zero") {
  const auto d = smith_normal_form(laplacian(build_gp(3, 2)));
  REQUIRE(d.size() == 6);
  std::vector<Integer> big;
  int zeros = 0;
  for (const auto& x : d) {
    if (x == 0) ++zeros;
    if (x > 1) big.push_back(x);
  }
  CHECK(zeros == 1);
  CHECK(big == ints({5, 15}));
}

TEST_CASE("smith_normal_form matches determinantal divisors on random matrices") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const IntegerMatrix m = oracle::random_matrix(rng, r, c, -9, 9);
    const auto d = smith_normal_form(m);
    REQUIRE(d.size() == std::min(r, c));
    Integer prefix = 1;
    for (std::size_t j = 1; j <= d.size(); ++j) {
      prefix *= d[j - 1];
      REQUIRE(prefix == oracle::determinantal_divisor(m, j));
      if (j >= 2 && d[j - 2] != 0) CHECK(d[j - 1] % d[j - 2] == 0);
    }
  }
}

TEST_CASE("|det| equals the product of the SNF diagonal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, 5, 5, -9, 9);
    const Integer det = det_bareiss(m);
    Integer prod = 1;
    for (const auto& x : smith_normal_form(m)) prod *= x;
    CHECK(prod == abs(det));
  }
}

TEST_CASE("smith_normal_form on a rank-deficient matrix with large entries") {
  IntegerMatrix m{{6, 10, 14}, {15, 25, 35}, {0, 0, 0}};
  m *= Integer("1000000000000000000000");
  const auto d = smith_normal_form(m);
  CHECK(d[0] == Integer("1000000000000000000000"));
  CHECK(d[1] == 0);
  CHECK(d[2] == 0);
}

TEST_CASE("cokernel") {
  const AbelianGroup trivial = cokernel(IntegerMatrix::identity(4));
  CHECK(trivial.invariant_factors.empty());
  CHECK(trivial.free_rank == 0);
  CHECK(trivial.to_string() == "0");

  const AbelianGroup petersen = cokernel(laplacian(build_gp(5, 2)));
  CHECK(petersen.invariant_factors == ints({2, 10, 10, 10}));
  CHECK(petersen.free_rank == 1);
  CHECK(petersen.to_string() == "Z ⊕ Z_2 ⊕ Z_10 ⊕ Z_10 ⊕ Z_10");

  const AbelianGroup d46 = cokernel(IntegerMatrix{{4, 0}, {0, 6}});
  CHECK(d46.invariant_factors == ints({2, 12}));
  CHECK(d46.free_rank == 0);

  CHECK_THROWS_AS(cokernel(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("AbelianGroup canonicalizes arbitrary cyclic orders") {
  const auto g = AbelianGroup::from_cyclic_orders(ints({2, 10, 52230, 17410}));
  CHECK(g.invariant_factors == ints({2, 10, 17410, 52230}));
  const auto h = AbelianGroup::from_cyclic_orders(ints({4, 6, 1, 0, -9}));
  CHECK(h.invariant_factors == ints({6, 36}));
  CHECK(h.free_rank == 1);
  CHECK(h.torsion_order() == 216);
}

TEST_CASE("mat_pow") {
  const IntegerMatrix m{{3, -1}, {4, 7}};
  CHECK(mat_pow(m, 0) == IntegerMatrix::identity(2));
  CHECK(mat_pow(m, 1) == m);

  const IntegerMatrix shift = circulant(3, {{1, 1}});
  CHECK(mat_pow(shift, 3) == IntegerMatrix::identity(3));

  for (unsigned long n : {1UL, 2UL, 17UL, 1000UL}) {
    const IntegerMatrix expected{{1, static_cast<long>(n)}, {0, 1}};
    CHECK(mat_pow(IntegerMatrix{{1, 1}, {0, 1}}, n) == expected);
  }
  CHECK_THROWS_AS(mat_pow(IntegerMatrix(2, 3), 2), std::invalid_argument);
}

TEST_CASE("mat_pow is additive in the exponent") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned long> exp(0, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, 3, 3, -4, 4);
    const unsigned long a = exp(rng), b = exp(rng);
    CHECK(mat_pow(m, a + b) == mat_pow(m, a) * mat_pow(m, b));
  }
}
