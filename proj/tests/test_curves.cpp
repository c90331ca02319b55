#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "k3inv/curves.hpp"

namespace curves = k3inv::curves;
using k3inv::Integer;

TEST_CASE("genus of curves on polarized K3 surfaces") {
  CHECK(curves::k3_curve_genus(3, 2) == 9);
  CHECK(curves::k3_curve_genus(6, 2) == 21);
  CHECK(curves::k3_curve_genus(2, 1) == 2);
  CHECK_THROWS_AS(curves::k3_curve_genus(1, 2), std::domain_error);
  CHECK_THROWS_AS(curves::k3_curve_genus(3, 0), std::domain_error);
}

TEST_CASE("complete intersection genus") {
  CHECK(curves::ci_curve_genus(3, std::vector<int>{4, 2}) == 9);
  CHECK(curves::ci_curve_genus(4, std::vector<int>{2, 3, 3}) == 28);
  CHECK(curves::ci_curve_genus(5, std::vector<int>{2, 2, 2, 2}) == 17);
  CHECK(curves::ci_curve_genus(2, std::vector<int>{2}) == 0);   // plane conic
  CHECK(curves::ci_curve_genus(2, std::vector<int>{5}) == 6);   // plane quintic
  CHECK_THROWS_AS(curves::ci_curve_genus(3, std::vector<int>{4}), std::invalid_argument);
  CHECK_THROWS_AS(curves::ci_curve_genus(3, std::vector<int>{4, 0}), std::invalid_argument);
}

TEST_CASE("the three CI families realize the K3 genus formula") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(curves::ci_curve_genus(3, std::vector<int>{4, k}) == curves::k3_curve_genus(3, k));
    CHECK(curves::ci_curve_genus(4, std::vector<int>{2, 3, k}) == curves::k3_curve_genus(4, k));
    CHECK(curves::ci_curve_genus(5, std::vector<int>{2, 2, 2, k}) ==
          curves::k3_curve_genus(5, k));
  }
}

TEST_CASE("genus minus one is divisible by k squared") {
  for (long long g1 = 2; g1 <= 12; ++g1)
    for (long long k = 1; k <= 8; ++k)
      CHECK((curves::k3_curve_genus(g1, k) - 1).divisible_by(k * k));
}

TEST_CASE("clifford index of restricted bundles") {
  CHECK(curves::clifford_general(3, 2) == 2);
  CHECK(curves::clifford_general(4, 3) == 10);
  CHECK(curves::clifford_restriction(3, 4, 2) == 14);
  CHECK_THROWS_AS(curves::clifford_restriction(3, 4, 0), std::domain_error);
  CHECK_THROWS_AS(curves::clifford_restriction(3, 4, 4), std::domain_error);
}

TEST_CASE("clifford_general is the exhaustive minimum over l") {
  for (long long g1 = 2; g1 <= 12; ++g1)
    for (long long k = 2; k <= 10; ++k) {
      Integer min = curves::clifford_restriction(g1, k, 1);
      for (long long l = 2; l <= k - 1; ++l) {
        Integer v = curves::clifford_restriction(g1, k, l);
        if (v < min) min = v;
      }
      CHECK(curves::clifford_general(g1, k) == min);
    }
}

TEST_CASE("exceptional cases of the general theory") {
  CHECK(curves::exceptional_low(2, 2));
  CHECK(curves::exceptional_low(2, 3));
  CHECK(curves::exceptional_low(3, 2));
  CHECK(!curves::exceptional_low(3, 3));
  CHECK(!curves::exceptional_low(2, 4));
}

TEST_CASE("largest index below a genus bound") {
  CHECK(curves::max_k_for_genus(2, 37) == 6);
  CHECK(curves::max_k_for_genus(3, 37) == 4);
  CHECK(curves::max_k_for_genus(4, 37) == 3);
  CHECK(curves::max_k_for_genus(10, 37) == 2);
  CHECK(curves::max_k_for_genus(40, 37) == 0);
  // consistency: genus at the reported k is within bound, the next is not
  for (long long g1 = 2; g1 <= 12; ++g1) {
    long long k = curves::max_k_for_genus(g1, 37);
    if (k >= 1) CHECK(curves::k3_curve_genus(g1, k) <= 37);
    CHECK(curves::k3_curve_genus(g1, k + 1) > 37);
  }
}

TEST_CASE("Riemann-Roch bookkeeping") {
  CHECK(curves::rr_h0(36, 13, 0) == 24);
  CHECK(curves::rr_h0(36, 28, 5) == 14);
  CHECK(curves::h0_nonspecial(108, 28) == 81);
  CHECK(curves::serre_h1(12, 19, 4) == 10);
  CHECK(curves::serre_h1(18, 28, 5) == 14);
  CHECK_THROWS_AS(curves::h0_nonspecial(5, 7), std::domain_error);
}

TEST_CASE("rr/serre round trip") {
  for (long long deg = 0; deg <= 40; deg += 7)
    for (long long g = 0; g <= 30; g += 5)
      for (long long h0 = 0; h0 <= 12; h0 += 3) {
        Integer h1 = curves::serre_h1(deg, g, h0);
        if (h1 < 0) continue;
        CHECK(curves::rr_h0(deg, g, h1.to_int64()) == h0);
      }
}

TEST_CASE("Clifford bound on sections") {
  CHECK(curves::clifford_h0_bound(12) == 7);
  CHECK(curves::clifford_h0_bound(16) == 9);
  CHECK(curves::clifford_h0_bound(0) == 1);
  CHECK(curves::clifford_h0_bound(7) == 4);
}

TEST_CASE("Castelnuovo bound instances") {
  CHECK(curves::castelnuovo_genus(18, 5) == 28);
  CHECK(curves::castelnuovo_genus(8, 3) == 9);
  CHECK(curves::castelnuovo_genus(14, 5) == 15);
  CHECK(curves::castelnuovo_genus(7, 3) == 6);
  CHECK_THROWS_AS(curves::castelnuovo_genus(2, 3), std::domain_error);
}

TEST_CASE("Castelnuovo bound is monotone in the degree") {
  for (long long r = 2; r <= 6; ++r) {
    Integer prev = curves::castelnuovo_genus(r, r);
    for (long long d = r + 1; d <= 40; ++d) {
      Integer cur = curves::castelnuovo_genus(d, r);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("theta characteristic arithmetic") {
  CHECK(curves::theta_degree(19, 3) == 12);
  CHECK(curves::theta_degree(28, 3) == 18);
  CHECK(curves::theta_degree(9, 2) == 8);
  CHECK_THROWS_AS(curves::theta_degree(10, 4), std::domain_error);
  CHECK(curves::expected_theta_codim(5) == 15);
  CHECK(curves::expected_theta_codim(4) == 10);
}

TEST_CASE("parity predicate") {
  CHECK(curves::same_parity(5, 7));
  CHECK(!curves::same_parity(4, 5));
  CHECK(curves::same_parity(-3, 5));
}

TEST_CASE("curve and spin datum validation") {
  CHECK_THROWS_AS(curves::CurveInvariants(-1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(curves::CurveInvariants(1, 0, 3), std::invalid_argument);
  curves::SpinDatum spin(19, 3, 4);
  CHECK(spin.theta_degree() == 12);
  CHECK_THROWS_AS(curves::SpinDatum(10, 4, 1), std::invalid_argument);
}
