#include <doctest.h>

#include "helpers.hpp"

using namespace ogpush;
using testutil::error_code;
using testutil::P;

TEST_CASE("staircase partitions") {
  CHECK(rho(2, 2) == Partition({2, 1}, 2));
  CHECK(rho(1, 2) == Partition({1, 0}, 2));
  CHECK(rho(0, 3) == Partition({0, 0, 0}, 3));
  CHECK(error_code([] { rho(3, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("partition validation") {
  CHECK(Partition({2}, 3).parts() == std::vector<int>{2, 0, 0});
  CHECK(Partition({3, 1}, 2).to_string() == "3,1");
  CHECK(Partition({3, 1, 0}, 3).size() == 4);
  CHECK(Partition({3, 1, 0}, 3).length() == 2);
  CHECK(error_code([] { Partition({1, 2}, 2); }) == ErrorCode::NonPartition);
  CHECK(error_code([] { Partition({1, -1}, 2); }) == ErrorCode::NonPartition);
  CHECK(error_code([] { Partition({1, 1, 1}, 2); }) == ErrorCode::NonPartition);
  CHECK(Partition({1, 1, 0, 0}, 2) == Partition({1, 1}, 2));
}

TEST_CASE("bialternant Schur polynomials") {
  CHECK(schur_z(Partition({2, 1}, 2)) == P("z1*z2*(z1+z2)", 2));
  CHECK(schur_z(Partition({0, 0, 0}, 3)) == P("1", 3));
  CHECK(schur_z(Partition({3, 1, 0}, 3)) == schur_tableaux(Partition({3, 1, 0}, 3), z_vars(3), 3));
  CHECK(schur_t(Partition({1, 1}, 2)) == P("t1*t2", 2));
}

TEST_CASE("bialternant numerator divided by the Vandermonde") {
  const MultiPoly numerator = P("z1^2*z2^0 - z2^2", 2);
  CHECK(poly_exact_div(numerator, P("z1-z2", 2)) == P("z1+z2", 2));
  CHECK(poly_exact_div(numerator, P("z1-z2", 2)) == schur_z(Partition({1, 0}, 2)));
}

TEST_CASE("tableau Schur polynomials") {
  CHECK(schur_tableaux(Partition({1, 0}, 2), z_vars(2), 2) == P("z1+z2", 2));
  CHECK(schur_tableaux(Partition({2, 1}, 2), z_vars(2), 2) == P("z1^2*z2+z1*z2^2", 2));
  CHECK(schur_tableaux(Partition({1, 1, 1}, 3), z_vars(2), 2).is_zero());
}

TEST_CASE("bialternant equals the tableau sum") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_in_box(n, 4)) {
      CAPTURE(lambda.to_string());
      CHECK(schur_bialternant(lambda, z_vars(n), n) == schur_tableaux(lambda, z_vars(n), n));
    }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(3, 5).size() == 56);
  CHECK(partitions_in_box(2, 1).front() == Partition({1, 1}, 2));
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(0, 3).size() == 1);
}

TEST_CASE("parity decomposition") {
  const auto a = decompose_parity(Partition({2, 1}, 2));
  CHECK(a.tag == ParityTag::RhoN);
  CHECK(a.mu == Partition({0, 0}, 2));
  const auto b = decompose_parity(Partition({1, 0}, 2));
  CHECK(b.tag == ParityTag::RhoNMinus1);
  CHECK(b.mu == Partition({0, 0}, 2));
  const auto c = decompose_parity(Partition({1, 1}, 2));
  CHECK(c.tag == ParityTag::Neither);
  CHECK_FALSE(c.mu.has_value());
  CHECK(decompose_parity(Partition({1}, 1)).tag == ParityTag::RhoN);
  CHECK(decompose_parity(Partition({0}, 1)).tag == ParityTag::RhoNMinus1);
  const auto d = decompose_parity(Partition({7, 4, 1}, 3));
  CHECK(d.tag == ParityTag::RhoN);
  CHECK(d.mu == Partition({2, 1, 0}, 3));
  CHECK(decompose_parity(Partition({6, 3, 0}, 3)).mu == Partition({2, 1, 0}, 3));
}

namespace {

// Independent check: lambda - shift has even, weakly decreasing halves.
bool splits_as(const Partition& lambda, int k) {
  const int n = lambda.n();
  int prev = 1 << 20;
  for (int i = 0; i < n; ++i) {
    const int s = i < k ? k - i : 0;
    const int d = lambda[i] - s;
    if (d < 0 || d % 2 != 0 || d / 2 > prev) return false;
    prev = d / 2;
  }
  return true;
}

}  // namespace

TEST_CASE("parity cases are exclusive and reconstruct lambda") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : partitions_in_box(n, 6)) {
      CAPTURE(lambda.to_string());
      const bool low = splits_as(lambda, n - 1);
      const bool high = splits_as(lambda, n);
      CHECK_FALSE((low && high));
      const auto pc = decompose_parity(lambda);
      CHECK((pc.tag == ParityTag::RhoNMinus1) == low);
      CHECK((pc.tag == ParityTag::RhoN) == high);
      if (pc.mu) {
        const Partition shift = rho(pc.tag == ParityTag::RhoN ? n : n - 1, n);
        for (int i = 0; i < n; ++i) CHECK(2 * (*pc.mu)[i] + shift[i] == lambda[i]);
      }
    }
  }
}

TEST_CASE("e, p and h generators") {
  const auto v = z_vars(2);
  CHECK(elementary_power_complete(2, SymKind::E, v, 2) == P("z1*z2", 2));
  CHECK(elementary_power_complete(2, SymKind::P, v, 2) == P("z1^2+z2^2", 2));
  CHECK(elementary_power_complete(2, SymKind::H, v, 2) == P("z1^2+z1*z2+z2^2", 2));
  CHECK(elementary_power_complete(0, SymKind::E, v, 2) == P("1", 2));
  CHECK(elementary_power_complete(0, SymKind::H, v, 2) == P("1", 2));
  CHECK(elementary_power_complete(0, SymKind::P, v, 2) == P("2", 2));
  CHECK(elementary_power_complete(3, SymKind::E, v, 2).is_zero());
  CHECK(elementary_power_complete(3, SymKind::H, z_vars(3), 3) == schur_z(Partition({3}, 3)));
  CHECK(elementary_power_complete(3, SymKind::E, z_vars(3), 3) == schur_z(Partition({1, 1, 1}, 3)));
}

TEST_CASE("Schur expansion") {
  CHECK(schur_expand(P("z1+z2", 2), z_vars(2)) == std::map<Partition, Rat>{{Partition({1, 0}, 2), 1}});
  CHECK(schur_expand(P("2*t1*t2", 2), t_vars(2)) == std::map<Partition, Rat>{{Partition({1, 1}, 2), 2}});
  const MultiPoly pieri = schur_z(Partition({2}, 2)) * schur_z(Partition({1}, 2));
  CHECK(schur_expand(pieri, z_vars(2)) ==
        std::map<Partition, Rat>{{Partition({3, 0}, 2), 1}, {Partition({2, 1}, 2), 1}});
  CHECK(schur_expand(MultiPoly(2), z_vars(2)).empty());
  CHECK(error_code([] { schur_expand(P("z1", 2), z_vars(2)); }) == ErrorCode::NotSymmetric);
  CHECK(error_code([] { schur_expand(P("z1+z2+t1", 2), z_vars(2)); }) == ErrorCode::UnexpectedVariable);
}

TEST_CASE("symmetry test") {
  CHECK(is_symmetric(P("z1*z2*z3", 3), z_vars(3)));
  CHECK_FALSE(is_symmetric(P("z1^2*z2 + z2^2*z3 + z3^2*z1", 3), z_vars(3)));
  CHECK_FALSE(is_symmetric(P("z1 - z2", 2), z_vars(2)));
}

TEST_CASE("expansion round trip on random symmetric polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const int d = static_cast<int>(rng() % 5);
    MultiPoly p = testutil::random_symmetric(rng, n, d) + testutil::random_symmetric(rng, n, d / 2);
    CHECK(schur_sum(schur_expand(p, z_vars(n)), z_vars(n), n) == p);
  }
}
