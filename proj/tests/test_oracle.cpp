#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckd/error.hpp"
#include "heckd/kl.hpp"
#include "heckd/oracle.hpp"

using namespace heckd;

TEST_CASE("oracle length") {
  const int d = 3;
  CHECK(oracle::oracle_length(AffinePerm::identity(d)) == 0);
  CHECK(oracle::oracle_length(AffinePerm::generator(d, kRho)) == 0);
  for (GenLabel g = 0; g <= d; ++g)
    CHECK(oracle::oracle_length(AffinePerm::generator(d, g)) == 1);
  CHECK(oracle::oracle_length(AffinePerm::from_window(d, {7, 2, 3, 4, 5, 0})) ==
        4);

  for (const auto& w : enumerate_up_to_length(d, 4))
    CHECK(w.length() == oracle::oracle_length(w));
}

TEST_CASE("oracle bruhat") {
  const int d = 3;
  auto e = AffinePerm::identity(d);
  auto s1 = AffinePerm::generator(d, 1);
  auto s2 = AffinePerm::generator(d, 2);

  CHECK(oracle::oracle_bruhat(e, s1));
  CHECK_FALSE(oracle::oracle_bruhat(s1, s2));
  CHECK_FALSE(oracle::oracle_bruhat(e, AffinePerm::generator(d, kRho)));

  const auto pool = enumerate_up_to_length(d, 3);
  for (const auto& y : pool)
    for (const auto& w : pool)
      CHECK(y.bruhat_leq(w) == oracle::oracle_bruhat(y, w));
}

TEST_CASE("oracle multiplication") {
  const int d = 3;
  auto e = AffinePerm::identity(d);
  auto s1 = AffinePerm::generator(d, 1);
  auto rho = AffinePerm::generator(d, kRho);

  auto sq = oracle::oracle_mult(HeckeElt::basis(s1), HeckeElt::basis(s1));
  HeckeElt expect(d);
  expect.add_term(e, Laurent::v_pow(2));
  expect.add_term(s1, Laurent::v_pow(2) - Laurent::one());
  CHECK(sq == expect);

  CHECK(oracle::oracle_mult(HeckeElt::basis(rho), HeckeElt::basis(rho)) ==
        HeckeElt::basis(e));

  const auto pool = enumerate_up_to_length(d, 3);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const auto a = HeckeElt::basis(x);
      const auto b = HeckeElt::basis(y);
      CHECK(mult(a, b) == oracle::oracle_mult(a, b));
    }
}

TEST_CASE("oracle canonical") {
  const int d = 3;
  auto e = AffinePerm::identity(d);
  CHECK(oracle::oracle_canonical(e) == HeckeElt::basis(e));

  KLTable table(d);
  oracle::CanonicalSolver solver(d);
  CHECK(solver.canonical(AffinePerm::generator(d, 0)) ==
        kl_canonical(AffinePerm::generator(d, 0), table));

  for (const auto& w : enumerate_up_to_length(d, 3))
    CHECK(solver.canonical(w) == kl_canonical(w, table));
}

TEST_CASE("interval bound is enforced") {
  const int d = 3;
  oracle::CanonicalSolver solver(d, 2);
  CHECK_THROWS_AS(solver.canonical(AffinePerm::from_window(d, {7, 2, 3, 4, 5, 0})),
                  Error);
}
