#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "heckd/error.hpp"
#include "heckd/io.hpp"
#include "heckd/kl.hpp"
#include "heckd/oracle.hpp"

using namespace heckd;

TEST_CASE("canonical basis at small length") {
  const int d = 3;
  KLTable table(d);
  auto e = AffinePerm::identity(d);
  auto s1 = AffinePerm::generator(d, 1);

  CHECK(kl_canonical(e, table) == HeckeElt::basis(e));

  HeckeElt cs1(d);
  cs1.add_term(s1, Laurent::v_pow(-1));
  cs1.add_term(e, Laurent::v_pow(-1));
  CHECK(kl_canonical(s1, table) == cs1);

  // rho-coset elements come from left convolution by [T_rho]
  auto rho = AffinePerm::generator(d, kRho);
  CHECK(kl_canonical(rho, table) == HeckeElt::basis(rho));
  for (const auto& w : enumerate_up_to_length(d, 2)) {
    if (w.rho_coset() == 1) continue;
    CHECK(kl_canonical(w.apply_move(kRho), table) ==
          mult_gen(kRho, kl_canonical(w, table)));
  }
}

TEST_CASE("polynomials") {
  const int d = 3;
  KLTable table(d);
  auto e = AffinePerm::identity(d);
  auto s0 = AffinePerm::generator(d, 0);
  auto s1 = AffinePerm::generator(d, 1);
  auto s2 = AffinePerm::generator(d, 2);

  CHECK(kl_polynomial(e, s0, table) == Laurent::v_pow(-1));
  CHECK(kl_polynomial(s1, s2, table) == Laurent::zero());
  for (const auto& w : enumerate_up_to_length(d, 3))
    CHECK(kl_polynomial(w, w, table).is_one());

  CHECK_THROWS_AS(
      kl_polynomial(AffinePerm::identity(4), AffinePerm::identity(4), table),
      Error);
}

TEST_CASE("bar invariance and unitriangularity") {
  const int d = 3;
  KLTable table(d);
  for (const auto& w : enumerate_up_to_length(d, 4)) {
    const HeckeElt c = kl_canonical(w, table);
    CHECK(bar(c) == c);
    for (const auto& [y, coeff] : c.terms()) {
      const Laurent p = coeff * Laurent::v_pow(y.length());
      if (y == w) {
        CHECK(p.is_one());
      } else {
        CHECK(p.in_vinv());
        CHECK(y.bruhat_leq(w));
      }
    }
  }
}

TEST_CASE("mu coefficients") {
  const int d = 3;
  KLTable table(d);
  auto e = AffinePerm::identity(d);
  auto s1 = AffinePerm::generator(d, 1);

  CHECK(kl_mu(e, s1, table) == 1);
  CHECK(kl_mu(s1, s1, table) == 0);

  const auto pool = enumerate_up_to_length(d, 4);
  for (const auto& y : pool)
    for (const auto& w : pool)
      if ((w.length() - y.length()) % 2 == 0)
        CHECK(kl_mu(y, w, table) == 0);
}

TEST_CASE("a multi-term polynomial deep in the order") {
  // Frozen from the engine and confirmed by the bar-fixpoint solve: the
  // first coefficient-2 entries appear at length gap 4.
  const int d = 3;
  KLTable table(d);
  auto y = AffinePerm::from_window(d, {-3, 0, 5, 2, 7, 10});
  auto w = AffinePerm::from_window(d, {-9, 1, 2, 5, 6, 16});
  REQUIRE(y.length() == 2);
  REQUIRE(w.length() == 6);
  const Laurent expected =
      Laurent::v_pow(-4) + Laurent::monomial(2, -2);
  CHECK(kl_polynomial(y, w, table) == expected);
  CHECK(kl_mu(y, w, table) == 0);
  CHECK(oracle::oracle_canonical(w).coeff(y) ==
        expected * Laurent::v_pow(-y.length()));
}

TEST_CASE("rank four spot checks") {
  const int d = 4;
  KLTable table(d);
  oracle::CanonicalSolver solver(d);
  for (const auto& w : enumerate_up_to_length(d, 2)) {
    const HeckeElt c = kl_canonical(w, table);
    CHECK(bar(c) == c);
    CHECK(solver.canonical(w) == c);
  }
}

TEST_CASE("rho translation invariance") {
  const int d = 3;
  KLTable table(d);
  const auto pool = enumerate_up_to_length(d, 3);
  for (const auto& y : pool)
    for (const auto& w : pool)
      CHECK(kl_polynomial(y, w, table) ==
            kl_polynomial(y.apply_move(kRho), w.apply_move(kRho), table));
}

TEST_CASE("structure positivity") {
  const int d = 3;
  KLTable table(d);
  auto e = AffinePerm::identity(d);
  auto s1 = AffinePerm::generator(d, 1);

  // {e} * {w} = {w}
  for (const auto& w : enumerate_up_to_length(d, 2)) {
    auto expand = canonical_expand(
        mult(kl_canonical(e, table), kl_canonical(w, table)), table);
    REQUIRE(expand.size() == 1);
    CHECK(expand.begin()->first == w);
    CHECK(expand.begin()->second.is_one());
  }

  // {s1} * {s1} = (v + v^-1) {s1}
  auto sq = canonical_expand(
      mult(kl_canonical(s1, table), kl_canonical(s1, table)), table);
  REQUIRE(sq.size() == 1);
  CHECK(sq.begin()->second == Laurent::v_pow(1) + Laurent::v_pow(-1));

  auto report = kl_structure_positivity(d, 2, table);
  CHECK(report.ok());
  CHECK(report.pairs_checked == 30ll * 30ll);
  CHECK_THROWS_AS(kl_structure_positivity(2, 1, table), Error);
}

TEST_CASE("cache round trip") {
  const int d = 3;
  KLTable table(d);
  for (const auto& w : enumerate_up_to_length(d, 2)) kl_canonical(w, table);

  std::ostringstream out;
  kl_cache_save(table, out);
  const std::string payload = out.str();
  CHECK(!payload.empty());

  std::istringstream in(payload);
  KLTable loaded = kl_cache_load(in);
  CHECK(loaded.rank() == d);
  CHECK(loaded.entries() == table.entries());

  // byte-identical re-serialization
  std::ostringstream second;
  kl_cache_save(loaded, second);
  CHECK(second.str() == payload);
}

TEST_CASE("cache records are sorted by (l(w), w, y)") {
  const int d = 3;
  KLTable table(d);
  for (const auto& w : enumerate_up_to_length(d, 2)) kl_canonical(w, table);
  std::ostringstream out;
  kl_cache_save(table, out);
  std::istringstream lines(out.str());
  std::string line;
  long long prev_lw = -1;
  AffinePerm prev_w = AffinePerm::identity(d);
  AffinePerm prev_y = AffinePerm::identity(d);
  bool first = true;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    const AffinePerm w =
        AffinePerm::from_window(d, j.at("w").get<std::vector<long long>>());
    const AffinePerm y =
        AffinePerm::from_window(d, j.at("y").get<std::vector<long long>>());
    const long long lw = w.length();
    if (!first) {
      const bool ordered =
          prev_lw < lw || (prev_lw == lw && prev_w < w) ||
          (prev_lw == lw && prev_w == w && prev_y < y);
      CHECK(ordered);
    }
    prev_lw = lw;
    prev_w = w;
    prev_y = y;
    first = false;
  }
}

TEST_CASE("cache rejects malformed data") {
  std::istringstream truncated(
      "{\"d\":3,\"y\":[1,2,3,4,5,6],\"w\":[1,2,3,4,5,6],\"p\":[[0,1]]}\n"
      "{\"d\":3,\"y\":[1,2,3,");
  try {
    kl_cache_load(truncated);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedRecord);
    CHECK(e.index() == 2);
  }

  // wrong diagonal value
  std::istringstream bad_diag(
      "{\"d\":3,\"y\":[1,2,3,4,5,6],\"w\":[1,2,3,4,5,6],\"p\":[[0,2]]}\n");
  CHECK_THROWS_AS(kl_cache_load(bad_diag), Error);

  // entries of different rank in one stream
  std::istringstream mixed(
      "{\"d\":3,\"y\":[1,2,3,4,5,6],\"w\":[1,2,3,4,5,6],\"p\":[[0,1]]}\n"
      "{\"d\":4,\"y\":[1,2,3,4,5,6,7,8],\"w\":[1,2,3,4,5,6,7,8],\"p\":[[0,1]]}\n");
  CHECK_THROWS_AS(kl_cache_load(mixed), Error);

  std::istringstream empty("");
  CHECK_THROWS_AS(kl_cache_load(empty), Error);
}

TEST_CASE("cache merge") {
  const int d = 3;
  KLTable a(d);
  KLTable b(d);
  auto s1 = AffinePerm::generator(d, 1);
  auto s2 = AffinePerm::generator(d, 2);
  kl_canonical(s1, a);
  kl_canonical(s2, b);
  // three entries each, sharing the diagonal entry of the identity
  kl_cache_merge(a, b);
  CHECK(a.entries().size() == 5);

  KLTable other(4);
  try {
    kl_cache_merge(a, other);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MergeRankMismatch);
  }
}
