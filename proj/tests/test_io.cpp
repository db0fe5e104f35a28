#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heckd/error.hpp"
#include "heckd/io.hpp"

using namespace heckd;

TEST_CASE("laurent json round trip") {
  auto p = Laurent::from_terms({{-2, 3}, {0, -1}, {5, 7}});
  CHECK(laurent_to_json(p).dump() == "[[-2,3],[0,-1],[5,7]]");
  CHECK(laurent_from_json(laurent_to_json(p)) == p);

  // coefficients beyond int64 survive as decimal strings
  Int big("123456789012345678901234567890");
  auto q = Laurent::monomial(big, 1);
  auto j = laurent_to_json(q);
  CHECK(j[0][1].is_string());
  CHECK(laurent_from_json(j) == q);
}

TEST_CASE("window json round trip") {
  auto w = AffinePerm::from_window(3, {7, 2, 3, 4, 5, 0});
  auto j = perm_to_json(w);
  CHECK(j.dump() == "{\"d\":3,\"w\":[7,2,3,4,5,0]}");
  CHECK(perm_from_json(j) == w);
}

TEST_CASE("hecke json round trip") {
  const int d = 3;
  auto s1 = AffinePerm::generator(d, 1);
  auto elt = mult(HeckeElt::basis(s1), HeckeElt::basis(s1));
  auto j = hecke_to_json(elt);
  CHECK(hecke_from_json(j) == elt);
  CHECK(j.dump() ==
        "{\"d\":3,\"terms\":[{\"w\":[1,2,3,4,5,6],\"coeff\":[[2,1]]},"
        "{\"w\":[2,1,3,4,6,5],\"coeff\":[[0,-1],[2,1]]}]}");
  // serialization is deterministic
  CHECK(hecke_to_json(hecke_from_json(j)).dump() == j.dump());
}

TEST_CASE("window csv") {
  CHECK(parse_window_csv("7,2,3,4,5,0") ==
        std::vector<long long>{7, 2, 3, 4, 5, 0});
  CHECK(parse_window_csv("-1,0,3,4,7,8") ==
        std::vector<long long>{-1, 0, 3, 4, 7, 8});
  CHECK_THROWS_AS(parse_window_csv("1,x,3"), Error);
  CHECK_THROWS_AS(parse_window_csv(""), Error);
}

TEST_CASE("expression parsing") {
  const int d = 3;
  auto T0 = HeckeElt::basis(AffinePerm::generator(d, 0));

  CHECK(parse_element_expr(d, "Trho * T1 * Trho") == T0);
  CHECK(parse_element_expr(d, "Trho*T1*Trho") == T0);  // whitespace-free

  auto sq = parse_element_expr(d, "T1 * T1");
  CHECK(sq.str() == "v^2*[e] + (-1 + v^2)*[T1]");

  auto w = parse_element_expr(d, "[w=1,2,3,4,5,6] * T2");
  CHECK(w == HeckeElt::basis(AffinePerm::generator(d, 2)));

  // scalars scale the unit
  auto scaled = parse_element_expr(d, "3 * v^-2 * T1");
  CHECK(scaled ==
        HeckeElt::basis(AffinePerm::generator(d, 1))
            .scaled(Laurent::monomial(3, -2)));
  CHECK(parse_element_expr(d, "-v * T1") ==
        HeckeElt::basis(AffinePerm::generator(d, 1))
            .scaled(Laurent::monomial(-1, 1)));
  CHECK(parse_element_expr(d, "2v^2") ==
        HeckeElt::basis(AffinePerm::identity(d))
            .scaled(Laurent::monomial(2, 2)));
}

TEST_CASE("expression parse errors carry a position") {
  const int d = 3;
  try {
    parse_element_expr(d, "T1 * $");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    CHECK(e.index() == 5);
  }
  CHECK_THROWS_AS(parse_element_expr(d, "T9"), Error);        // beyond rank
  CHECK_THROWS_AS(parse_element_expr(d, "T1 T2"), Error);     // missing '*'
  CHECK_THROWS_AS(parse_element_expr(d, "[w=1,2]"), Error);   // short window
  CHECK_THROWS_AS(parse_element_expr(d, ""), Error);

  // invalid windows surface as invariant violations, not parse errors
  try {
    parse_element_expr(d, "[w=2,1,3,4,5,6]");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Symmetry);
  }
}
