#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "heckd/laurent.hpp"
#include "heckd/weyl.hpp"

namespace heckd {

// A finite A-linear combination of basis symbols [sigma], sigma in Sigma_d.
// Canonical form: no zero coefficients are stored; term order is the window
// order of the keys, which fixes serialization byte-for-byte.
class HeckeElt {
 public:
  explicit HeckeElt(int d) : d_(d) {}
  static HeckeElt basis(const AffinePerm& w);

  int rank() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<AffinePerm, Laurent>& terms() const { return terms_; }
  Laurent coeff(const AffinePerm& w) const;

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const Laurent& c) const;

  // Adds c to the coefficient of [w], dropping it if the sum vanishes.
  void add_term(const AffinePerm& w, const Laurent& c);

  bool operator==(const HeckeElt& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int d_;
  std::map<AffinePerm, Laurent> terms_;
};

// Left convolution by a generator symbol, per the generator multiplication
// rule: for g != rho each term [sigma] contributes
//   v^xi [sigma'] + (v^xi - 1)[sigma],
// where sigma' is the two-row image exchange and xi = 2 iff the designated
// row images satisfy k > l; for rho the move is applied with coefficient 1.
HeckeElt mult_gen(GenLabel g, const HeckeElt& a);

// Right convolution by the inverse generator symbol,
// T_g^{-1} = v^{-2} T_g - (1 - v^{-2}); used by the bar involution.
HeckeElt mult_gen_inv(GenLabel g, const HeckeElt& a);

// Convolution product. Each basis term of `a` is factored by reduced_word and
// its generator moves are folded onto `b` (rho first, then the letters in
// word order). Bilinear and associative with [e] as two-sided unit.
HeckeElt mult(const HeckeElt& a, const HeckeElt& b);

// The bar involution: v |-> v^{-1} on coefficients and
// [sigma_w] |-> inverse of [sigma_{w^{-1}}], computed through a reduced word
// with T_g^{-1} folds. A ring involution; fixed on [e] and [T_rho].
HeckeElt bar(const HeckeElt& a);

// Coefficients evaluated at v = 1 (classical limit; multiplication then
// matches window composition).
std::map<AffinePerm, Int> specialize_one(const HeckeElt& a);

struct RelationCheck {
  std::string name;
  bool ok = false;
};

struct RelationReport {
  int d = 0;
  std::vector<RelationCheck> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// The extended affine Hecke presentation for rank d, with the Coxeter orders
// read off the affine D diagram: braids (j,j+1) for 1<=j<=d-2, (0,2) and
// (d-2,d); all other simple pairs commute. For d = 3 the diagram closes into
// the four-cycle 0-2-1-3-0, so (0,3) is a braid pair as well.
// Every relation is checked both as a window identity and as an exact
// HeckeElt identity; the report also covers the quadratic relations,
// T_rho^2 = 1 and the rho-conjugation relations.
RelationReport verify_relations(int d);

// Same suite with an injectable generator map (for fault-injection tests).
RelationReport run_relation_suite(
    int d, const std::function<AffinePerm(GenLabel)>& gen);

}  // namespace heckd
