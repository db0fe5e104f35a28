#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckd/hecke.hpp"
#include "heckd/laurent.hpp"
#include "heckd/weyl.hpp"

namespace heckd {

// Memoized association (y, w) -> P_{y,w} together with the canonical
// elements computed so far. Entries are published once; recomputation must
// reproduce the stored value (uniqueness of the canonical basis), which the
// table asserts.
//
// Stored invariants: P_{w,w} = 1, off-diagonal entries lie in v^-1 Z[v^-1],
// and entries exist only for Bruhat-comparable pairs.
class KLTable {
 public:
  explicit KLTable(int d);

  int rank() const { return d_; }
  const std::map<std::pair<AffinePerm, AffinePerm>, Laurent>& entries() const {
    return entries_;
  }

  bool has_polynomial(const AffinePerm& y, const AffinePerm& w) const;
  Laurent polynomial(const AffinePerm& y, const AffinePerm& w) const;
  // Publish-once insert; re-insertion with a different value throws.
  void record(const AffinePerm& y, const AffinePerm& w, const Laurent& p);

  bool has_canonical(const AffinePerm& w) const;
  const HeckeElt& canonical_ref(const AffinePerm& w) const;
  void store_canonical(const AffinePerm& w, HeckeElt c);

 private:
  int d_;
  std::map<std::pair<AffinePerm, AffinePerm>, Laurent> entries_;
  std::map<AffinePerm, HeckeElt> canonical_;
};

// The canonical basis element {w}: the unique bar-invariant element
//   v^{-l(w)}[T_w] + sum_{y < w} P_{y,w} v^{-l(y)} [T_y]
// with P_{y,w} in v^-1 Z[v^-1]. Computed by the classical recursion
// ({ws} * {s} followed by bar-symmetric corrections) on the affine Weyl
// subgroup and extended to the rho-coset by left convolution with [T_rho].
// All P entries encountered are recorded in the table.
HeckeElt kl_canonical(const AffinePerm& w, KLTable& table);

// P_{y,w}: zero unless y is Bruhat-below w, one on the diagonal.
Laurent kl_polynomial(const AffinePerm& y, const AffinePerm& w,
                      KLTable& table);

// Coefficient of v^-1 in P_{y,w}.
Int kl_mu(const AffinePerm& y, const AffinePerm& w, KLTable& table);

// Expansion of x in the canonical basis by back-substitution from the top.
std::map<AffinePerm, Laurent> canonical_expand(const HeckeElt& x,
                                               KLTable& table);

struct PositivityViolation {
  AffinePerm x, y, z;
  Laurent coeff;
};

struct PositivityReport {
  int d = 0;
  long long max_length = 0;
  long long pairs_checked = 0;
  long long coeffs_checked = 0;
  std::vector<PositivityViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Expands {x} * {y} in the canonical basis for every pair with lengths at
// most max_length and audits that each structure constant lies in N[v,v^-1].
PositivityReport kl_structure_positivity(int d, long long max_length,
                                         KLTable& table);

// Line-delimited cache records {"d":..,"y":[..],"w":[..],"p":[[k,c],..]},
// sorted by (l(w), window of w, window of y); byte-stable across runs.
void kl_cache_save(const KLTable& table, std::ostream& os);
void kl_cache_save_file(const KLTable& table, const std::string& path);
KLTable kl_cache_load(std::istream& is);
KLTable kl_cache_load_file(const std::string& path);
// Rank-checked union; conflicting values are rejected as malformed data.
void kl_cache_merge(KLTable& into, const KLTable& other);

}  // namespace heckd
