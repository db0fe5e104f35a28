#pragma once

#include <cstddef>
#include <map>

#include "heckd/hecke.hpp"
#include "heckd/weyl.hpp"

namespace heckd::oracle {

// Brute-force reference implementations used only for cross-validation. None
// of them calls the operation it validates: lengths come from a direct pair
// count with a wide conservative scan radius, Bruhat from the subword
// property, multiplication from the abstract length-comparison rule, and
// canonical elements from a bar-fixpoint triangular solve. Moves are taken
// through compose() with generator windows, not through the row-exchange
// shortcut. Exponential-time behaviour is acceptable here.

// Inversion pair count with the two crossing corrections, scanned over a
// radius derived independently of the production truncation.
long long oracle_length(const AffinePerm& w);

// Subword property on a reduced word of w; rho-prefixes must agree.
bool oracle_bruhat(const AffinePerm& y, const AffinePerm& w);

// Iwahori rule driven by oracle_length comparisons.
HeckeElt oracle_mult(const HeckeElt& a, const HeckeElt& b);

inline constexpr std::size_t kDefaultMaxInterval = 4096;

// Bar-fixpoint solver: sets up bar-invariance over the Bruhat interval below
// w and solves for the unique unitriangular solution with off-diagonal
// coefficients in v^-1 Z[v^-1]. Caches interval data so repeated calls stay
// affordable; throws interval-too-large beyond max_interval elements.
class CanonicalSolver {
 public:
  explicit CanonicalSolver(int d,
                           std::size_t max_interval = kDefaultMaxInterval);

  HeckeElt canonical(const AffinePerm& w);

 private:
  long long len(const AffinePerm& w);
  ReducedWord word(const AffinePerm& w);
  bool leq(const AffinePerm& y, const AffinePerm& w);
  HeckeElt fold_gen(GenLabel g, const HeckeElt& x);
  HeckeElt fold_gen_inv(GenLabel g, const HeckeElt& x);
  // bar of the basis symbol [T_y] = (T_{y^-1})^-1, in the [T] basis.
  const HeckeElt& bar_basis(const AffinePerm& y);

  int d_;
  std::size_t max_interval_;
  std::map<AffinePerm, long long> len_cache_;
  std::map<AffinePerm, HeckeElt> bar_cache_;
  std::map<AffinePerm, HeckeElt> canonical_cache_;
  std::map<long long, std::vector<AffinePerm>> pool_cache_;
};

// One-shot convenience wrapper around CanonicalSolver.
HeckeElt oracle_canonical(const AffinePerm& w,
                          std::size_t max_interval = kDefaultMaxInterval);

}  // namespace heckd::oracle
