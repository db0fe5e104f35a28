#include "heckd/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "heckd/error.hpp"

namespace heckd::oracle {

namespace {

const Laurent& v_sq() {
  static const Laurent p = Laurent::v_pow(2);
  return p;
}

const Laurent& v_sq_minus_one() {
  static const Laurent p = Laurent::v_pow(2) - Laurent::one();
  return p;
}

AffinePerm gen_of(const AffinePerm& w, GenLabel g) {
  return AffinePerm::generator(w.rank(), g);
}

}  // namespace

long long oracle_length(const AffinePerm& w) {
  const long long D = w.period();
  long long spread = 0;
  for (int i = 0; i < D; ++i)
    spread = std::max(spread, std::llabs(w.window()[i] - (i + 1)));
  const long long radius = D + 2 * spread + 2;
  long long inversions = 0;
  for (long long i = 1; i <= D; ++i) {
    const long long wi = w.apply(i);
    for (long long k = i - radius; k < i; ++k)
      if (w.apply(k) > wi) ++inversions;
  }
  long long n0 = 0, nd = 0;
  for (long long i = 1; i <= radius; ++i)
    if (w.apply(i) <= 0) ++n0;
  for (long long i = w.rank() + 1; i <= w.rank() + radius; ++i)
    if (w.apply(i) <= w.rank()) ++nd;
  const long long twice = inversions - n0 - nd;
  if (twice < 0 || twice % 2 != 0)
    throw Error(Errc::Internal, "oracle length did not clear the 1/2 factor");
  return twice / 2;
}

bool oracle_bruhat(const AffinePerm& y, const AffinePerm& w) {
  if (y.rank() != w.rank())
    throw Error(Errc::RankMismatch,
                "bruhat oracle on ranks " + std::to_string(y.rank()) +
                    " and " + std::to_string(w.rank()));
  if (oracle_length(y) > oracle_length(w)) return false;
  // Lifting walk over a reduced word of w, from the last letter backwards:
  // with s a descent of w, y <= w iff (ys < y ? ys <= ws : y <= ws).
  const ReducedWord rw = w.reduced_word();
  AffinePerm cur = y;
  long long cur_len = oracle_length(cur);
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) {
    AffinePerm moved = cur.compose(gen_of(cur, *it));
    const long long moved_len = oracle_length(moved);
    if (moved_len < cur_len) {
      cur = std::move(moved);
      cur_len = moved_len;
    }
  }
  const AffinePerm residue = rw.rho_prefix
                                 ? AffinePerm::generator(w.rank(), kRho)
                                 : AffinePerm::identity(w.rank());
  return cur == residue;
}

namespace {

// Factorization by descent search with oracle_length comparisons only.
ReducedWord oracle_word(const AffinePerm& w) {
  ReducedWord out;
  AffinePerm cur = w;
  long long len = oracle_length(cur);
  while (len > 0) {
    GenLabel found = -2;
    for (GenLabel g = 0; g <= cur.rank(); ++g) {
      AffinePerm moved = cur.compose(gen_of(cur, g));
      if (oracle_length(moved) == len - 1) {
        found = g;
        cur = std::move(moved);
        break;
      }
    }
    if (found == -2)
      throw Error(Errc::Internal, "oracle found no descent at " + cur.str());
    out.letters.push_back(found);
    --len;
  }
  std::reverse(out.letters.begin(), out.letters.end());
  if (cur == AffinePerm::generator(w.rank(), kRho)) {
    out.rho_prefix = true;
  } else if (!cur.is_identity()) {
    throw Error(Errc::Internal, "oracle length-0 residue is " + cur.str());
  }
  return out;
}

HeckeElt oracle_fold(GenLabel g, const HeckeElt& x) {
  HeckeElt out(x.rank());
  for (const auto& [w, c] : x.terms()) {
    AffinePerm moved = w.compose(gen_of(w, g));
    if (g == kRho) {
      out.add_term(moved, c);
    } else if (oracle_length(moved) > oracle_length(w)) {
      out.add_term(moved, c);
    } else {
      out.add_term(moved, c * v_sq());
      out.add_term(w, c * v_sq_minus_one());
    }
  }
  return out;
}

}  // namespace

HeckeElt oracle_mult(const HeckeElt& a, const HeckeElt& b) {
  if (a.rank() != b.rank())
    throw Error(Errc::RankMismatch,
                "oracle product of ranks " + std::to_string(a.rank()) +
                    " and " + std::to_string(b.rank()));
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) {
    const ReducedWord rw = oracle_word(w);
    HeckeElt acc = b;
    if (rw.rho_prefix) acc = oracle_fold(kRho, acc);
    for (GenLabel g : rw.letters) acc = oracle_fold(g, acc);
    for (const auto& [u, p] : acc.terms()) out.add_term(u, p * c);
  }
  return out;
}

CanonicalSolver::CanonicalSolver(int d, std::size_t max_interval)
    : d_(d), max_interval_(max_interval) {
  if (d < 3)
    throw Error(Errc::RankTooSmall,
                "canonical solver needs d >= 3, got " + std::to_string(d));
}

long long CanonicalSolver::len(const AffinePerm& w) {
  auto it = len_cache_.find(w);
  if (it != len_cache_.end()) return it->second;
  long long l = oracle_length(w);
  len_cache_.emplace(w, l);
  return l;
}

ReducedWord CanonicalSolver::word(const AffinePerm& w) {
  ReducedWord out;
  AffinePerm cur = w;
  long long l = len(cur);
  while (l > 0) {
    GenLabel found = -2;
    for (GenLabel g = 0; g <= d_; ++g) {
      AffinePerm moved = cur.compose(gen_of(cur, g));
      if (len(moved) == l - 1) {
        found = g;
        cur = std::move(moved);
        break;
      }
    }
    if (found == -2)
      throw Error(Errc::Internal, "oracle found no descent at " + cur.str());
    out.letters.push_back(found);
    --l;
  }
  std::reverse(out.letters.begin(), out.letters.end());
  out.rho_prefix = (cur == AffinePerm::generator(d_, kRho));
  return out;
}

bool CanonicalSolver::leq(const AffinePerm& y, const AffinePerm& w) {
  if (len(y) > len(w)) return false;
  const ReducedWord rw = word(w);
  AffinePerm cur = y;
  long long cur_len = len(cur);
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) {
    AffinePerm moved = cur.compose(gen_of(cur, *it));
    const long long moved_len = len(moved);
    if (moved_len < cur_len) {
      cur = std::move(moved);
      cur_len = moved_len;
    }
  }
  const AffinePerm residue = rw.rho_prefix ? AffinePerm::generator(d_, kRho)
                                           : AffinePerm::identity(d_);
  return cur == residue;
}

HeckeElt CanonicalSolver::fold_gen(GenLabel g, const HeckeElt& x) {
  HeckeElt out(d_);
  for (const auto& [w, c] : x.terms()) {
    AffinePerm moved = w.compose(gen_of(w, g));
    if (g == kRho) {
      out.add_term(moved, c);
    } else if (len(moved) > len(w)) {
      out.add_term(moved, c);
    } else {
      out.add_term(moved, c * v_sq());
      out.add_term(w, c * v_sq_minus_one());
    }
  }
  return out;
}

HeckeElt CanonicalSolver::fold_gen_inv(GenLabel g, const HeckeElt& x) {
  if (g == kRho) return fold_gen(g, x);
  static const Laurent vm2 = Laurent::v_pow(-2);
  static const Laurent vm2_minus_one = Laurent::v_pow(-2) - Laurent::one();
  return fold_gen(g, x).scaled(vm2) + x.scaled(vm2_minus_one);
}

const HeckeElt& CanonicalSolver::bar_basis(const AffinePerm& y) {
  auto it = bar_cache_.find(y);
  if (it != bar_cache_.end()) return it->second;
  const ReducedWord rw = word(y);
  HeckeElt acc = HeckeElt::basis(AffinePerm::identity(d_));
  if (rw.rho_prefix) acc = fold_gen(kRho, acc);
  for (GenLabel g : rw.letters) acc = fold_gen_inv(g, acc);
  return bar_cache_.emplace(y, std::move(acc)).first->second;
}

HeckeElt CanonicalSolver::canonical(const AffinePerm& w) {
  if (w.rank() != d_)
    throw Error(Errc::RankMismatch, "solver rank " + std::to_string(d_) +
                                        ", element rank " +
                                        std::to_string(w.rank()));
  if (auto it = canonical_cache_.find(w); it != canonical_cache_.end())
    return it->second;

  const long long lw = len(w);
  auto pool_it = pool_cache_.find(lw);
  if (pool_it == pool_cache_.end())
    pool_it = pool_cache_.emplace(lw, enumerate_up_to_length(d_, lw)).first;
  std::vector<AffinePerm> interval;
  for (const AffinePerm& y : pool_it->second)
    if (leq(y, w)) interval.push_back(y);
  if (interval.size() > max_interval_)
    throw Error(Errc::IntervalTooLarge,
                "interval below " + w.str() + " has " +
                    std::to_string(interval.size()) + " elements (bound " +
                    std::to_string(max_interval_) + ")");
  // Longest first; p_z is final once every longer element has contributed.
  std::sort(interval.begin(), interval.end(),
            [&](const AffinePerm& a, const AffinePerm& b) {
              const long long la = len(a), lb = len(b);
              if (la != lb) return la > lb;
              return a < b;
            });

  std::map<AffinePerm, Laurent> p;
  std::map<AffinePerm, Laurent> q;  // accumulators for p_y - bar(p_y)
  for (const AffinePerm& z : interval) {
    Laurent pz;
    if (z == w) {
      pz = Laurent::one();
    } else {
      // p_z is the strictly negative part of q_z; q_z must be
      // antisymmetric under bar with no constant term.
      const Laurent qz = q.count(z) ? q[z] : Laurent::zero();
      std::vector<Laurent::Term> neg;
      for (const auto& [k, c] : qz.terms()) {
        if (k <= -1) neg.emplace_back(k, c);
        if (k == 0 && c != 0)
          throw Error(Errc::Internal,
                      "bar fixpoint has constant defect at " + z.str());
      }
      pz = Laurent::from_terms(std::move(neg));
      if (qz != pz - pz.bar())
        throw Error(Errc::Internal,
                    "bar fixpoint defect is not antisymmetric at " + z.str());
    }
    p[z] = pz;
    // Publish z's contribution R_{y,z} * bar(p_z) to every lower y.
    const HeckeElt& bz = bar_basis(z);
    const Laurent barpz = pz.bar();
    const long long lz = len(z);
    for (const auto& [y, b] : bz.terms()) {
      if (y == z) continue;
      const Laurent r = b * Laurent::v_pow(len(y) + lz);
      auto [it, inserted] = q.emplace(y, r * barpz);
      if (!inserted) it->second += r * barpz;
    }
    if (bz.coeff(z) * Laurent::v_pow(2 * lz) != Laurent::one())
      throw Error(Errc::Internal, "bar matrix is not unitriangular at " +
                                      z.str());
  }

  // Every accumulated defect must belong to the interval we solved over.
  for (const auto& [y, qy] : q)
    if (!qy.is_zero() && !p.count(y))
      throw Error(Errc::Internal,
                  "bar support escaped the Bruhat interval at " + y.str());

  HeckeElt out(d_);
  for (const auto& [y, py] : p)
    out.add_term(y, py * Laurent::v_pow(-len(y)));
  return canonical_cache_.emplace(w, std::move(out)).first->second;
}

HeckeElt oracle_canonical(const AffinePerm& w, std::size_t max_interval) {
  CanonicalSolver solver(w.rank(), max_interval);
  return solver.canonical(w);
}

}  // namespace heckd::oracle
