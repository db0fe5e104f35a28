#pragma once

#include <compare>
#include <string>
#include <vector>

namespace heckd {

// Generator labels: 0..d are the simple generators s_0..s_d, kRho is the
// length-zero generator rho.
using GenLabel = int;
inline constexpr GenLabel kRho = -1;

struct ReducedWord {
  bool rho_prefix = false;
  std::vector<GenLabel> letters;  // simple generators only
};

// A periodic symmetric permutation of the integers, the combinatorial form of
// a monomial matrix sigma with sigma[i][j] = 1 iff j = w(i).
//
// Stored as the window w(1..D), D = 2d. The full map is determined by
//   w(i + D) = w(i) + D        (periodicity)
//   w(1 - i) = 1 - w(i)        (central symmetry)
// and membership additionally requires the even-crossing parity
//   N0(w) + Nd(w) = 0 mod 2, where N0 = #{i <= 0 : w(i) >= 1} and
//   Nd = #{i <= d : w(i) >= d+1}.
//
// Composition convention: compose(a, b)(i) = a(b(i)). Left convolution by a
// generator symbol in the Hecke algebra acts on windows as the exchange of the
// two designated row images, which under this convention is composition with
// the generator window on the right; apply_move realizes that exchange
// directly. Reduced words are recorded in replay order: folding the moves
// rho^eps, s_{a_1}, ..., s_{a_m} onto the identity reproduces w, i.e.
// w = rho^eps . s_{a_1} . ... . s_{a_m} as functions.
//
// Values are immutable; all operations are pure.
class AffinePerm {
 public:
  static AffinePerm identity(int d);
  // Generator windows. s_h (1<=h<=d-1) swaps h<->h+1 and D-h<->D-h+1;
  // s_0 sends 1,2 to -1,0 (and D-1,D to D+1,D+2); s_d swaps d-1<->d+1 and
  // d<->d+2; rho sends 1 to 0, swaps d<->d+1 and sends D to D+1.
  static AffinePerm generator(int d, GenLabel g);
  // Validates rank, residue cover, symmetry and parity; throws Error with the
  // failing window index otherwise.
  static AffinePerm from_window(int d, std::vector<long long> window);

  int rank() const { return d_; }
  int period() const { return 2 * d_; }
  const std::vector<long long>& window() const { return win_; }

  // w(i) for any integer i, via periodic extension of the window.
  long long apply(long long i) const;
  // compose(b)(i) = (*this)(b(i))
  AffinePerm compose(const AffinePerm& b) const;
  AffinePerm inverse() const;
  bool is_identity() const;

  // Coxeter length: the orbit-dimension formula
  //   d(sigma) = 1/2 ( sum_{i>=k, j<l, i in [1,D]} sigma_ij sigma_kl
  //                    - sum_{i>=1>j} sigma_ij - sum_{i>=d+1>j} sigma_ij )
  // evaluated with finite truncation (the band |w(i)-i| is bounded on the
  // window and the formula's sums vanish outside it).
  long long length() const;

  // (N0 + Nd) mod 2; total on any window, also pre-validation ones.
  static int parity_of_window(int d, const std::vector<long long>& window);
  int parity() const { return parity_of_window(d_, win_); }
  // N0 mod 2; 0 on the affine Weyl subgroup, 1 on its rho-coset.
  int rho_coset() const;

  // The two designated row images (k, l) of the generator multiplication
  // rule: rows (h, h+1) for 1<=h<=d-1, rows (-1, 1) for s_0, rows (d-1, d+1)
  // for s_d. Requires g != rho.
  std::pair<long long, long long> move_rows(GenLabel g) const;
  // True iff the g-move lowers length by one, i.e. k > l. Requires g != rho.
  bool descent(GenLabel g) const;
  // The image-exchange move of the multiplication rule (for rho: the
  // length-preserving swap of case (d)). Equals compose with the generator
  // window on the right.
  AffinePerm apply_move(GenLabel g) const;

  // Greedy factorization: repeatedly strip the smallest descent; the length-0
  // residue decides rho_prefix. The returned word replays to w and has
  // exactly length() letters.
  ReducedWord reduced_word() const;

  // The column-sum dominance criterion alone:
  //   sum_{k>=i, l<=j} sigma_kl <= same for other, for all i > j,
  // checked over a finite certificate band. Necessary for bruhat_leq but in
  // type D strictly coarser than it.
  bool dominance_leq(const AffinePerm& other) const;
  // Bruhat (orbit-closure) order: dominance within a rho-coset, with
  // comparability confirmed by the descent-lifting walk. Windows in
  // different rho-cosets are incomparable (they live on different
  // components).
  bool bruhat_leq(const AffinePerm& other) const;

  bool operator==(const AffinePerm& o) const {
    return d_ == o.d_ && win_ == o.win_;
  }
  std::strong_ordering operator<=>(const AffinePerm& o) const;

  // `d=3;w=[7,2,3,4,5,0]`
  std::string str() const;

  // max over the window of w(i)-i and of i-w(i); both >= 0.
  long long shift_above() const;
  long long shift_below() const;
  // #{k >= i : w(k) <= j}, the Bruhat counting function.
  long long dominance_count(long long i, long long j) const;

 private:
  AffinePerm(int d, std::vector<long long> win)
      : d_(d), win_(std::move(win)) {}

  int d_ = 0;
  std::vector<long long> win_;
};

// Replay a reduced word from the identity through apply_move.
AffinePerm replay_word(int d, const ReducedWord& word);

// All w with length(w) <= max_length, by breadth-first closure of
// {identity, rho} under the generator moves. Sorted.
std::vector<AffinePerm> enumerate_up_to_length(int d, long long max_length);

// Weight sequence lambda_1..lambda_n with lambda_i = lambda_{n+1-i} and total
// 2d (the palindromic periodic compositions indexing n-step flag types).
struct Composition {
  int n = 0;
  std::vector<long long> lambda;

  bool operator==(const Composition& o) const {
    return n == o.n && lambda == o.lambda;
  }
  auto operator<=>(const Composition& o) const = default;
};

// All such weights for the given even n and rank d, lexicographically sorted.
std::vector<Composition> enumerate_compositions(int n, int d);

}  // namespace heckd
