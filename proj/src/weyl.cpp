#include "heckd/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "heckd/error.hpp"

namespace heckd {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_rank(int d) {
  if (d < 3)
    throw Error(Errc::RankTooSmall, "rank d must be at least 3, got " +
                                        std::to_string(d));
}

}  // namespace

AffinePerm AffinePerm::identity(int d) {
  check_rank(d);
  std::vector<long long> win(2 * d);
  for (int i = 0; i < 2 * d; ++i) win[i] = i + 1;
  return AffinePerm(d, std::move(win));
}

AffinePerm AffinePerm::generator(int d, GenLabel g) {
  check_rank(d);
  const int D = 2 * d;
  std::vector<long long> win(D);
  for (int i = 0; i < D; ++i) win[i] = i + 1;
  if (g == kRho) {
    win[0] = 0;
    win[d - 1] = d + 1;
    win[d] = d;
    win[D - 1] = D + 1;
  } else if (g == 0) {
    win[0] = -1;
    win[1] = 0;
    win[D - 2] = D + 1;
    win[D - 1] = D + 2;
  } else if (g == d) {
    win[d - 2] = d + 1;
    win[d] = d - 1;
    win[d - 1] = d + 2;
    win[d + 1] = d;
  } else if (g >= 1 && g <= d - 1) {
    std::swap(win[g - 1], win[g]);
    std::swap(win[D - g - 1], win[D - g]);
  } else {
    throw Error(Errc::Parse, "generator index out of range: " +
                                 std::to_string(g));
  }
  return AffinePerm(d, std::move(win));
}

AffinePerm AffinePerm::from_window(int d, std::vector<long long> window) {
  check_rank(d);
  const int D = 2 * d;
  if (static_cast<int>(window.size()) != D)
    throw Error(Errc::Parse, "window must have length " + std::to_string(D) +
                                 ", got " + std::to_string(window.size()));
  // Residue cover: the images must hit every class mod D exactly once.
  std::vector<int> seen(D, 0);
  for (int i = 0; i < D; ++i) {
    long long r = window[i] - D * floor_div(window[i] - 1, D);  // in [1,D]
    if (seen[r - 1]++)
      throw Error(Errc::ResidueCover,
                  "window value at position " + std::to_string(i + 1) +
                      " repeats residue class " + std::to_string(r) +
                      " mod " + std::to_string(D),
                  i + 1);
  }
  for (int i = 0; i < D; ++i) {
    if (window[i] + window[D - 1 - i] != D + 1)
      throw Error(Errc::Symmetry,
                  "symmetry w(i)+w(D+1-i)=D+1 fails at position " +
                      std::to_string(i + 1),
                  i + 1);
  }
  if (parity_of_window(d, window) != 0)
    throw Error(Errc::Parity,
                "window has odd crossing parity (N0+Nd is odd)");
  return AffinePerm(d, std::move(window));
}

long long AffinePerm::apply(long long i) const {
  const long long D = period();
  const long long k = floor_div(i - 1, D);
  return win_[i - k * D - 1] + k * D;
}

AffinePerm AffinePerm::compose(const AffinePerm& b) const {
  if (d_ != b.d_)
    throw Error(Errc::RankMismatch, "compose of ranks " + std::to_string(d_) +
                                        " and " + std::to_string(b.d_));
  std::vector<long long> win(period());
  for (int i = 1; i <= period(); ++i) win[i - 1] = apply(b.apply(i));
  return AffinePerm(d_, std::move(win));
}

AffinePerm AffinePerm::inverse() const {
  const long long D = period();
  std::vector<long long> win(D);
  for (long long j = 1; j <= D; ++j) {
    const long long val = win_[j - 1];
    const long long k = floor_div(val - 1, D);
    win[val - k * D - 1] = j - k * D;
  }
  return AffinePerm(d_, std::move(win));
}

bool AffinePerm::is_identity() const {
  for (int i = 0; i < period(); ++i)
    if (win_[i] != i + 1) return false;
  return true;
}

long long AffinePerm::shift_above() const {
  long long m = 0;
  for (int i = 0; i < period(); ++i) m = std::max(m, win_[i] - (i + 1));
  return m;
}

long long AffinePerm::shift_below() const {
  long long m = 0;
  for (int i = 0; i < period(); ++i) m = std::max(m, (i + 1) - win_[i]);
  return m;
}

long long AffinePerm::length() const {
  const long long D = period();
  const long long up = shift_above();    // w(k) <= k + up
  const long long down = shift_below();  // w(k) >= k - down
  // Inversions with the row in the window: pairs k < i, i in [1,D],
  // w(k) > w(i). Such k satisfy k >= w(i) + 1 - up.
  long long inversions = 0;
  for (long long i = 1; i <= D; ++i) {
    const long long wi = apply(i);
    for (long long k = wi + 1 - up; k < i; ++k)
      if (apply(k) > wi) ++inversions;
  }
  // Crossing corrections: #{i >= 1 : w(i) <= 0} needs i <= down, and
  // #{i >= d+1 : w(i) <= d} needs i <= d + down.
  long long n0 = 0, nd = 0;
  for (long long i = 1; i <= down; ++i)
    if (apply(i) <= 0) ++n0;
  for (long long i = d_ + 1; i <= d_ + down; ++i)
    if (apply(i) <= d_) ++nd;
  const long long twice = inversions - n0 - nd;
  if (twice < 0 || twice % 2 != 0)
    throw Error(Errc::Internal, "length formula did not clear the 1/2 factor");
  return twice / 2;
}

int AffinePerm::parity_of_window(int d, const std::vector<long long>& window) {
  const long long D = 2 * d;
  long long up = 0;
  for (int i = 0; i < D; ++i) up = std::max(up, window[i] - (i + 1));
  auto apply_at = [&](long long i) {
    const long long k = floor_div(i - 1, D);
    return window[i - k * D - 1] + k * D;
  };
  long long n0 = 0, nd = 0;
  // w(i) >= 1 with i <= 0 requires i >= 1 - up; same band below d.
  for (long long i = 1 - up; i <= 0; ++i)
    if (apply_at(i) >= 1) ++n0;
  for (long long i = d + 1 - up; i <= d; ++i)
    if (apply_at(i) >= d + 1) ++nd;
  return static_cast<int>((n0 + nd) % 2);
}

int AffinePerm::rho_coset() const {
  const long long up = shift_above();
  long long n0 = 0;
  for (long long i = 1 - up; i <= 0; ++i)
    if (apply(i) >= 1) ++n0;
  return static_cast<int>(n0 % 2);
}

std::pair<long long, long long> AffinePerm::move_rows(GenLabel g) const {
  if (g == kRho)
    throw Error(Errc::RhoHasNoDescent, "rho is length-preserving");
  if (g < 0 || g > d_)
    throw Error(Errc::Parse, "generator index out of range: " +
                                 std::to_string(g));
  if (g == 0) return {apply(-1), apply(1)};
  if (g == d_) return {apply(d_ - 1), apply(d_ + 1)};
  return {apply(g), apply(g + 1)};
}

bool AffinePerm::descent(GenLabel g) const {
  auto [k, l] = move_rows(g);
  return k > l;
}

AffinePerm AffinePerm::apply_move(GenLabel g) const {
  const int D = period();
  std::vector<long long> win = win_;
  if (g == kRho) {
    // case (d): rows 0 and d move to rows 1 and d+1
    win[0] = apply(0);
    win[d_ - 1] = win_[d_];
    win[d_] = win_[d_ - 1];
    win[D - 1] = apply(D + 1);
  } else if (g == 0) {
    // case (b): rows -1 and 1 exchange images (and rows 0, 2 by symmetry)
    win[0] = apply(-1);
    win[1] = apply(0);
    win[D - 2] = apply(D + 1);
    win[D - 1] = apply(D + 2);
  } else if (g == d_) {
    // case (c): rows d-1 and d+1 exchange images (and d, d+2 by symmetry)
    std::swap(win[d_ - 2], win[d_]);
    std::swap(win[d_ - 1], win[d_ + 1]);
  } else if (g >= 1 && g <= d_ - 1) {
    // case (a): rows g and g+1 exchange images (and D-g, D+1-g by symmetry)
    std::swap(win[g - 1], win[g]);
    std::swap(win[D - g - 1], win[D - g]);
  } else {
    throw Error(Errc::Parse, "generator index out of range: " +
                                 std::to_string(g));
  }
  return AffinePerm(d_, std::move(win));
}

ReducedWord AffinePerm::reduced_word() const {
  ReducedWord out;
  AffinePerm cur = *this;
  long long len = cur.length();
  while (len > 0) {
    GenLabel g = -2;
    for (GenLabel cand = 0; cand <= d_; ++cand) {
      if (cur.descent(cand)) {
        g = cand;
        break;
      }
    }
    if (g == -2)
      throw Error(Errc::Internal,
                  "no descent found at positive length for " + cur.str());
    out.letters.push_back(g);
    cur = cur.apply_move(g);
    --len;
  }
  std::reverse(out.letters.begin(), out.letters.end());
  if (cur == generator(d_, kRho)) {
    out.rho_prefix = true;
  } else if (!cur.is_identity()) {
    throw Error(Errc::Internal,
                "length-0 residue is neither e nor rho: " + cur.str());
  }
  return out;
}

long long AffinePerm::dominance_count(long long i, long long j) const {
  // #{k >= i : w(k) <= j}; w(k) >= k - shift_below forces k <= j + down.
  const long long down = shift_below();
  long long n = 0;
  for (long long k = i; k <= j + down; ++k)
    if (apply(k) <= j) ++n;
  return n;
}

bool AffinePerm::dominance_leq(const AffinePerm& other) const {
  if (d_ != other.d_)
    throw Error(Errc::RankMismatch,
                "bruhat comparison of ranks " + std::to_string(d_) + " and " +
                    std::to_string(other.d_));
  const long long D = period();
  const long long band =
      2 * (shift_above() + shift_below() + other.shift_above() +
           other.shift_below() + D);
  for (long long i = 1; i <= D; ++i)
    for (long long j = i - 1 - band; j <= i - 1; ++j)
      if (dominance_count(i, j) > other.dominance_count(i, j)) return false;
  return true;
}

bool AffinePerm::bruhat_leq(const AffinePerm& other) const {
  if (d_ != other.d_)
    throw Error(Errc::RankMismatch,
                "bruhat comparison of ranks " + std::to_string(d_) + " and " +
                    std::to_string(other.d_));
  if (rho_coset() != other.rho_coset()) return false;
  if (length() > other.length()) return false;
  if (!dominance_leq(other)) return false;
  // Column dominance is necessary but, in type D, not sufficient: windows can
  // dominate across a mirror tie without closure inclusion (e.g. at d = 3,
  // s2.s0 dominates s3.s0 though only 0 and 3 occur in words of s3.s0).
  // Comparability is therefore confirmed by the descent-lifting walk
  //   y <= w  iff  (ys < y ? ys <= ws : y <= ws)   for any descent s of w.
  AffinePerm y = *this;
  AffinePerm w = other;
  long long ly = y.length();
  long long lw = w.length();
  while (lw > 0) {
    GenLabel s = -2;
    for (GenLabel cand = 0; cand <= d_; ++cand)
      if (w.descent(cand)) {
        s = cand;
        break;
      }
    if (s == -2)
      throw Error(Errc::Internal, "no descent at positive length for " +
                                      w.str());
    AffinePerm ys = y.apply_move(s);
    const long long lys = ys.length();
    if (lys < ly) {
      y = std::move(ys);
      ly = lys;
    }
    w = w.apply_move(s);
    --lw;
  }
  return y == w;
}

std::strong_ordering AffinePerm::operator<=>(const AffinePerm& o) const {
  if (auto c = d_ <=> o.d_; c != 0) return c;
  for (int i = 0; i < period(); ++i)
    if (auto c = win_[i] <=> o.win_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string AffinePerm::str() const {
  std::ostringstream os;
  os << "d=" << d_ << ";w=[";
  for (int i = 0; i < period(); ++i) {
    if (i) os << ",";
    os << win_[i];
  }
  os << "]";
  return os.str();
}

AffinePerm replay_word(int d, const ReducedWord& word) {
  AffinePerm cur = AffinePerm::identity(d);
  if (word.rho_prefix) cur = cur.apply_move(kRho);
  for (GenLabel g : word.letters) cur = cur.apply_move(g);
  return cur;
}

std::vector<AffinePerm> enumerate_up_to_length(int d, long long max_length) {
  if (max_length < 0) return {};
  std::set<AffinePerm> seen;
  std::deque<AffinePerm> queue;
  auto push = [&](const AffinePerm& w) {
    if (w.length() <= max_length && seen.insert(w).second) queue.push_back(w);
  };
  push(AffinePerm::identity(d));
  push(AffinePerm::generator(d, kRho));
  while (!queue.empty()) {
    AffinePerm w = queue.front();
    queue.pop_front();
    for (GenLabel g = 0; g <= d; ++g) push(w.apply_move(g));
    push(w.apply_move(kRho));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Composition> enumerate_compositions(int n, int d) {
  check_rank(d);
  if (n < 2 || n % 2 != 0)
    throw Error(Errc::Parse,
                "n must be a positive even integer, got " + std::to_string(n));
  const int r = n / 2;
  std::vector<Composition> out;
  std::vector<long long> head(r, 0);
  // All nonnegative head tuples summing to d, reflected to a palindrome.
  auto emit = [&]() {
    Composition c;
    c.n = n;
    c.lambda = head;
    c.lambda.resize(n);
    for (int i = 0; i < r; ++i) c.lambda[n - 1 - i] = head[i];
    out.push_back(std::move(c));
  };
  // Lexicographic recursion over head entries.
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == r - 1) {
      head[pos] = remaining;
      emit();
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      head[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heckd
