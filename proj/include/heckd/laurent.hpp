#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heckd {

using Int = boost::multiprecision::cpp_int;

// Exact element of Z[v, v^-1].
//
// Stored in normal form: strictly ascending exponents, no zero coefficients.
// The zero polynomial is the empty term list. Coefficients are
// arbitrary-precision integers so positivity audits are exact at any scale.
// Values are immutable after construction and safe to share across threads.
class Laurent {
 public:
  using Term = std::pair<long long, Int>;  // (exponent, coefficient)

  Laurent() = default;  // zero

  // Normalizes: merges duplicate exponents, drops zeros, sorts.
  static Laurent from_terms(std::vector<Term> terms);
  static Laurent constant(Int c);
  static Laurent monomial(Int c, long long k);
  // v^k
  static Laurent v_pow(long long k) { return monomial(1, k); }
  static Laurent one() { return constant(1); }
  static Laurent zero() { return Laurent(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  Int coeff(long long k) const;  // 0 when absent

  long long min_exp() const;  // requires non-zero
  long long max_exp() const;  // requires non-zero

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
  std::strong_ordering operator<=>(const Laurent& o) const;

  // v |-> v^-1
  Laurent bar() const;
  // Sum of coefficients (evaluation at v = 1).
  Int eval_one() const;
  // True iff every coefficient is >= 0 (membership in N[v,v^-1]).
  bool is_nonneg() const;
  // True iff all exponents are <= -1 (membership in v^-1 Z[v^-1]).
  bool in_vinv() const;

  // Text form: ascending `c*v^k` terms, e.g. `-1 + v^2`; zero prints `0`.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

inline Laurent operator*(const Int& c, const Laurent& p) {
  return Laurent::constant(c) * p;
}

}  // namespace heckd
