#include "heckd/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "heckd/error.hpp"

namespace heckd {

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::map<long long, Int> acc;
  for (auto& [k, c] : terms) acc[k] += c;
  Laurent out;
  for (auto& [k, c] : acc) {
    if (c != 0) out.terms_.emplace_back(k, std::move(c));
  }
  return out;
}

Laurent Laurent::constant(Int c) { return monomial(std::move(c), 0); }

Laurent Laurent::monomial(Int c, long long k) {
  Laurent out;
  if (c != 0) out.terms_.emplace_back(k, std::move(c));
  return out;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int Laurent::coeff(long long k) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), k,
      [](const Term& t, long long key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Int(0);
}

long long Laurent::min_exp() const {
  if (terms_.empty()) throw Error(Errc::Internal, "min_exp of zero polynomial");
  return terms_.front().first;
}

long long Laurent::max_exp() const {
  if (terms_.empty()) throw Error(Errc::Internal, "max_exp of zero polynomial");
  return terms_.back().first;
}

Laurent Laurent::operator-() const {
  Laurent out;
  out.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.terms_.emplace_back(k, -c);
  return out;
}

Laurent Laurent::operator+(const Laurent& o) const {
  // Merge of two sorted term lists.
  Laurent out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (terms_.empty() || o.terms_.empty()) return Laurent();
  std::map<long long, Int> acc;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) acc[ka + kb] += ca * cb;
  Laurent out;
  for (auto& [k, c] : acc) {
    if (c != 0) out.terms_.emplace_back(k, std::move(c));
  }
  return out;
}

std::strong_ordering Laurent::operator<=>(const Laurent& o) const {
  const size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].first <=> o.terms_[i].first; c != 0) return c;
    if (terms_[i].second < o.terms_[i].second) return std::strong_ordering::less;
    if (terms_[i].second > o.terms_[i].second) return std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

Laurent Laurent::bar() const {
  Laurent out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.emplace_back(-it->first, it->second);
  return out;
}

Int Laurent::eval_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool Laurent::is_nonneg() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Laurent::in_vinv() const {
  return terms_.empty() || terms_.back().first <= -1;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "v";
      if (k != 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace heckd
