#include "heckd/io.hpp"

#include <cctype>
#include <limits>

#include "heckd/error.hpp"

namespace heckd {

namespace {

Json int_to_json(const Int& c) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (c >= lo && c <= hi) return Json(c.convert_to<long long>());
  return Json(c.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error(Errc::MalformedRecord,
              "coefficient must be an integer or a decimal string");
}

}  // namespace

Json laurent_to_json(const Laurent& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json pair = Json::array();
    pair.push_back(k);
    pair.push_back(int_to_json(c));
    out.push_back(std::move(pair));
  }
  return out;
}

Laurent laurent_from_json(const Json& j) {
  if (!j.is_array())
    throw Error(Errc::MalformedRecord, "laurent form must be an array");
  std::vector<Laurent::Term> terms;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Errc::MalformedRecord, "laurent term must be [k, c]");
    terms.emplace_back(pair[0].get<long long>(), int_from_json(pair[1]));
  }
  return Laurent::from_terms(std::move(terms));
}

Json window_to_json(const AffinePerm& w) {
  Json out = Json::array();
  for (long long v : w.window()) out.push_back(v);
  return out;
}

Json perm_to_json(const AffinePerm& w) {
  Json out;
  out["d"] = w.rank();
  out["w"] = window_to_json(w);
  return out;
}

AffinePerm perm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("w"))
    throw Error(Errc::MalformedRecord, "window form must be {\"d\":..,\"w\":[..]}");
  return AffinePerm::from_window(j.at("d").get<int>(),
                                 j.at("w").get<std::vector<long long>>());
}

Json hecke_to_json(const HeckeElt& x) {
  Json out;
  out["d"] = x.rank();
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    Json t;
    t["w"] = window_to_json(w);
    t["coeff"] = laurent_to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

HeckeElt hecke_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
    throw Error(Errc::MalformedRecord,
                "hecke form must be {\"d\":..,\"terms\":[..]}");
  const int d = j.at("d").get<int>();
  HeckeElt out(d);
  for (const Json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("w") || !t.contains("coeff"))
      throw Error(Errc::MalformedRecord, "term must be {\"w\":..,\"coeff\":..}");
    out.add_term(
        AffinePerm::from_window(d, t.at("w").get<std::vector<long long>>()),
        laurent_from_json(t.at("coeff")));
  }
  return out;
}

std::vector<long long> parse_window_csv(const std::string& text) {
  std::vector<long long> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string piece = text.substr(pos, next - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw Error(Errc::Parse,
                  "window entry '" + piece + "' is not an integer",
                  static_cast<long long>(pos));
    }
    pos = next + 1;
  }
  if (out.empty())
    throw Error(Errc::Parse, "empty window", 0);
  return out;
}

namespace {

class ExprScanner {
 public:
  ExprScanner(int d, const std::string& s) : d_(d), s_(s) {}

  HeckeElt parse() {
    HeckeElt acc = parse_factor();
    skip_ws();
    while (pos_ < s_.size()) {
      expect('*');
      HeckeElt rhs = parse_factor();
      acc = mult(acc, rhs);
      skip_ws();
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, size_t at) {
    throw Error(Errc::Parse, msg + " at position " + std::to_string(at),
                static_cast<long long>(at));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool at_digit() const {
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  long long parse_int() {
    skip_ws();
    const size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (!at_digit()) fail("expected an integer", start);
    long long value = 0;
    while (at_digit()) value = value * 10 + (s_[pos_++] - '0');
    return neg ? -value : value;
  }

  HeckeElt parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a factor", pos_);
    const char c = s_[pos_];
    if (c == '[') return parse_window_literal();
    if (c == 'T') return parse_symbol();
    if (c == 'v' || c == '-' || c == '+' ||
        std::isdigit(static_cast<unsigned char>(c)))
      return parse_scalar();
    fail("unexpected character", pos_);
  }

  HeckeElt parse_symbol() {
    const size_t start = pos_;
    ++pos_;  // 'T'
    if (s_.compare(pos_, 3, "rho") == 0) {
      pos_ += 3;
      return HeckeElt::basis(AffinePerm::generator(d_, kRho));
    }
    if (!at_digit()) fail("expected generator index or 'rho' after T", pos_);
    long long idx = 0;
    while (at_digit()) idx = idx * 10 + (s_[pos_++] - '0');
    if (idx > d_)
      fail("generator T" + std::to_string(idx) + " exceeds rank d=" +
               std::to_string(d_),
           start);
    return HeckeElt::basis(AffinePerm::generator(d_, static_cast<int>(idx)));
  }

  HeckeElt parse_window_literal() {
    expect('[');
    skip_ws();
    if (s_.compare(pos_, 1, "w") != 0) fail("expected 'w=' in window literal", pos_);
    ++pos_;
    expect('=');
    std::vector<long long> win;
    win.push_back(parse_int());
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      win.push_back(parse_int());
      skip_ws();
    }
    expect(']');
    // Window invariant failures propagate as invariant errors, not parse
    // errors.
    return HeckeElt::basis(AffinePerm::from_window(d_, std::move(win)));
  }

  HeckeElt parse_scalar() {
    skip_ws();
    Int coeff = 1;
    long long exp = 0;
    bool neg = false;
    if (s_[pos_] == '-' || s_[pos_] == '+') {
      neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    bool have_digits = false;
    Int magnitude = 0;
    while (at_digit()) {
      magnitude = magnitude * 10 + (s_[pos_++] - '0');
      have_digits = true;
    }
    if (have_digits) coeff = magnitude;
    if (pos_ < s_.size() && s_[pos_] == 'v') {
      ++pos_;
      exp = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        exp = parse_int();
      }
    } else if (!have_digits) {
      fail("expected a scalar", pos_);
    }
    if (neg) coeff = -coeff;
    return HeckeElt::basis(AffinePerm::identity(d_))
        .scaled(Laurent::monomial(coeff, exp));
  }

  int d_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

HeckeElt parse_element_expr(int d, const std::string& expr) {
  if (d < 3)
    throw Error(Errc::RankTooSmall,
                "expressions need d >= 3, got " + std::to_string(d));
  return ExprScanner(d, expr).parse();
}

}  // namespace heckd
