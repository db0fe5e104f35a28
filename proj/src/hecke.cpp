#include "heckd/hecke.hpp"

#include <sstream>

#include "heckd/error.hpp"

namespace heckd {

namespace {

void check_same_rank(int a, int b, const char* what) {
  if (a != b)
    throw Error(Errc::RankMismatch, std::string(what) + " of ranks " +
                                        std::to_string(a) + " and " +
                                        std::to_string(b));
}

const Laurent& v_sq() {
  static const Laurent p = Laurent::v_pow(2);
  return p;
}

const Laurent& v_sq_minus_one() {
  static const Laurent p = Laurent::v_pow(2) - Laurent::one();
  return p;
}

}  // namespace

HeckeElt HeckeElt::basis(const AffinePerm& w) {
  HeckeElt out(w.rank());
  out.add_term(w, Laurent::one());
  return out;
}

Laurent HeckeElt::coeff(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent::zero() : it->second;
}

void HeckeElt::add_term(const AffinePerm& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  check_same_rank(d_, o.d_, "sum");
  HeckeElt out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  check_same_rank(d_, o.d_, "difference");
  HeckeElt out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
  return out;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  HeckeElt out(d_);
  if (c.is_zero()) return out;
  for (const auto& [w, p] : terms_) out.terms_.emplace(w, p * c);
  return out;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) {
      std::string cs = c.str();
      const bool wrap = c.terms().size() > 1 || cs[0] == '-';
      os << (wrap ? "(" : "") << cs << (wrap ? ")" : "") << "*";
    }
    // Recognizable basis symbols print by name.
    if (w.is_identity()) {
      os << "[e]";
    } else if (w == AffinePerm::generator(d_, kRho)) {
      os << "[Trho]";
    } else {
      GenLabel hit = -2;
      for (GenLabel g = 0; g <= d_; ++g)
        if (w == AffinePerm::generator(d_, g)) {
          hit = g;
          break;
        }
      if (hit >= 0) {
        os << "[T" << hit << "]";
      } else {
        os << "[w=";
        for (int i = 0; i < w.period(); ++i) {
          if (i) os << ",";
          os << w.window()[i];
        }
        os << "]";
      }
    }
  }
  return os.str();
}

HeckeElt mult_gen(GenLabel g, const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) {
    if (g == kRho) {
      out.add_term(w.apply_move(kRho), c);
      continue;
    }
    auto [k, l] = w.move_rows(g);
    AffinePerm moved = w.apply_move(g);
    if (k < l) {
      out.add_term(moved, c);
    } else {
      out.add_term(moved, c * v_sq());
      out.add_term(w, c * v_sq_minus_one());
    }
  }
  return out;
}

HeckeElt mult_gen_inv(GenLabel g, const HeckeElt& a) {
  if (g == kRho) return mult_gen(g, a);
  static const Laurent vm2 = Laurent::v_pow(-2);
  static const Laurent vm2_minus_one = Laurent::v_pow(-2) - Laurent::one();
  return mult_gen(g, a).scaled(vm2) + a.scaled(vm2_minus_one);
}

HeckeElt mult(const HeckeElt& a, const HeckeElt& b) {
  check_same_rank(a.rank(), b.rank(), "product");
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.terms()) {
    ReducedWord rw = w.reduced_word();
    HeckeElt acc = b;
    if (rw.rho_prefix) acc = mult_gen(kRho, acc);
    for (GenLabel g : rw.letters) acc = mult_gen(g, acc);
    for (const auto& [u, p] : acc.terms()) out.add_term(u, p * c);
  }
  return out;
}

HeckeElt bar(const HeckeElt& a) {
  const int d = a.rank();
  HeckeElt out(d);
  for (const auto& [w, c] : a.terms()) {
    // [sigma_w] |-> (T_{w^{-1}})^{-1} = T_rho^eps T_{a_1}^{-1} ... T_{a_m}^{-1}
    ReducedWord rw = w.reduced_word();
    HeckeElt acc = HeckeElt::basis(AffinePerm::identity(d));
    if (rw.rho_prefix) acc = mult_gen(kRho, acc);
    for (GenLabel g : rw.letters) acc = mult_gen_inv(g, acc);
    const Laurent cb = c.bar();
    for (const auto& [u, p] : acc.terms()) out.add_term(u, p * cb);
  }
  return out;
}

std::map<AffinePerm, Int> specialize_one(const HeckeElt& a) {
  std::map<AffinePerm, Int> out;
  for (const auto& [w, c] : a.terms()) {
    Int n = c.eval_one();
    if (n != 0) out.emplace(w, std::move(n));
  }
  return out;
}

namespace {

// Coxeter order of the pair (a, b), a < b, read off the affine D diagram.
// For d = 3 the diagram closes into the four-cycle 0-2-1-3-0.
int coxeter_order(int d, int a, int b) {
  bool edge = false;
  if (a >= 1 && b == a + 1 && b <= d - 1) edge = true;  // chain 1-2-...-(d-1)
  if (a == 0 && b == 2) edge = true;
  if (a == d - 2 && b == d) edge = true;
  if (d == 3 && a == 0 && b == 3) edge = true;
  return edge ? 3 : 2;
}

}  // namespace

RelationReport run_relation_suite(
    int d, const std::function<AffinePerm(GenLabel)>& gen) {
  if (d < 3)
    throw Error(Errc::RankTooSmall,
                "relation suite needs d >= 3, got " + std::to_string(d));
  RelationReport report;
  report.d = d;
  const HeckeElt unit = HeckeElt::basis(AffinePerm::identity(d));
  auto T = [&](GenLabel g) { return HeckeElt::basis(gen(g)); };
  auto add = [&](std::string name, bool ok) {
    report.checks.push_back({std::move(name), ok});
  };

  // Quadratic relations.
  for (GenLabel i = 0; i <= d; ++i) {
    HeckeElt lhs = mult(T(i), T(i));
    HeckeElt rhs = T(i).scaled(v_sq_minus_one()) + unit.scaled(v_sq());
    add("T" + std::to_string(i) + "^2 = (v^2-1)*T" + std::to_string(i) +
            " + v^2",
        lhs == rhs);
  }

  // Braid and commuting relations, with the window-level order alongside.
  for (int a = 0; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      const int m = coxeter_order(d, a, b);
      const AffinePerm pab = gen(a).compose(gen(b));
      AffinePerm pow = pab;
      for (int i = 1; i < m; ++i) pow = pow.compose(pab);
      const bool window_ok = pow.is_identity();
      const std::string sa = "T" + std::to_string(a);
      const std::string sb = "T" + std::to_string(b);
      if (m == 2) {
        bool ok = window_ok && mult(T(a), T(b)) == mult(T(b), T(a));
        add(sa + "*" + sb + " = " + sb + "*" + sa, ok);
      } else {
        bool ok = window_ok && mult(mult(T(a), T(b)), T(a)) ==
                                   mult(mult(T(b), T(a)), T(b));
        add(sa + "*" + sb + "*" + sa + " = " + sb + "*" + sa + "*" + sb, ok);
      }
    }
  }

  // Extended relations through rho.
  const HeckeElt Tr = HeckeElt::basis(gen(kRho));
  add("Trho^2 = 1", mult(Tr, Tr) == unit);
  auto conj = [&](GenLabel i) { return mult(mult(Tr, T(i)), Tr); };
  add("T0 = Trho*T1*Trho", T(0) == conj(1));
  add("T" + std::to_string(d) + " = Trho*T" + std::to_string(d - 1) + "*Trho",
      T(d) == conj(d - 1));
  for (GenLabel i = 2; i < d - 1; ++i)
    add("T" + std::to_string(i) + " = Trho*T" + std::to_string(i) + "*Trho",
        T(i) == conj(i));

  return report;
}

RelationReport verify_relations(int d) {
  return run_relation_suite(
      d, [d](GenLabel g) { return AffinePerm::generator(d, g); });
}

}  // namespace heckd
