#include "heckd/kl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "heckd/error.hpp"
#include "heckd/io.hpp"

namespace heckd {

namespace {

void check_rank_member(const KLTable& t, const AffinePerm& w) {
  if (t.rank() != w.rank())
    throw Error(Errc::RankMismatch, "table rank " + std::to_string(t.rank()) +
                                        ", element rank " +
                                        std::to_string(w.rank()));
}

}  // namespace

KLTable::KLTable(int d) : d_(d) {
  if (d < 3)
    throw Error(Errc::RankTooSmall,
                "KL table needs d >= 3, got " + std::to_string(d));
}

bool KLTable::has_polynomial(const AffinePerm& y, const AffinePerm& w) const {
  return entries_.count({y, w}) > 0;
}

Laurent KLTable::polynomial(const AffinePerm& y, const AffinePerm& w) const {
  auto it = entries_.find({y, w});
  return it == entries_.end() ? Laurent::zero() : it->second;
}

void KLTable::record(const AffinePerm& y, const AffinePerm& w,
                     const Laurent& p) {
  check_rank_member(*this, y);
  check_rank_member(*this, w);
  auto [it, inserted] = entries_.emplace(std::make_pair(y, w), p);
  if (!inserted && it->second != p)
    throw Error(Errc::Internal, "conflicting values for P[" + y.str() + ", " +
                                    w.str() + "]: " + it->second.str() +
                                    " vs " + p.str());
}

bool KLTable::has_canonical(const AffinePerm& w) const {
  return canonical_.count(w) > 0;
}

const HeckeElt& KLTable::canonical_ref(const AffinePerm& w) const {
  auto it = canonical_.find(w);
  if (it == canonical_.end())
    throw Error(Errc::Internal, "canonical element not computed for " +
                                    w.str());
  return it->second;
}

void KLTable::store_canonical(const AffinePerm& w, HeckeElt c) {
  canonical_.emplace(w, std::move(c));
}

namespace {

// The bar-invariant completion of the non-negative-degree part of `hat`:
// c_0 + sum_{k>0} c_k (v^k + v^-k). Subtracting it leaves v^-1 Z[v^-1].
Laurent symmetric_excess(const Laurent& hat) {
  std::vector<Laurent::Term> terms;
  for (const auto& [k, c] : hat.terms()) {
    if (k > 0) {
      terms.emplace_back(k, c);
      terms.emplace_back(-k, c);
    } else if (k == 0) {
      terms.emplace_back(0, c);
    }
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

HeckeElt kl_canonical(const AffinePerm& w, KLTable& table) {
  check_rank_member(table, w);
  if (table.has_canonical(w)) return table.canonical_ref(w);

  const int d = table.rank();
  const ReducedWord rw = w.reduced_word();
  HeckeElt result(d);
  if (rw.rho_prefix) {
    // The rho-coset element {w} = [T_rho] * {w . rho}: the rho move preserves
    // lengths and Bruhat order and [T_rho] is bar-fixed, so the defining
    // properties carry over.
    const HeckeElt base = kl_canonical(w.apply_move(kRho), table);
    result = mult_gen(kRho, base);
  } else if (rw.letters.empty()) {
    result = HeckeElt::basis(AffinePerm::identity(d));
  } else {
    static const Laurent vm1 = Laurent::v_pow(-1);
    const GenLabel s = rw.letters.back();
    const AffinePerm u = w.apply_move(s);
    const HeckeElt cu = kl_canonical(u, table);
    // {u} * {s} = {w} + bar-symmetric lower corrections.
    HeckeElt elt = mult_gen(s, cu).scaled(vm1) + cu.scaled(vm1);
    for (;;) {
      // Largest offending term first (length, then window order).
      const AffinePerm* top = nullptr;
      long long top_len = -1;
      Laurent excess;
      for (const auto& [y, c] : elt.terms()) {
        if (y == w) continue;
        const Laurent hat = c * Laurent::v_pow(y.length());
        if (hat.in_vinv()) continue;
        const long long ly = y.length();
        if (top == nullptr || ly > top_len ||
            (ly == top_len && *top < y)) {
          top = &y;
          top_len = ly;
          excess = symmetric_excess(hat);
        }
      }
      if (top == nullptr) break;
      const AffinePerm y = *top;  // copy before elt changes
      elt = elt - kl_canonical(y, table).scaled(excess);
    }
    result = elt;
  }

  // Record and validate the column of P values.
  for (const auto& [y, c] : result.terms()) {
    const Laurent p = c * Laurent::v_pow(y.length());
    if (y == w) {
      if (!p.is_one())
        throw Error(Errc::Internal, "P[w,w] != 1 at " + w.str());
    } else if (!p.in_vinv()) {
      throw Error(Errc::Internal,
                  "off-diagonal P[" + y.str() + ", " + w.str() +
                      "] escapes v^-1 Z[v^-1]: " + p.str());
    }
    table.record(y, w, p);
  }
  table.store_canonical(w, result);
  return result;
}

Laurent kl_polynomial(const AffinePerm& y, const AffinePerm& w,
                      KLTable& table) {
  check_rank_member(table, y);
  check_rank_member(table, w);
  if (y == w) return Laurent::one();
  if (table.has_polynomial(y, w)) return table.polynomial(y, w);
  if (!y.bruhat_leq(w)) return Laurent::zero();
  kl_canonical(w, table);
  return table.polynomial(y, w);
}

Int kl_mu(const AffinePerm& y, const AffinePerm& w, KLTable& table) {
  return kl_polynomial(y, w, table).coeff(-1);
}

std::map<AffinePerm, Laurent> canonical_expand(const HeckeElt& x,
                                               KLTable& table) {
  if (x.rank() != table.rank())
    throw Error(Errc::RankMismatch, "expand of rank " +
                                        std::to_string(x.rank()) +
                                        " against table rank " +
                                        std::to_string(table.rank()));
  std::map<AffinePerm, Laurent> coeffs;
  std::map<AffinePerm, long long> lengths;
  auto len = [&](const AffinePerm& w) {
    auto it = lengths.find(w);
    if (it == lengths.end()) it = lengths.emplace(w, w.length()).first;
    return it->second;
  };
  HeckeElt rest = x;
  while (!rest.is_zero()) {
    const AffinePerm* top = nullptr;
    long long top_len = -1;
    for (const auto& [z, c] : rest.terms()) {
      const long long lz = len(z);
      if (top == nullptr || lz > top_len || (lz == top_len && *top < z)) {
        top = &z;
        top_len = lz;
      }
    }
    const AffinePerm z = *top;
    const Laurent gamma = rest.coeff(z) * Laurent::v_pow(top_len);
    coeffs.emplace(z, gamma);
    rest = rest - kl_canonical(z, table).scaled(gamma);
  }
  return coeffs;
}

PositivityReport kl_structure_positivity(int d, long long max_length,
                                         KLTable& table) {
  if (d < 3)
    throw Error(Errc::RankTooSmall,
                "positivity audit needs d >= 3, got " + std::to_string(d));
  if (table.rank() != d)
    throw Error(Errc::RankMismatch, "table rank " +
                                        std::to_string(table.rank()) +
                                        " differs from requested rank " +
                                        std::to_string(d));
  PositivityReport report;
  report.d = d;
  report.max_length = max_length;
  const std::vector<AffinePerm> pool = enumerate_up_to_length(d, max_length);
  for (const AffinePerm& x : pool) {
    const HeckeElt cx = kl_canonical(x, table);
    for (const AffinePerm& y : pool) {
      const HeckeElt prod = mult(cx, kl_canonical(y, table));
      ++report.pairs_checked;
      for (const auto& [z, coeff] : canonical_expand(prod, table)) {
        ++report.coeffs_checked;
        if (!coeff.is_nonneg())
          report.violations.push_back({x, y, z, coeff});
      }
    }
  }
  return report;
}

void kl_cache_save(const KLTable& table, std::ostream& os) {
  struct Row {
    long long lw;
    AffinePerm w, y;
    const Laurent* p;
  };
  std::vector<Row> rows;
  std::map<AffinePerm, long long> lengths;
  auto len = [&](const AffinePerm& w) {
    auto it = lengths.find(w);
    if (it == lengths.end()) it = lengths.emplace(w, w.length()).first;
    return it->second;
  };
  for (const auto& [key, p] : table.entries())
    rows.push_back({len(key.second), key.second, key.first, &p});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.lw != b.lw) return a.lw < b.lw;
    if (a.w != b.w) return a.w < b.w;
    return a.y < b.y;
  });
  for (const Row& r : rows) {
    Json j;
    j["d"] = table.rank();
    j["y"] = window_to_json(r.y);
    j["w"] = window_to_json(r.w);
    j["p"] = laurent_to_json(*r.p);
    os << j.dump() << "\n";
  }
}

void kl_cache_save_file(const KLTable& table, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw Error(Errc::MalformedRecord, "cannot open " + path + " for writing");
  kl_cache_save(table, os);
}

namespace {

KLTable load_impl(std::istream& is, int expected_d) {
  KLTable table(expected_d >= 3 ? expected_d : 3);
  bool have_table = expected_d >= 3;
  std::string line;
  long long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const std::exception& e) {
      throw Error(Errc::MalformedRecord,
                  "line " + std::to_string(line_no) + ": " + e.what(),
                  line_no);
    }
    try {
      if (!j.is_object() || !j.contains("d") || !j.contains("y") ||
          !j.contains("w") || !j.contains("p"))
        throw Error(Errc::MalformedRecord, "missing field");
      const int d = j.at("d").get<int>();
      if (!have_table) {
        table = KLTable(d);
        have_table = true;
      } else if (d != table.rank()) {
        throw Error(Errc::MalformedRecord,
                    "rank " + std::to_string(d) + " conflicts with rank " +
                        std::to_string(table.rank()));
      }
      const AffinePerm y = AffinePerm::from_window(
          d, j.at("y").get<std::vector<long long>>());
      const AffinePerm w = AffinePerm::from_window(
          d, j.at("w").get<std::vector<long long>>());
      const Laurent p = laurent_from_json(j.at("p"));
      if (y == w) {
        if (!p.is_one()) throw Error(Errc::MalformedRecord, "P[w,w] != 1");
      } else {
        if (!p.in_vinv())
          throw Error(Errc::MalformedRecord,
                      "off-diagonal entry not in v^-1 Z[v^-1]");
        if (!y.bruhat_leq(w))
          throw Error(Errc::MalformedRecord,
                      "entry for a pair that is not Bruhat-comparable");
      }
      table.record(y, w, p);
    } catch (const Error& e) {
      throw Error(Errc::MalformedRecord,
                  "line " + std::to_string(line_no) + ": " + e.what(),
                  line_no);
    }
  }
  if (!have_table)
    throw Error(Errc::MalformedRecord,
                "cache stream holds no records and no rank was supplied");
  return table;
}

}  // namespace

KLTable kl_cache_load(std::istream& is) { return load_impl(is, -1); }

KLTable kl_cache_load_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is)
    throw Error(Errc::MalformedRecord, "cannot open " + path);
  return load_impl(is, -1);
}

void kl_cache_merge(KLTable& into, const KLTable& other) {
  if (into.rank() != other.rank())
    throw Error(Errc::MergeRankMismatch,
                "cannot merge tables of ranks " + std::to_string(into.rank()) +
                    " and " + std::to_string(other.rank()));
  for (const auto& [key, p] : other.entries()) {
    if (into.has_polynomial(key.first, key.second)) {
      if (into.polynomial(key.first, key.second) != p)
        throw Error(Errc::MalformedRecord,
                    "conflicting entries for P[" + key.first.str() + ", " +
                        key.second.str() + "] while merging");
    } else {
      into.record(key.first, key.second, p);
    }
  }
}

}  // namespace heckd
