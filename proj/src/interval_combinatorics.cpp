#include "serrewt/interval_combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace serrewt {

namespace {

int wrap(int j, int s) { return static_cast<int>(mod_floor(j, s)); }

struct Layout {
  std::map<int, int> member_of;     // position -> interval index
  std::map<int, int> pred_of;       // predecessor position -> interval index
  std::set<int> termini;
  std::set<int> union_members;
};

Layout layout(const SignedIntervalCollection& coll) {
  Layout lay;
  for (size_t k = 0; k < coll.intervals.size(); ++k) {
    const auto& iv = coll.intervals[k];
    for (int t : interval_members(iv, coll.s)) {
      lay.member_of[t] = static_cast<int>(k);
      lay.union_members.insert(t);
    }
    lay.pred_of[interval_predecessor(iv, coll.s)] = static_cast<int>(k);
    lay.termini.insert(interval_terminus(iv, coll.s));
  }
  return lay;
}

void collections_rec(int s, const std::vector<std::pair<int, int>>& cands, size_t i,
                     std::vector<bool>& used, std::vector<SignedInterval>& cur,
                     std::vector<SignedIntervalCollection>& out) {
  if (i == cands.size()) {
    out.push_back(SignedIntervalCollection{s, cur});
    return;
  }
  collections_rec(s, cands, i + 1, used, cur, out);
  auto [start, len] = cands[i];
  for (int t = 0; t < len; ++t) {
    if (used[wrap(start + t, s)]) return;
  }
  for (int t = 0; t < len; ++t) used[wrap(start + t, s)] = true;
  for (int sign : {1, -1}) {
    cur.push_back(SignedInterval{start, len, sign});
    collections_rec(s, cands, i + 1, used, cur, out);
    cur.pop_back();
  }
  for (int t = 0; t < len; ++t) used[wrap(start + t, s)] = false;
}

// Additive carry corrections applied by xi, computed from carries z.
std::vector<int> xi_corrections(const SignedIntervalCollection& coll, const std::map<int, int>& z,
                                const std::vector<int>& carry_source, int p, XiReading reading) {
  int s = coll.s;
  Layout lay = layout(coll);
  std::vector<int> c(s, 0);
  for (const auto& iv : coll.intervals) {
    int pred = interval_predecessor(iv, s);
    int term = interval_terminus(iv, s);
    int zz = z.at(pred);
    std::vector<int> mem = interval_members(iv, s);
    for (int t : mem) {
      int own = zz * p;
      if (reading == XiReading::LiteralSigns && t == term && lay.pred_of.count(term) &&
          carry_source[term] != 0) {
        own = iv.sign * zz * p;
      }
      c[t] += own;
    }
    for (size_t m = 1; m < mem.size(); ++m) c[mem[m - 1]] -= zz;
    c[pred] += iv.sign > 0 ? zz : -zz;
  }
  return c;
}

}  // namespace

int interval_predecessor(const SignedInterval& iv, int s) { return wrap(iv.start - 1, s); }

int interval_terminus(const SignedInterval& iv, int s) {
  return wrap(iv.start + iv.length - 1, s);
}

std::vector<int> interval_members(const SignedInterval& iv, int s) {
  std::vector<int> out;
  for (int t = 0; t < iv.length; ++t) out.push_back(wrap(iv.start + t, s));
  return out;
}

const std::vector<SignedIntervalCollection>& all_collections(int s) {
  static std::mutex mu;
  static std::map<int, std::vector<SignedIntervalCollection>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<int, int>> cands;
  for (int j = 0; j < s; ++j) {
    for (int len = 1; len <= s; ++len) cands.emplace_back(j, len);
  }
  std::vector<SignedIntervalCollection> out;
  std::vector<bool> used(s, false);
  std::vector<SignedInterval> cur;
  collections_rec(s, cands, 0, used, cur, out);
  return cache.emplace(s, std::move(out)).first->second;
}

std::optional<std::map<int, int>> z_values(const SignedIntervalCollection& coll,
                                           const std::vector<int>& x) {
  int s = coll.s;
  Layout lay = layout(coll);
  std::map<int, int> z;
  for (size_t k = 0; k < coll.intervals.size(); ++k) {
    std::set<int> seen;
    int cur = static_cast<int>(k);
    int value = 0;
    while (true) {
      if (!seen.insert(cur).second) return std::nullopt;
      int n = interval_terminus(coll.intervals[cur], s);
      if (x[n] != 0) {
        value = x[n];
        break;
      }
      auto nx = lay.pred_of.find(n);
      if (nx == lay.pred_of.end()) return std::nullopt;
      cur = nx->second;
    }
    z[interval_predecessor(coll.intervals[k], s)] = value;
  }
  return z;
}

bool in_l(const LPair& pair, const DeltaVector& delta, const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  int e = params.e;
  const auto& al = pair.alpha;
  if (static_cast<int>(al.size()) != s || pair.intervals.s != s) return false;
  for (int a : al) {
    if (a < 0 || a > p - 1) return false;
  }
  std::vector<int> x = x_vector_from_alpha(al, delta, params).x;
  auto bot = [&](int j) { return 1 + 2 * delta[j] - (e - 1); };
  auto top = [&](int j) { return p + 2 * delta[j] - (e - 1); };
  const auto& coll = pair.intervals;
  Layout lay = layout(coll);
  auto z = z_values(coll, x);
  if (!z) return false;

  std::set<int> neg_preds;
  for (const auto& iv : coll.intervals) {
    if (iv.sign < 0) neg_preds.insert(interval_predecessor(iv, s));
  }
  // Axiom 1.
  for (const auto& iv : coll.intervals) {
    bool up = true;
    bool down = true;
    for (int t : interval_members(iv, s)) {
      up = up && (x[t] == 1 || al[t] == bot(t));
      down = down && (x[t] == -1 || al[t] == top(t));
    }
    if (!up && !down) return false;
  }
  for (int t : lay.union_members) {
    int term = interval_terminus(coll.intervals[lay.member_of[t]], s);
    // Axiom 2.
    if (al[t] != 0 && t != term) return false;
    // Axiom 3.
    bool lhs = al[t] == bot(t) || al[t] == top(t);
    bool rhs = lay.termini.count(t) && neg_preds.count(t);
    if (lhs != rhs) return false;
  }
  // Axiom 4.
  for (int t = 0; t < s; ++t) {
    if (!lay.union_members.count(t) && x[t] != 0 && !lay.union_members.count(wrap(t + 1, s))) {
      return false;
    }
  }
  // Axioms 5 and 6.
  for (const auto& iv : coll.intervals) {
    int P = interval_predecessor(iv, s);
    int zz = z->at(P);
    bool inside = lay.union_members.count(P) > 0;
    bool ok = false;
    if (iv.sign > 0) {
      ok = (inside && zz != x[P]) ||
           (!inside && al[P] >= bot(P) - zz && al[P] <= top(P) - zz);
    } else {
      ok = (inside && zz == x[P]) || (inside && al[P] == (zz == 1 ? bot(P) : top(P))) ||
           (!inside && al[P] >= bot(P) + zz && al[P] <= top(P) + zz);
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<int> y_vector(const std::vector<int>& beta, int p) {
  std::vector<int> y;
  for (int b : beta) y.push_back(static_cast<int>((b - mod_floor(b, p)) / p));
  return y;
}

bool in_m(const MPair& pair, const DeltaVector& delta, const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  int e = params.e;
  const auto& be = pair.beta;
  if (static_cast<int>(be.size()) != s || pair.intervals.s != s) return false;
  for (int j = 0; j < s; ++j) {
    if (be[j] < 1 + 2 * delta[j] - (e - 1) || be[j] > p + 2 * delta[j] - (e - 1)) return false;
  }
  std::vector<int> y = y_vector(be, p);
  const auto& coll = pair.intervals;
  Layout lay = layout(coll);
  auto u = z_values(coll, y);
  if (!u) return false;
  // Axiom 1.
  for (const auto& iv : coll.intervals) {
    bool up = true;
    bool down = true;
    for (int t : interval_members(iv, s)) {
      up = up && (y[t] == 1 || be[t] == p - 1);
      down = down && y[t] == -1;
    }
    if (!up && !down) return false;
  }
  // Axiom 2.
  std::set<int> nonzero_y;
  for (int t = 0; t < s; ++t) {
    if (y[t] != 0) nonzero_y.insert(t);
  }
  if (lay.termini != nonzero_y) return false;
  // Axioms 3 and 4.
  for (const auto& iv : coll.intervals) {
    int P = interval_predecessor(iv, s);
    int uu = u->at(P);
    bool inside = lay.union_members.count(P) > 0;
    bool ok = false;
    if (iv.sign > 0) {
      ok = (inside && uu != y[P]) || (!inside && be[P] >= uu && be[P] <= p - 1 + uu);
    } else {
      ok = (inside && uu == y[P]) || (!inside && be[P] >= -uu && be[P] <= p - 1 - uu);
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<LPair> l_pairs_for_alpha(const std::vector<int>& alpha, const DeltaVector& delta,
                                     const LocalParams& params) {
  std::vector<LPair> out;
  for (const auto& coll : all_collections(params.s)) {
    LPair l{alpha, coll};
    if (in_l(l, delta, params)) out.push_back(std::move(l));
  }
  return out;
}

std::vector<LPair> enumerate_l_pairs(const DeltaVector& delta, const LocalParams& params) {
  std::vector<LPair> out;
  int s = params.s;
  i64 total = ipow(params.p, s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<int> al(s);
    i64 v = code;
    for (int j = s - 1; j >= 0; --j) {
      al[j] = static_cast<int>(v % params.p);
      v /= params.p;
    }
    auto part = l_pairs_for_alpha(al, delta, params);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<MPair> enumerate_m_pairs(const DeltaVector& delta, const LocalParams& params) {
  std::vector<MPair> out;
  int s = params.s;
  int p = params.p;
  i64 total = ipow(p, s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<int> be(s);
    i64 v = code;
    for (int j = s - 1; j >= 0; --j) {
      be[j] = static_cast<int>(v % p) + 1 + 2 * delta[j] - (params.e - 1);
      v /= p;
    }
    for (const auto& coll : all_collections(s)) {
      MPair m{be, coll};
      if (in_m(m, delta, params)) out.push_back(std::move(m));
    }
  }
  return out;
}

MPair xi_forward(const LPair& l, const DeltaVector& delta, const LocalParams& params,
                 XiReading reading) {
  if (!in_l(l, delta, params)) {
    throw std::invalid_argument("xi_forward: pair violates the L axioms: " +
                                render_pair(l.alpha, l.intervals));
  }
  std::vector<int> x = x_vector_from_alpha(l.alpha, delta, params).x;
  auto z = z_values(l.intervals, x);
  std::vector<int> c = xi_corrections(l.intervals, *z, x, params.p, reading);
  MPair m{l.alpha, l.intervals};
  for (int j = 0; j < params.s; ++j) m.beta[j] += c[j];
  return m;
}

LPair xi_inverse(const MPair& m, const DeltaVector& delta, const LocalParams& params,
                 XiReading reading) {
  if (!in_m(m, delta, params)) {
    throw std::invalid_argument("xi_inverse: pair violates the M axioms: " +
                                render_pair(m.beta, m.intervals));
  }
  int s = params.s;
  // First try undoing the carries computed from the y data of beta.
  std::vector<int> y = y_vector(m.beta, params.p);
  if (auto u = z_values(m.intervals, y)) {
    std::vector<int> c = xi_corrections(m.intervals, *u, y, params.p, reading);
    LPair cand{m.beta, m.intervals};
    bool in_range = true;
    for (int j = 0; j < s; ++j) {
      cand.alpha[j] -= c[j];
      in_range = in_range && cand.alpha[j] >= 0 && cand.alpha[j] <= params.p - 1;
    }
    if (in_range && in_l(cand, delta, params) &&
        xi_forward(cand, delta, params, reading) == m) {
      return cand;
    }
  }
  // Otherwise search every alpha with the same interval collection.
  i64 total = ipow(params.p, s);
  for (i64 code = 0; code < total; ++code) {
    std::vector<int> al(s);
    i64 v = code;
    for (int j = s - 1; j >= 0; --j) {
      al[j] = static_cast<int>(v % params.p);
      v /= params.p;
    }
    LPair cand{al, m.intervals};
    if (in_l(cand, delta, params) && xi_forward(cand, delta, params, reading) == m) return cand;
  }
  throw std::invalid_argument("xi_inverse: no preimage in L for " +
                              render_pair(m.beta, m.intervals));
}

std::set<int> positive_predecessors(const SignedIntervalCollection& coll) {
  std::set<int> out;
  for (const auto& iv : coll.intervals) {
    if (iv.sign > 0) out.insert(interval_predecessor(iv, coll.s));
  }
  return out;
}

SubsetCollection s_sets_via_intervals(const std::vector<int>& alpha, const DeltaVector& delta,
                                      const LocalParams& params) {
  SubsetCollection out;
  for (const auto& l : l_pairs_for_alpha(alpha, delta, params)) {
    out.insert(positive_predecessors(l.intervals));
  }
  return out;
}

std::string render_pair(const std::vector<int>& values, const SignedIntervalCollection& coll) {
  int s = static_cast<int>(values.size());
  std::map<int, const SignedInterval*> starting;
  std::map<int, const SignedInterval*> ending;
  for (const auto& iv : coll.intervals) {
    starting[iv.start] = &iv;
    ending[interval_terminus(iv, s)] = &iv;
  }
  std::string out;
  for (int j = 0; j < s; ++j) {
    if (j > 0) out += ", ";
    if (starting.count(j)) out += "[";
    out += std::to_string(values[j]);
    if (ending.count(j)) out += std::string("]") + (ending[j]->sign > 0 ? "+" : "-");
  }
  return out;
}

}  // namespace serrewt
