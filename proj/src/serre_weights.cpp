#include "serrewt/serre_weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <tuple>

namespace serrewt {

namespace {

// Weight of digit j in the level-s expansion: p^{s-j}, with p^s = 1.
i64 digit_place(int p, int s, int j) { return psi_exponent(p, s, j); }

void fill_ab(SerreWeight& sig) {
  int s = sig.s();
  int p = sig.p;
  i64 M = ipow(p, s) - 1;
  i64 b = 0;
  i64 r = 0;
  bool all_two = true;
  bool all_top = true;
  for (int j = 0; j < s; ++j) {
    b += sig.w[j] * digit_place(p, s, j);
    r += (sig.k[j] - 2) * digit_place(p, s, j);
    all_two = all_two && sig.k[j] == 2;
    all_top = all_top && sig.k[j] == p + 1;
  }
  sig.b = mod_floor(b, M);
  if (all_two) {
    r = 0;
  } else if (all_top) {
    r = M;
  } else {
    r = mod_floor(r, M);
  }
  sig.a = sig.b + r;
}

}  // namespace

bool operator<(const SerreWeight& x, const SerreWeight& y) {
  return std::tie(x.p, x.b, x.a, x.k, x.w) < std::tie(y.p, y.b, y.a, y.k, y.w);
}

bool operator==(const SerreWeight& x, const SerreWeight& y) {
  return x.p == y.p && x.k == y.k && x.w == y.w;
}

SerreWeight make_weight(int p, std::vector<int> k, std::vector<int> w) {
  if (k.size() != w.size() || k.empty()) {
    throw std::invalid_argument("weight digit vectors must be nonempty and of equal length");
  }
  bool all_top_w = true;
  for (size_t j = 0; j < k.size(); ++j) {
    if (k[j] < 2 || k[j] > p + 1) throw std::invalid_argument("k_j out of [2, p+1]");
    if (w[j] < 0 || w[j] > p - 1) throw std::invalid_argument("w_j out of [0, p-1]");
    all_top_w = all_top_w && w[j] == p - 1;
  }
  if (all_top_w) throw std::invalid_argument("the w_j may not all equal p - 1");
  SerreWeight sig{p, std::move(k), std::move(w), 0, 0};
  fill_ab(sig);
  return sig;
}

std::string format_weight(const SerreWeight& sigma) {
  return "F(" + std::to_string(sigma.a) + "," + std::to_string(sigma.b) + ")";
}

std::string format_weight_set(const WeightSet& set, const std::string& sep) {
  std::string out;
  for (const auto& w : set) {
    if (!out.empty()) out += sep;
    out += format_weight(w);
  }
  return out;
}

std::vector<int> residue_digits(i64 value, int p, int s) {
  i64 M = ipow(p, s) - 1;
  i64 v = mod_floor(value, M);
  // v = sum_t u_t p^t with u_t in [0, p-1]; digit j carries p^{s-j}, so
  // j = 0 is the units digit and j = t otherwise corresponds to t = s - j.
  std::vector<int> digits(s, 0);
  for (int t = 0; t < s; ++t) {
    int u = static_cast<int>(v % p);
    v /= p;
    int j = (t == 0) ? 0 : s - t;
    digits[j] = u;
  }
  return digits;
}

WeightSet weights_from_residues(i64 c, i64 d, const LocalParams& params) {
  int p = params.p;
  int s = params.s;
  i64 M = params.mod_s();
  std::vector<int> w = residue_digits(d, p, s);
  i64 r = mod_floor(c - d, M);
  WeightSet out;
  if (r == 0) {
    out.insert(make_weight(p, std::vector<int>(s, 2), w));
    out.insert(make_weight(p, std::vector<int>(s, p + 1), w));
    return out;
  }
  std::vector<int> kd = residue_digits(r, p, s);
  for (int& x : kd) x += 2;
  out.insert(make_weight(p, kd, w));
  return out;
}

std::vector<int> alpha_profile(const SerreWeight& sigma) {
  std::vector<int> al(sigma.k.size());
  for (size_t j = 0; j < al.size(); ++j) al[j] = sigma.p + 1 - sigma.k[j];
  return al;
}

const std::vector<SerreWeight>& enumerate_weights(int p, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<SerreWeight>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<SerreWeight> out;
  i64 count_k = ipow(p, s);
  i64 count_w = ipow(p, s);
  for (i64 kc = 0; kc < count_k; ++kc) {
    for (i64 wc = 0; wc < count_w; ++wc) {
      std::vector<int> k(s);
      std::vector<int> w(s);
      i64 x = kc;
      i64 y = wc;
      bool all_top_w = true;
      for (int j = 0; j < s; ++j) {
        k[j] = 2 + static_cast<int>(x % p);
        w[j] = static_cast<int>(y % p);
        x /= p;
        y /= p;
        all_top_w = all_top_w && w[j] == p - 1;
      }
      if (all_top_w) continue;
      out.push_back(make_weight(p, k, w));
    }
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(key, std::move(out)).first->second;
}

TameCharacter det_exponent(const SerreWeight& sigma, const LocalParams& params) {
  i64 M = params.mod_s();
  i64 geo = 0;
  for (int j = 0; j < params.s; ++j) geo += ipow(params.p, j);
  return make_character(params.p, params.s,
                        mod_floor(sigma.a + sigma.b + mod_floor(params.e, M) * geo, M));
}

WeightSet weights_with_determinant(const TameCharacter& det, const LocalParams& params) {
  WeightSet out;
  for (const auto& w : enumerate_weights(params.p, params.s)) {
    if (det_exponent(w, params) == det) out.insert(w);
  }
  return out;
}

SerreWeight parse_weight(const std::string& text, int p, int s) {
  static const std::regex re(R"(\s*F\((\d+),(\d+)\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad weight syntax: " + text);
  i64 a = std::stoll(m[1]);
  i64 b = std::stoll(m[2]);
  // F(a,b) = det^b Sym^{a-b}, so b only matters mod p^s - 1.
  i64 M = ipow(p, s) - 1;
  i64 r = a - b;
  if (r < 0 || r > M) throw std::invalid_argument("a - b outside [0, p^s - 1]: " + text);
  for (const auto& w : enumerate_weights(p, s)) {
    if (w.b == b % M && w.r() == r) return w;
  }
  throw std::invalid_argument("not a weight: " + text);
}

}  // namespace serrewt
