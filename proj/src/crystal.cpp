#include "krc/crystal.hpp"

#include <cassert>
#include <cstdlib>

namespace krc {

std::string letter_str(const Letter& x) {
  std::string s = std::to_string(x.v);
  if (x.dual) s += "v";
  return s;
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += letter_str(w[i]);
  }
  return s;
}

std::optional<Letter> letter_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string t = s;
  Letter x;
  if (t.back() == 'v') {
    x.dual = true;
    t.pop_back();
  }
  try {
    size_t pos = 0;
    x.v = std::stoi(t, &pos);
    if (pos != t.size()) return std::nullopt;
  } catch (...) {
    return std::nullopt;
  }
  return x;
}

bool letter_valid(CType t, int n, int v) {
  switch (t) {
    case CType::A: return v >= 1 && v <= n + 1;
    case CType::B: return v >= -n && v <= n;
    case CType::C:
    case CType::D: return v != 0 && v >= -n && v <= n;
  }
  return false;
}

namespace {

// f_i on a plain (non-dual) letter value; 0 encodes the circle letter.
std::optional<int> plain_f(CType t, int n, int v, int i) {
  assert(i >= 1 && i <= n && letter_valid(t, n, v));
  if (t == CType::A) {
    assert(i <= n);
    return v == i ? std::optional<int>(i + 1) : std::nullopt;
  }
  if (i < n || (t == CType::D && i == n - 1)) {
    if (v == i) return i + 1;
    if (v == -(i + 1)) return -i;
    return std::nullopt;
  }
  switch (t) {
    case CType::B:
      if (v == n) return 0;
      if (v == 0) return -n;
      return std::nullopt;
    case CType::C:
      if (v == n) return -n;
      return std::nullopt;
    case CType::D:
      if (v == n - 1) return -n;
      if (v == n) return -(n - 1);
      return std::nullopt;
    default: break;
  }
  return std::nullopt;
}

std::optional<int> plain_e(CType t, int n, int v, int i) {
  // Inverse of plain_f by direct case analysis.
  for (int w = -n; w <= (t == CType::A ? n + 1 : n); ++w) {
    if (!letter_valid(t, n, w)) continue;
    auto r = plain_f(t, n, w, i);
    if (r && *r == v) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Letter> letter_f(CType t, int n, Letter x, int i) {
  if (x.dual) {
    auto r = plain_e(t, n, x.v, i);
    if (!r) return std::nullopt;
    return Letter{*r, true};
  }
  auto r = plain_f(t, n, x.v, i);
  if (!r) return std::nullopt;
  return Letter{*r, false};
}

std::optional<Letter> letter_e(CType t, int n, Letter x, int i) {
  if (x.dual) {
    auto r = plain_f(t, n, x.v, i);
    if (!r) return std::nullopt;
    return Letter{*r, true};
  }
  auto r = plain_e(t, n, x.v, i);
  if (!r) return std::nullopt;
  return Letter{*r, false};
}

int letter_phi(CType t, int n, Letter x, int i) {
  int k = 0;
  while (auto y = letter_f(t, n, x, i)) {
    x = *y;
    ++k;
  }
  return k;
}

int letter_eps(CType t, int n, Letter x, int i) {
  int k = 0;
  while (auto y = letter_e(t, n, x, i)) {
    x = *y;
    ++k;
  }
  return k;
}

Weight letter_wt(CType t, int n, Letter x) {
  Weight w(weight_len(t, n), 0);
  int s = x.dual ? -1 : 1;
  if (x.v > 0) w[x.v - 1] += s;
  if (x.v < 0) w[-x.v - 1] -= s;
  return w;
}

std::pair<int, int> word_eps_phi(CType t, int n, const Word& w, int i) {
  int E = 0, P = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int e = letter_eps(t, n, *it, i);
    int p = letter_phi(t, n, *it, i);
    E = E + std::max(0, e - P);
    P = p + std::max(0, P - e);
  }
  return {E, P};
}

int word_f_pos(CType t, int n, const Word& w, int i) {
  int E = 0, P = 0, pos = -1;
  for (int k = (int)w.size() - 1; k >= 0; --k) {
    int e = letter_eps(t, n, w[k], i);
    int p = letter_phi(t, n, w[k], i);
    if (e >= P) pos = k;
    E = E + std::max(0, e - P);
    P = p + std::max(0, P - e);
  }
  return P > 0 ? pos : -1;
}

int word_e_pos(CType t, int n, const Word& w, int i) {
  int E = 0, P = 0, pos = -1;
  for (int k = (int)w.size() - 1; k >= 0; --k) {
    int e = letter_eps(t, n, w[k], i);
    int p = letter_phi(t, n, w[k], i);
    if (e > P) pos = k;
    E = E + std::max(0, e - P);
    P = p + std::max(0, P - e);
  }
  return E > 0 ? pos : -1;
}

std::optional<Word> word_f(CType t, int n, const Word& w, int i) {
  int pos = word_f_pos(t, n, w, i);
  if (pos < 0) return std::nullopt;
  auto y = letter_f(t, n, w[pos], i);
  assert(y);
  Word r = w;
  r[pos] = *y;
  return r;
}

std::optional<Word> word_e(CType t, int n, const Word& w, int i) {
  int pos = word_e_pos(t, n, w, i);
  if (pos < 0) return std::nullopt;
  auto y = letter_e(t, n, w[pos], i);
  assert(y);
  Word r = w;
  r[pos] = *y;
  return r;
}

Weight word_wt(CType t, int n, const Word& w) {
  Weight r(weight_len(t, n), 0);
  for (const auto& x : w) {
    Weight lw = letter_wt(t, n, x);
    for (size_t j = 0; j < r.size(); ++j) r[j] += lw[j];
  }
  return r;
}

bool word_is_hw(CType t, int n, const Word& w) {
  for (int i = 1; i <= n; ++i)
    if (word_eps_phi(t, n, w, i).first != 0) return false;
  return true;
}

Word word_raise(CType t, int n, Word w, std::vector<int>* path) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= n; ++i) {
      while (auto r = word_e(t, n, w, i)) {
        w = *r;
        if (path) path->push_back(i);
        moved = true;
      }
    }
  }
  return w;
}

Letter letter_star(CType t, int n, Letter x) {
  if (t == CType::A) return Letter{n + 2 - x.v, x.dual};
  if (t == CType::D && n % 2 == 1 && std::abs(x.v) == n) return x;
  return Letter{-x.v, x.dual};
}

Word word_star(CType t, int n, const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back(letter_star(t, n, *it));
  return r;
}

Word word_dual(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back(Letter{it->v, !it->dual});
  return r;
}

}  // namespace krc
