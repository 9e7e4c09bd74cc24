#include "krc/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace krc {

CType AffType::ctype() const {
  switch (fam) {
    case Family::A1: return CType::A;
    case Family::B1: return CType::B;
    case Family::C1: return CType::C;
    case Family::D1: return CType::D;
    case Family::A2even: return CType::C;
    case Family::A2evenDagger: return CType::B;
    case Family::A2odd: return CType::C;
    case Family::D2: return CType::B;
  }
  std::abort();
}

int AffType::a0() const { return fam == Family::A2even ? 2 : 1; }

bool AffType::simply_laced() const {
  return fam == Family::A1 || fam == Family::D1;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A1: return "A";
    case Family::B1: return "B";
    case Family::C1: return "C";
    case Family::D1: return "D";
    case Family::A2even: return "A2even";
    case Family::A2evenDagger: return "A2even+";
    case Family::A2odd: return "A2odd";
    case Family::D2: return "D2";
  }
  std::abort();
}

std::optional<Family> family_from_name(const std::string& s) {
  if (s == "A") return Family::A1;
  if (s == "B") return Family::B1;
  if (s == "C") return Family::C1;
  if (s == "D") return Family::D1;
  if (s == "A2even") return Family::A2even;
  if (s == "A2even+" || s == "A2evenDagger" || s == "A2even-dagger")
    return Family::A2evenDagger;
  if (s == "A2odd") return Family::A2odd;
  if (s == "D2") return Family::D2;
  return std::nullopt;
}

std::string AffType::name() const {
  return family_name(fam) + "_" + std::to_string(n);
}

int weight_len(CType t, int n) { return t == CType::A ? n + 1 : n; }

bool is_dominant(CType t, int n, const Weight& w) {
  if ((int)w.size() != weight_len(t, n)) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  switch (t) {
    case CType::A: return true;
    case CType::B:
    case CType::C: return w.back() >= 0;
    case CType::D: return n >= 2 ? w[n - 2] >= std::llabs(w[n - 1]) : true;
  }
  return false;
}

Weight weight_add(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Weight weight_neg(const Weight& a) {
  Weight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Weight w0_apply(CType t, int n, const Weight& w) {
  Weight r = w;
  switch (t) {
    case CType::A:
      // w0 in gl(n+1) is the longest permutation: reverse the content.
      std::reverse(r.begin(), r.end());
      return r;
    case CType::B:
    case CType::C:
      for (auto& x : r) x = -x;
      return r;
    case CType::D:
      for (int i = 0; i < n; ++i)
        if (i < n - 1 || n % 2 == 0) r[i] = -r[i];
      return r;
  }
  std::abort();
}

int tau_node(CType t, int n, int i) {
  if (t == CType::A) return n + 1 - i;
  if (t == CType::D && n % 2 == 1) {
    if (i == n - 1) return n;
    if (i == n) return n - 1;
  }
  return i;
}

std::optional<std::vector<long long>> root_coords(
    CType t, int n, const std::vector<LEntry>& L, const Weight& lambda) {
  assert(t == CType::A || t == CType::D);
  int len = weight_len(t, n);
  assert((int)lambda.size() == len);
  // mu2 = 2 * (sum_{(a,i)} L_i^(a) * i * Lambda_a - lambda), doubled to keep
  // the half-integral type D spin weights in integer arithmetic.
  std::vector<long long> mu2(len, 0);
  for (const auto& e : L) {
    assert(e.a >= 1 && e.a <= n && e.i >= 1 && e.count >= 0);
    long long w = e.count * (long long)e.i;
    if (t == CType::A) {
      for (int j = 0; j < e.a; ++j) mu2[j] += 2 * w;
    } else {
      if (e.a <= n - 2) {
        for (int j = 0; j < e.a; ++j) mu2[j] += 2 * w;
      } else if (e.a == n - 1) {
        for (int j = 0; j < n; ++j) mu2[j] += w;
      } else {
        for (int j = 0; j < n - 1; ++j) mu2[j] += w;
        mu2[n - 1] -= w;
      }
    }
  }
  for (int j = 0; j < len; ++j) mu2[j] -= 2 * lambda[j];

  std::vector<long long> c(n, 0);
  if (t == CType::A) {
    // gl weights are defined modulo constant vectors; shift to total zero.
    long long total = std::accumulate(mu2.begin(), mu2.end(), 0LL);
    if (total % (2 * (n + 1)) != 0) return std::nullopt;
    long long shift = total / (n + 1);
    long long run = 0;
    for (int a = 1; a <= n; ++a) {
      run += mu2[a - 1] - shift;
      if (run % 2 != 0 || run < 0) return std::nullopt;
      c[a - 1] = run / 2;
    }
    if (run + mu2[n] - shift != 0) return std::nullopt;
  } else {
    long long run = 0;
    for (int a = 1; a <= n - 2; ++a) {
      run += mu2[a - 1];
      if (run % 2 != 0 || run < 0) return std::nullopt;
      c[a - 1] = run / 2;
    }
    long long p = run + mu2[n - 2] - mu2[n - 1];
    long long q = run + mu2[n - 2] + mu2[n - 1];
    if (p % 4 != 0 || q % 4 != 0 || p < 0 || q < 0) return std::nullopt;
    c[n - 2] = p / 4;
    c[n - 1] = q / 4;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Folding data

bool has_folding(Family f) { return f != Family::A1 && f != Family::D1; }

int FoldingData::sigma(int ynode) const {
  if (Y.fam == Family::A1) {
    int N = Y.n + 1;  // nodes 0..N-1 on the cycle
    return ynode == 0 ? 0 : N - ynode;
  }
  // Y = D_{Y.n}^(1): swap the two spin nodes.
  if (ynode == Y.n) return Y.n - 1;
  if (ynode == Y.n - 1) return Y.n;
  return ynode;
}

FoldingData folding_data(Family fam, int n) {
  assert(has_folding(fam));
  FoldingData fd;
  fd.fam = fam;
  fd.n = n;
  std::vector<int> gamma(n + 1, 1);
  std::vector<std::vector<int>> iota(n + 1);

  if (fam == Family::B1 || fam == Family::A2odd) {
    fd.Y = AffType{Family::D1, n + 1};
    for (int i = 0; i < n; ++i) iota[i] = {i};
    iota[n] = {n, n + 1};
    // Single double edge between n-1 and n. If its arrow points away from
    // the component of node 0, every node in that component gets gamma = 2.
    bool arrow_toward_zero_side = (fam == Family::A2odd);
    if (!arrow_toward_zero_side)
      for (int i = 0; i < n; ++i) gamma[i] = 2;
  } else {
    fd.Y = AffType{Family::A1, 2 * n - 1};
    iota[0] = {0};
    for (int i = 1; i < n; ++i) iota[i] = {i, 2 * n - i};
    iota[n] = {n};
    // Double edges sit at the two ends; an end node gets gamma = 2 exactly
    // when its incident arrow points away from it.
    bool away_from_0 = (fam == Family::C1 || fam == Family::A2evenDagger);
    bool away_from_n = (fam == Family::C1 || fam == Family::A2even);
    gamma[0] = away_from_0 ? 2 : 1;
    gamma[n] = away_from_n ? 2 : 1;
  }
  fd.gamma = gamma;
  fd.iota = iota;

  // Cross-check against the known tables.
  std::vector<int> expect(n + 1, 1);
  switch (fam) {
    case Family::B1:
      for (int i = 0; i < n; ++i) expect[i] = 2;
      break;
    case Family::C1: expect[0] = expect[n] = 2; break;
    case Family::A2even: expect[n] = 2; break;
    case Family::A2evenDagger: expect[0] = 2; break;
    case Family::A2odd:
    case Family::D2: break;
    default: std::abort();
  }
  if (gamma != expect) std::abort();
  return fd;
}

Weight psi_weight(Family fam, int n, const Weight& lamX) {
  FoldingData fd = folding_data(fam, n);
  CType xt = AffType{fam, n}.ctype();
  assert((int)lamX.size() == n);
  // Fundamental coordinates c_a = <h_a, lambda> of the classical X-weight.
  std::vector<long long> c(n + 1, 0);
  for (int a = 1; a < n; ++a) c[a] = lamX[a - 1] - lamX[a];
  c[n] = (xt == CType::B) ? 2 * lamX[n - 1] : lamX[n - 1];

  int len = weight_len(fd.Y.ctype(), fd.Y.n);
  Weight out(len, 0);
  for (int a = 1; a <= n; ++a) {
    if (c[a] == 0) continue;
    if (fd.Y.fam == Family::D1 && a == n) {
      // Joint spin-orbit image Lambda_n + Lambda_{n+1} = (1^n, 0).
      for (int j = 0; j < n; ++j) out[j] += (long long)fd.gamma[a] * c[a];
      continue;
    }
    for (int j : fd.iota[a])
      for (int k = 0; k < j; ++k) out[k] += (long long)fd.gamma[a] * c[a];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Signed partitions and the van Leeuwen rule (type D)

SignedPartition sp_from_weight(const Weight& w) {
  SignedPartition sp;
  sp.parts = w;
  sp.sign = 1;
  if (!w.empty() && w.back() < 0) {
    sp.parts.back() = -w.back();
    sp.sign = -1;
  }
  return sp;
}

Weight sp_to_weight(const SignedPartition& sp) {
  Weight w = sp.parts;
  if (!w.empty()) w.back() *= sp.sign;
  return w;
}

std::optional<SignedPartition> g_step(int n, const SignedPartition& sp,
                                      int letter) {
  assert(letter != 0 && std::abs(letter) <= n);
  Weight w = sp_to_weight(sp);
  int k = std::abs(letter);
  w[k - 1] += letter > 0 ? 1 : -1;
  if (!is_dominant(CType::D, n, w)) return std::nullopt;
  return sp_from_weight(w);
}

std::optional<SignedPartition> weight_to_G(int n,
                                           const std::vector<int>& word) {
  SignedPartition sp;
  sp.parts.assign(n, 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = g_step(n, sp, *it);
    if (!next) return std::nullopt;
    sp = *next;
  }
  return sp;
}

namespace {

long long sp_size(const SignedPartition& sp) {
  return std::accumulate(sp.parts.begin(), sp.parts.end(), 0LL);
}

// Row (1-based) of the single cell by which big exceeds small.
int cell_row(const SignedPartition& big, const SignedPartition& small) {
  for (size_t i = 0; i < big.parts.size(); ++i)
    if (big.parts[i] != small.parts[i]) return (int)i + 1;
  std::abort();
}

bool sheets_compatible(const SignedPartition& a, const SignedPartition& b) {
  return a.sign == b.sign || a.parts.back() == 0 || b.parts.back() == 0;
}

bool sp_contains(const SignedPartition& big, const SignedPartition& small) {
  if (!sheets_compatible(big, small)) return false;
  for (size_t i = 0; i < big.parts.size(); ++i)
    if (big.parts[i] < small.parts[i]) return false;
  return true;
}

// alpha = lam + (gam - beta) computed on weights, renormalized.
std::optional<SignedPartition> sp_step_combine(int n,
                                               const SignedPartition& lam,
                                               const SignedPartition& beta,
                                               const SignedPartition& gam) {
  Weight w = sp_to_weight(lam);
  Weight bw = sp_to_weight(beta);
  Weight gw = sp_to_weight(gam);
  for (int i = 0; i < n; ++i) w[i] += gw[i] - bw[i];
  if (!is_dominant(CType::D, n, w)) return std::nullopt;
  return sp_from_weight(w);
}

}  // namespace

std::optional<SignedPartition> predict_alpha(int n, const SignedPartition& lam,
                                             const SignedPartition& beta,
                                             const SignedPartition& gam) {
  long long sl = sp_size(lam), sb = sp_size(beta), sg = sp_size(gam);
  if (sl == sg + 2) {
    // lam > beta > gam by one cell each.
    if (!sp_contains(lam, beta) || !sp_contains(beta, gam))
      return std::nullopt;
    int r1 = cell_row(lam, beta), r2 = cell_row(beta, gam);
    long long c1 = lam.parts[r1 - 1], c2 = beta.parts[r2 - 1];
    if (r1 != r2 && c1 != c2) return sp_step_combine(n, lam, beta, gam);
    return beta;
  }
  if (sl == sg - 2) {
    if (!sp_contains(beta, lam) || !sp_contains(gam, beta))
      return std::nullopt;
    int r1 = cell_row(beta, lam), r2 = cell_row(gam, beta);
    long long c1 = beta.parts[r1 - 1], c2 = gam.parts[r2 - 1];
    if (r1 != r2 && c1 != c2) return sp_step_combine(n, lam, beta, gam);
    return beta;
  }
  if (lam != gam) {
    // |lam| = |gam|, lam != gam.
    if (sp_contains(lam, beta) || sp_contains(beta, lam))
      return sp_step_combine(n, lam, beta, gam);
    return std::nullopt;
  }
  // lam == gam.
  if (sp_contains(beta, lam) && sb == sl + 1) {
    int r = cell_row(beta, lam);
    long long col = beta.parts[r - 1];
    if (col == 1) {
      if (r == n) {
        SignedPartition a = beta;
        a.sign = -beta.sign;
        return a;
      }
      return beta;
    }
    // Remove the corner cell of lam in column col-1.
    int row = 0;
    for (int i = 0; i < n; ++i)
      if (lam.parts[i] >= col - 1) row = i + 1;
    SignedPartition a = lam;
    a.parts[row - 1] -= 1;
    if (row == n && a.parts[n - 1] == 0) a.sign = 1;
    if (!is_dominant(CType::D, n, sp_to_weight(a))) return std::nullopt;
    return a;
  }
  if (sp_contains(lam, beta) && sb == sl - 1) {
    int r = cell_row(lam, beta);
    long long col = lam.parts[r - 1];
    // Adjoin a cell to the column right of lam/beta.
    int row = 1;
    for (int i = 0; i < n; ++i)
      if (lam.parts[i] >= col + 1) row = i + 2;
    if (row > n) return std::nullopt;
    SignedPartition a = lam;
    a.parts[row - 1] += 1;
    if (!is_dominant(CType::D, n, sp_to_weight(a))) return std::nullopt;
    return a;
  }
  return std::nullopt;
}

}  // namespace krc
