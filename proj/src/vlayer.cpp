#include "krc/vlayer.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <tuple>

namespace krc {

std::vector<KRFactor> vhat_factors(Family fam, int s) {
  switch (fam) {
    case Family::C1:
    case Family::A2even:
    case Family::A2evenDagger:
    case Family::D2:
      return {KRFactor{FKind::DualRow, 1, s}, KRFactor{FKind::Row, 1, s}};
    case Family::B1:
      return {KRFactor{FKind::Row, 1, 2 * s}};
    case Family::A2odd:
      return {KRFactor{FKind::Row, 1, s}};
    default: std::abort();
  }
}

int vhat_width(Family fam) {
  switch (fam) {
    case Family::C1:
    case Family::A2even:
    case Family::A2evenDagger:
    case Family::D2:
      return 2;
    case Family::B1:
    case Family::A2odd:
      return 1;
    default: std::abort();
  }
}

Tensor vhat_tensor(const Tensor& BX) {
  FoldingData fd = folding_data(BX.T.fam, BX.T.n);
  Tensor out{fd.Y, {}};
  for (const KRFactor& f : BX.factors) {
    assert(f.kind == FKind::Row);
    for (const KRFactor& g : vhat_factors(BX.T.fam, f.s))
      out.factors.push_back(g);
  }
  return out;
}

std::optional<Path> vpath_f(const AffType& X, const Tensor& VY, const Path& p,
                            int i) {
  FoldingData fd = folding_data(X.fam, X.n);
  Path cur = p;
  for (int j : fd.iota[i]) {
    for (int t = 0; t < fd.gamma[i]; ++t) {
      auto next = path_f(VY, cur, j);
      if (!next) return std::nullopt;
      cur = *next;
    }
  }
  return cur;
}

std::optional<Path> vpath_e(const AffType& X, const Tensor& VY, const Path& p,
                            int i) {
  FoldingData fd = folding_data(X.fam, X.n);
  Path cur = p;
  for (int j : fd.iota[i]) {
    for (int t = 0; t < fd.gamma[i]; ++t) {
      auto next = path_e(VY, cur, j);
      if (!next) return std::nullopt;
      cur = *next;
    }
  }
  return cur;
}

namespace {

// gl weights of type A carriers are compared up to all-ones shifts (dual
// rows contribute negative coordinates).
bool weights_match(CType yt, const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  if (yt != CType::A) return a == b;
  long long d = a[0] - b[0];
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] - b[k] != d) return false;
  return true;
}

}  // namespace

const std::map<Word, Path>& psi_factor_map(const AffType& X, int s) {
  static std::map<std::tuple<Family, int, int>, std::map<Word, Path>> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_tuple(X.fam, X.n, s);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  FoldingData fd = folding_data(X.fam, X.n);
  KRFactor f{FKind::Row, 1, s};
  Tensor BXf{X, {f}};
  Tensor VYf{fd.Y, vhat_factors(X.fam, s)};
  std::vector<Path> yhws = enumerate_hw(VYf);

  std::map<Word, Path> m;
  for (const Path& h : enumerate_hw(BXf)) {
    Weight target = psi_weight(X.fam, X.n, path_wt(BXf, h));
    const Path* img = nullptr;
    for (const Path& hy : yhws) {
      if (weights_match(fd.Y.ctype(), path_wt(VYf, hy), target)) {
        assert(img == nullptr);  // carriers are classically multiplicity-free
        img = &hy;
      }
    }
    assert(img != nullptr);
    std::deque<std::pair<Path, Path>> queue{{h, *img}};
    while (!queue.empty()) {
      auto [xp, yp] = queue.front();
      queue.pop_front();
      if (!m.emplace(xp[0], yp).second) continue;
      for (int i = 1; i <= X.n; ++i) {
        auto xf = path_f(BXf, xp, i);
        auto yf = vpath_f(X, VYf, yp, i);
        assert(xf.has_value() == yf.has_value());
        if (xf) queue.push_back({*xf, *yf});
      }
    }
  }
  assert(m.size() == factor_elements(X, f).size());
  return cache[key] = std::move(m);
}

Path psi_element(const Tensor& BX, const Path& p) {
  Path out;
  for (size_t k = 0; k < BX.factors.size(); ++k) {
    const auto& m = psi_factor_map(BX.T, BX.factors[k].s);
    auto it = m.find(p[k]);
    assert(it != m.end());
    for (const Word& w : it->second) out.push_back(w);
  }
  return out;
}

std::optional<Path> psi_preimage(const Tensor& BX, const Path& v) {
  Path out;
  size_t pos = 0;
  for (const KRFactor& f : BX.factors) {
    const auto& m = psi_factor_map(BX.T, f.s);
    size_t w = vhat_width(BX.T.fam);
    Path piece(v.begin() + pos, v.begin() + pos + w);
    pos += w;
    const Word* found = nullptr;
    for (const auto& [xw, yp] : m) {
      if (yp == piece) {
        found = &xw;
        break;
      }
    }
    if (!found) return std::nullopt;
    out.push_back(*found);
  }
  assert(pos == v.size());
  return out;
}

bool in_rcv(const AffType& X, const RC& rchat) {
  FoldingData fd = folding_data(X.fam, X.n);
  const int n = X.n;
  // (1) sigma-orbit symmetry of the rigged partitions.
  for (int a = 1; a <= n; ++a) {
    const auto& orbit = fd.iota[a];
    if (orbit.size() == 2 &&
        rchat.nu[orbit[0] - 1] != rchat.nu[orbit[1] - 1])
      return false;
  }
  // (2) gamma-divisibility of lengths and riggings, with the A_{2n}^{(2)}
  // exceptions at node n.
  for (int a = 1; a <= n; ++a) {
    int g = fd.gamma[a];
    bool a2ish =
        X.fam == Family::A2even || X.fam == Family::A2evenDagger;
    for (int b : fd.iota[a]) {
      for (const RString& str : rchat.nu[b - 1]) {
        bool len_free = a == n && a2ish;
        if (!len_free && str.len % g != 0) return false;
        if (a == n && X.fam == Family::A2even) {
          if (str.rig % 2 != 0) return false;
        } else if (a == n && X.fam == Family::A2evenDagger) {
          if ((str.rig - str.len) % 2 != 0) return false;
        } else if (str.rig % g != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

VStep delta_hat(const AffType& X, const RC& rchat) {
  FoldingData fd = folding_data(X.fam, X.n);
  Path emitted;
  RC out = rc_empty(rchat.t, rchat.n);
  if (fd.Y.ctype() == CType::A) {
    RCStep s1 = delta_vee(rchat);
    RCStep s2 = delta_bar(s1.rc);
    emitted = {Word{s1.rk}, Word{s2.rk}};
    out = s2.rc;
  } else if (X.fam == Family::B1) {
    RC split = jbar(rchat, 1, 2);
    RCStep s1 = delta_bar(split);
    RCStep s2 = delta_bar(s1.rc);
    emitted = {Word{s1.rk, s2.rk}};
    out = s2.rc;
  } else {  // A2odd
    RCStep s1 = delta_bar(rchat);
    emitted = {Word{s1.rk}};
    out = s1.rc;
  }
  // Decode the emitted carrier element as an X-letter via the Psi table.
  for (const auto& [xw, yp] : psi_factor_map(X, 1)) {
    if (yp == emitted) return {std::move(out), xw};
  }
  assert(false && "emitted rank pair is not the image of an X letter");
  std::abort();
}

RC j_hat(const AffType& X, const RC& rchat, int s) {
  assert(s >= 2);
  FoldingData fd = folding_data(X.fam, X.n);
  if (fd.Y.ctype() == CType::A) {
    return jbar(jbar(rchat, fd.Y.n, s), 1, s);
  }
  if (X.fam == Family::B1) {
    // B_Y^{2s} -> B_Y^2 (x) B_Y^{2s-2}: pure relabeling of the context.
    RC out = rchat;
    auto dec = [&](int len) {
      for (LEntry& e : out.L) {
        if (e.a == 1 && e.i == len) {
          e.count -= 1;
          assert(e.count >= 0);
          return;
        }
      }
      assert(false);
    };
    dec(2 * s);
    out.L.push_back(LEntry{1, 2, 1});
    out.L.push_back(LEntry{1, 2 * s - 2, 1});
    rc_normalize(out);
    assert(rc_valid(out));
    return out;
  }
  return jbar(rchat, 1, s);  // A2odd
}

}  // namespace krc
