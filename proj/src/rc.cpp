#include "krc/rc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>

namespace krc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void add_L(std::vector<LEntry>& L, int a, int i, long long delta) {
  for (LEntry& e : L) {
    if (e.a == a && e.i == i) {
      e.count += delta;
      assert(e.count >= 0);
      return;
    }
  }
  assert(delta > 0);
  L.push_back(LEntry{a, i, delta});
}

long long get_L(const std::vector<LEntry>& L, int a, int i) {
  long long c = 0;
  for (const LEntry& e : L) {
    if (e.a == a && e.i == i) c += e.count;
  }
  return c;
}

int max_extent(const RC& rc) {
  int m = 1;
  for (const LEntry& e : rc.L) m = std::max(m, e.i);
  for (const auto& part : rc.nu) {
    for (const RString& s : part) m = std::max(m, s.len);
  }
  return m;
}

}  // namespace

RC rc_empty(CType t, int n) {
  RC rc;
  rc.t = t;
  rc.n = n;
  rc.nu.assign(n, {});
  return rc;
}

void rc_normalize(RC& rc) {
  for (auto& part : rc.nu) {
    std::sort(part.begin(), part.end());
  }
  std::vector<LEntry> merged;
  std::sort(rc.L.begin(), rc.L.end(), [](const LEntry& x, const LEntry& y) {
    return std::pair(x.a, x.i) < std::pair(y.a, y.i);
  });
  for (const LEntry& e : rc.L) {
    assert(e.count >= 0);
    if (e.count == 0) continue;
    if (!merged.empty() && merged.back().a == e.a && merged.back().i == e.i) {
      merged.back().count += e.count;
    } else {
      merged.push_back(e);
    }
  }
  rc.L = std::move(merged);
}

std::string rc_str(const RC& rc) {
  std::ostringstream os;
  for (int a = 1; a <= rc.n; ++a) {
    os << a << ":";
    for (const RString& s : rc.nu[a - 1]) {
      os << " (" << s.len << "," << s.rig << ")";
    }
    os << "; ";
  }
  os << "L:";
  for (const LEntry& e : rc.L) {
    os << " " << e.a << "," << e.i << "x" << e.count;
  }
  return os.str();
}

int cartan_pairing(CType t, int n, int a, int b) {
  assert(t == CType::A || t == CType::D);
  assert(1 <= a && a <= n && 1 <= b && b <= n);
  if (a == b) return 2;
  if (t == CType::A) return std::abs(a - b) == 1 ? -1 : 0;
  // D_n: chain 1..n-1 plus the edge (n-2, n).
  int lo = std::min(a, b), hi = std::max(a, b);
  if (hi - lo == 1 && hi <= n - 1) return -1;
  if (lo == n - 2 && hi == n) return -1;
  return 0;
}

int rc_m(const RC& rc, int a, int i) {
  int m = 0;
  for (const RString& s : rc.nu[a - 1]) {
    if (s.len == i) ++m;
  }
  return m;
}

long long rc_vacancy(const RC& rc, int a, int i) {
  long long p = 0;
  for (const LEntry& e : rc.L) {
    if (e.a == a) p += std::min<long long>(i, e.i) * e.count;
  }
  for (int b = 1; b <= rc.n; ++b) {
    int pair = cartan_pairing(rc.t, rc.n, a, b);
    if (pair == 0) continue;
    long long sum = 0;
    for (const RString& s : rc.nu[b - 1]) sum += std::min(i, s.len);
    p -= pair * sum;
  }
  return p;
}

Weight rc_lambda(const RC& rc) {
  int len = weight_len(rc.t, rc.n);
  std::vector<long long> two(len, 0);  // doubled epsilon coordinates
  auto add_fund = [&](int a, long long c) {
    // 2 * Lambda_a.
    if (rc.t == CType::A) {
      for (int k = 0; k < a; ++k) two[k] += 2 * c;
    } else {
      if (a <= rc.n - 2) {
        for (int k = 0; k < a; ++k) two[k] += 2 * c;
      } else if (a == rc.n - 1) {
        for (int k = 0; k < rc.n; ++k) two[k] += c;
      } else {
        for (int k = 0; k < rc.n - 1; ++k) two[k] += c;
        two[rc.n - 1] -= c;
      }
    }
  };
  auto add_root = [&](int a, long long c) {
    // 2 * alpha_a.
    if (rc.t == CType::A || a < rc.n) {
      two[a - 1] += 2 * c;
      two[a] -= 2 * c;
    } else {
      two[rc.n - 2] += 2 * c;
      two[rc.n - 1] += 2 * c;
    }
  };
  for (const LEntry& e : rc.L) add_fund(e.a, e.i * e.count);
  for (int a = 1; a <= rc.n; ++a) {
    for (const RString& s : rc.nu[a - 1]) add_root(a, -s.len);
  }
  Weight lam(len);
  for (int k = 0; k < len; ++k) {
    assert(two[k] % 2 == 0);
    lam[k] = two[k] / 2;
  }
  return lam;
}

bool rc_valid(const RC& rc) {
  int cap = max_extent(rc);
  for (int a = 1; a <= rc.n; ++a) {
    for (int i = 1; i <= cap; ++i) {
      if (rc_vacancy(rc, a, i) < 0) return false;
    }
    for (const RString& s : rc.nu[a - 1]) {
      if (s.rig < 0 || s.rig > rc_vacancy(rc, a, s.len)) return false;
    }
  }
  return true;
}

long long rc_cc_config(const RC& rc) {
  long long two = 0;
  for (int a = 1; a <= rc.n; ++a) {
    for (int b = 1; b <= rc.n; ++b) {
      int pair = cartan_pairing(rc.t, rc.n, a, b);
      if (pair == 0) continue;
      for (const RString& s1 : rc.nu[a - 1]) {
        for (const RString& s2 : rc.nu[b - 1]) {
          two += pair * std::min(s1.len, s2.len);
        }
      }
    }
  }
  assert(two % 2 == 0);
  return two / 2;
}

long long rc_cc(const RC& rc) {
  long long cc = rc_cc_config(rc);
  for (const auto& part : rc.nu) {
    for (const RString& s : part) cc += s.rig;
  }
  return cc;
}

RC rc_theta(const RC& rc) {
  RC out = rc;
  for (int a = 1; a <= rc.n; ++a) {
    for (RString& s : out.nu[a - 1]) {
      s.rig = rc_vacancy(rc, a, s.len) - s.rig;
      assert(s.rig >= 0);
    }
  }
  rc_normalize(out);
  return out;
}

RC rc_vee(const RC& rc) {
  assert(rc.t == CType::A);
  const int n = rc.n;
  RC out = rc_empty(rc.t, n);
  for (int a = 1; a <= n; ++a) {
    out.nu[a - 1] = rc.nu[n - a];
    for (RString& s : out.nu[a - 1]) {
      s.rig = rc_vacancy(rc, n + 1 - a, s.len) - s.rig;
      assert(s.rig >= 0);
    }
  }
  for (const LEntry& e : rc.L)
    out.L.push_back(LEntry{n + 1 - e.a, e.i, e.count});
  rc_normalize(out);
  assert(rc_valid(out));
  return out;
}

// ---------------------------------------------------------------------------
// String selection with instance accounting: when several selections land on
// the same (node, length), each needs its own singular string.

namespace {

struct Selector {
  const RC& rc;
  std::map<std::pair<int, int>, int> used;
  bool cosing = false;  // select cosingular (rigging 0) strings instead

  int sing_count(int a, int len) const {
    long long want = cosing ? 0 : rc_vacancy(rc, a, len);
    int c = 0;
    for (const RString& s : rc.nu[a - 1]) {
      if (s.len == len && s.rig == want) ++c;
    }
    return c;
  }

  int avail(int a, int len) {
    return sing_count(a, len) - used[{a, len}];
  }

  // Smallest singular length >= bound; kInf if none.
  int pick_up(int a, int bound) {
    std::vector<int> lens;
    for (const RString& s : rc.nu[a - 1]) lens.push_back(s.len);
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    for (int len : lens) {
      if (len < bound) continue;
      if (avail(a, len) > 0) {
        ++used[{a, len}];
        return len;
      }
    }
    return kInf;
  }

  // Largest singular length <= cap; 0 if none.
  int pick_down(int a, long long cap) {
    std::vector<int> lens;
    for (const RString& s : rc.nu[a - 1]) lens.push_back(s.len);
    std::sort(lens.rbegin(), lens.rend());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    for (int len : lens) {
      if (len > cap) continue;
      if (avail(a, len) > 0) {
        ++used[{a, len}];
        return len;
      }
    }
    return 0;
  }
};

// Rebuild an RC from the original by removing a box from each string in
// `removals` (selected singular strings) and adding a box to each string in
// `additions` (length 0 means a brand-new string of length 1). The modified
// strings are made singular with respect to the new configuration, whose
// multiplicity array is `newL`.
RC apply_boxes(const RC& rc, const std::vector<std::pair<int, int>>& removals,
               const std::vector<std::pair<int, int>>& additions,
               std::vector<LEntry> newL, bool cosing = false) {
  RC out = rc_empty(rc.t, rc.n);
  out.L = std::move(newL);
  std::vector<std::vector<RString>> work = rc.nu;
  std::vector<std::pair<int, int>> pending;  // (node, new length)

  auto take = [&](int a, int len) {
    long long want = cosing ? 0 : rc_vacancy(rc, a, len);
    auto& part = work[a - 1];
    auto it = std::find(part.begin(), part.end(), RString{len, want});
    assert(it != part.end());
    part.erase(it);
  };

  for (auto [a, len] : removals) {
    assert(len >= 1);
    take(a, len);
    if (len > 1) pending.push_back({a, len - 1});
  }
  for (auto [a, len] : additions) {
    if (len > 0) take(a, len);
    pending.push_back({a, len + 1});
  }
  out.nu = std::move(work);
  for (auto [a, len] : pending) out.nu[a - 1].push_back(RString{len, -1});
  // Modified strings become singular (resp. cosingular) against the new
  // vacancies; in cosingular mode the other strings keep their coquantum
  // numbers, so their riggings absorb the vacancy change.
  for (int a = 1; a <= rc.n; ++a) {
    for (RString& s : out.nu[a - 1]) {
      if (s.rig == -1)
        s.rig = cosing ? 0 : rc_vacancy(out, a, s.len);
      else if (cosing)
        s.rig += rc_vacancy(out, a, s.len) - rc_vacancy(rc, a, s.len);
    }
  }
  rc_normalize(out);
  assert(rc_valid(out));
  return out;
}

// Shared reduction sweep; with `cosing` set it selects cosingular strings
// and preserves coquantum numbers (the direct form of delta-tilde).
RCStep delta_core(const RC& rc, bool cosing) {
  assert(get_L(rc.L, 1, 1) > 0);
  int n = rc.n;
  Selector sel{rc, {}, cosing};
  std::vector<std::pair<int, int>> removals;
  Letter rk{0, false};

  std::vector<LEntry> newL = rc.L;
  add_L(newL, 1, 1, -1);

  if (rc.t == CType::A) {
    int bound = 1;
    rk = Letter{n + 1, false};
    for (int a = 1; a <= n; ++a) {
      int len = sel.pick_up(a, bound);
      if (len == kInf) {
        rk = Letter{a, false};
        break;
      }
      removals.push_back({a, len});
      bound = len;
    }
    return {apply_boxes(rc, removals, {}, std::move(newL), cosing), rk};
  }

  // Type D.
  int bound = 1;
  bool stopped = false;
  for (int a = 1; a <= n - 2; ++a) {
    int len = sel.pick_up(a, bound);
    if (len == kInf) {
      rk = Letter{a, false};
      stopped = true;
      break;
    }
    removals.push_back({a, len});
    bound = len;
  }
  if (!stopped) {
    int i = sel.pick_up(n - 1, bound);
    int j = sel.pick_up(n, bound);
    if (i == kInf && j == kInf) {
      rk = Letter{n - 1, false};
    } else if (j == kInf) {
      removals.push_back({n - 1, i});
      rk = Letter{n, false};
    } else if (i == kInf) {
      removals.push_back({n, j});
      rk = Letter{-n, false};
    } else {
      removals.push_back({n - 1, i});
      removals.push_back({n, j});
      int barbound = std::max(i, j);
      rk = Letter{-1, false};
      for (int a = n - 2; a >= 1; --a) {
        int len = sel.pick_up(a, barbound);
        if (len == kInf) {
          rk = Letter{-(a + 1), false};
          break;
        }
        removals.push_back({a, len});
        barbound = len;
      }
    }
  }
  return {apply_boxes(rc, removals, {}, std::move(newL), cosing), rk};
}

}  // namespace

RCStep delta_bar(const RC& rc) { return delta_core(rc, false); }

RC delta_bar_inv(const RC& rc, Letter b) {
  assert(!b.dual);
  int n = rc.n;
  Weight lam = rc_lambda(rc);
  Weight wtb = letter_wt(rc.t, n, b);
  assert(is_dominant(rc.t, n, weight_add(lam, wtb)));

  Selector sel{rc, {}};
  std::vector<std::pair<int, int>> additions;
  std::vector<LEntry> newL = rc.L;
  add_L(newL, 1, 1, 1);

  // Descending chain from node `from` with initial cap.
  auto descend = [&](int from, long long cap) {
    for (int a = from; a >= 1; --a) {
      int s = sel.pick_down(a, cap);
      additions.push_back({a, s});
      cap = s;
    }
  };

  if (rc.t == CType::A) {
    assert(b.v >= 1 && b.v <= n + 1);
    descend(b.v - 1, kInf);
    return apply_boxes(rc, {}, additions, std::move(newL));
  }

  assert(b.v != 0 && std::abs(b.v) <= n);
  if (b.v > 0) {
    descend(b.v - 1, kInf);
  } else if (b.v == -n) {
    int sn = sel.pick_down(n, kInf);
    additions.push_back({n, sn});
    int s2 = sel.pick_down(n - 2, sn);
    additions.push_back({n - 2, s2});
    descend(n - 3, s2);
  } else if (b.v == -(n - 1)) {
    int si = sel.pick_down(n - 1, kInf);
    int sj = sel.pick_down(n, kInf);
    additions.push_back({n - 1, si});
    additions.push_back({n, sj});
    int s2 = sel.pick_down(n - 2, std::min(si, sj));
    additions.push_back({n - 2, s2});
    descend(n - 3, s2);
  } else {
    int r = -b.v;
    long long cap = kInf;
    for (int a = r; a <= n - 2; ++a) {
      int s = sel.pick_down(a, cap);
      additions.push_back({a, s});
      cap = s;
    }
    int si = sel.pick_down(n - 1, cap);
    int sj = sel.pick_down(n, cap);
    additions.push_back({n - 1, si});
    additions.push_back({n, sj});
    int s2 = sel.pick_down(n - 2, std::min(si, sj));
    additions.push_back({n - 2, s2});
    descend(n - 3, s2);
  }
  return apply_boxes(rc, {}, additions, std::move(newL));
}

RCStep delta_tilde(const RC& rc) {
  RCStep st = delta_bar(rc_theta(rc));
  RCStep out{rc_theta(st.rc), st.rk};
  // Cross-check against the direct cosingular sweep.
  RCStep direct = delta_core(rc, true);
  assert(direct.rc == out.rc);
  assert(direct.rk == out.rk);
  return out;
}

RC delta_tilde_inv(const RC& rc, Letter b) {
  return rc_theta(delta_bar_inv(rc_theta(rc), b));
}

RCStep delta_vee(const RC& rc) {
  assert(rc.t == CType::A);
  int n = rc.n;
  assert(get_L(rc.L, n, 1) > 0);
  Selector sel{rc, {}};
  std::vector<std::pair<int, int>> removals;
  std::vector<LEntry> newL = rc.L;
  add_L(newL, n, 1, -1);

  int bound = 0;
  Letter rk{1, true};
  for (int i = n; i >= 1; --i) {
    int len = sel.pick_up(i, std::max(bound, 1));
    if (len == kInf) {
      rk = Letter{i + 1, true};
      break;
    }
    removals.push_back({i, len});
    bound = len;
  }
  return {apply_boxes(rc, removals, {}, std::move(newL)), rk};
}

RC delta_vee_inv(const RC& rc, Letter b) {
  assert(rc.t == CType::A && b.dual);
  int n = rc.n;
  assert(b.v >= 1 && b.v <= n + 1);
  Weight lam = rc_lambda(rc);
  assert(is_dominant(rc.t, n, weight_add(lam, letter_wt(rc.t, n, b))));

  Selector sel{rc, {}};
  std::vector<std::pair<int, int>> additions;
  std::vector<LEntry> newL = rc.L;
  add_L(newL, n, 1, 1);

  long long cap = kInf;
  for (int i = b.v; i <= n; ++i) {
    int s = sel.pick_down(i, cap);
    additions.push_back({i, s});
    cap = s;
  }
  return apply_boxes(rc, {}, additions, std::move(newL));
}

// ---------------------------------------------------------------------------
// Splitting maps.

RC jbar(const RC& rc, int r, int s) {
  assert(s >= 2 && get_L(rc.L, r, s) > 0);
  RC out = rc;
  add_L(out.L, r, s, -1);
  add_L(out.L, r, 1, 1);
  add_L(out.L, r, s - 1, 1);
  rc_normalize(out);
  assert(rc_valid(out));
  return out;
}

RC jbar_inv(const RC& rc, int r, int s) {
  assert(s >= 2 && get_L(rc.L, r, 1) > 0 && get_L(rc.L, r, s - 1) > 0);
  RC out = rc;
  add_L(out.L, r, 1, -1);
  add_L(out.L, r, s - 1, -1);
  add_L(out.L, r, s, 1);
  rc_normalize(out);
  // In the image of jbar there is no singular string of length < s at
  // node r, so the merged riggings still fit under the vacancy numbers.
  assert(rc_valid(out));
  return out;
}

RC jtilde(const RC& rc, int r, int s) {
  RC out = jbar(rc, r, s);
  for (RString& str : out.nu[r - 1]) {
    if (str.len < s) ++str.rig;
  }
  rc_normalize(out);
  assert(rc_valid(out));
  return out;
}

RC jtilde_inv(const RC& rc, int r, int s) {
  RC out = rc;
  for (RString& str : out.nu[r - 1]) {
    if (str.len < s) {
      --str.rig;
      assert(str.rig >= 0);
    }
  }
  return jbar_inv(out, r, s);
}

namespace {

RC box_split(const RC& rc, int r, bool cosingular) {
  assert(r >= 2 && get_L(rc.L, r, 1) > 0);
  RC out = rc;
  add_L(out.L, r, 1, -1);
  add_L(out.L, 1, 1, 1);
  add_L(out.L, r - 1, 1, 1);
  for (int a = 1; a < r; ++a) {
    long long rig = cosingular ? 0 : rc_vacancy(rc, a, 1);
    out.nu[a - 1].push_back(RString{1, rig});
  }
  rc_normalize(out);
  assert(rc_valid(out));
  // The vacancy numbers are unchanged, so singular strings stay singular.
  return out;
}

RC box_merge(const RC& rc, int r, bool cosingular) {
  assert(r >= 2 && get_L(rc.L, 1, 1) > 0 && get_L(rc.L, r - 1, 1) > 0);
  RC out = rc;
  add_L(out.L, r, 1, 1);
  add_L(out.L, 1, 1, -1);
  add_L(out.L, r - 1, 1, -1);
  for (int a = 1; a < r; ++a) {
    long long rig = cosingular ? 0 : rc_vacancy(rc, a, 1);
    auto& part = out.nu[a - 1];
    auto it = std::find(part.begin(), part.end(), RString{1, rig});
    assert(it != part.end());
    part.erase(it);
  }
  rc_normalize(out);
  assert(rc_valid(out));
  return out;
}

}  // namespace

RC ibar(const RC& rc, int r) { return box_split(rc, r, false); }
RC ibar_inv(const RC& rc, int r) { return box_merge(rc, r, false); }
RC itilde(const RC& rc, int r) { return box_split(rc, r, true); }
RC itilde_inv(const RC& rc, int r) { return box_merge(rc, r, true); }

// ---------------------------------------------------------------------------
// Enumeration.

namespace {

void gen_partitions(long long total, int maxpart,
                    std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (total == 0) {
    emit(cur);
    return;
  }
  for (int p = std::min<long long>(maxpart, total); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(total - p, p, cur, emit);
    cur.pop_back();
  }
}

using Poly = std::map<long long, long long>;

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out;
  for (auto [e1, c1] : x) {
    for (auto [e2, c2] : y) out[e1 + e2] += c1 * c2;
  }
  return out;
}

// Generating polynomial of partitions inside an m x p box.
Poly qbinomial(long long m, long long p) {
  assert(m >= 0 && p >= 0);
  static std::map<std::pair<long long, long long>, Poly> memo;
  static std::recursive_mutex memo_mu;
  std::lock_guard<std::recursive_mutex> lock(memo_mu);
  if (m == 0 || p == 0) return Poly{{0, 1}};
  auto it = memo.find({m, p});
  if (it != memo.end()) return it->second;
  Poly out = qbinomial(m, p - 1);
  for (auto [e, c] : qbinomial(m - 1, p)) out[e + p] += c;
  return memo.emplace(std::pair{m, p}, std::move(out)).first->second;
}

}  // namespace

std::vector<RC> rc_configs(CType t, int n, const std::vector<LEntry>& L,
                           const Weight& lambda) {
  std::vector<RC> out;
  auto coords = root_coords(t, n, L, lambda);
  if (!coords) return out;
  RC base = rc_empty(t, n);
  base.L = L;
  rc_normalize(base);

  std::vector<std::vector<std::vector<int>>> parts_per_node(n);
  for (int a = 1; a <= n; ++a) {
    std::vector<int> cur;
    gen_partitions((*coords)[a - 1], kInf, cur,
                   [&](const std::vector<int>& p) {
                     parts_per_node[a - 1].push_back(p);
                   });
  }
  std::vector<int> idx(n, 0);
  while (true) {
    RC rc = base;
    for (int a = 1; a <= n; ++a) {
      for (int len : parts_per_node[a - 1][idx[a - 1]]) {
        rc.nu[a - 1].push_back(RString{len, 0});
      }
    }
    rc_normalize(rc);
    if (rc_valid(rc)) {
      assert(rc_lambda(rc) == lambda);
      out.push_back(rc);
    }
    int k = 0;
    while (k < n && ++idx[k] == static_cast<int>(parts_per_node[k].size())) {
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

std::vector<RC> rc_enumerate(CType t, int n, const std::vector<LEntry>& L,
                             const Weight& lambda) {
  std::vector<RC> out;
  for (const RC& conf : rc_configs(t, n, L, lambda)) {
    // Rigging choices per (node, length) group: partitions in the
    // m x p box assigned to the m strings in weakly decreasing order.
    std::vector<RC> batch{conf};
    for (int a = 1; a <= n; ++a) {
      std::vector<int> lens;
      for (const RString& s : conf.nu[a - 1]) lens.push_back(s.len);
      std::sort(lens.begin(), lens.end());
      lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
      for (int len : lens) {
        int m = rc_m(conf, a, len);
        long long p = rc_vacancy(conf, a, len);
        // All multisets of m riggings within [0, p].
        std::vector<std::vector<int>> choices;
        std::vector<int> cur;
        std::function<void(int, long long)> rec = [&](int k, long long hi) {
          if (k == m) {
            choices.push_back(cur);
            return;
          }
          for (long long v = hi; v >= 0; --v) {
            cur.push_back(static_cast<int>(v));
            rec(k + 1, v);
            cur.pop_back();
          }
        };
        rec(0, p);
        std::vector<RC> next;
        for (const RC& rc : batch) {
          for (const auto& ch : choices) {
            RC r2 = rc;
            int k = 0;
            for (RString& s : r2.nu[a - 1]) {
              if (s.len == len) s.rig = ch[k++];
            }
            next.push_back(r2);
          }
        }
        batch = std::move(next);
      }
    }
    for (RC& rc : batch) {
      rc_normalize(rc);
      out.push_back(rc);
    }
  }
  return out;
}

std::map<long long, long long> rc_cc_poly(CType t, int n,
                                          const std::vector<LEntry>& L,
                                          const Weight& lambda) {
  Poly fermionic;
  for (const RC& conf : rc_configs(t, n, L, lambda)) {
    Poly term{{rc_cc_config(conf), 1}};
    for (int a = 1; a <= n; ++a) {
      std::vector<int> lens;
      for (const RString& s : conf.nu[a - 1]) lens.push_back(s.len);
      std::sort(lens.begin(), lens.end());
      lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
      for (int len : lens) {
        term = poly_mul(term,
                        qbinomial(rc_m(conf, a, len), rc_vacancy(conf, a, len)));
      }
    }
    for (auto [e, c] : term) fermionic[e] += c;
  }
  Poly listed;
  for (const RC& rc : rc_enumerate(t, n, L, lambda)) ++listed[rc_cc(rc)];
  assert(fermionic == listed);
  return fermionic;
}

}  // namespace krc
