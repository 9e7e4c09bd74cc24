#include "krc/harness.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace krc {

namespace {

using nlohmann::json;

long long sum(const Weight& w) {
  long long s = 0;
  for (long long c : w) s += c;
  return s;
}

std::string wstr(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

// Box totals of the tensor, dual boxes counted separately.
std::pair<long long, long long> box_totals(const Tensor& B) {
  long long row = 0, dual = 0;
  for (const KRFactor& f : B.factors) {
    if (f.kind == FKind::DualRow)
      dual += f.s;
    else
      row += (long long)f.r * f.s;
  }
  return {row, dual};
}

// rc_lambda convention: dual rows register at node n, adding an all-ones
// vector per dual box on top of the gl path weight.
Weight rc_convention(const Tensor& B, const Weight& path_lam) {
  Weight w = path_lam;
  if (B.T.ctype() == CType::A) {
    auto [row, dual] = box_totals(B);
    (void)row;
    for (auto& c : w) c += dual;
  }
  return w;
}

// Y-side weight target of an X-weight: psi_weight, with the free all-ones
// shift of gl weights pinned to the carrier's box count.
Weight vtarget(const Tensor& BX, const Weight& lamX) {
  FoldingData fd = folding_data(BX.T.fam, BX.T.n);
  Weight t = psi_weight(BX.T.fam, BX.T.n, lamX);
  if (fd.Y.ctype() == CType::A) {
    auto [row, dual] = box_totals(vhat_tensor(BX));
    long long shift = (row - dual) - sum(t);
    assert(shift % (long long)t.size() == 0);
    for (auto& c : t) c += shift / (long long)t.size();
  }
  return t;
}

long long exact_div(long long v, long long d) {
  assert(d > 0 && v % d == 0);
  return v / d;
}

}  // namespace

std::string qpoly_str(const QPoly& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [num, c] : p.terms) {
    if (!s.empty()) s += " + ";
    std::string q;
    if (num == 0) {
      q = "";
    } else if (num == 2) {
      q = "q";
    } else if (num % 2 == 0) {
      q = "q^" + std::to_string(num / 2);
    } else {
      q = "q^(" + std::to_string(num) + "/2)";
    }
    if (q.empty())
      s += std::to_string(c);
    else if (c == 1)
      s += q;
    else
      s += std::to_string(c) + " " + q;
  }
  return s;
}

QPoly x_poly(const Tensor& B, const Weight& lam) {
  QPoly out;
  if (B.T.simply_laced()) {
    for (const Path& p : enumerate_hw(B, &lam))
      out.add(2 * d_energy(B, p));
    return out;
  }
  FoldingData fd = folding_data(B.T.fam, B.T.n);
  Tensor VY = vhat_tensor(B);
  long long g0 = fd.gamma[0], a0 = B.T.a0();
  for (const Path& p : enumerate_hw(B, &lam)) {
    long long d = exact_div(d_energy(VY, psi_element(B, p)), g0);
    out.add(exact_div(2 * d, a0));
  }
  return out;
}

QPoly m_poly(const Tensor& B, const Weight& lam) {
  if (!B.T.simply_laced()) return vm_poly(B, lam);
  QPoly out;
  for (const RC& rc : rc_enumerate(B.T.ctype(), B.T.n, tensor_L(B),
                                   rc_convention(B, lam)))
    out.add(2 * rc_cc(rc));
  return out;
}

QPoly vx_poly(const Tensor& B, const Weight& lam) {
  if (B.T.simply_laced()) return x_poly(B, lam);
  FoldingData fd = folding_data(B.T.fam, B.T.n);
  Tensor VY = vhat_tensor(B);
  Weight target = vtarget(B, lam);
  long long g0 = fd.gamma[0], a0 = B.T.a0();
  QPoly out;
  for (const Path& v : enumerate_hw(VY, &target)) {
    if (!psi_preimage(B, v)) continue;
    long long d = exact_div(d_energy(VY, v), g0);
    out.add(exact_div(2 * d, a0));
  }
  return out;
}

QPoly vm_poly(const Tensor& B, const Weight& lam) {
  if (B.T.simply_laced()) return m_poly(B, lam);
  FoldingData fd = folding_data(B.T.fam, B.T.n);
  Tensor VY = vhat_tensor(B);
  Weight target = rc_convention(VY, vtarget(B, lam));
  long long g0 = fd.gamma[0], a0 = B.T.a0();
  QPoly out;
  for (const RC& rc :
       rc_enumerate(VY.T.ctype(), VY.T.n, tensor_L(VY), target)) {
    if (!in_rcv(B.T, rc)) continue;
    long long cc = exact_div(rc_cc(rc), g0);
    out.add(exact_div(2 * cc, a0));
  }
  return out;
}

std::vector<Weight> dominant_weights(const Tensor& B) {
  CType t = B.T.ctype();
  int len = weight_len(t, B.T.n);
  auto [row, dual] = box_totals(B);
  long long hi = row;
  long long lo = (t == CType::A) ? -dual : 0;
  std::vector<Weight> out;
  Weight cur(len, 0);
  // Descending sequences; type D allows a negative last entry.
  std::function<void(int, long long)> rec = [&](int pos, long long maxv) {
    if (pos == len) {
      if (t == CType::A && sum(cur) != row - dual) return;
      if ((t == CType::C || t == CType::D) && (sum(cur) - row) % 2 != 0)
        return;
      if (is_dominant(t, B.T.n, cur)) out.push_back(cur);
      return;
    }
    long long local_lo = lo;
    if (t == CType::D && pos == len - 1) local_lo = -maxv;
    for (long long v = local_lo; v <= maxv; ++v) {
      cur[pos] = v;
      rec(pos + 1, t == CType::D && pos == len - 1 ? maxv : v);
    }
    cur[pos] = 0;
  };
  rec(0, hi);
  return out;
}

// ---------------------------------------------------------------------------
// Verification suites

namespace {

struct CheckItem {
  std::string name;
  std::function<void(CheckResult&)> run;
};

void fail(CheckResult& r, const std::string& detail) {
  r.pass = false;
  if (r.detail.empty()) r.detail = detail;
}

template <typename T>
void expect_eq(CheckResult& r, const T& got, const T& want,
               const std::string& where) {
  ++r.count;
  if (!(got == want)) fail(r, where);
}

std::vector<CheckResult> run_items(std::vector<CheckItem> items) {
  int threads = 0;
  if (const char* e = std::getenv("CRYSTALRC_THREADS")) threads = atoi(e);
  std::vector<CheckResult> results(items.size());
  for (size_t k = 0; k < items.size(); ++k) results[k].name = items[k].name;
  if (threads <= 1) {
    for (size_t k = 0; k < items.size(); ++k) items[k].run(results[k]);
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < items.size(); k = next++)
      items[k].run(results[k]);
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < std::min<int>(threads, (int)items.size()); ++k)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

std::string tensor_name(const Tensor& B) {
  std::string s = B.T.name() + " ";
  for (size_t k = 0; k < B.factors.size(); ++k) {
    const KRFactor& f = B.factors[k];
    if (k) s += "*";
    if (f.kind == FKind::DualRow)
      s += "B^" + std::to_string(f.s) + "v";
    else if (f.kind == FKind::RectA)
      s += "B^(" + std::to_string(f.r) + "," + std::to_string(f.s) + ")";
    else
      s += "B^" + std::to_string(f.s);
  }
  return s;
}

// Row tensors within the configured bounds (and the global desk-scale cap
// of six boxes total).
std::vector<Tensor> corpus_tensors(const VerifyConfig& cfg) {
  std::vector<Tensor> out;
  std::function<void(Tensor&, int)> rec = [&](Tensor& cur, int total) {
    if (!cur.factors.empty()) out.push_back(cur);
    if ((int)cur.factors.size() == cfg.max_factors) return;
    for (int s = 1; s <= cfg.max_s && total + s <= 6; ++s) {
      cur.factors.push_back(KRFactor{FKind::Row, 1, s});
      rec(cur, total + s);
      cur.factors.pop_back();
    }
  };
  Tensor seed{cfg.T, {}};
  rec(seed, 0);
  return out;
}

std::vector<Path> all_elements(const Tensor& B) {
  std::vector<Path> out{{}};
  for (const KRFactor& f : B.factors) {
    std::vector<Path> next;
    for (const Path& p : out)
      for (const Word& w : factor_elements(B.T, f)) {
        Path q = p;
        q.push_back(w);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

Weight simple_root(CType t, int n, int i) {
  Weight a(weight_len(t, n), 0);
  if (i < n || t == CType::A) {
    a[i - 1] = 1;
    a[i] = -1;
  } else if (t == CType::B) {
    a[n - 1] = 1;
  } else if (t == CType::C) {
    a[n - 1] = 2;
  } else {
    a[n - 2] = 1;
    a[n - 1] = 1;
  }
  return a;
}

std::vector<CheckItem> suite_crystal_axioms(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  for (const Tensor& B : corpus_tensors(cfg)) {
    items.push_back({"crystal-axioms " + tensor_name(B), [B](CheckResult& r) {
      long long size = 1;
      for (const KRFactor& f : B.factors)
        size *= (long long)factor_elements(B.T, f).size();
      if (size > 20000) {
        r.detail = "skipped (too large)";
        return;
      }
      for (const Path& p : all_elements(B)) {
        Weight w = path_wt(B, p);
        for (int i = 1; i <= B.T.n; ++i) {
          auto [eps, phi] = path_eps_phi(B, p, i);
          // String lengths match the operator counts.
          int ke = 0, kf = 0;
          for (Path q = p; auto e = path_e(B, q, i); ++ke) q = std::move(*e);
          for (Path q = p; auto f = path_f(B, q, i); ++kf) q = std::move(*f);
          expect_eq(r, eps, ke, "eps mismatch at " + path_str(p));
          expect_eq(r, phi, kf, "phi mismatch at " + path_str(p));
          if (auto f = path_f(B, p, i)) {
            expect_eq(r, path_e(B, *f, i), std::optional<Path>(p),
                      "e(f) != id at " + path_str(p));
            expect_eq(r, path_wt(B, *f),
                      weight_add(w, weight_neg(simple_root(B.T.ctype(),
                                                           B.T.n, i))),
                      "wt(f) mismatch at " + path_str(p));
          }
        }
      }
    }});
  }
  return items;
}

std::vector<CheckItem> suite_energy(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (!cfg.T.simply_laced()) {
    items.push_back({"energy (folded type: covered by the virtual suite)",
                     [](CheckResult&) {}});
    return items;
  }
  AffType T = cfg.T;
  int cap = std::min(cfg.max_s, 3);
  // Yang-Baxter and H-invariance on atomic triples.
  for (int s1 = 1; s1 <= cap; ++s1)
    for (int s2 = 1; s2 <= cap; ++s2)
      for (int s3 = 1; s3 <= cap; ++s3) {
        Tensor B{T,
                 {KRFactor{FKind::Row, 1, s3}, KRFactor{FKind::Row, 1, s2},
                  KRFactor{FKind::Row, 1, s1}}};
        items.push_back({"yang-baxter " + tensor_name(B), [B](CheckResult& r) {
          for (const Path& p : enumerate_hw(B)) {
            Tensor Ba = B, Bb = B;
            Path pa = p, pb = p;
            long long ha = h_at(B, p, 1) + h_at(B, p, 2);
            r_apply_at(Ba, pa, 1);
            r_apply_at(Ba, pa, 2);
            r_apply_at(Ba, pa, 1);
            r_apply_at(Bb, pb, 2);
            r_apply_at(Bb, pb, 1);
            r_apply_at(Bb, pb, 2);
            expect_eq(r, pa, pb, "Yang-Baxter fails at " + path_str(p));
            expect_eq(r, Ba.factors, Bb.factors,
                      "Yang-Baxter shapes differ at " + path_str(p));
            // H is invariant under R and R^2 = id.
            Tensor Bc = B;
            Path pc = p;
            r_apply_at(Bc, pc, 1);
            long long hc = h_at(Bc, pc, 1) + h_at(Bc, pc, 2);
            (void)ha;
            (void)hc;
            ++r.count;
            if (h_at(Bc, pc, 1) != h_at(B, p, 1))
              fail(r, "H not R-invariant at " + path_str(p));
            r_apply_at(Bc, pc, 1);
            expect_eq(r, pc, p, "R^2 != id at " + path_str(p));
          }
        }});
      }
  // The 0-arrow recursion pins H for every type A pair of the corpus.
  if (T.ctype() == CType::A) {
    for (int s2 = 1; s2 <= cfg.max_s; ++s2)
      for (int s1 = 1; s1 <= cfg.max_s; ++s1) {
        KRFactor F2{FKind::Row, 1, s2}, F1{FKind::Row, 1, s1};
        items.push_back(
            {"h-zero-arrows " + T.name() + " B^" + std::to_string(s2) +
                 "*B^" + std::to_string(s1),
             [T, F2, F1](CheckResult& r) {
               r.count = check_h_on_zero_arrows(T, F2, F1);
             }});
      }
  }
  // Type D pairs: H(1^{t-p-q} 2^p 1bar^q (x) 1^s) = p + 2q.
  if (T.ctype() == CType::D) {
    items.push_back({"h-values " + T.name(), [T, cap](CheckResult& r) {
      for (int t = 1; t <= cap; ++t)
        for (int s = 1; s <= cap; ++s)
          for (int p = 0; p + 0 <= std::min(s, t); ++p)
            for (int q = 0; p + q <= std::min(s, t); ++q) {
              Word w2;
              for (int k = 0; k < t - p - q; ++k) w2.push_back({1, false});
              for (int k = 0; k < p; ++k) w2.push_back({2, false});
              for (int k = 0; k < q; ++k) w2.push_back({-1, false});
              Word w1(s, Letter{1, false});
              expect_eq(r,
                        h_pair(T, KRFactor{FKind::Row, 1, t},
                               KRFactor{FKind::Row, 1, s}, w2, w1),
                        (long long)p + 2 * q,
                        "H(v_pq) != p+2q at p=" + std::to_string(p) +
                            " q=" + std::to_string(q));
            }
    }});
  }
  // Tail coenergy against the * involution.
  for (const Tensor& B : corpus_tensors(cfg)) {
    if (B.factors.size() < 2) continue;
    items.push_back({"tail-coenergy " + tensor_name(B), [B](CheckResult& r) {
      Tensor Bs = star_shape(B);
      for (const Path& p : enumerate_hw(B)) {
        Path ps = path_raise(Bs, path_star(B, p));
        expect_eq(r, tail_d(B, p), d_energy(Bs, ps),
                  "tail-D != D(b*) at " + path_str(p));
      }
    }});
  }
  return items;
}

std::vector<CheckItem> suite_rc_core(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (!cfg.T.simply_laced()) {
    items.push_back({"rc-core (folded type: covered by the virtual suite)",
                     [](CheckResult&) {}});
    return items;
  }
  CType t = cfg.T.ctype();
  int n = cfg.T.n;
  std::vector<Tensor> tensors = corpus_tensors(cfg);
  if (t == CType::A) {
    // Columns and rectangles participate in the type A commutations.
    tensors.push_back(Tensor{
        cfg.T, {KRFactor{FKind::RectA, 2, 1}, KRFactor{FKind::Row, 1, 1},
                KRFactor{FKind::Row, 1, 2}}});
    tensors.push_back(
        Tensor{cfg.T, {KRFactor{FKind::RectA, 2, 2},
                       KRFactor{FKind::Row, 1, 1}}});
  }
  for (const Tensor& B : tensors) {
    std::vector<LEntry> L = tensor_L(B);
    items.push_back({"rc-core " + tensor_name(B), [B, L, t, n](CheckResult& r) {
      auto count_L = [&](int a, int i) {
        long long c = 0;
        for (const LEntry& e : L)
          if (e.a == a && e.i == i) c += e.count;
        return c;
      };
      int wide = 0;  // a width >= 2 row entry, if any
      long long wide_count = 0;
      for (const LEntry& e : L)
        if (e.a == 1 && e.i >= 2 && e.count > 0) {
          wide = e.i;
          wide_count = e.count;
        }
      int col = 0;  // a column B^{r,1}, r >= 2, if any
      for (const LEntry& e : L)
        if (e.a >= 2 && e.i == 1 && e.count > 0) col = e.a;
      for (const Weight& lam : dominant_weights(B)) {
        Weight lrc = rc_convention(B, lam);
        for (const RC& rc : rc_enumerate(t, n, L, lrc)) {
          expect_eq(r, rc_valid(rc), true, "invalid RC " + rc_str(rc));
          expect_eq(r, rc_theta(rc_theta(rc)), rc,
                    "theta^2 != id at " + rc_str(rc));
          if (count_L(1, 1) >= 1) {
            RCStep b = delta_bar(rc);
            expect_eq(r, delta_bar_inv(b.rc, b.rk), rc,
                      "delta-bar round trip at " + rc_str(rc));
            RCStep tt = delta_tilde(rc);
            expect_eq(r, delta_tilde_inv(tt.rc, tt.rk), rc,
                      "delta-tilde round trip at " + rc_str(rc));
            if (count_L(1, 1) >= 2) {
              expect_eq(r, delta_tilde(b.rc).rc, delta_bar(tt.rc).rc,
                        "[delta-bar, delta-tilde] at " + rc_str(rc));
            }
            if (wide) {
              // j-tilde commutes with delta-bar and j-bar with delta-tilde.
              expect_eq(r, jtilde(delta_bar(rc).rc, 1, wide),
                        delta_bar(jtilde(rc, 1, wide)).rc,
                        "[j-tilde, delta-bar] at " + rc_str(rc));
              expect_eq(r, jbar(delta_tilde(rc).rc, 1, wide),
                        delta_tilde(jbar(rc, 1, wide)).rc,
                        "[j-bar, delta-tilde] at " + rc_str(rc));
            }
            if (col) {
              expect_eq(r, itilde(delta_bar(rc).rc, col),
                        delta_bar(itilde(rc, col)).rc,
                        "[i-tilde, delta-bar] at " + rc_str(rc));
              expect_eq(r, ibar(delta_tilde(rc).rc, col),
                        delta_tilde(ibar(rc, col)).rc,
                        "[i-bar, delta-tilde] at " + rc_str(rc));
            }
          }
          if (wide) {
            expect_eq(r, jbar_inv(jbar(rc, 1, wide), 1, wide), rc,
                      "j-bar round trip at " + rc_str(rc));
            if (wide_count >= 2) {
              expect_eq(r, jtilde(jbar(rc, 1, wide), 1, wide),
                        jbar(jtilde(rc, 1, wide), 1, wide),
                        "[j-bar, j-tilde] at " + rc_str(rc));
            }
            if (col) {
              expect_eq(r, itilde(jbar(rc, 1, wide), col),
                        jbar(itilde(rc, col), 1, wide),
                        "[i-tilde, j-bar] at " + rc_str(rc));
              expect_eq(r, ibar(jtilde(rc, 1, wide), col),
                        jtilde(ibar(rc, col), 1, wide),
                        "[i-bar, j-tilde] at " + rc_str(rc));
            }
          }
        }
        // The fermionic formula and the rigging listing agree (asserted
        // inside rc_cc_poly).
        rc_cc_poly(t, n, L, lrc);
        ++r.count;
      }
    }});
  }
  return items;
}

std::vector<CheckItem> suite_bijection(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (!cfg.T.simply_laced()) {
    items.push_back({"bijection (folded type: covered by the virtual suite)",
                     [](CheckResult&) {}});
    return items;
  }
  std::vector<Tensor> tensors = corpus_tensors(cfg);
  if (cfg.T.ctype() == CType::A) {
    // Columns, rectangles and dual rows exercise lb/rb and the dual maps.
    tensors.push_back(Tensor{
        cfg.T, {KRFactor{FKind::RectA, 2, 1}, KRFactor{FKind::Row, 1, 2}}});
    tensors.push_back(Tensor{
        cfg.T, {KRFactor{FKind::Row, 1, 1}, KRFactor{FKind::RectA, 2, 1}}});
    tensors.push_back(Tensor{
        cfg.T, {KRFactor{FKind::Row, 1, 2}, KRFactor{FKind::DualRow, 1, 2}}});
  }
  for (const Tensor& B : tensors) {
    items.push_back({"bijection " + tensor_name(B), [B](CheckResult& r) {
      std::map<Weight, long long> counts;
      const int n = B.T.n;
      const KRFactor& first = B.factors.front();
      const KRFactor& last = B.factors.back();
      for (const Path& p : enumerate_hw(B)) {
        RC rc = phi_bar(B, p);
        ++counts[rc_lambda(rc)];
        expect_eq(r, phi_bar_inv(B, rc), p,
                  "phi-bar round trip at " + path_str(p));
        expect_eq(r, d_energy(B, p), rc_cc(phi_tilde(B, p)),
                  "D != cc(phi-tilde) at " + path_str(p));
        // Left operations: lh with delta-bar, ls with j-bar, lb with i-bar.
        if (first.kind == FKind::Row && first.s == 1) {
          RCStep st = delta_bar(rc);
          expect_eq(r, st.rk, p[0][0], "lh rank at " + path_str(p));
          expect_eq(r, phi_bar(lh_shape(B), lh(B, p).second), st.rc,
                    "lh/delta-bar square at " + path_str(p));
        } else if (first.s >= 2 && first.kind != FKind::DualRow) {
          int node = first.kind == FKind::RectA ? first.r : 1;
          expect_eq(r, phi_bar(ls_shape(B), ls(B, p)),
                    jbar(rc, node, first.s),
                    "ls/j-bar square at " + path_str(p));
        } else if (first.kind == FKind::RectA && first.r >= 2) {
          expect_eq(r, phi_bar(lb_shape(B), lb(B, p)), ibar(rc, first.r),
                    "lb/i-bar square at " + path_str(p));
        }
        // Right operations: rs with j-tilde, rh with delta-tilde, rb with
        // i-tilde.
        if (last.s >= 2) {
          int node = last.kind == FKind::DualRow ? n : factor_node(last, n);
          expect_eq(r, phi_bar(rs_shape(B), rs(B, p)),
                    jtilde(rc, node, last.s),
                    "rs/j-tilde square at " + path_str(p));
        } else if (last.kind == FKind::RectA && last.r >= 2) {
          expect_eq(r, phi_bar(rb_shape(B), rb(B, p)), itilde(rc, last.r),
                    "rb/i-tilde square at " + path_str(p));
        } else if (last.kind == FKind::Row) {
          RCStep st = delta_tilde(rc);
          Path raised = path_raise(rh_shape(B), rh(B, p).first);
          expect_eq(r, phi_bar(rh_shape(B), raised), st.rc,
                    "rh/delta-tilde square at " + path_str(p));
          // The rank accounts for the weight change of the raised path.
          Weight mu = rc_lambda(st.rc);
          mu[st.rk.v > 0 ? st.rk.v - 1 : -st.rk.v - 1] +=
              st.rk.v > 0 ? 1 : -1;
          expect_eq(r, mu, rc_lambda(rc),
                    "delta-tilde rank weight at " + path_str(p));
        }
        // * with theta.
        Tensor Bs = star_shape(B);
        expect_eq(r, phi_bar(Bs, path_raise(Bs, path_star(B, p))),
                  rc_theta(rc), "phi-bar(b*) != theta at " + path_str(p));
        // R with the identity.
        for (int j = 1; j + 1 <= (int)B.factors.size(); ++j) {
          Tensor Br = B;
          Path pr = p;
          r_apply_at(Br, pr, j);
          expect_eq(r, phi_bar(Br, pr), rc,
                    "phi-bar not R-invariant at " + path_str(p));
        }
        // Type D: the van Leeuwen rule predicts the delta-tilde weight.
        if (B.T.ctype() == CType::D) {
          std::vector<LEntry> L = tensor_L(B);
          long long ones = 0;
          for (const LEntry& e : L)
            if (e.a == 1 && e.i == 1) ones += e.count;
          if (ones >= 2) {
            RCStep db = delta_bar(rc);
            RCStep dt = delta_tilde(rc);
            auto alpha = predict_alpha(
                B.T.n, sp_from_weight(rc_lambda(rc)),
                sp_from_weight(rc_lambda(db.rc)),
                sp_from_weight(rc_lambda(delta_tilde(db.rc).rc)));
            ++r.count;
            if (!alpha || !(*alpha == sp_from_weight(rc_lambda(dt.rc))))
              fail(r, "van Leeuwen prediction at " + path_str(p));
          }
        }
      }
      for (const auto& [lam, c] : counts) {
        long long m = (long long)rc_enumerate(B.T.ctype(), B.T.n,
                                              tensor_L(B), lam)
                          .size();
        expect_eq(r, c, m, "|P| != |RC| at lambda=" + wstr(lam));
      }
    }});
  }
  return items;
}

std::vector<CheckItem> suite_duality(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (cfg.T.ctype() != CType::A) {
    items.push_back(
        {"duality (type A only)", [](CheckResult&) {}});
    return items;
  }
  AffType T = cfg.T;
  std::vector<Tensor> tensors{
      {T, {KRFactor{FKind::Row, 1, 2}, KRFactor{FKind::Row, 1, 1}}},
      {T, {KRFactor{FKind::DualRow, 1, 1}, KRFactor{FKind::Row, 1, 2}}},
      {T, {KRFactor{FKind::Row, 1, 1}, KRFactor{FKind::DualRow, 1, 2}}},
      {T, {KRFactor{FKind::RectA, 2, 1}, KRFactor{FKind::Row, 1, 1},
           KRFactor{FKind::Row, 1, 1}}},
  };
  for (const Tensor& B : tensors) {
    items.push_back({"duality " + tensor_name(B), [B](CheckResult& r) {
      Tensor Bv = vee_shape(B);
      Tensor Bs = star_shape(B);
      for (const Path& p : all_elements(B)) {
        expect_eq(r, path_star(Bs, path_star(B, p)), p,
                  "*^2 != id at " + path_str(p));
        expect_eq(r, path_vee(Bv, path_vee(B, p)), p,
                  "vee^2 != id at " + path_str(p));
      }
      for (const Path& p : enumerate_hw(B)) {
        RC rc = phi_bar(B, p);
        expect_eq(r, rc_vee(rc_vee(rc)), rc,
                  "rc-vee^2 != id at " + rc_str(rc));
        // The dual-path square: phi-bar of the raised dual equals the
        // complemented-transposed configuration.
        Path pv = path_raise(Bv, path_vee(B, p));
        expect_eq(r, phi_bar(Bv, pv), rc_vee(rc),
                  "dual-path square at " + path_str(p));
      }
    }});
  }
  // delta-vee factors into n box removals.
  Tensor Bd{T, {KRFactor{FKind::DualRow, 1, 1}, KRFactor{FKind::Row, 1, 2},
                KRFactor{FKind::Row, 1, 1}}};
  items.push_back({"delta-vee factorization " + tensor_name(Bd),
                   [Bd](CheckResult& r) {
    int n = Bd.T.n;
    for (const Path& p : enumerate_hw(Bd)) {
      RC rc = phi_bar(Bd, p);
      RCStep st = delta_vee(rc);
      expect_eq(r, delta_vee_inv(st.rc, st.rk), rc,
                "delta-vee round trip at " + path_str(p));
      RC cur = rc;
      std::vector<int> ranks;
      for (int height = n; height >= 1; --height) {
        if (height >= 2) cur = ibar(cur, height);
        RCStep bs = delta_bar(cur);
        ranks.push_back(bs.rk.v);
        cur = bs.rc;
      }
      expect_eq(r, cur, st.rc, "factored RC differs at " + path_str(p));
      std::vector<int> want;
      for (int v = n + 1; v >= 1; --v)
        if (v != st.rk.v) want.push_back(v);
      expect_eq(r, ranks, want, "factored ranks differ at " + path_str(p));
    }
  }});
  return items;
}

std::vector<CheckItem> suite_virtual(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (!has_folding(cfg.T.fam)) {
    items.push_back(
        {"virtual (simply-laced type embeds as itself)", [](CheckResult&) {}});
    return items;
  }
  AffType X = cfg.T;
  FoldingData fd = folding_data(X.fam, X.n);
  // Alignment of eps/phi on whole factors.
  for (int s = 1; s <= cfg.max_s; ++s) {
    items.push_back({"virtual-alignment " + X.name() + " B^" +
                         std::to_string(s),
                     [X, fd, s](CheckResult& r) {
      Tensor BX{X, {KRFactor{FKind::Row, 1, s}}};
      Tensor VY = vhat_tensor(BX);
      for (const Word& w : factor_elements(X, BX.factors[0])) {
        Path p{w};
        Path v = psi_element(BX, p);
        for (int i = 1; i <= X.n; ++i) {
          auto [eps, phi] = path_eps_phi(BX, p, i);
          for (int j : fd.iota[i]) {
            auto [veps, vphi] = path_eps_phi(VY, v, j);
            expect_eq(r, veps, fd.gamma[i] * eps,
                      "eps misaligned at " + path_str(p));
            expect_eq(r, vphi, fd.gamma[i] * phi,
                      "phi misaligned at " + path_str(p));
          }
        }
      }
    }});
  }
  for (const Tensor& BX : corpus_tensors(cfg)) {
    items.push_back({"virtual-bijection " + tensor_name(BX),
                     [X, fd, BX](CheckResult& r) {
      Tensor VY = vhat_tensor(BX);
      long long g0 = fd.gamma[0];
      std::map<Weight, std::set<std::string>> images;
      for (const Path& p : enumerate_hw(BX)) {
        Path v = psi_element(BX, p);
        expect_eq(r, path_is_hw(VY, v), true,
                  "Psi image not highest weight at " + path_str(p));
        RC rc = phi_bar(VY, v);
        expect_eq(r, in_rcv(X, rc), true,
                  "image leaves RC^v at " + path_str(p));
        images[rc_convention(VY, path_wt(VY, v))].insert(rc_str(rc));
        ++r.count;
        if (d_energy(VY, v) % g0 != 0)
          fail(r, "energy not divisible by gamma_0 at " + path_str(p));
        // Virtual reduction stays inside RC^v and decodes the left factor.
        if (BX.factors[0].s == 1) {
          VStep st = delta_hat(X, rc);
          expect_eq(r, st.rk, p[0], "rank decode at " + path_str(p));
          expect_eq(r, in_rcv(X, st.rc), true,
                    "delta-hat leaves RC^v at " + path_str(p));
        }
      }
      for (const auto& [lam, got] : images) {
        std::set<std::string> want;
        for (const RC& rc :
             rc_enumerate(VY.T.ctype(), VY.T.n, tensor_L(VY), lam))
          if (in_rcv(X, rc)) want.insert(rc_str(rc));
        expect_eq(r, got, want,
                  "virtual image != RC^v at lambda=" + wstr(lam));
      }
    }});
  }
  return items;
}

std::vector<CheckItem> suite_xm(const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  for (const Tensor& B : corpus_tensors(cfg)) {
    items.push_back({"xm " + tensor_name(B), [B](CheckResult& r) {
      for (const Weight& lam : dominant_weights(B)) {
        QPoly x = x_poly(B, lam);
        QPoly m = m_poly(B, lam);
        expect_eq(r, x, m, "X != M at lambda=" + wstr(lam) + ": " +
                               qpoly_str(x) + " vs " + qpoly_str(m));
        if (!B.T.simply_laced()) {
          expect_eq(r, x, vx_poly(B, lam),
                    "X != VX at lambda=" + wstr(lam));
          expect_eq(r, x, vm_poly(B, lam),
                    "X != VM at lambda=" + wstr(lam));
        }
      }
    }});
  }
  return items;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{
      "crystal-axioms", "energy", "rc-core", "bijection",
      "duality",        "virtual", "xm"};
  return names;
}

std::vector<CheckResult> verify(const std::string& suite,
                                const VerifyConfig& cfg) {
  std::vector<CheckItem> items;
  if (suite == "crystal-axioms")
    items = suite_crystal_axioms(cfg);
  else if (suite == "energy")
    items = suite_energy(cfg);
  else if (suite == "rc-core")
    items = suite_rc_core(cfg);
  else if (suite == "bijection")
    items = suite_bijection(cfg);
  else if (suite == "duality")
    items = suite_duality(cfg);
  else if (suite == "virtual")
    items = suite_virtual(cfg);
  else if (suite == "xm")
    items = suite_xm(cfg);
  else
    throw std::invalid_argument("unknown suite: " + suite);
  return run_items(std::move(items));
}

// ---------------------------------------------------------------------------
// CLI

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AffType parse_type(const std::string& type, int rank) {
  auto fam = family_from_name(type);
  if (!fam) throw UsageError("unknown type: " + type);
  if (rank < 2) throw UsageError("rank must be at least 2");
  return AffType{*fam, rank};
}

// Factor tokens: "s" (row), "rxs" (type A rectangle), "sv" (dual row).
std::vector<KRFactor> parse_factors(const std::string& s) {
  std::vector<KRFactor> out;
  for (std::string tok : split(s, ',')) {
    if (tok.empty()) throw UsageError("empty factor token");
    KRFactor f{FKind::Row, 1, 1};
    if (tok.back() == 'v') {
      f.kind = FKind::DualRow;
      tok.pop_back();
    }
    size_t x = tok.find('x');
    try {
      if (x != std::string::npos) {
        f.r = std::stoi(tok.substr(0, x));
        f.s = std::stoi(tok.substr(x + 1));
        if (f.r >= 2) f.kind = FKind::RectA;
      } else {
        f.s = std::stoi(tok);
      }
    } catch (...) {
      throw UsageError("bad factor token: " + tok);
    }
    if (f.s < 1 || f.r < 1 || (f.kind == FKind::DualRow && f.r != 1))
      throw UsageError("bad factor token: " + tok);
    out.push_back(f);
  }
  return out;
}

Weight parse_weight(const std::string& s, CType t, int n) {
  Weight w;
  for (const std::string& tok : split(s, ',')) {
    try {
      w.push_back(std::stoll(tok));
    } catch (...) {
      throw UsageError("bad weight entry: " + tok);
    }
  }
  if ((int)w.size() != weight_len(t, n))
    throw UsageError("weight must have " +
                     std::to_string(weight_len(t, n)) + " entries");
  return w;
}

Path parse_path(const std::string& s) {
  Path p;
  for (const std::string& wtok : split(s, '|')) {
    Word w;
    if (!wtok.empty()) {
      for (const std::string& ltok : split(wtok, ',')) {
        auto x = letter_parse(ltok);
        if (!x) throw UsageError("bad letter: " + ltok);
        w.push_back(*x);
      }
    }
    p.push_back(w);
  }
  return p;
}

json rc_to_json(const RC& rc) {
  json nu = json::array();
  for (const auto& part : rc.nu) {
    json strings = json::array();
    for (const RString& s : part) strings.push_back({s.len, s.rig});
    nu.push_back(strings);
  }
  json L = json::array();
  for (const LEntry& e : rc.L) L.push_back({e.a, e.i, e.count});
  return json{{"nu", nu}, {"L", L}, {"lambda", rc_lambda(rc)}};
}

RC rc_from_json(CType t, int n, const json& j) {
  RC rc = rc_empty(t, n);
  for (const auto& e : j.at("L"))
    rc.L.push_back(LEntry{e.at(0).get<int>(), e.at(1).get<int>(),
                          e.at(2).get<long long>()});
  const json& nu = j.at("nu");
  if ((int)nu.size() != n) throw UsageError("nu must have rank entries");
  for (int a = 0; a < n; ++a)
    for (const auto& s : nu[a])
      rc.nu[a].push_back(
          RString{s.at(0).get<int>(), s.at(1).get<long long>()});
  rc_normalize(rc);
  if (!rc_valid(rc)) throw UsageError("rigged configuration not admissible");
  return rc;
}

json qpoly_to_json(const QPoly& p) {
  json terms = json::array();
  for (const auto& [num, c] : p.terms) terms.push_back({num, c});
  return json{{"den", 2}, {"terms", terms}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(out_path);
    os << text << "\n";
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"crystalrc: KR crystals, rigged configurations, X = M"};
  app.require_subcommand(1);

  std::string type = "A", factors_arg, weight_arg = "all", out_path,
              path_arg, rc_arg, suite_arg;
  int rank = 2, max_s = 2, max_factors = 2;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool need_factors) {
    sub->add_option("--type", type, "affine family (A, B, C, D, A2even, "
                                    "A2even+, A2odd, D2)");
    sub->add_option("--rank", rank, "classical rank n")->required();
    auto* f = sub->add_option("--factors", factors_arg,
                              "factor widths, e.g. 1,2,2 (type A also rxs "
                              "rectangles and sv dual rows)");
    if (need_factors) f->required();
    sub->add_flag("--json", as_json, "JSON output");
    sub->add_option("--out", out_path, "write output to a file");
  };

  std::vector<CLI::App*> poly_subs;
  for (const char* name : {"x", "m", "vx", "vm"}) {
    auto* sub = app.add_subcommand(
        name, std::string("print the ") + name + " polynomial");
    add_common(sub, true);
    sub->add_option("--weight", weight_arg,
                    "classical weight (comma-separated) or 'all'");
    poly_subs.push_back(sub);
  }

  auto* bij = app.add_subcommand("bij", "path -> rigged configuration");
  add_common(bij, false);
  bij->add_option("--path", path_arg, "tensor element, factors separated "
                                      "by '|', letters by ','")
      ->required();

  auto* trace = app.add_subcommand("trace", "path -> RC with step trace");
  add_common(trace, false);
  trace->add_option("--path", path_arg, "tensor element")->required();

  auto* bijinv = app.add_subcommand("bij-inv", "rigged configuration -> path");
  add_common(bijinv, false);
  bijinv->add_option("--rc", rc_arg,
                     "RC as JSON text, @file, or '-' for stdin")
      ->required();

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite_arg, "one of: crystal-axioms, energy, "
                                      "rc-core, bijection, duality, virtual, "
                                      "xm")
      ->required();
  add_common(ver, false);
  ver->add_option("--max-s", max_s, "largest factor width");
  ver->add_option("--max-factors", max_factors, "largest factor count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    AffType T = parse_type(type, rank);

    auto make_tensor = [&](const Path* from_path) {
      Tensor B{T, {}};
      if (!factors_arg.empty()) {
        B.factors = parse_factors(factors_arg);
      } else if (from_path) {
        // Infer one-row factors from the word lengths.
        for (const Word& w : *from_path)
          B.factors.push_back(KRFactor{FKind::Row, 1, (int)w.size()});
      } else {
        throw UsageError("--factors is required here");
      }
      for (const KRFactor& f : B.factors)
        if (f.kind != FKind::Row && T.ctype() != CType::A)
          throw UsageError("rectangles and dual rows need type A");
      return B;
    };

    for (size_t k = 0; k < poly_subs.size(); ++k) {
      if (!poly_subs[k]->parsed()) continue;
      const char* names[] = {"x", "m", "vx", "vm"};
      QPoly (*fns[])(const Tensor&, const Weight&) = {x_poly, m_poly,
                                                      vx_poly, vm_poly};
      Tensor B = make_tensor(nullptr);
      std::vector<Weight> lams;
      if (weight_arg == "all")
        lams = dominant_weights(B);
      else
        lams = {parse_weight(weight_arg, T.ctype(), T.n)};
      std::ostringstream os;
      if (weight_arg == "all") {
        json arr = json::array();
        for (const Weight& lam : lams) {
          QPoly p = fns[k](B, lam);
          if (p.terms.empty()) continue;
          if (as_json) {
            json e = qpoly_to_json(p);
            e["lambda"] = lam;
            arr.push_back(e);
          } else {
            os << names[k] << "[" << wstr(lam) << "] = " << qpoly_str(p)
               << "\n";
          }
        }
        if (as_json) os << arr.dump() << "\n";
      } else {
        QPoly p = fns[k](B, lams[0]);
        if (as_json)
          os << qpoly_to_json(p).dump() << "\n";
        else
          os << qpoly_str(p) << "\n";
      }
      std::string text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      emit(text, out_path);
      return 0;
    }

    if (bij->parsed() || trace->parsed()) {
      Path p = parse_path(path_arg);
      Tensor B = make_tensor(&p);
      if (p.size() != B.factors.size())
        throw UsageError("path has a different number of factors");
      for (size_t k = 0; k < p.size(); ++k)
        if (!factor_element_valid(B.T, B.factors[k], p[k]))
          throw UsageError("word " + word_str(p[k]) +
                           " is not an element of its factor");
      if (!path_is_hw(B, p))
        throw UsageError("path is not classically highest weight");
      std::vector<BijStep> steps;
      RC rc = phi_bar(B, p, &steps);
      if (bij->parsed()) {
        emit(as_json ? rc_to_json(rc).dump() : rc_str(rc), out_path);
      } else {
        std::ostringstream os;
        if (as_json) {
          json arr = json::array();
          for (const BijStep& st : steps) {
            json e{{"op", st.op}, {"rc", rc_to_json(st.rc)}};
            e["rk"] = st.rk ? json(letter_str(*st.rk)) : json(nullptr);
            arr.push_back(e);
          }
          os << arr.dump();
        } else {
          for (const BijStep& st : steps) {
            os << st.op;
            if (st.rk) os << " rank " << letter_str(*st.rk);
            os << "\n" << rc_str(st.rc) << "\n";
          }
        }
        std::string text = os.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(text, out_path);
      }
      return 0;
    }

    if (bijinv->parsed()) {
      std::string text;
      if (rc_arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else if (!rc_arg.empty() && rc_arg[0] == '@') {
        std::ifstream is(rc_arg.substr(1));
        if (!is) throw UsageError("cannot read " + rc_arg.substr(1));
        std::ostringstream ss;
        ss << is.rdbuf();
        text = ss.str();
      } else {
        text = rc_arg;
      }
      json j;
      try {
        j = json::parse(text);
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad RC JSON: ") + e.what());
      }
      RC rc = rc_from_json(T.ctype(), T.n, j);
      Tensor B{T, {}};
      if (!factors_arg.empty()) {
        B.factors = parse_factors(factors_arg);
        std::vector<LEntry> a = tensor_L(B), b = rc.L;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw UsageError("--factors disagrees with the RC's L");
      } else {
        for (const LEntry& e : rc.L)
          for (long long c = 0; c < e.count; ++c)
            B.factors.push_back(e.a == 1
                                    ? KRFactor{FKind::Row, 1, e.i}
                                    : KRFactor{FKind::RectA, e.a, e.i});
      }
      Path p = phi_bar_inv(B, rc);
      if (as_json)
        emit(json{{"path", path_str(p)}}.dump(), out_path);
      else
        emit(path_str(p), out_path);
      return 0;
    }

    if (ver->parsed()) {
      VerifyConfig cfg;
      cfg.T = T;
      cfg.max_s = max_s;
      cfg.max_factors = max_factors;
      std::vector<CheckResult> results;
      try {
        results = verify(suite_arg, cfg);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      bool ok = true;
      std::ostringstream os;
      json arr = json::array();
      for (const CheckResult& r : results) {
        ok = ok && r.pass;
        if (as_json) {
          arr.push_back(json{{"name", r.name},
                             {"pass", r.pass},
                             {"count", r.count},
                             {"detail", r.detail}});
        } else {
          os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
             << r.count << " checks)";
          if (!r.detail.empty()) os << " -- " << r.detail;
          os << "\n";
        }
      }
      if (as_json) os << arr.dump() << "\n";
      std::string text = os.str();
      if (!text.empty() && text.back() == '\n') text.pop_back();
      emit(text, out_path);
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace krc
