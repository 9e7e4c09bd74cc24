// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit code is the number of failed criteria.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "krc/bijection.hpp"
#include "krc/energy.hpp"
#include "krc/harness.hpp"
#include "krc/rc.hpp"
#include "krc/vlayer.hpp"

using namespace krc;

namespace {

int g_failures = 0;

struct Criterion {
  bool ok = true;
  long long count = 0;
  void ensure(bool c, const char* what) {
    ++count;
    if (!c) {
      ok = false;
      std::fprintf(stderr, "  check failed: %s\n", what);
    }
  }
  void report(int k, const char* desc) {
    std::printf("%s criterion %d: %s (%lld checks)\n", ok ? "PASS" : "FAIL",
                k, desc, count);
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

Word mk(std::initializer_list<int> vs) {
  Word w;
  for (int v : vs) w.push_back(Letter{v, false});
  return w;
}

RC mkrc(CType t, int n, std::vector<LEntry> L,
        std::vector<std::vector<RString>> nu) {
  RC rc = rc_empty(t, n);
  rc.L = std::move(L);
  rc.nu = std::move(nu);
  rc_normalize(rc);
  return rc;
}

std::vector<int> shape(const RC& rc, int a) {
  std::vector<int> out;
  for (const RString& s : rc.nu[a - 1]) out.push_back(s.len);
  std::sort(out.rbegin(), out.rend());
  return out;
}

long long boxes(const KRFactor& f) { return (long long)f.r * f.s; }

// The induced rh on highest weight paths: drop the rightmost factor and
// raise to the highest weight vector of the classical component.
Path rh_hw(const Tensor& B, const Path& p) {
  return path_raise(rh_shape(B), rh(B, p).first);
}

// All multisets (as ordered tensors) over the factor menu with at most `cap`
// boxes in total.
std::vector<Tensor> box_corpus(const AffType& T, bool with_columns, int cap) {
  std::vector<KRFactor> menu;
  for (int s = 1; s <= cap; ++s) menu.push_back({FKind::Row, 1, s});
  if (with_columns)
    for (int r = 2; r <= T.n; ++r) menu.push_back({FKind::RectA, r, 1});
  std::vector<Tensor> out;
  std::vector<KRFactor> cur;
  auto rec = [&](auto&& self, size_t first, long long left) -> void {
    if (!cur.empty()) out.push_back(Tensor{T, cur});
    for (size_t k = first; k < menu.size(); ++k) {
      if (boxes(menu[k]) > left) continue;
      cur.push_back(menu[k]);
      self(self, k, left - boxes(menu[k]));
      cur.pop_back();
    }
  };
  rec(rec, 0, cap);
  return out;
}

std::string tname(const Tensor& B) {
  std::string s = B.T.name() + " ";
  for (size_t k = 0; k < B.factors.size(); ++k) {
    const KRFactor& f = B.factors[k];
    if (k) s += "*";
    s += "B^" + (f.kind == FKind::RectA
                     ? "(" + std::to_string(f.r) + "," + std::to_string(f.s) +
                           ")"
                     : std::to_string(f.s));
  }
  return s;
}

bool suites_pass(Criterion& c, const std::string& suite,
                 const VerifyConfig& cfg) {
  bool all = true;
  for (const CheckResult& r : verify(suite, cfg)) {
    c.count += r.count;
    if (!r.pass) {
      all = false;
      std::fprintf(stderr, "  suite check failed: %s -- %s\n", r.name.c_str(),
                   r.detail.c_str());
    }
  }
  return all;
}

const AffType A3{Family::A1, 3}, A4{Family::A1, 4}, A5{Family::A1, 5};
const AffType D4{Family::D1, 4};

void criterion1() {
  Criterion c;

  // Admissible configurations of D_4 B^1 (x) B^2 (x) B^2 (x) B^3 at 2 Lambda_1.
  const std::vector<LEntry> L4{{1, 1, 1}, {1, 2, 2}, {1, 3, 1}};
  const Weight lam4{2, 0, 0, 0};
  {
    std::vector<RC> confs = rc_configs(CType::D, 4, L4, lam4);
    c.ensure(confs.size() == 3, "three configurations");
    auto find = [&](const std::vector<int>& nu1) -> const RC* {
      for (const RC& rc : confs)
        if (shape(rc, 1) == nu1) return &rc;
      return nullptr;
    };
    const RC* c1 = find({3, 2, 1});
    c.ensure(c1 != nullptr, "config with nu1 = (3,2,1)");
    if (c1) {
      c.ensure(shape(*c1, 2) == std::vector<int>{3, 3} &&
                   shape(*c1, 3) == std::vector<int>{3} &&
                   shape(*c1, 4) == std::vector<int>{3},
               "shapes of the (3,2,1) configuration");
      c.ensure(rc_vacancy(*c1, 1, 3) == 2 && rc_vacancy(*c1, 1, 2) == 1 &&
                   rc_vacancy(*c1, 1, 1) == 0 && rc_vacancy(*c1, 2, 3) == 0,
               "vacancies of the (3,2,1) configuration");
    }
    const RC* c2 = find({2, 2, 1, 1});
    c.ensure(c2 != nullptr, "config with nu1 = (2,2,1,1)");
    if (c2)
      c.ensure(shape(*c2, 2) == std::vector<int>{2, 2, 1, 1} &&
                   shape(*c2, 3) == std::vector<int>{2, 1} &&
                   shape(*c2, 4) == std::vector<int>{2, 1},
               "shapes of the (2,2,1,1) configuration");
    const RC* c3 = find({3, 3});
    c.ensure(c3 != nullptr && shape(*c3, 2) == std::vector<int>{3, 3},
             "config with nu1 = (3,3)");
  }

  // One reduction step on the displayed D_4 rigged configuration.
  {
    RC rc = mkrc(CType::D, 4, L4,
                 {{{3, 0}, {2, 1}, {1, 0}},
                  {{3, 0}, {3, 0}},
                  {{3, 0}},
                  {{3, 0}}});
    c.ensure(rc_valid(rc), "displayed RC is admissible");
    RCStep st = delta_bar(rc);
    c.ensure(st.rk == Letter{-2, false}, "reduction rank 2bar");
    RC expect = mkrc(CType::D, 4, {{1, 2, 2}, {1, 3, 1}},
                     {{{3, 0}, {2, 1}}, {{2, 0}, {2, 0}}, {{2, 0}}, {{2, 0}}});
    c.ensure(st.rc == expect, "reduced RC matches");
    c.ensure(delta_bar_inv(st.rc, st.rk) == rc, "reduction inverse");
  }

  // One dual reduction step on the displayed A_5 rigged configuration.
  {
    std::vector<LEntry> L{{5, 1, 1}, {1, 1, 2}, {1, 2, 3}, {1, 3, 2}};
    RC rc = mkrc(CType::A, 5, L,
                 {{{3, 0}, {2, 0}, {2, 0}, {2, 0}},
                  {{2, 0}, {2, 0}, {1, 0}},
                  {{1, 0}, {1, 0}},
                  {{1, 1}},
                  {{1, 0}}});
    c.ensure(rc_valid(rc), "dual-step RC is admissible");
    c.ensure(rc_lambda(rc) == Weight{6, 5, 4, 2, 1, 1}, "dual-step weight");
    RCStep st = delta_vee(rc);
    c.ensure(st.rk == Letter{2, true}, "dual reduction rank 2vee");
    RC expect = mkrc(CType::A, 5, {{1, 1, 2}, {1, 2, 3}, {1, 3, 2}},
                     {{{3, 0}, {2, 0}, {2, 0}, {2, 0}},
                      {{2, 0}, {2, 0}},
                      {{1, 0}},
                      {},
                      {}});
    c.ensure(st.rc == expect, "dual-reduced RC matches");
    c.ensure(delta_vee_inv(st.rc, st.rk) == rc, "dual reduction inverse");
  }

  // The worked D_4 bijection example: phi-bar image, rh, and delta-tilde.
  {
    Tensor B{D4, {{FKind::Row, 1, 1},
                  {FKind::Row, 1, 2},
                  {FKind::Row, 1, 2},
                  {FKind::Row, 1, 1}}};
    Path b{mk({-3}), mk({2, 3}), mk({1, 2}), mk({1})};
    c.ensure(path_is_hw(B, b), "worked path is highest weight");
    RC rc = phi_bar(B, b);
    RC expect = mkrc(CType::D, 4, {{1, 1, 2}, {1, 2, 2}},
                     {{{2, 0}, {1, 0}, {1, 0}}, {{1, 1}, {1, 0}}, {{1, 0}},
                      {{1, 0}}});
    c.ensure(rc == expect, "phi-bar image matches");
    Path raised = rh_hw(B, b);
    c.ensure(raised == Path{mk({3}), mk({2, 2}), mk({1, 1})},
             "rh removes the rightmost box");
    RCStep st = delta_tilde(rc);
    c.ensure(st.rk == Letter{-3, false}, "delta-tilde rank 3bar");
    c.ensure(phi_bar(rh_shape(B), raised) == st.rc,
             "rh corresponds to delta-tilde");
  }

  // The B_3^(1) embedding: 1 circle 2bar -> 1 1 3 3bar 2bar 2bar, and the
  // affine-node arrow factors through the folded pair.
  {
    AffType X{Family::B1, 3};
    Tensor BX{X, {KRFactor{FKind::Row, 1, 3}}};
    Tensor VY = vhat_tensor(BX);
    c.ensure(VY.T == D4 && VY.factors ==
                              std::vector<KRFactor>{KRFactor{FKind::Row, 1, 6}},
             "virtual carrier is D_4 B^6");
    Path b{mk({1, 0, -2})};
    Path v = psi_element(BX, b);
    c.ensure(v == Path{mk({1, 1, 3, -3, -2, -2})}, "embedding image");
    auto fb = path_f(BX, b, 3);
    auto fv = vpath_f(X, VY, v, 3);
    c.ensure(fb && *fb == Path{mk({1, -3, -2})}, "f_3 on the B_3 side");
    c.ensure(fv && psi_element(BX, *fb) == *fv, "f_3 commutes with Psi");
    c.ensure(psi_preimage(BX, v) == b, "embedding preimage");
  }

  // Star duality: the D_5 word and the A_4 rectangle.
  {
    c.ensure(word_star(CType::D, 5, mk({1, 1, 3, -5})) == mk({-5, -3, -1, -1}),
             "D_5 star word");
    Tensor B{A4, {{FKind::RectA, 2, 2}}};
    Path p = {mk({2, 1, 3, 1})};
    c.ensure(path_star(B, p) == Path{mk({5, 3, 5, 4})}, "A_4 rectangle star");
  }

  // Contragredient duality of an A_5 rectangle: complement and reverse.
  {
    Tensor B{A5, {{FKind::RectA, 2, 3}}};
    Path p = {mk({3, 1, 4, 1, 6, 2})};
    Path d = path_vee(B, p);
    c.ensure(d == Path{mk({5, 4, 3, 1, 6, 5, 3, 2, 6, 5, 4, 2})},
             "complement word");
    c.ensure(vee_shape(B).factors ==
                 std::vector<KRFactor>{{FKind::RectA, 4, 3}},
             "complement shape");
    c.ensure(path_vee(vee_shape(B), d) == p, "double complement");
  }

  c.report(1, "worked examples reproduce");
}

// Criteria 2 and 4 share one pass over the box corpora; the caller reports
// them in order.
void criteria2and4(Criterion& c2, Criterion& c4) {
  std::vector<Tensor> corpus;
  for (int n = 1; n <= 3; ++n) {
    for (Tensor& B : box_corpus(AffType{Family::A1, n}, true, 6))
      corpus.push_back(std::move(B));
  }
  for (Tensor& B : box_corpus(D4, false, 6)) corpus.push_back(std::move(B));

  for (const Tensor& B : corpus) {
    for (const Weight& lam : dominant_weights(B)) {
      QPoly x = x_poly(B, lam);
      c2.ensure(x == m_poly(B, lam), ("X != M at " + tname(B)).c_str());
    }
    for (const Path& p : enumerate_hw(B))
      c4.ensure(d_energy(B, p) == rc_cc(phi_tilde(B, p)),
                ("D != cc at " + tname(B)).c_str());
  }

  // The displayed D_4 instance: exactly three configurations at 2 Lambda_1.
  {
    Tensor B{D4, {{FKind::Row, 1, 1},
                  {FKind::Row, 1, 2},
                  {FKind::Row, 1, 2},
                  {FKind::Row, 1, 3}}};
    Weight lam{2, 0, 0, 0};
    c2.ensure(rc_configs(CType::D, 4, tensor_L(B), lam).size() == 3,
              "three configurations at 2 Lambda_1");
    c2.ensure(x_poly(B, lam) == m_poly(B, lam),
              "X != M on the displayed instance");
    for (const Path& p : enumerate_hw(B)) {
      if (path_wt(B, p) != lam) continue;
      c4.ensure(d_energy(B, p) == rc_cc(phi_tilde(B, p)),
                "D != cc on the displayed instance");
    }
  }

}

void criterion3() {
  Criterion c;
  const std::vector<AffType> folded = {
      {Family::C1, 2},     {Family::B1, 3},           {Family::A2odd, 2},
      {Family::A2even, 2}, {Family::A2evenDagger, 2}, {Family::D2, 2},
  };
  for (const AffType& X : folded) {
    KRFactor b1{FKind::Row, 1, 1}, b2{FKind::Row, 1, 2};
    std::vector<Tensor> shapes = {Tensor{X, {b1}},     Tensor{X, {b2}},
                                  Tensor{X, {b1, b1}}, Tensor{X, {b1, b2}},
                                  Tensor{X, {b2, b2}}};
    for (const Tensor& B : shapes) {
      for (const Weight& lam : dominant_weights(B)) {
        QPoly x = x_poly(B, lam);
        c.ensure(x == vx_poly(B, lam), ("X != VX at " + tname(B)).c_str());
        c.ensure(x == vm_poly(B, lam), ("X != VM at " + tname(B)).c_str());
        c.ensure(x == m_poly(B, lam), ("X != M at " + tname(B)).c_str());
      }
    }
  }
  c.report(3, "X = VX = VM = M for the six folded types");
}

void criterion5() {
  Criterion c;
  for (const AffType& T :
       {AffType{Family::A1, 2}, AffType{Family::A1, 3}, D4}) {
    VerifyConfig cfg;
    cfg.T = T;
    cfg.max_s = 3;
    cfg.max_factors = 3;
    c.ok &= suites_pass(c, "rc-core", cfg);
    c.ok &= suites_pass(c, "bijection", cfg);
  }
  c.report(5, "reduction commutations and bijection correspondences");
}

void criterion6() {
  Criterion c;
  for (const AffType& T : {AffType{Family::A1, 3}, D4}) {
    VerifyConfig cfg;
    cfg.T = T;
    cfg.max_s = 3;
    cfg.max_factors = 3;
    c.ok &= suites_pass(c, "energy", cfg);
  }
  c.report(6, "Yang-Baxter and local energy identities");
}

void criterion7() {
  Criterion c;
  const std::vector<AffType> folded = {
      {Family::C1, 2},     {Family::B1, 3},           {Family::A2odd, 2},
      {Family::A2even, 2}, {Family::A2evenDagger, 2}, {Family::D2, 2},
  };
  for (const AffType& X : folded) {
    VerifyConfig cfg;
    cfg.T = X;
    cfg.max_s = 3;
    cfg.max_factors = 2;
    c.ok &= suites_pass(c, "virtual", cfg);
  }

  // Intrinsic coenergy takes the value gamma_0 r on the r-th classical
  // summand of B^s.
  for (Family fam : {Family::C1, Family::A2even}) {
    AffType X{fam, 2};
    int g0 = folding_data(X.fam, X.n).gamma[0];
    for (int s = 1; s <= 4; ++s) {
      Tensor BX{X, {KRFactor{FKind::Row, 1, s}}};
      Tensor VY = vhat_tensor(BX);
      int summands = 0;
      for (const Path& p : enumerate_hw(BX)) {
        int len = (int)p[0].size();
        int r = fam == Family::C1 ? (s - len) / 2 : s - len;
        c.ensure(d_energy(VY, psi_element(BX, p)) == (long long)g0 * r,
                 "coenergy on a classical summand");
        ++summands;
      }
      c.ensure(summands == (fam == Family::C1 ? s / 2 + 1 : s + 1),
               "summand count");
    }
  }
  c.report(7, "virtual crystal alignment, bijection, and summand coenergy");
}

void criterion8() {
  Criterion c;
  std::vector<Tensor> corpus = {
      Tensor{A3, {{FKind::Row, 1, 2}, {FKind::RectA, 2, 1},
                  {FKind::Row, 1, 1}}},
      Tensor{A3, {{FKind::Row, 1, 1}, {FKind::DualRow, 1, 1},
                  {FKind::Row, 1, 2}}},
      Tensor{D4, {{FKind::Row, 1, 2}, {FKind::Row, 1, 1}}},
      Tensor{D4, {{FKind::Row, 1, 2}, {FKind::Row, 1, 2}}},
  };
  for (const Tensor& B : corpus) {
    for (const Path& p : enumerate_hw(B)) {
      RC rc = phi_bar(B, p);
      c.ensure(phi_bar_inv(B, rc) == p, "phi-bar round trip");
      bool has_box = false;
      for (const KRFactor& f : B.factors)
        has_box |= f.kind == FKind::Row && f.s == 1;
      if (has_box) {  // both reductions remove a width-one row entry
        RCStep st = delta_bar(rc);
        c.ensure(delta_bar_inv(st.rc, st.rk) == rc, "delta-bar round trip");
        RCStep ts = delta_tilde(rc);
        c.ensure(delta_tilde_inv(ts.rc, ts.rk) == rc, "delta-tilde round trip");
      }
      c.ensure(path_star(star_shape(B), path_star(B, p)) == p,
               "star squares to the identity");
      if (B.T.ctype() == CType::A)
        c.ensure(rc_theta(rc_theta(rc)) == rc, "theta squares to the identity");
      for (size_t j = 1; j < B.factors.size(); ++j) {
        Tensor Bt = B;
        Path q = p;
        r_apply_at(Bt, q, (int)j);
        r_apply_at(Bt, q, (int)j);
        c.ensure(q == p && Bt.factors == B.factors,
                 "R squares to the identity");
      }
    }
  }
  // Dual reduction round trips and its box-step factorization.
  VerifyConfig cfg;
  cfg.T = A3;
  cfg.max_s = 2;
  cfg.max_factors = 2;
  c.ok &= suites_pass(c, "duality", cfg);
  c.report(8, "all reductions and dualities invert");
}

}  // namespace

int main() {
  criterion1();
  Criterion c2, c4;
  criteria2and4(c2, c4);
  c2.report(2, "X = M on the type A and D_4 box corpora");
  criterion3();
  c4.report(4, "intrinsic coenergy equals cocharge across the corpus");
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return g_failures;
}
