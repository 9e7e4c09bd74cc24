#include "krc/bijection.hpp"

#include <algorithm>
#include <cassert>

namespace krc {

std::vector<LEntry> tensor_L(const Tensor& B) {
  std::vector<LEntry> L;
  for (const KRFactor& f : B.factors) {
    int a = factor_node(f, B.T.n);
    auto it = std::find_if(L.begin(), L.end(), [&](const LEntry& e) {
      return e.a == a && e.i == f.s;
    });
    if (it != L.end())
      it->count += 1;
    else
      L.push_back(LEntry{a, f.s, 1});
  }
  std::sort(L.begin(), L.end());
  return L;
}

namespace {

// Drop the leftmost factor without the kind restrictions of lh.
Tensor drop_left_shape(const Tensor& B) {
  Tensor r = B;
  r.factors.erase(r.factors.begin());
  return r;
}

Path drop_left(const Path& p) { return Path(p.begin() + 1, p.end()); }

// Effective height of the leftmost factor: rectangles of height 1 behave
// exactly like rows.
int eff_r(const KRFactor& f) { return f.kind == FKind::RectA ? f.r : 1; }

RC phi_bar_rec(const Tensor& B, const Path& p, std::vector<BijStep>* trace) {
  if (p.empty()) return rc_empty(B.T.ctype(), B.T.n);
  const KRFactor& f = B.factors[0];
  const int n = B.T.n;

  std::string op;
  std::optional<Letter> rk;
  Tensor sub;
  Path q;
  int jr = 0;  // node for jbar_inv, 0 when not a width split

  if (f.kind == FKind::DualRow) {
    if (f.s == 1) {
      op = "lhv";
      rk = p[0][0];
      sub = drop_left_shape(B);
      q = drop_left(p);
    } else {
      op = "lsv";
      jr = n;
      sub = ls_vee_shape(B);
      q = ls_vee(B, p);
    }
  } else if (f.s >= 2) {
    op = "ls";
    jr = eff_r(f);
    sub = ls_shape(B);
    q = ls(B, p);
  } else if (eff_r(f) >= 2) {
    op = "lb";
    sub = lb_shape(B);
    q = lb(B, p);
  } else {
    op = "lh";
    assert(p[0].size() == 1);
    rk = p[0][0];
    sub = drop_left_shape(B);
    q = drop_left(p);
  }

  size_t idx = 0;
  if (trace) {
    idx = trace->size();
    trace->push_back(BijStep{op, RC{}, rk});
  }
  RC inner = phi_bar_rec(sub, q, trace);
  RC out;
  if (op == "lhv")
    out = delta_vee_inv(inner, *rk);
  else if (op == "lh")
    out = delta_bar_inv(inner, *rk);
  else if (op == "lb")
    out = ibar_inv(inner, eff_r(f));
  else
    out = jbar_inv(inner, jr, f.s);
  if (trace) (*trace)[idx].rc = out;
  return out;
}

Path phi_bar_inv_rec(const Tensor& B, const RC& rc,
                     std::vector<BijStep>* trace) {
  if (B.factors.empty()) {
    assert(rc == rc_empty(rc.t, rc.n));
    return {};
  }
  const KRFactor& f = B.factors[0];
  const int n = B.T.n;

  auto merge_front = [](Path q) {
    Word w = q[0];
    w.insert(w.end(), q[1].begin(), q[1].end());
    q.erase(q.begin());
    q[0] = w;
    return q;
  };

  if (f.kind == FKind::DualRow ? f.s == 1
                               : (f.s == 1 && eff_r(f) == 1)) {
    bool dual = f.kind == FKind::DualRow;
    RCStep st = dual ? delta_vee(rc) : delta_bar(rc);
    if (trace)
      trace->push_back(BijStep{dual ? "lhv" : "lh", rc, st.rk});
    Path rest = phi_bar_inv_rec(drop_left_shape(B), st.rc, trace);
    rest.insert(rest.begin(), Word{st.rk});
    return rest;
  }
  if (f.s >= 2) {
    bool dual = f.kind == FKind::DualRow;
    int jr = dual ? n : eff_r(f);
    if (trace)
      trace->push_back(BijStep{dual ? "lsv" : "ls", rc, std::nullopt});
    RC inner = jbar(rc, jr, f.s);
    Tensor sub = dual ? ls_vee_shape(B) : ls_shape(B);
    return merge_front(phi_bar_inv_rec(sub, inner, trace));
  }
  // column B^{r,1}, r >= 2
  if (trace) trace->push_back(BijStep{"lb", rc, std::nullopt});
  RC inner = ibar(rc, eff_r(f));
  return merge_front(phi_bar_inv_rec(lb_shape(B), inner, trace));
}

}  // namespace

RC phi_bar(const Tensor& B, const Path& p, std::vector<BijStep>* trace) {
  assert(path_is_hw(B, p));
  RC rc = phi_bar_rec(B, p, trace);
  assert(rc.L == tensor_L(B));
  // Dual rows register at node n, whose fundamental weight differs from the
  // dual letter weights by an all-ones vector per box.
  Weight expect = path_wt(B, p);
  long long dual_boxes = 0;
  for (const KRFactor& f : B.factors)
    if (f.kind == FKind::DualRow) dual_boxes += f.s;
  for (auto& c : expect) c += dual_boxes;
  assert(rc_lambda(rc) == expect);
  return rc;
}

Path phi_bar_inv(const Tensor& B, const RC& rc,
                 std::vector<BijStep>* trace) {
  assert(rc.L == tensor_L(B));
  Path p = phi_bar_inv_rec(B, rc, trace);
  assert(path_is_hw(B, p));
  return p;
}

RC phi_tilde(const Tensor& B, const Path& p) {
  return rc_theta(phi_bar(B, p));
}

Path phi_tilde_inv(const Tensor& B, const RC& rc) {
  return phi_bar_inv(B, rc_theta(rc));
}

}  // namespace krc
