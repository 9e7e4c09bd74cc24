#include "krc/kr.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>

namespace krc {

int factor_node(const KRFactor& f, int n) {
  switch (f.kind) {
    case FKind::Row: return 1;
    case FKind::RectA: return f.r;
    case FKind::DualRow: return n;
  }
  std::abort();
}

std::string path_str(const Path& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += "|";
    s += word_str(p[i]);
  }
  return s;
}

std::vector<int> allowed_lengths(Family fam, int s) {
  switch (fam) {
    case Family::A1:
    case Family::B1:
    case Family::D1:
    case Family::A2odd: return {s};
    case Family::A2even:
    case Family::D2: {
      std::vector<int> r;
      for (int k = s; k >= 0; --k) r.push_back(k);
      return r;
    }
    case Family::C1:
    case Family::A2evenDagger: {
      std::vector<int> r;
      for (int k = s; k >= 0; k -= 2) r.push_back(k);
      return r;
    }
  }
  std::abort();
}

Word u_of(const AffType& T, const KRFactor& f) {
  Word w;
  switch (f.kind) {
    case FKind::Row:
      w.assign(f.s, Letter{1, false});
      break;
    case FKind::RectA:
      for (int c = 0; c < f.s; ++c)
        for (int k = f.r; k >= 1; --k) w.push_back(Letter{k, false});
      break;
    case FKind::DualRow:
      w.assign(f.s, Letter{T.n + 1, true});
      break;
  }
  return w;
}

Path u_of(const Tensor& B) {
  Path p;
  for (const auto& f : B.factors) p.push_back(u_of(B.T, f));
  return p;
}

Word path_flatten(const Path& p) {
  Word w;
  for (const auto& x : p) w.insert(w.end(), x.begin(), x.end());
  return w;
}

namespace {

Path path_split(const Path& shape, const Word& w) {
  Path r;
  size_t k = 0;
  for (const auto& x : shape) {
    r.emplace_back(w.begin() + k, w.begin() + k + x.size());
    k += x.size();
  }
  assert(k == w.size());
  return r;
}

}  // namespace

std::pair<int, int> path_eps_phi(const Tensor& B, const Path& p, int i) {
  return word_eps_phi(B.T.ctype(), B.T.n, path_flatten(p), i);
}

std::optional<Path> path_f(const Tensor& B, const Path& p, int i) {
  auto r = word_f(B.T.ctype(), B.T.n, path_flatten(p), i);
  if (!r) return std::nullopt;
  return path_split(p, *r);
}

std::optional<Path> path_e(const Tensor& B, const Path& p, int i) {
  auto r = word_e(B.T.ctype(), B.T.n, path_flatten(p), i);
  if (!r) return std::nullopt;
  return path_split(p, *r);
}

Weight path_wt(const Tensor& B, const Path& p) {
  return word_wt(B.T.ctype(), B.T.n, path_flatten(p));
}

bool path_is_hw(const Tensor& B, const Path& p) {
  return word_is_hw(B.T.ctype(), B.T.n, path_flatten(p));
}

Path path_raise(const Tensor& B, Path p, std::vector<int>* epath) {
  Word w = word_raise(B.T.ctype(), B.T.n, path_flatten(p), epath);
  return path_split(p, w);
}

// ---------------------------------------------------------------------------
// Factor element caches

namespace {

struct FactorCache {
  std::vector<Word> elems;
  std::set<Word> elem_set;
  // eps[i-1], phi[i-1] per element, aligned with elems.
  std::vector<std::vector<int>> eps, phi;
};

std::string cache_key(const AffType& T, const KRFactor& f) {
  return T.name() + "/" + std::to_string((int)f.kind) + "," +
         std::to_string(f.r) + "," + std::to_string(f.s);
}

const FactorCache& factor_cache(const AffType& T, const KRFactor& f) {
  static std::map<std::string, FactorCache> caches;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = cache_key(T, f);
  auto it = caches.find(key);
  if (it != caches.end()) return it->second;

  FactorCache c;
  CType t = T.ctype();
  std::vector<Word> seeds;
  if (f.kind == FKind::Row) {
    for (int len : allowed_lengths(T.fam, f.s))
      seeds.push_back(Word(len, Letter{1, false}));
  } else {
    seeds.push_back(u_of(T, f));
  }
  std::set<Word> seen;
  std::vector<Word> queue = seeds;
  for (auto& s : seeds) seen.insert(s);
  while (!queue.empty()) {
    Word w = queue.back();
    queue.pop_back();
    for (int i = 1; i <= T.n; ++i) {
      for (auto r : {word_f(t, T.n, w, i), word_e(t, T.n, w, i)}) {
        if (r && !seen.count(*r)) {
          seen.insert(*r);
          queue.push_back(*r);
        }
      }
    }
  }
  c.elems.assign(seen.begin(), seen.end());
  c.elem_set = std::move(seen);
  for (const auto& w : c.elems) {
    std::vector<int> e(T.n), p(T.n);
    for (int i = 1; i <= T.n; ++i) {
      auto ep = word_eps_phi(t, T.n, w, i);
      e[i - 1] = ep.first;
      p[i - 1] = ep.second;
    }
    c.eps.push_back(std::move(e));
    c.phi.push_back(std::move(p));
  }
  return caches.emplace(key, std::move(c)).first->second;
}

}  // namespace

const std::vector<Word>& factor_elements(const AffType& T, const KRFactor& f) {
  return factor_cache(T, f).elems;
}

bool factor_element_valid(const AffType& T, const KRFactor& f, const Word& w) {
  return factor_cache(T, f).elem_set.count(w) > 0;
}

std::vector<Path> enumerate_hw(const Tensor& B, const Weight* lambda) {
  // Build right to left: a tensor is classically highest weight iff every
  // suffix is, and prepending c to suffix t demands eps_i(c) <= phi_i(t).
  struct State {
    Path suffix;  // leftmost-first among chosen factors
    std::vector<int> phi;
  };
  int n = B.T.n;
  std::vector<State> states;
  states.push_back(State{{}, std::vector<int>(n, 0)});
  for (int k = (int)B.factors.size() - 1; k >= 0; --k) {
    const FactorCache& fc = factor_cache(B.T, B.factors[k]);
    std::vector<State> next;
    for (const auto& st : states) {
      for (size_t j = 0; j < fc.elems.size(); ++j) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          if (fc.eps[j][i] > st.phi[i]) ok = false;
        if (!ok) continue;
        State ns;
        ns.suffix.reserve(st.suffix.size() + 1);
        ns.suffix.push_back(fc.elems[j]);
        ns.suffix.insert(ns.suffix.end(), st.suffix.begin(),
                         st.suffix.end());
        ns.phi.resize(n);
        for (int i = 0; i < n; ++i)
          ns.phi[i] =
              fc.phi[j][i] + std::max(0, st.phi[i] - fc.eps[j][i]);
        next.push_back(std::move(ns));
      }
    }
    states = std::move(next);
  }
  std::vector<Path> out;
  for (auto& st : states) {
    if (lambda && path_wt(B, st.suffix) != *lambda) continue;
    out.push_back(std::move(st.suffix));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splitting maps

std::pair<Word, Path> lh(const Tensor& B, const Path& p) {
  assert(!p.empty() && B.factors[0].kind == FKind::Row &&
         B.factors[0].s == 1);
  return {p[0], Path(p.begin() + 1, p.end())};
}

Tensor lh_shape(const Tensor& B) {
  Tensor r = B;
  r.factors.erase(r.factors.begin());
  return r;
}

std::pair<Path, Word> rh(const Tensor& B, const Path& p) {
  assert(!p.empty() && B.factors.back().kind == FKind::Row &&
         B.factors.back().s == 1);
  return {Path(p.begin(), p.end() - 1), p.back()};
}

Tensor rh_shape(const Tensor& B) {
  Tensor r = B;
  r.factors.pop_back();
  return r;
}

namespace {

// Split one row word as x (x) rest per the left splitting; empty elements
// map to 1bar (x) 1.
std::pair<Word, Word> row_lsplit(const Word& w) {
  if (w.empty()) return {{Letter{-1, false}}, {Letter{1, false}}};
  return {{w.front()}, Word(w.begin() + 1, w.end())};
}

std::pair<Word, Word> row_rsplit(const Word& w) {
  if (w.empty()) return {{Letter{-1, false}}, {Letter{1, false}}};
  return {Word(w.begin(), w.end() - 1), {w.back()}};
}

}  // namespace

Path ls(const Tensor& B, const Path& p) {
  const KRFactor& f = B.factors[0];
  assert(f.s >= 2);
  Path r;
  if (f.kind == FKind::Row) {
    auto [a, b] = row_lsplit(p[0]);
    r.push_back(a);
    r.push_back(b);
  } else {
    assert(f.kind == FKind::RectA);
    r.emplace_back(p[0].begin(), p[0].begin() + f.r);
    r.emplace_back(p[0].begin() + f.r, p[0].end());
  }
  r.insert(r.end(), p.begin() + 1, p.end());
  return r;
}

Tensor ls_shape(const Tensor& B) {
  Tensor r = B;
  KRFactor f = B.factors[0];
  assert(f.s >= 2);
  KRFactor head = f, tail = f;
  head.s = 1;
  tail.s = f.s - 1;
  r.factors[0] = head;
  r.factors.insert(r.factors.begin() + 1, tail);
  return r;
}

Path rs(const Tensor& B, const Path& p) {
  const KRFactor& f = B.factors.back();
  assert(f.s >= 2);
  Path r(p.begin(), p.end() - 1);
  if (f.kind == FKind::Row) {
    auto [a, b] = row_rsplit(p.back());
    r.push_back(a);
    r.push_back(b);
  } else {
    size_t cut = p.back().size() - (f.kind == FKind::RectA ? f.r : 1);
    r.emplace_back(p.back().begin(), p.back().begin() + cut);
    r.emplace_back(p.back().begin() + cut, p.back().end());
  }
  return r;
}

Tensor rs_shape(const Tensor& B) {
  Tensor r = B;
  KRFactor f = B.factors.back();
  assert(f.s >= 2);
  KRFactor head = f, tail = f;
  head.s = f.s - 1;
  tail.s = 1;
  r.factors.back() = head;
  r.factors.push_back(tail);
  return r;
}

Path lb(const Tensor& B, const Path& p) {
  const KRFactor& f = B.factors[0];
  assert(f.kind == FKind::RectA && f.r >= 2 && f.s == 1);
  Path r;
  r.push_back({p[0].front()});
  r.emplace_back(p[0].begin() + 1, p[0].end());
  r.insert(r.end(), p.begin() + 1, p.end());
  return r;
}

Tensor lb_shape(const Tensor& B) {
  Tensor r = B;
  KRFactor f = B.factors[0];
  r.factors[0] = KRFactor{FKind::Row, 1, 1};
  f.r -= 1;
  r.factors.insert(r.factors.begin() + 1, f);
  return r;
}

Path rb(const Tensor& B, const Path& p) {
  const KRFactor& f = B.factors.back();
  assert(f.kind == FKind::RectA && f.r >= 2 && f.s == 1);
  Path r(p.begin(), p.end() - 1);
  r.emplace_back(p.back().begin(), p.back().end() - 1);
  r.push_back({p.back().back()});
  return r;
}

Tensor rb_shape(const Tensor& B) {
  Tensor r = B;
  KRFactor f = B.factors.back();
  f.r -= 1;
  r.factors.back() = f;
  r.factors.push_back(KRFactor{FKind::Row, 1, 1});
  return r;
}

Path ls_vee(const Tensor& B, const Path& p) {
  const KRFactor& f = B.factors[0];
  assert(f.kind == FKind::DualRow && f.s >= 2);
  Path r;
  r.push_back({p[0].front()});
  r.emplace_back(p[0].begin() + 1, p[0].end());
  r.insert(r.end(), p.begin() + 1, p.end());
  return r;
}

Tensor ls_vee_shape(const Tensor& B) {
  Tensor r = B;
  KRFactor f = B.factors[0];
  KRFactor head = f, tail = f;
  head.s = 1;
  tail.s = f.s - 1;
  r.factors[0] = head;
  r.factors.insert(r.factors.begin() + 1, tail);
  return r;
}

Path path_star(const Tensor& B, const Path& p) {
  Path r;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    r.push_back(word_star(B.T.ctype(), B.T.n, *it));
  return r;
}

Tensor star_shape(const Tensor& B) {
  Tensor r = B;
  std::reverse(r.factors.begin(), r.factors.end());
  return r;
}

Word rect_vee(int n, const KRFactor& f, const Word& w) {
  assert(f.kind == FKind::RectA);
  std::vector<Word> cols;
  for (int c = 0; c < f.s; ++c) {
    std::set<int> have;
    for (int k = 0; k < f.r; ++k) have.insert(w[c * f.r + k].v);
    Word col;
    for (int v = n + 1; v >= 1; --v)
      if (!have.count(v)) col.push_back(Letter{v, false});
    cols.push_back(col);
  }
  Word out;
  for (auto it = cols.rbegin(); it != cols.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

Path path_vee(const Tensor& B, const Path& p) {
  assert(B.T.ctype() == CType::A);
  Path r;
  for (size_t i = p.size(); i-- > 0;) {
    const KRFactor& f = B.factors[i];
    if (f.kind == FKind::RectA)
      r.push_back(rect_vee(B.T.n, f, p[i]));
    else
      r.push_back(word_dual(p[i]));
  }
  return r;
}

Tensor vee_shape(const Tensor& B) {
  Tensor r = B;
  r.factors.clear();
  for (size_t i = B.factors.size(); i-- > 0;) {
    KRFactor f = B.factors[i];
    if (f.kind == FKind::Row)
      f.kind = FKind::DualRow;
    else if (f.kind == FKind::DualRow)
      f.kind = FKind::Row;
    else
      f.r = B.T.n + 1 - f.r;
    r.factors.push_back(f);
  }
  return r;
}

}  // namespace krc
