#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

// A string of a rigged partition: (length, rigging).
struct RString {
  int len = 0;
  long long rig = 0;
  bool operator==(const RString&) const = default;
  auto operator<=>(const RString&) const = default;
};

// A rigged configuration for the simply-laced classical types A_n / D_n.
// nu[a-1] holds the strings of the a-th rigged partition, kept sorted.
struct RC {
  CType t = CType::A;
  int n = 0;
  std::vector<LEntry> L;
  std::vector<std::vector<RString>> nu;

  bool operator==(const RC&) const = default;
};

RC rc_empty(CType t, int n);
void rc_normalize(RC& rc);
std::string rc_str(const RC& rc);

// Simply-laced Cartan pairing (alpha_a | alpha_b).
int cartan_pairing(CType t, int n, int a, int b);

// Multiplicity of parts of size i in nu^{(a)}.
int rc_m(const RC& rc, int a, int i);
// Vacancy number p_i^{(a)}.
long long rc_vacancy(const RC& rc, int a, int i);
// The weight lambda determined by L and nu.
Weight rc_lambda(const RC& rc);
// Admissibility plus riggings within [0, p].
bool rc_valid(const RC& rc);

// Cocharge of the configuration and of the rigged configuration.
long long rc_cc_config(const RC& rc);
long long rc_cc(const RC& rc);

// Quantum number complementation.
RC rc_theta(const RC& rc);

// Contragredient duality (type A only): node a <-> node n+1-a, riggings
// complemented within each string's vacancy.
RC rc_vee(const RC& rc);

// --- reduction steps (remove / prepend a left factor B^1 or B^{1 vee}) ---

struct RCStep {
  RC rc;
  Letter rk;
};

RCStep delta_bar(const RC& rc);
RC delta_bar_inv(const RC& rc, Letter b);
RCStep delta_tilde(const RC& rc);
RC delta_tilde_inv(const RC& rc, Letter b);

// Dual reduction (type A): removes a left factor B^{1 vee} = B^{n,1}.
RCStep delta_vee(const RC& rc);
RC delta_vee_inv(const RC& rc, Letter b);

// --- splitting maps on RCs ---

// jbar / jtilde: split one factor B^{r,s} (s >= 2) into B^{r,1} (x)
// B^{r,s-1}. jbar preserves quantum numbers, jtilde coquantum numbers.
RC jbar(const RC& rc, int r, int s);
RC jbar_inv(const RC& rc, int r, int s);
RC jtilde(const RC& rc, int r, int s);
RC jtilde_inv(const RC& rc, int r, int s);

// ibar / itilde: split one factor B^{r,1} (r >= 2) into B^{1,1} (x)
// B^{r-1,1}, adding singular (resp. cosingular) strings of length 1 at
// the nodes a < r.
RC ibar(const RC& rc, int r);
RC ibar_inv(const RC& rc, int r);
RC itilde(const RC& rc, int r);
RC itilde_inv(const RC& rc, int r);

// --- enumeration ---

// All admissible configurations (riggings zeroed).
std::vector<RC> rc_configs(CType t, int n, const std::vector<LEntry>& L,
                           const Weight& lambda);
// All rigged configurations.
std::vector<RC> rc_enumerate(CType t, int n, const std::vector<LEntry>& L,
                             const Weight& lambda);
// Cocharge generating function, computed both from the fermionic sum over
// configurations (q-binomials) and by listing riggings; the two are
// asserted equal.
std::map<long long, long long> rc_cc_poly(CType t, int n,
                                          const std::vector<LEntry>& L,
                                          const Weight& lambda);

}  // namespace krc
