#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace krc {

// Classical weights in epsilon coordinates. Type A rank n uses n+1 entries
// (gl_{n+1} content vectors); types B, C, D use n entries.
using Weight = std::vector<long long>;

enum class CType { A, B, C, D };

// Nonexceptional affine families. n is always the classical rank.
//   A1 = A_n^(1), B1 = B_n^(1), C1 = C_n^(1), D1 = D_n^(1),
//   A2even = A_{2n}^(2), A2evenDagger = A_{2n}^(2)dagger,
//   A2odd = A_{2n-1}^(2), D2 = D_{n+1}^(2).
enum class Family { A1, B1, C1, D1, A2even, A2evenDagger, A2odd, D2 };

struct AffType {
  Family fam;
  int n;  // classical rank

  CType ctype() const;
  int a0() const;            // null-root coefficient a_0 (2 for A2even, else 1)
  bool simply_laced() const; // A1 or D1
  std::string name() const;
  bool operator==(const AffType&) const = default;
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

int weight_len(CType t, int n);
bool is_dominant(CType t, int n, const Weight& w);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);

// Longest Weyl element action on epsilon coordinates.
Weight w0_apply(CType t, int n, const Weight& w);
// Dynkin automorphism tau with e_i(b*) = f_{tau(i)}(b)*.
int tau_node(CType t, int n, int i);

// Multiplicity array entry: L_i^(a) = count of factors with node a, width i.
struct LEntry {
  int a;
  int i;
  long long count;
  bool operator==(const LEntry&) const = default;
  auto operator<=>(const LEntry&) const = default;
};

// Box totals per classical node for the configuration equation
//   sum_i i m_i^(a) alpha_a = sum L_i^(a) i Lambda_a - lambda.
// Returns nullopt when no nonnegative integral solution exists. Only
// types A and D carry rigged configurations here.
std::optional<std::vector<long long>> root_coords(
    CType t, int n, const std::vector<LEntry>& L, const Weight& lambda);

// ---------------------------------------------------------------------------
// Virtual-crystal folding data.

struct FoldingData {
  Family fam;
  int n;                               // rank of X
  AffType Y;                           // ambient simply-laced affine type
  std::vector<int> gamma;              // scaling factors, indexed 0..n
  std::vector<std::vector<int>> iota;  // node images, indexed 0..n
  // Diagram automorphism sigma of Y on nodes 0..N (N = Y.n classical rank,
  // with the extra node N+1 for D_{n+1}^(1) spin swap handled inside).
  int sigma(int ynode) const;
};

bool has_folding(Family f);
FoldingData folding_data(Family fam, int n);

// Image of a classical X-weight under Psi. For Y of classical type A the
// result is one gl representative (canonical up to adding a constant vector).
Weight psi_weight(Family fam, int n, const Weight& lamX);

// ---------------------------------------------------------------------------
// Type D dominant weights as signed partitions (the graph G = Y_+ u Y_-).
// Stored as a dominant epsilon-weight: parts[0] >= ... >= parts[n-1] >= 0
// and sign in {+1,-1}, normalized to +1 when the last part is zero.

struct SignedPartition {
  std::vector<long long> parts;  // length n
  int sign = 1;

  bool operator==(const SignedPartition&) const = default;
};

SignedPartition sp_from_weight(const Weight& w);
Weight sp_to_weight(const SignedPartition& sp);

// One step of the walk in G by a type D letter x (x = i adds a cell in row i,
// x = -i removes one; at row n the roles flip on the negative sheet).
std::optional<SignedPartition> g_step(int n, const SignedPartition& sp, int letter);

// Walk from the empty partition reading the word right to left.
std::optional<SignedPartition> weight_to_G(int n, const std::vector<int>& word);

// van Leeuwen rule: the weight alpha of rh(b) determined by the weights of
// b, lh(b) and lh(rh(b)) for type D paths.
std::optional<SignedPartition> predict_alpha(int n, const SignedPartition& lam,
                                             const SignedPartition& beta,
                                             const SignedPartition& gam);

}  // namespace krc
