#pragma once

#include <optional>

#include "krc/kr.hpp"

namespace krc {

// Schuetzenberger promotion on a single type A factor (rows, columns and
// dual rows: cyclic letter shift with re-sorting).
Word promotion(const AffType& T, const KRFactor& f, const Word& w);
Word promotion_inv(const AffType& T, const KRFactor& f, const Word& w);

// Affine operators on type A tensors, combined factor by factor with
// e_0/f_0 = pr^{-1} o e_1/f_1 o pr on each factor.
std::pair<int, int> path_eps_phi0(const Tensor& B, const Path& p);
std::optional<Path> path_f0(const Tensor& B, const Path& p);
std::optional<Path> path_e0(const Tensor& B, const Path& p);
// Factor index (0 = leftmost) the operator would act on, or -1.
int path_f0_pos(const Tensor& B, const Path& p);
int path_e0_pos(const Tensor& B, const Path& p);

// Combinatorial R on a pair: (w2 (x) w1) in F2 (x) F1 maps to the returned
// (o1 (x) o2) in F1 (x) F2. Classical highest weight replay; aborts if the
// weight-matched highest weight element is not unique.
std::pair<Word, Word> r_pair(const AffType& T, const KRFactor& F2,
                             const KRFactor& F1, const Word& w2,
                             const Word& w1);

// Local coenergy H of a pair, normalized to H(u (x) u) = 0. Type A uses a
// table built by propagating the 0-arrow recursion; type D parses the
// highest weight vectors 1^{t-p-q} 2^p 1bar^q (x) 1^s, H = p + 2q.
long long h_pair(const AffType& T, const KRFactor& F2, const KRFactor& F1,
                 const Word& w2, const Word& w1);

// R_j / H_j act on the (j+1)-th and j-th factors from the right (j >= 1).
void r_apply_at(Tensor& B, Path& p, int j);
long long h_at(const Tensor& B, const Path& p, int j);

// Intrinsic coenergy of a tensor product and its tail version.
long long d_energy(const Tensor& B, const Path& p);
long long tail_d(const Tensor& B, const Path& p);

// Verification hook for the 0-arrow recursion (type A): checks the local
// coenergy change along every 0-arrow of the pair crystal; returns the
// number of arrows checked, aborting on any violation.
long long check_h_on_zero_arrows(const AffType& T, const KRFactor& F2,
                                 const KRFactor& F1);

}  // namespace krc
