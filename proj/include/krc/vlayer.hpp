#pragma once

#include <map>
#include <optional>

#include "krc/kr.hpp"
#include "krc/rc.hpp"

namespace krc {

// The ambient simply-laced carrier of one non-simply-laced row factor
// B^{1,s}: B_Y^{s vee} (x) B_Y^s (Y of type A), B_Y^{2s} (B_n^{(1)}), or
// B_Y^s (A_{2n-1}^{(2)}).
std::vector<KRFactor> vhat_factors(Family fam, int s);
Tensor vhat_tensor(const Tensor& BX);

// Number of Y-factors carrying one X-factor (2 for Y of type A, else 1).
int vhat_width(Family fam);

// The factorwise embedding of one X-row into its carrier: every element of
// B^{1,s} mapped to its aligned image (built once per factor by pairing
// highest weight vectors of equal embedded weight and closing under the
// classical and virtual lowering operators).
const std::map<Word, Path>& psi_factor_map(const AffType& X, int s);

// Embedding of tensor elements, factor by factor.
Path psi_element(const Tensor& BX, const Path& p);

// Inverse on the image; nullopt when v is not factorwise aligned.
std::optional<Path> psi_preimage(const Tensor& BX, const Path& v);

// Virtual operators f-hat_i / e-hat_i on the carrier (classical i of X).
std::optional<Path> vpath_f(const AffType& X, const Tensor& VY, const Path& p,
                            int i);
std::optional<Path> vpath_e(const AffType& X, const Tensor& VY, const Path& p,
                            int i);

// Membership test for virtual rigged configurations (sigma-symmetry,
// gamma-divisibility, and the A_{2n}^{(2)} / A_{2n}^{(2)dagger} exceptions).
bool in_rcv(const AffType& X, const RC& rchat);

// Virtual reduction: remove the leftmost carrier factor of a B^1. Returns
// the new RC together with the decoded X-rank (the word of the removed
// X-factor element, possibly empty or the 0 letter).
struct VStep {
  RC rc;
  Word rk;  // element of B^{1,1} of X as a word
};
VStep delta_hat(const AffType& X, const RC& rchat);

// Virtual splitting: carrier counterpart of ls on a leftmost B^{1,s}, s>=2.
RC j_hat(const AffType& X, const RC& rchat, int s);

}  // namespace krc
