#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"

namespace krc {

// Kinds of KR factor supported: one-row crystals B^{1,s} (all families),
// rectangles B^{r,s} (type A), and dual rows B^{1,s vee} (type A).
enum class FKind { Row, RectA, DualRow };

struct KRFactor {
  FKind kind = FKind::Row;
  int r = 1;  // number of rows (RectA); 1 for Row/DualRow
  int s = 1;  // width
  bool operator==(const KRFactor&) const = default;
  auto operator<=>(const KRFactor&) const = default;
};

// Classical node the factor registers at in a multiplicity array.
int factor_node(const KRFactor& f, int n);

struct Tensor {
  AffType T;
  std::vector<KRFactor> factors;  // leftmost tensor factor first
};

// A tensor element: one word per factor, leftmost first. Words may be
// shorter than the full factor size in families where B^{1,s} has several
// classical components.
using Path = std::vector<Word>;

std::string path_str(const Path& p);

// Word lengths occurring in B^{1,s} for the family.
std::vector<int> allowed_lengths(Family fam, int s);

// The unique element of weight s*Lambda_r (rows/rectangles) or the
// generator ((n+1)-vee)^s of a dual row.
Word u_of(const AffType& T, const KRFactor& f);
Path u_of(const Tensor& B);

Word path_flatten(const Path& p);

std::pair<int, int> path_eps_phi(const Tensor& B, const Path& p, int i);
std::optional<Path> path_f(const Tensor& B, const Path& p, int i);
std::optional<Path> path_e(const Tensor& B, const Path& p, int i);
Weight path_wt(const Tensor& B, const Path& p);
bool path_is_hw(const Tensor& B, const Path& p);
Path path_raise(const Tensor& B, Path p, std::vector<int>* epath = nullptr);

// All elements of a single KR factor (cached); closure of the canonical
// seeds under the classical operators.
const std::vector<Word>& factor_elements(const AffType& T, const KRFactor& f);
bool factor_element_valid(const AffType& T, const KRFactor& f, const Word& w);

// Classical highest weight elements of the tensor, optionally restricted to
// a weight.
std::vector<Path> enumerate_hw(const Tensor& B,
                               const Weight* lambda = nullptr);

// --- splitting and box maps (all act on the stated end of the tensor) ---

// lh: drop the leftmost factor, which must be B^1; returns its word.
std::pair<Word, Path> lh(const Tensor& B, const Path& p);
Tensor lh_shape(const Tensor& B);

// rh: drop the rightmost factor (a B^1).
std::pair<Path, Word> rh(const Tensor& B, const Path& p);
Tensor rh_shape(const Tensor& B);

// ls on a leftmost row B^s (s>=2): B^s -> B^1 (x) B^{s-1}.
Path ls(const Tensor& B, const Path& p);
Tensor ls_shape(const Tensor& B);

// rs on a rightmost factor: rows B^s -> B^{s-1} (x) B^1; rectangles
// B^{r,s} -> B^{r,s-1} (x) B^{r,1}; dual rows mirror ls_vee.
Path rs(const Tensor& B, const Path& p);
Tensor rs_shape(const Tensor& B);

// lb / rb on a column B^{r,1} (type A, r>=2).
Path lb(const Tensor& B, const Path& p);
Tensor lb_shape(const Tensor& B);
Path rb(const Tensor& B, const Path& p);
Tensor rb_shape(const Tensor& B);

// ls_vee on a leftmost dual row B^{s vee} (s>=2): -> B^{1 vee} (x) B^{s-1 vee}.
Path ls_vee(const Tensor& B, const Path& p);
Tensor ls_vee_shape(const Tensor& B);

// The * involution on tensors (reverses factor order).
Path path_star(const Tensor& B, const Path& p);
Tensor star_shape(const Tensor& B);

// Vee-duality (type A): reverses factor order, rows <-> dual rows,
// rectangles complement to B^{n+1-r,s}.
Path path_vee(const Tensor& B, const Path& p);
Tensor vee_shape(const Tensor& B);
Word rect_vee(int n, const KRFactor& f, const Word& w);

}  // namespace krc
