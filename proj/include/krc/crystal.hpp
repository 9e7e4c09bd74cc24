#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krc/cartan.hpp"

namespace krc {

// A letter of the classical crystal B(Lambda_1) or its dual.
//   v = k  (k > 0) : letter k
//   v = -k (k > 0) : letter k-bar
//   v = 0          : letter "circle" (type B alphabets only)
// dual = true marks the letter k-vee of the dual crystal.
struct Letter {
  int v = 0;
  bool dual = false;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

// A word is a sequence of letters, leftmost tensor factor first.
using Word = std::vector<Letter>;

std::string letter_str(const Letter& x);
std::string word_str(const Word& w);
std::optional<Letter> letter_parse(const std::string& s);

// Whether the plain letter value v belongs to the type t rank n alphabet.
bool letter_valid(CType t, int n, int v);

// Classical crystal operators on single letters (dual-aware).
std::optional<Letter> letter_f(CType t, int n, Letter x, int i);
std::optional<Letter> letter_e(CType t, int n, Letter x, int i);
int letter_eps(CType t, int n, Letter x, int i);
int letter_phi(CType t, int n, Letter x, int i);
Weight letter_wt(CType t, int n, Letter x);

// Tensor-product operators on words. Conventions: the word b_L ... b_1 is
// stored leftmost factor first; f_i acts on b_2 (x) b_1 at b_2 exactly when
// eps_i(b_2) >= phi_i(b_1), and e_i acts at b_2 when eps_i(b_2) > phi_i(b_1).
std::pair<int, int> word_eps_phi(CType t, int n, const Word& w, int i);
std::optional<Word> word_f(CType t, int n, const Word& w, int i);
std::optional<Word> word_e(CType t, int n, const Word& w, int i);
// Index of the letter acted on, or -1 when undefined.
int word_f_pos(CType t, int n, const Word& w, int i);
int word_e_pos(CType t, int n, const Word& w, int i);

Weight word_wt(CType t, int n, const Word& w);
bool word_is_hw(CType t, int n, const Word& w);

// Raise to the classical highest weight element of the component,
// optionally recording the sequence of e_i indices applied.
Word word_raise(CType t, int n, Word w, std::vector<int>* path = nullptr);

// The * involution on letters and words (word * reverses the order).
Letter letter_star(CType t, int n, Letter x);
Word word_star(CType t, int n, const Word& w);

// The vee-duality on a single word realizing a row crystal: letters are
// dualized and the word reversed.
Word word_dual(const Word& w);

}  // namespace krc
