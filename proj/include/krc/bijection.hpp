#pragma once

#include <optional>

#include "krc/kr.hpp"
#include "krc/rc.hpp"

namespace krc {

// Multiplicity array of a tensor.
std::vector<LEntry> tensor_L(const Tensor& B);

// One recorded step of the path-RC bijection.
struct BijStep {
  std::string op;  // "lh", "ls", "lb", "lhv", "lsv"
  RC rc;           // rigged configuration after the step
  std::optional<Letter> rk;
};

// Quantum number bijection from classical highest weight paths to rigged
// configurations, and its inverse. The trace records the reduction steps
// leftmost first.
RC phi_bar(const Tensor& B, const Path& p,
           std::vector<BijStep>* trace = nullptr);
Path phi_bar_inv(const Tensor& B, const RC& rc,
                 std::vector<BijStep>* trace = nullptr);

// Coquantum number bijection phi-tilde = theta o phi-bar.
RC phi_tilde(const Tensor& B, const Path& p);
Path phi_tilde_inv(const Tensor& B, const RC& rc);

}  // namespace krc
