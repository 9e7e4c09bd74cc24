#pragma once

#include <map>
#include <string>
#include <vector>

#include "krc/bijection.hpp"
#include "krc/energy.hpp"
#include "krc/vlayer.hpp"

namespace krc {

// Polynomial in q with exact half-integer exponents: terms maps the exponent
// numerator (over the fixed denominator 2) to a nonzero coefficient.
struct QPoly {
  std::map<long long, long long> terms;

  void add(long long num2, long long coeff = 1) {
    if (coeff == 0) return;
    auto it = terms.find(num2);
    if (it == terms.end()) {
      terms[num2] = coeff;
    } else if ((it->second += coeff) == 0) {
      terms.erase(it);
    }
  }
  bool operator==(const QPoly&) const = default;
};

std::string qpoly_str(const QPoly& p);

// The one-dimensional sum X_{B,lambda} = sum q^{D(b)/a0} over the classical
// highest weight paths; non-simply-laced families route through the virtual
// carrier (D = D^Y of the embedded path over gamma_0).
QPoly x_poly(const Tensor& B, const Weight& lam);

// The fermionic sum M = sum q^{cc/a0} over rigged configurations; for folded
// families this enumerates the virtual configurations (the stretched image
// of the native set, with cocharge scaled by gamma_0).
QPoly m_poly(const Tensor& B, const Weight& lam);

// Independent virtual pipelines: VX enumerates highest weight paths of the
// carrier and keeps the factorwise Psi-images; VM filters the carrier's
// rigged configurations by virtual membership.
QPoly vx_poly(const Tensor& B, const Weight& lam);
QPoly vm_poly(const Tensor& B, const Weight& lam);

// Dominant weights lam for which P(B,lam) can be nonempty.
std::vector<Weight> dominant_weights(const Tensor& B);

// --- verification suites ---

struct CheckResult {
  std::string name;
  bool pass = true;
  long long count = 0;    // identities checked
  std::string detail;     // counterexample description when failed
};

struct VerifyConfig {
  AffType T{Family::A1, 2};
  int max_s = 2;        // bound on each factor width
  int max_factors = 2;  // bound on the number of factors
};

const std::vector<std::string>& verify_suites();
// Runs one of {crystal-axioms, energy, rc-core, bijection, duality,
// virtual, xm}. Shards honor CRYSTALRC_THREADS (0 or unset = serial).
std::vector<CheckResult> verify(const std::string& suite,
                                const VerifyConfig& cfg);

// CLI entry point (subcommands x, m, vx, vm, bij, bij-inv, verify, trace).
int cli_main(int argc, const char* const* argv);

}  // namespace krc
