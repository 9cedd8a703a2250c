#pragma once

// Super Kac-Weisfeiler divisibility checks on simple heads of baby Verma modules.

#include "modsuper/verma.hpp"

namespace modsuper {

enum class WallsType { M, Q };

/// Type Q iff the module admits a nonzero odd T with T A_x = (-1)^{|x|} A_x T.
WallsType walls_type(const std::vector<Mat>& ops, const std::vector<int>& op_parity,
                     const std::vector<int>& basis_parity);

/// p^{d0/2} 2^{floor(d1/2)}; throws if d0 is odd.
std::uint64_t kw_divisor(const LieSuperalgebra& g, const PCharacter& chi);
/// p^{d0/2} 2^{ceil(d1/2)}
std::uint64_t kw_divisor_ceil(const LieSuperalgebra& g, const PCharacter& chi);

/// chi = (X_a, .) for an even root a.
PCharacter nilpotent_character(const LieSuperalgebra& g, const Weight& a);

struct KWHead {
  std::vector<Elem> lambda;
  std::size_t head_dim = 0;
  WallsType type = WallsType::M;
  bool divisible = false;
};

struct KWReport {
  std::string algebra, chi_label;
  std::size_t d0 = 0, d1 = 0;
  std::uint64_t divisor = 1, divisor_ceil = 1;
  std::vector<KWHead> heads;
  bool all_divisible = true;
  bool proof_arithmetic = true;  // type M: divisor | dim; type Q: the half-dimension bound
  std::string skipped;           // nonempty when the character shape is unsupported
  std::string field;             // GF(p^k) used for Lambda_chi
};

/// Harvests all simple heads over Lambda_chi using a simple system on whose
/// positive root vectors chi vanishes.
KWReport verify_superkw(const LieSuperalgebra& g, const PCharacter& chi, const std::string& chi_label,
                        std::uint32_t k_max = 8);

std::vector<KWReport> verify_superkw_sweep(const LieSuperalgebra& g,
                                           const std::vector<std::pair<std::string, PCharacter>>& chis,
                                           std::uint32_t k_max = 8);

}  // namespace modsuper
