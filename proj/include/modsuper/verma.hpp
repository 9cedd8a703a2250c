#pragma once

// Baby Verma modules Z^Pi_chi(lambda) and the irreducibility criterion.

#include "modsuper/envelope.hpp"

namespace modsuper {

/// Lambda_chi over the smallest extension GF(p^k), k a multiple of the base degree.
struct LambdaSet {
  std::shared_ptr<const LieSuperalgebra> g;  // scalars extended
  PCharacter chi;                            // embedded in g's field
  std::vector<std::vector<Elem>> weights;    // values on the Cartan basis
  std::uint32_t k = 1;
  const Field& field() const { return g->field(); }
};

/// Solves lambda(h)^p - lambda(h^{[p]}) = chi(h)^p on the (toral) Cartan basis.
LambdaSet lambda_set(const LieSuperalgebra& g, const PCharacter& chi, std::uint32_t k_max = 8);

/// True iff lambda satisfies the Artin-Schreier system for chi.
bool in_lambda_set(const LieSuperalgebra& g, const PCharacter& chi, const std::vector<Elem>& lambda);

class BabyVerma;

/// Data shared by all Z^Pi_chi(lambda) for fixed (g, Pi, chi): the straightening
/// engine U_chi(g) ordered [n^-, h, n^+] and the images of generators on the
/// PBW basis of U_chi(n^-).
class VermaFamily {
 public:
  VermaFamily(std::shared_ptr<const LieSuperalgebra> g, SimpleSystem ss, PCharacter chi);

  const LieSuperalgebra& g() const { return *g_; }
  const SimpleSystem& ss() const { return ss_; }
  const PCharacter& chi() const { return chi_; }
  const Field& field() const { return g_->field(); }
  /// p^{|Delta+_0|} 2^{|Delta+_1|}
  std::size_t dim() const { return dim_; }
  /// Positive roots alpha_1..alpha_N and their bounds m_alpha.
  const std::vector<Weight>& positive() const { return ss_.positive(); }
  int m_alpha(std::size_t i) const { return m_[i]; }

  BabyVerma build(const std::vector<Elem>& lambda) const;

  /// Phi'(lambda + rho) with pairings (lambda + rho)(H_alpha).
  Elem criterion_value(const std::vector<Elem>& lambda) const;
  /// rho as values on the Cartan basis.
  const std::vector<Elem>& rho_values() const { return rho_vals_; }

 private:
  friend class BabyVerma;
  struct ProjTerm {
    std::size_t z;
    Elem c;
    std::vector<int> cartan_exp;
  };
  std::shared_ptr<const LieSuperalgebra> g_;
  SimpleSystem ss_;
  PCharacter chi_;
  std::shared_ptr<DeformedAlgebra> U_;
  std::size_t dim_ = 1, n_neg_ = 0, block_ = 1;
  std::vector<int> m_;
  std::vector<int> par_;  // parity of each Z basis vector
  std::vector<Elem> rho_vals_;
  // terms_[x][z]: x * (z-th monomial) in U_chi with n^+ part empty
  std::vector<std::vector<std::vector<ProjTerm>>> terms_;
};

class BabyVerma {
 public:
  const VermaFamily& family() const { return *fam_; }
  const std::vector<Elem>& lambda() const { return lambda_; }
  std::size_t dim() const { return fam_->dim(); }
  int parity(std::size_t i) const { return fam_->par_[i]; }
  const std::vector<int>& parities() const { return fam_->par_; }
  /// Action matrix of the g-basis vector.
  const Mat& action(std::size_t basis_index) const { return act_[basis_index]; }
  const std::vector<Mat>& actions() const { return act_; }
  /// Action of the root vector X_a.
  const Mat& root_action(const Weight& a) const { return act_[fam_->g().root_index(a)]; }

  Vec highest_vector() const;
  /// X_{-a_1}^{m_1} ... X_{-a_N}^{m_N} v_lambda
  Vec lowest_vector() const;
  /// Coefficient of v_lambda in X_{a_1}^{m_1} ... X_{a_N}^{m_N} lowest_vector().
  Elem phi_via_module() const;
  /// Exponents over the negative roots -alpha_1..-alpha_N of a basis vector.
  std::vector<int> basis_exponents(std::size_t i) const;

 private:
  friend class VermaFamily;
  const VermaFamily* fam_ = nullptr;
  std::vector<Elem> lambda_;
  std::vector<Mat> act_;
};

struct OracleVerdict {
  bool irreducible = false;
  std::size_t generated_dim = 0;  // dim of the submodule generated by the lowest vector
};
/// Irreducible iff the lowest vector generates Z.
OracleVerdict is_irreducible_oracle(const BabyVerma& Z);

struct CriterionVerdict {
  bool irreducible = false;
  Elem phi_value;
};
CriterionVerdict is_irreducible_criterion(const VermaFamily& fam, const std::vector<Elem>& lambda);

/// The simple head Z / rad Z, described through its dual (rad Z)^perp with a
/// homogeneous basis and the restricted transposed action.
struct Head {
  std::size_t dim = 0;
  std::vector<Vec> dual_basis;
  std::vector<int> parity;
  std::vector<Mat> ops;  // one per g-basis vector, in the dual basis
};

/// Head via the dual closure of v_lambda^*; valid when chi vanishes on every root vector.
Head head_standard(const BabyVerma& Z);
/// Head as the unique minimal submodule of Z^*; valid whenever Z has a unique
/// maximal submodule. Throws if the minimal closure is not unique.
Head head_socle(const BabyVerma& Z, std::size_t max_points = 20000);
/// head_standard for standard chi, head_socle otherwise.
Head head_of(const BabyVerma& Z);

struct VermaRecord {
  std::vector<Elem> lambda;
  std::size_t dim = 0;
  Elem phi_module, phi_product;
  bool irreducible_oracle = false, irreducible_criterion = false;
  std::size_t head_dim = 0;
  char walls = 'M';
};

struct SemisimplicityReport {
  bool semisimple = false;          // verdict from the module computation
  bool regular_semisimple = false;  // chi side
  bool all_irreducible = true;
  std::uint64_t accounted = 0, dim_u = 0;
  std::vector<VermaRecord> records;
  bool consistent() const { return semisimple == regular_semisimple; }
};

/// Builds every Z_chi(lambda), lambda in Lambda_chi, over the distinguished system.
SemisimplicityReport semisimplicity_check(const LieSuperalgebra& g, const PCharacter& chi, std::uint32_t k_max = 8);

}  // namespace modsuper
