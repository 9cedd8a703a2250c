#pragma once

// Invariant ideals of S_xi(g) and of the coinduced algebra F(g,p).

#include "modsuper/envelope.hpp"

namespace modsuper {

struct CoproductTerm {
  Elem coef;
  std::vector<int> left, right;
};

/// Coproduct of the PBW monomial with exponents e in a restricted enveloping
/// algebra whose variables have the given parities (in PBW order).
std::vector<CoproductTerm> comultiply(const Field& F, const std::vector<int>& parity, const std::vector<int>& e);

/// F(g,p) = Hom_{U_0(p)}(U_0(g), K), stored on the basis delta_e dual to the
/// complement monomials e^{(a,b)}.
class CoinducedAlgebra {
 public:
  static CoinducedAlgebra build(std::shared_ptr<const LieSuperalgebra> g, std::vector<std::size_t> p_sub);

  const Field& field() const { return g_->field(); }
  const LieSuperalgebra& g() const { return *g_; }
  std::size_t dim() const { return dim_; }
  /// Codimension s|t of p_sub.
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  /// Complement basis indices: even ones, then odd ones.
  const std::vector<std::size_t>& complement() const { return comp_; }
  std::vector<int> exponents(std::size_t idx) const;
  std::size_t index(const std::vector<int>& e) const;
  int parity(std::size_t idx) const;

  Vec unit() const;
  Vec multiply(const Vec& f, const Vec& h) const;
  /// phi_i (i < s) and psi_j (j < t).
  Vec phi(std::size_t i) const;
  Vec psi(std::size_t j) const;
  /// phi^a psi^b as an ordered product.
  Vec dual_monomial(const std::vector<int>& a, const std::vector<int>& b) const;
  /// Left multiplication by the k-th coordinate function (phi's then psi's).
  Mat mult_matrix(std::size_t k) const;
  /// Coinduced action of the g-basis vector.
  const Mat& action(std::size_t basis_index) const { return actions_[basis_index]; }

 private:
  std::shared_ptr<const LieSuperalgebra> g_;
  std::vector<std::size_t> comp_;
  std::vector<int> comp_par_;
  std::size_t dim_ = 1, s_ = 0, t_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<int> bound_;
  // product of delta_A and delta_B = coef delta_C
  struct Prod {
    std::size_t c;
    Elem coef;
  };
  std::vector<std::vector<std::pair<std::size_t, Prod>>> table_;
  std::vector<Mat> actions_;
};

struct InvariantIdeal {
  std::vector<Vec> basis;
  std::size_t dim = 0, codim = 0;
  std::size_t codim_even = 0, codim_odd = 0;
  bool graded = true;
};

/// Operators and augmentation describing a local superalgebra with g-action.
struct InvariantSetting {
  Field F = Field::create(3);
  std::size_t dim = 0;
  std::vector<int> parity;  // per basis element
  std::vector<Mat> mult_ops, g_ops;
  Vec augmentation;  // kills the maximal ideal
};

InvariantSetting setting_of(const DeformedAlgebra& S, std::uint64_t cap = 4096);
InvariantSetting setting_of(const CoinducedAlgebra& A);

InvariantIdeal largest_proper_invariant_ideal(const InvariantSetting& S);
InvariantIdeal invariant_ideal_closure(const InvariantSetting& S, const Vec& v);
/// True iff the subspace is stable under every operator.
bool is_invariant_ideal(const InvariantSetting& S, const InvariantIdeal& I);

struct DivisibilityReport {
  std::size_t d0 = 0, d1 = 0;
  std::uint64_t divisor = 1;
  std::vector<std::size_t> codims_observed;
  std::size_t max_ideal_codim = 0, max_codim_even = 0, max_codim_odd = 0;
  bool closures_divisible = true;
  bool closures_inside_max = true;
  bool max_matches = false;
  bool ok() const { return closures_divisible && closures_inside_max && max_matches; }
};

/// Samples invariant_ideal_closure of random homogeneous elements (half of them
/// drawn from the maximal ideal) and compares with p^{d0} 2^{d1}.
DivisibilityReport verify_codim_divisibility(const InvariantSetting& S, std::size_t d0, std::size_t d1,
                                             int samples, SplitMix64& rng);

}  // namespace modsuper
