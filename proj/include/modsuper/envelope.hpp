#pragma once

// The family U_{xi,lambda}(g) realized by PBW straightening. lambda = 1 gives
// the reduced enveloping superalgebra U_xi(g), lambda = 0 the reduced
// symmetric superalgebra S_xi(g).

#include <map>
#include <memory>
#include <unordered_map>

#include "modsuper/liesuper.hpp"
#include "modsuper/rng.hpp"

namespace modsuper {

/// Sparse element: PBW monomial index -> nonzero coefficient.
struct AlgebraElement {
  std::map<std::uint64_t, Elem> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

class DeformedAlgebra {
 public:
  /// order lists g-basis indices in PBW position order; empty means basis order.
  DeformedAlgebra(std::shared_ptr<const LieSuperalgebra> g, PCharacter xi, Elem lambda,
                  std::vector<std::size_t> order = {});

  const LieSuperalgebra& g() const { return *g_; }
  const std::shared_ptr<const LieSuperalgebra>& g_ptr() const { return g_; }
  const Field& field() const { return g_->field(); }
  const PCharacter& xi() const { return xi_; }
  Elem lambda() const { return lambda_; }
  /// p^{n0} 2^{n1}
  std::uint64_t dim() const { return dim_; }

  std::size_t num_vars() const { return order_.size(); }
  std::size_t var_basis(std::size_t pos) const { return order_[pos]; }
  std::size_t position_of(std::size_t basis_index) const { return pos_of_[basis_index]; }
  int bound(std::size_t pos) const { return bound_[pos]; }

  int exponent(std::uint64_t m, std::size_t pos) const { return static_cast<int>((m / stride_[pos]) % bound_[pos]); }
  std::vector<int> exponents(std::uint64_t m) const;
  std::uint64_t encode(const std::vector<int>& e) const;
  int degree(std::uint64_t m) const;
  int parity(std::uint64_t m) const;

  AlgebraElement zero() const { return {}; }
  AlgebraElement one() const;
  AlgebraElement monomial(std::uint64_t m, Elem c) const;
  /// The generator b_i (g-basis index i).
  AlgebraElement generator(std::size_t basis_index) const;
  /// Image of an element of g.
  AlgebraElement from_g(const Vec& x) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(Elem s, const AlgebraElement& a) const;
  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;
  /// b_i * u for a generator.
  AlgebraElement left_mul_generator(std::size_t basis_index, const AlgebraElement& u) const;
  /// The derivation induced by ad b_i.
  AlgebraElement g_action(std::size_t basis_index, const AlgebraElement& u) const;
  /// Parity of a homogeneous element (throws if inhomogeneous).
  int parity(const AlgebraElement& u) const;

  /// Dense matrices on the PBW basis; dim must not exceed the cap.
  Mat left_mult_matrix(std::size_t basis_index, std::uint64_t cap = 4096) const;
  Mat action_matrix(std::size_t basis_index, std::uint64_t cap = 4096) const;
  Vec to_vec(const AlgebraElement& u) const;
  AlgebraElement from_vec(const Vec& v) const;

  std::string format(const AlgebraElement& u) const;

  /// Random element with a few random terms.
  AlgebraElement random_element(SplitMix64& rng, int terms = 3) const;

 private:
  void accumulate(AlgebraElement& acc, Elem c, const AlgebraElement& t) const;
  // b_{order[pos]} * monomial m, memoized.
  const AlgebraElement& gen_mul(std::size_t pos, std::uint64_t m) const;
  AlgebraElement gen_mul_uncached(std::size_t pos, std::uint64_t m) const;
  AlgebraElement g_elem_times_monomial(const Vec& x, std::uint64_t m) const;

  std::shared_ptr<const LieSuperalgebra> g_;
  PCharacter xi_;
  Elem lambda_;
  std::vector<std::size_t> order_, pos_of_;
  std::vector<int> bound_, par_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t dim_ = 1;
  Elem half_lambda_;
  std::vector<Elem> xi_pow_p_;  // xi(x)^p per position
  mutable std::unordered_map<std::uint64_t, AlgebraElement> cache_;
};

std::shared_ptr<DeformedAlgebra> specialize(std::shared_ptr<const LieSuperalgebra> g, const PCharacter& xi, Elem lambda);

struct ThetaReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Image under x -> t^{-1} x of u in U_{xi,lambda}, as an element of U_{t xi, t lambda}
/// (same PBW indices).
AlgebraElement theta_map(const DeformedAlgebra& src, const AlgebraElement& u, Elem t);

/// Checks theta_t : U_{xi,lambda} -> U_{t xi,t lambda} is multiplicative on all
/// generator pairs and on random pairs of elements.
ThetaReport theta_check(const DeformedAlgebra& src, Elem t, SplitMix64& rng, int random_pairs = 20);

}  // namespace modsuper
