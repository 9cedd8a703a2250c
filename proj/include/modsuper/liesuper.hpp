#pragma once

// Matrix-realized restricted Lie superalgebras over GF(p^k).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modsuper/linalg.hpp"
#include "modsuper/rng.hpp"
#include "modsuper/rootsys.hpp"

namespace modsuper {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BasisVector {
  std::string name;
  int parity = 0;
};

struct RootVector {
  Weight root;
  std::size_t index = 0;  // position in the algebra basis
};

/// A p-character, stored on the whole basis with zeros on the odd part.
struct PCharacter {
  Vec values;
};

struct Centralizer {
  std::vector<Vec> basis;
  std::size_t d0 = 0, d1 = 0;
};

enum class ElementKind { Nilpotent, Semisimple, Mixed };

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

class LieSuperalgebra {
 public:
  /// gl(m|n), sl(m|n) and the osp family. Exceptional types throw.
  static LieSuperalgebra build(const TypeSpec& t, const Field& F);
  static LieSuperalgebra build(const std::string& label, const Field& F) { return build(TypeSpec::parse(label), F); }

  const Field& field() const { return F_; }
  const TypeSpec& spec() const { return spec_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  const SimpleSystem& simple_system() const { return *ss_; }

  std::size_t dim() const { return basis_.size(); }
  std::size_t dim_even() const;
  std::size_t dim_odd() const { return dim() - dim_even(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  int parity(std::size_t i) const { return basis_[i].parity; }
  const std::vector<std::size_t>& cartan() const { return cartan_; }
  const std::vector<RootVector>& root_vectors() const { return roots_; }
  /// Index of the root vector X_a; throws if a is not a root.
  std::size_t root_index(const Weight& a) const;

  /// Coordinates of [b_i, b_j].
  const Vec& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Coordinates of b_i^{[p]} for even b_i.
  const Vec& p_power(std::size_t i) const;
  /// x^{[p]} of an even element.
  Vec p_power(const Vec& x) const;
  const Mat& form() const { return form_; }
  Elem form(const Vec& x, const Vec& y) const;
  /// Matrix of ad b_i in the basis.
  Mat ad(std::size_t i) const;
  Mat ad(const Vec& x) const;
  const Mat& realization(std::size_t i) const { return mats_[i]; }
  Mat realize(const Vec& x) const;
  Vec unit(std::size_t i) const;

  /// Values of an ambient weight on the Cartan basis.
  std::vector<Elem> weight_on_cartan(const Weight& w) const;
  /// Coroot H_a as a vector in the algebra basis (supported on the Cartan).
  Vec coroot(const Weight& a) const;

  /// p-character with the given values on the Cartan basis, zero elsewhere.
  PCharacter character_on_cartan(const std::vector<Elem>& vals) const;
  PCharacter character_zero() const;

  /// Same algebra with scalars extended to F2.
  LieSuperalgebra extend(const Field& F2) const;

  ValidationReport validate() const;

  std::string describe() const;

 private:
  LieSuperalgebra() = default;
  void finish(std::vector<Mat> mats, std::vector<BasisVector> basis);

  Field F_ = Field::create(3);
  TypeSpec spec_;
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const SimpleSystem> ss_;
  std::vector<BasisVector> basis_;
  std::vector<Mat> mats_;
  std::vector<Vec> table_;
  std::vector<Vec> pmap_;
  Mat form_ = Mat(Field::create(3), 0, 0);
  std::vector<std::size_t> cartan_;
  std::vector<RootVector> roots_;
  std::map<Weight, std::size_t> root_index_;
  std::vector<std::size_t> coord_slot_;  // natural-module index carrying +coordinate c
  // Coordinate extraction from matrices: chosen entries and inverse.
  std::vector<std::size_t> probe_;
  Mat probe_inv_ = Mat(Field::create(3), 0, 0);
  Vec coords_of(const Mat& m) const;
};

Centralizer centralizer(const LieSuperalgebra& g, const PCharacter& chi);
PCharacter character_from_element(const LieSuperalgebra& g, const Vec& y);
ElementKind classify_element(const LieSuperalgebra& g, const Vec& y);
/// True iff chi(H_a) != 0 for every root a. chi must vanish on root vectors.
bool is_regular_semisimple(const LieSuperalgebra& g, const PCharacter& chi);
/// True iff chi vanishes on every root vector.
bool is_standard(const LieSuperalgebra& g, const PCharacter& chi);
/// chi composed with the even automorphism exp(ad x), x nilpotent even.
PCharacter conjugate_character(const LieSuperalgebra& g, const PCharacter& chi, const Vec& x);

/// A nonzero character supported on the Cartan subalgebra that is (or is not)
/// regular semisimple: the first one in lexicographic order over the base field,
/// or a random one when rng is given.
std::optional<PCharacter> find_semisimple_character(const LieSuperalgebra& g, bool regular, SplitMix64* rng = nullptr);

struct StructureConstant {
  std::size_t i, j, k;
  Elem value;
};
std::vector<StructureConstant> structure_constants(const LieSuperalgebra& g);

}  // namespace modsuper
