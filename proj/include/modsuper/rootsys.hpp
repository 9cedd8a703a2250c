#pragma once

// Root systems of the basic classical Lie superalgebras in epsilon-delta
// coordinates, simple systems, even and odd reflections.

#include <boost/rational.hpp>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "modsuper/gf.hpp"

namespace modsuper {

using Rational = boost::rational<long long>;
using Weight = std::vector<Rational>;

class RootSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SuperType { GL, SL, B, C, D, D21, F4, G3 };

struct TypeSpec {
  SuperType type = SuperType::GL;
  int m = 1, n = 1;
  Rational alpha{1};  // D(2,1;alpha) only

  /// Parses "gl(2|1)", "sl(3|1)", "osp(1|2)", "B(1,1)", "C(3)", "D(2,1)",
  /// "D(2,1;2)", "F(4)", "G(3)".
  static TypeSpec parse(const std::string& label);
  std::string label() const;
  bool exceptional() const { return type == SuperType::D21 || type == SuperType::F4 || type == SuperType::G3; }
};

/// Throws RootSystemError naming the violated admissibility condition when p
/// is not allowed for the type.
void check_prime(const TypeSpec& t, std::int64_t p);

class RootSystem {
 public:
  explicit RootSystem(const TypeSpec& t);

  const TypeSpec& spec() const { return spec_; }
  std::size_t dim() const { return coord_names_.size(); }
  const std::vector<std::string>& coord_names() const { return coord_names_; }
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  const std::vector<Weight>& even_roots() const { return even_; }
  const std::vector<Weight>& odd_roots() const { return odd_; }

  Rational form(const Weight& a, const Weight& b) const;
  bool is_root(const Weight& w) const { return is_even(w) || is_odd(w); }
  bool is_even(const Weight& w) const { return even_set_.count(w) > 0; }
  bool is_odd(const Weight& w) const { return odd_set_.count(w) > 0; }
  bool is_isotropic(const Weight& w) const { return form(w, w) == Rational(0); }
  /// Even roots whose half is not an odd root.
  std::vector<Weight> even_bar() const;
  /// Isotropic odd roots.
  std::vector<Weight> odd_bar() const;

  std::string format(const Weight& w) const;

 private:
  TypeSpec spec_;
  std::vector<std::string> coord_names_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Weight> even_, odd_;
  std::set<Weight> even_set_, odd_set_;
};

Weight wadd(const Weight& a, const Weight& b);
Weight wsub(const Weight& a, const Weight& b);
Weight wscale(const Rational& s, const Weight& a);
Weight wneg(const Weight& a);

enum class SimpleRootType { I, II, III };

struct Classification {
  SimpleRootType type;
  std::vector<Weight> delta_star;  // {delta} or {delta, 2 delta}
};

class SimpleSystem {
 public:
  /// Builds from an ordered simple system; the positive system is derived.
  SimpleSystem(std::shared_ptr<const RootSystem> rs, std::vector<Weight> simple);

  const RootSystem& rs() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& rs_ptr() const { return rs_; }
  const std::vector<Weight>& simple() const { return simple_; }
  /// Positive roots sorted by height, ties by descending lexicographic order.
  const std::vector<Weight>& positive() const { return positive_; }
  std::vector<Weight> positive_even() const;
  std::vector<Weight> positive_odd() const;
  /// Coordinates of a root in the basis of simple roots.
  std::vector<Rational> simple_coords(const Weight& w) const;
  int height(const Weight& w) const;
  bool is_positive(const Weight& w) const { return positive_set_.count(w) > 0; }
  const Weight& rho() const { return rho_; }
  /// Sorted positive set, the identity of the simple system.
  std::vector<Weight> key() const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::set<Weight> positive_set_;
  Weight rho_;
};

SimpleSystem distinguished_simple_system(std::shared_ptr<const RootSystem> rs);
Classification classify_simple_root(const SimpleSystem& ss, const Weight& delta);
/// Reflection at a simple root: even reflection for types I and III, odd
/// reflection for type II. Postconditions are verified and a violation throws.
SimpleSystem reflect(const SimpleSystem& ss, const Weight& delta);
/// Odd reflection computed literally from the case rules on simple roots.
std::vector<Weight> odd_reflection_rule(const SimpleSystem& ss, const Weight& delta);
/// Breadth-first closure from the distinguished system, in discovery order.
std::vector<SimpleSystem> all_simple_systems(std::shared_ptr<const RootSystem> rs);
Weight rho(const SimpleSystem& ss);

/// Reduction of a rational into GF(p^k); throws if the denominator vanishes mod p.
Elem to_field(const Field& F, const Rational& r);

/// prod over even positive ((l|a)^{p-1} - 1) times prod over odd positive (l|b).
Elem phi_prime_eval(const SimpleSystem& ss, const Field& F, const std::map<Weight, Elem>& pairing);

/// (l|a) for l given by ambient coordinates over F: 2(l,a)/(a,a) for
/// non-isotropic a, (l,a) otherwise.
Elem root_pairing(const RootSystem& rs, const Field& F, const std::vector<Elem>& lambda, const Weight& a);

}  // namespace modsuper
