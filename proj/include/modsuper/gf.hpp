#pragma once

// Exact arithmetic in GF(p^k).
//
// A Field is a cheap, copyable handle onto immutable shared tables. Raw
// elements (Elem) are indices into the power-basis encoding
// sum_i c_i p^i, where c_i is the coefficient of x^i modulo the field's
// modulus polynomial. Hot loops work with Elem plus a Field; the
// FieldElement wrapper carries its field and is what the public API and
// tests use.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modsuper {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Elem {
  std::uint32_t v = 0;
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

bool is_prime(std::int64_t n);

class Field {
 public:
  /// GF(p^k) with the lexicographically smallest monic irreducible modulus
  /// (coefficients read as base-p digits, constant term least significant).
  static Field create(std::int64_t p, int k = 1);
  /// GF(p^k) with a caller-supplied monic modulus (low-to-high coefficients,
  /// leading 1 included). Irreducibility is verified.
  static Field with_modulus(std::int64_t p, std::vector<int> modulus);

  std::uint32_t p() const { return impl_->p; }
  int k() const { return impl_->k; }
  std::uint32_t q() const { return impl_->q; }
  /// Monic modulus, low-to-high, length k+1.
  const std::vector<int>& modulus() const { return impl_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The class of x in the power basis (the generator of the extension).
  Elem gen() const;
  Elem from_int(std::int64_t n) const;
  Elem from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> coeffs(Elem a) const;
  /// Returns the integer representative if a lies in the prime field.
  std::optional<std::uint32_t> as_prime(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p()); }
  /// a * b + c
  Elem fma(Elem a, Elem b, Elem c) const { return add(mul(a, b), c); }

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string describe() const;
  std::string format(Elem a) const;

  /// Image of a (an element of sub) under the canonical embedding of sub
  /// into this field. Requires same characteristic and sub.k() | k().
  Elem embed_from(const Field& sub, Elem a) const;

 private:
  struct Impl {
    std::uint32_t p = 0;
    int k = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i
    std::vector<std::uint32_t> log;    // log[a] for a != 0
    std::vector<std::uint32_t> exp;    // exp[i], length 2(q-1)
    std::vector<std::uint32_t> add_table;  // q*q when small
    std::vector<std::uint32_t> neg_table;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const Impl> build(std::uint32_t p, std::vector<int> modulus);

  std::shared_ptr<const Impl> impl_;
};

/// An element carrying its field. Mixing fields throws FieldError.
class FieldElement {
 public:
  FieldElement(Field f, Elem e) : field_(std::move(f)), e_(e) {}
  FieldElement(Field f, std::int64_t n) : field_(f), e_(f.from_int(n)) {}

  const Field& field() const { return field_; }
  Elem raw() const { return e_; }
  std::vector<int> coeffs() const { return field_.coeffs(e_); }
  bool is_zero() const { return e_.v == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const { return {field_, field_.neg(e_)}; }
  FieldElement inv() const { return {field_, field_.inv(e_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_.pow(e_, e)}; }
  FieldElement frobenius() const { return {field_, field_.frobenius(e_)}; }

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.field_.format(a.e_);
  }

 private:
  void check_same(const FieldElement& b) const;
  Field field_;
  Elem e_;
};

enum class ArithOp { Add, Sub, Mul, Div, Pow, Neg, Inv };

/// Dispatching form of the field operations. For Pow, the exponent is the
/// integer n; for Neg and Inv, b is ignored.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op, std::int64_t n = 0);

struct ArtinSchreierResult {
  std::vector<Elem> solutions;  // sorted by encoding
  bool extension_required = false;
};

/// All t in F with t^p - t = c. The map t -> t^p - t is GF(p)-linear, so
/// this is a k x k linear solve over the prime field.
ArtinSchreierResult artin_schreier_solve(const Field& F, Elem c);

}  // namespace modsuper
