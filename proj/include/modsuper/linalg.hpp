#pragma once

// Dense linear algebra over a Field.

#include <functional>
#include <optional>
#include <vector>

#include "modsuper/gf.hpp"

namespace modsuper {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat(Field F, std::size_t rows, std::size_t cols)
      : F_(std::move(F)), rows_(rows), cols_(cols), data_(rows * cols) {}
  static Mat identity(const Field& F, std::size_t n);

  const Field& field() const { return F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Elem s) const;
  Vec apply(const Vec& v) const;
  Mat transpose() const;
  Mat pow(std::uint64_t e) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

 private:
  Field F_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel(const Mat& m);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> inverse(const Mat& m);

bool is_zero(const Vec& v);
Vec vadd(const Field& F, const Vec& a, const Vec& b);
Vec vscale(const Field& F, Elem s, const Vec& a);
/// a + s b
Vec vaxpy(const Field& F, const Vec& a, Elem s, const Vec& b);
Elem dot(const Field& F, const Vec& a, const Vec& b);

/// Incrementally maintained row-reduced basis of a subspace.
class Echelon {
 public:
  Echelon(Field F, std::size_t n) : F_(std::move(F)), n_(n), pivot_row_(n, -1) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const Field& field() const { return F_; }

  /// Remainder of v after eliminating against the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns the reduced new basis vector, or nullopt if v was in the span.
  std::optional<Vec> insert(const Vec& v);

 private:
  Field F_;
  std::size_t n_;
  std::vector<Vec> rows_;  // each normalized with leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
};

using LinearOp = std::function<Vec(const Vec&)>;

/// Smallest subspace containing the seeds and stable under every operator.
Echelon span_closure(const Field& F, std::size_t n, const std::vector<Vec>& seeds, const std::vector<LinearOp>& ops);
Echelon span_closure(const Field& F, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Mat>& ops);

/// Annihilator {x : (b, x) = 0 for all b in the basis} under the standard pairing.
std::vector<Vec> annihilator(const Echelon& e);

}  // namespace modsuper
