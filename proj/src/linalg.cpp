#include "modsuper/linalg.hpp"

#include <deque>

namespace modsuper {

Mat Mat::identity(const Field& F, std::size_t n) {
  Mat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Mat r(F_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem a = (*this)(i, l);
      if (a.v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem b = o(l, j);
        if (b.v != 0) r(i, j) = F_.add(r(i, j), F_.mul(a, b));
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F_.add(data_[i], o.data_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F_.sub(data_[i], o.data_[i]);
  return r;
}

Mat Mat::scaled(Elem s) const {
  Mat r(F_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F_.mul(s, data_[i]);
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].v == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Elem a = (*this)(i, j);
      if (a.v != 0) r[i] = F_.add(r[i], F_.mul(a, v[j]));
    }
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::pow(std::uint64_t e) const {
  Mat r = identity(F_, rows_);
  Mat b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Mat::is_zero() const {
  for (auto e : data_)
    if (e.v != 0) return false;
  return true;
}

std::vector<std::size_t> rref(Mat& m) {
  const Field& F = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (m(i, c).v != 0) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Elem iv = F.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), iv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).v == 0) continue;
      const Elem f = F.neg(m(i, c));
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j).v != 0) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> kernel(const Mat& m) {
  Mat a = m;
  const auto pivots = rref(a);
  const Field& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a(r, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat a(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  const auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(r, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  Mat a(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = m.field().one();
  }
  const auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat r(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, n + j);
  return r;
}

bool is_zero(const Vec& v) {
  for (auto e : v)
    if (e.v != 0) return false;
  return true;
}

Vec vadd(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vscale(const Field& F, Elem s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
  return r;
}

Vec vaxpy(const Field& F, const Vec& a, Elem s, const Vec& b) {
  Vec r(a);
  if (s.v == 0) return r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i].v != 0) r[i] = F.add(r[i], F.mul(s, b[i]));
  return r;
}

Elem dot(const Field& F, const Vec& a, const Vec& b) {
  Elem r = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].v != 0 && b[i].v != 0) r = F.add(r, F.mul(a[i], b[i]));
  return r;
}

Vec Echelon::reduce(Vec v) const {
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c].v == 0 || pivot_row_[c] < 0) continue;
    const Vec& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
    const Elem f = F_.neg(v[c]);
    for (std::size_t j = c; j < n_; ++j)
      if (row[j].v != 0) v[j] = F_.add(v[j], F_.mul(f, row[j]));
  }
  return v;
}

std::optional<Vec> Echelon::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t c = 0;
  while (c < n_ && r[c].v == 0) ++c;
  if (c == n_) return std::nullopt;
  const Elem iv = F_.inv(r[c]);
  for (std::size_t j = c; j < n_; ++j) r[j] = F_.mul(r[j], iv);
  // Keep existing rows reduced at the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    if (row[c].v == 0) continue;
    const Elem f = F_.neg(row[c]);
    for (std::size_t j = c; j < n_; ++j)
      if (r[j].v != 0) row[j] = F_.add(row[j], F_.mul(f, r[j]));
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(r);
  return r;
}

Echelon span_closure(const Field& F, std::size_t n, const std::vector<Vec>& seeds, const std::vector<LinearOp>& ops) {
  Echelon e(F, n);
  std::deque<Vec> queue;
  for (const auto& s : seeds)
    if (auto r = e.insert(s)) queue.push_back(*r);
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops)
      if (auto r = e.insert(op(v))) queue.push_back(*r);
    if (e.dim() == n) break;
  }
  return e;
}

Echelon span_closure(const Field& F, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Mat>& ops) {
  std::vector<LinearOp> fs;
  fs.reserve(ops.size());
  for (const auto& m : ops) fs.push_back([&m](const Vec& v) { return m.apply(v); });
  return span_closure(F, n, seeds, fs);
}

std::vector<Vec> annihilator(const Echelon& e) {
  Mat m(e.field(), e.dim(), e.ambient());
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.ambient(); ++j) m(i, j) = e.basis()[i][j];
  return kernel(m);
}

}  // namespace modsuper
