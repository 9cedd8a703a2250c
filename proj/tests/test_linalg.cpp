#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modsuper/linalg.hpp"
#include "modsuper/rng.hpp"

using namespace modsuper;

namespace {

Mat random_mat(const Field& F, std::size_t r, std::size_t c, SplitMix64& rng, int zero_bias = 0) {
  Mat m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng.below(static_cast<std::uint64_t>(zero_bias) + 1) ? F.zero() : Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
  return m;
}

// Number of x in GF(q)^n with m x = 0, by enumeration.
std::size_t brute_kernel_size(const Mat& m) {
  const Field& F = m.field();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= F.q();
  std::size_t count = 0;
  for (std::size_t n = 0; n < total; ++n) {
    Vec x(m.cols());
    std::size_t t = n;
    for (std::size_t i = 0; i < m.cols(); ++i) {
      x[i] = Elem{static_cast<std::uint32_t>(t % F.q())};
      t /= F.q();
    }
    if (is_zero(m.apply(x))) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("rank and kernel against enumeration") {
  SplitMix64 rng(3);
  for (auto F : {Field::create(3), Field::create(5), Field::create(3, 2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
      Mat m = random_mat(F, r, c, rng, 1);
      const auto ker = kernel(m);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      std::size_t expect = 1;
      for (std::size_t i = 0; i < ker.size(); ++i) expect *= F.q();
      CHECK(brute_kernel_size(m) == expect);
      CHECK(rank(m) + ker.size() == c);
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("solve and inverse") {
  SplitMix64 rng(9);
  auto F = Field::create(5, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m = random_mat(F, 5, 5, rng);
    Vec x(5);
    for (auto& e : x) e = Elem{static_cast<std::uint32_t>(rng.below(F.q()))};
    auto s = solve(m, m.apply(x));
    REQUIRE(s.has_value());
    CHECK(m.apply(*s) == m.apply(x));
    auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == 5));
    if (inv) CHECK(*inv * m == Mat::identity(F, 5));
  }
  Mat z(F, 2, 2);
  Vec b{F.one(), F.zero()};
  CHECK_FALSE(solve(z, b).has_value());
}

TEST_CASE("echelon and closure") {
  auto F = Field::create(3);
  SplitMix64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_mat(F, 6, 8, rng, 1);
    Echelon e(F, 8);
    for (std::size_t i = 0; i < 6; ++i) e.insert(m.row(i));
    CHECK(e.dim() == rank(m));
    for (std::size_t i = 0; i < 6; ++i) CHECK(e.contains(m.row(i)));
    const auto ann = annihilator(e);
    CHECK(ann.size() + e.dim() == 8);
    for (const auto& a : ann)
      for (std::size_t i = 0; i < 6; ++i) CHECK(dot(F, a, m.row(i)).v == 0);
  }
  // Shift operator on GF(3)^4: closure of e_0 is everything.
  Mat shift(F, 4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) shift(i + 1, i) = F.one();
  Vec e0(4);
  e0[0] = F.one();
  CHECK(span_closure(F, 4, {e0}, std::vector<Mat>{shift}).dim() == 4);
  Vec e3(4);
  e3[3] = F.one();
  CHECK(span_closure(F, 4, {e3}, std::vector<Mat>{shift}).dim() == 1);
}
