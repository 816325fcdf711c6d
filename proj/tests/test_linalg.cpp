#include "doctest.h"

#include <random>

#include "hocolim/linalg.hpp"

using namespace hocolim;

namespace {

Matrix random_matrix(const RingSpec& ring, std::size_t m, std::size_t n, std::mt19937& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix a(ring, m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) a.set(r, c, Scalar(dist(rng)));
  }
  return a;
}

// Every vector of F_p^n, as dense scalars.
std::vector<std::vector<Scalar>> all_vectors(unsigned p, std::size_t n) {
  std::vector<std::vector<Scalar>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Scalar> v(n);
    std::size_t x = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Scalar(static_cast<long>(x % p));
      x /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

void check_smith(const Matrix& a) {
  const auto snf = smith_normal_form(a);
  CHECK(snf.left * a * snf.right == snf.diagonal_matrix(a.rows(), a.cols()));
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    CHECK(snf.diagonal[i] != 0);
    if (a.ring().is_field()) {
      CHECK(snf.diagonal[i] == 1);
    } else {
      CHECK(snf.diagonal[i] > 0);
      if (i + 1 < snf.diagonal.size()) {
        CHECK(mpz_divisible_p(snf.diagonal[i + 1].get_num_mpz_t(), snf.diagonal[i].get_num_mpz_t()));
      }
    }
  }
}

}  // namespace

TEST_CASE("ring arithmetic") {
  const auto f3 = RingSpec::prime_field(3);
  CHECK(f3.normalize(Scalar(-1)) == 2);
  CHECK(f3.normalize(Scalar(1, 2)) == 2);
  CHECK(f3.inverse(Scalar(2)) == 2);
  CHECK_THROWS_AS(RingSpec::prime_field(4), std::invalid_argument);
  CHECK_THROWS_AS(RingSpec::integers().inverse(Scalar(2)), std::domain_error);
  CHECK_THROWS_AS(RingSpec::integers().normalize(Scalar(1, 2)), std::domain_error);
  CHECK(RingSpec::prime_field(2).name() == "F2");
}

TEST_CASE("smith normal form examples") {
  const auto z = RingSpec::integers();
  auto id = smith_normal_form(Matrix::identity(z, 3));
  CHECK(id.diagonal == std::vector<Scalar>{1, 1, 1});
  CHECK(id.left == Matrix::identity(z, 3));
  CHECK(id.right == Matrix::identity(z, 3));

  auto s = smith_normal_form(Matrix::from_rows(z, {{2, 4}, {6, 8}}));
  CHECK(s.diagonal == std::vector<Scalar>{2, 4});
  check_smith(Matrix::from_rows(z, {{2, 4}, {6, 8}}));

  CHECK(smith_normal_form(Matrix(z, 2, 3)).diagonal.empty());
  CHECK(smith_normal_form(Matrix::from_rows(z, {{2, 0}, {0, 3}})).diagonal == std::vector<Scalar>{1, 6});
}

TEST_CASE("smith normal form on random integer matrices") {
  std::mt19937 rng(7);
  const auto z = RingSpec::integers();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    const Matrix a = random_matrix(z, m, n, rng, -6, 6);
    check_smith(a);
    // rank over Z equals rank over Q
    Matrix q(RingSpec::rationals(), m, n);
    for (std::size_t c = 0; c < n; ++c) q.set_column(c, a.column(c));
    CHECK(rank(a) == rank(q));
    CHECK(smith_normal_form(q).rank() == rank(q));
  }
}

TEST_CASE("smith normal form over fields") {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    const auto f = RingSpec::prime_field(p);
    for (int trial = 0; trial < 20; ++trial) check_smith(random_matrix(f, 1 + rng() % 4, 1 + rng() % 4, rng, 0, p - 1));
  }
  check_smith(random_matrix(RingSpec::rationals(), 4, 3, rng, -3, 3));
}

TEST_CASE("solve_linear examples") {
  const auto z = RingSpec::integers();
  auto x = solve_linear(Matrix::identity(z, 2), Matrix::column_vector(z, {5, -3}));
  REQUIRE(x);
  CHECK(*x == Matrix::column_vector(z, {5, -3}));

  const auto f2 = RingSpec::prime_field(2);
  const Matrix a = Matrix::from_rows(f2, {{1, 1}, {0, 0}});
  const Matrix b = Matrix::column_vector(f2, {1, 0});
  auto y = solve_linear(a, b);
  REQUIRE(y);
  CHECK(a * *y == b);
  std::vector<std::vector<Scalar>> solutions;
  for (const auto& v : all_vectors(2, 2)) {
    if (a * Matrix::column_vector(f2, v) == b) solutions.push_back(v);
  }
  CHECK(solutions.size() == 2);
  CHECK(solutions[0] == std::vector<Scalar>{1, 0});
  CHECK(solutions[1] == std::vector<Scalar>{0, 1});

  CHECK_FALSE(solve_linear(Matrix::from_rows(z, {{0}}), Matrix::column_vector(z, {1})));
  CHECK_FALSE(solve_linear(Matrix::from_rows(z, {{2}}), Matrix::column_vector(z, {1})));
  CHECK_THROWS_AS(solve_linear(Matrix::identity(z, 2), Matrix::column_vector(z, {1})), std::invalid_argument);
}

TEST_CASE("solve_linear agrees with exhaustive enumeration over F2 and F3") {
  std::mt19937 rng(3);
  for (unsigned p : {2u, 3u}) {
    const auto f = RingSpec::prime_field(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
      const Matrix a = random_matrix(f, m, n, rng, 0, p - 1);
      std::vector<Matrix> image;
      for (const auto& v : all_vectors(p, n)) image.push_back(a * Matrix::column_vector(f, v));
      for (const auto& bv : all_vectors(p, m)) {
        const Matrix b = Matrix::column_vector(f, bv);
        bool reachable = false;
        for (const auto& im : image) reachable = reachable || im == b;
        auto x = solve_linear(a, b);
        CHECK(static_cast<bool>(x) == reachable);
        if (x) CHECK(a * *x == b);
      }
    }
  }
}

TEST_CASE("solve_linear over Z finds integral solutions") {
  std::mt19937 rng(5);
  const auto z = RingSpec::integers();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const Matrix a = random_matrix(z, m, n, rng, -4, 4);
    const Matrix x0 = random_matrix(z, n, 1, rng, -3, 3);
    auto x = solve_linear(a, a * x0);
    REQUIRE(x);
    CHECK(a * *x == a * x0);
  }
}

TEST_CASE("kernel_basis") {
  const auto z = RingSpec::integers();
  const auto f2 = RingSpec::prime_field(2);
  CHECK(kernel_basis(Matrix::identity(z, 3)).cols() == 0);
  const Matrix k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k == Matrix::column_vector(f2, {1, 1}));
  CHECK(kernel_basis(Matrix::from_rows(z, {{2}})).cols() == 0);

  // saturated over Z: ker [2 4] is generated by (-2, 1)
  const Matrix kz = kernel_basis(Matrix::from_rows(z, {{2, 4}}));
  REQUIRE(kz.cols() == 1);
  CHECK(abs(kz.at(1, 0)) == 1);
  CHECK(Matrix::from_rows(z, {{2, 4}}) * kz == Matrix(z, 1, 1));

  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = random_matrix(z, 1 + rng() % 4, 1 + rng() % 5, rng, -5, 5);
    const Matrix kk = kernel_basis(a);
    CHECK((a * kk).is_zero());
    CHECK(kk.cols() + rank(a) == a.cols());
  }
}
