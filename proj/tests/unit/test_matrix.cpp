#include <doctest.h>

#include <random>

#include "trisect/matrix.hpp"

using namespace trisect;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntegerMatrix m(dim(rng), dim(rng));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
  return m;
}

void check_snf_contract(const IntegerMatrix& a) {
  SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.u.multiply(a).multiply(snf.v) == snf.d);
  BigInt du = snf.u.determinant();
  BigInt dv = snf.v.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  int n = std::min(snf.d.rows(), snf.d.cols());
  for (int i = 0; i < snf.d.rows(); ++i)
    for (int j = 0; j < snf.d.cols(); ++j)
      if (i != j) CHECK(snf.d.at(i, j) == 0);
  for (int i = 0; i + 1 < n; ++i) {
    CHECK(snf.d.at(i, i) >= 0);
    if (snf.d.at(i, i) == 0) {
      CHECK(snf.d.at(i + 1, i + 1) == 0);
    } else {
      CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
    }
  }
}

// Cofactor expansion as an independent determinant oracle.
BigInt det_oracle(const IntegerMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt sum = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    BigInt term = m.at(0, j) * det_oracle(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace

TEST_CASE("snf of diag(2,3)") {
  IntegerMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(1, 1) = 3;
  SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.d.at(0, 0) == 1);
  CHECK(snf.d.at(1, 1) == 6);
  CHECK(snf.u.multiply(a).multiply(snf.v) == snf.d);
}

TEST_CASE("snf of the identity") {
  IntegerMatrix a = IntegerMatrix::identity(3);
  SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.d == a);
  CHECK(snf.u == a);
  CHECK(snf.v == a);
}

TEST_CASE("snf of the zero 1x1 matrix") {
  IntegerMatrix a(1, 1);
  SmithNormalForm snf = smith_normal_form(a);
  CHECK(snf.d == a);
}

TEST_CASE("snf of empty matrices") {
  check_snf_contract(IntegerMatrix(0, 0));
  check_snf_contract(IntegerMatrix(0, 3));
  check_snf_contract(IntegerMatrix(3, 0));
}

TEST_CASE("snf contract on random matrices") {
  std::mt19937 rng(21);
  for (int i = 0; i < 300; ++i) check_snf_contract(random_matrix(rng, 5, 5));
}

TEST_CASE("snf handles entry growth") {
  std::mt19937 rng(22);
  for (int i = 0; i < 30; ++i) check_snf_contract(random_matrix(rng, 6, 50));
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(23);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> entry(-4, 4);
    IntegerMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.at(r, c) = entry(rng);
    CHECK(m.determinant() == det_oracle(m));
  }
}
