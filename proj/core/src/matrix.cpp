#include "trisect/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace trisect {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntegerMatrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

BigInt IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntegerMatrix m = *this;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
  }
  os << "]";
  return os.str();
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct SnfState {
  IntegerMatrix a, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row j
  void row_sub(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
  }
  // col i -= q * col j
  void col_sub(int i, int j, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }

  // Smallest nonzero |entry| in the submatrix from (s,s); row-major ties.
  bool find_pivot(int s, int& pr, int& pc) {
    bool found = false;
    BigInt best;
    for (int i = s; i < a.rows(); ++i)
      for (int j = s; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        BigInt mag = abs_big(a.at(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
  SnfState st{a, IntegerMatrix::identity(a.rows()), IntegerMatrix::identity(a.cols())};
  int n = std::min(a.rows(), a.cols());

  for (int s = 0; s < n; ++s) {
    int pr = s, pc = s;
    if (!st.find_pivot(s, pr, pc)) break;  // submatrix is zero
    st.swap_rows(s, pr);
    st.swap_cols(s, pc);

    for (;;) {
      // Clear column s below/above the pivot by division with remainder;
      // a nonzero remainder becomes the new, smaller pivot.
      bool again = false;
      for (int i = s + 1; i < st.a.rows(); ++i) {
        if (st.a.at(i, s) == 0) continue;
        BigInt q = st.a.at(i, s) / st.a.at(s, s);
        st.row_sub(i, s, q);
        if (st.a.at(i, s) != 0) {
          st.swap_rows(s, i);
          again = true;
        }
      }
      if (again) continue;
      for (int j = s + 1; j < st.a.cols(); ++j) {
        if (st.a.at(s, j) == 0) continue;
        BigInt q = st.a.at(s, j) / st.a.at(s, s);
        st.col_sub(j, s, q);
        if (st.a.at(s, j) != 0) {
          st.swap_cols(s, j);
          again = true;
        }
      }
      if (again) continue;

      // Divisibility sweep: the pivot must divide every remaining entry.
      bool fixed = true;
      for (int i = s + 1; i < st.a.rows() && fixed; ++i)
        for (int j = s + 1; j < st.a.cols() && fixed; ++j)
          if (st.a.at(i, j) % st.a.at(s, s) != 0) {
            st.row_sub(s, i, BigInt(-1));  // row s += row i
            fixed = false;
          }
      if (fixed) break;
    }
    if (st.a.at(s, s) < 0) st.negate_row(s);
  }

  return SmithNormalForm{st.a, st.u, st.v};
}

}  // namespace trisect
