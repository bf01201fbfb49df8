#include "crystcoh/matrix.hpp"
#include "crystcoh/exterior.hpp"

#include <sstream>

namespace crystcoh {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, cols);
}

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows)
    v.emplace_back(r);
  return make_matrix(v);
}

IntMatrix make_matrix(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("make_matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix diagonal_matrix(const std::vector<Int>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

bool is_zero(const IntMatrix& a) {
  for (const Int& x : a.data())
    if (x != 0)
      return false;
  return true;
}

bool is_identity(const IntMatrix& a) {
  if (a.rows() != a.cols())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

IntMatrix negate(IntMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a(i, j) = -a(i, j);
  return a;
}

IntMatrix power(const IntMatrix& a, std::size_t e) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("power: matrix must be square");
  IntMatrix result = identity_matrix(a.rows());
  IntMatrix base = a;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<IndexSet> subsets(int n, int j) {
  std::vector<IndexSet> out;
  if (j < 0 || j > n)
    return out;
  IndexSet cur(j);
  for (int i = 0; i < j; ++i)
    cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = j - 1;
    while (i >= 0 && cur[i] == n - j + i)
      --i;
    if (i < 0)
      break;
    ++cur[i];
    for (int k = i + 1; k < j; ++k)
      cur[k] = cur[k - 1] + 1;
  }
  return out;
}

std::size_t binomial(int n, int j) {
  if (j < 0 || j > n)
    return 0;
  std::size_t r = 1;
  for (int i = 1; i <= j; ++i)
    r = r * static_cast<std::size_t>(n - j + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t subset_rank(int n, const IndexSet& s) {
  // count subsets that precede s lexicographically
  std::size_t r = 0;
  int j = static_cast<int>(s.size());
  int prev = -1;
  for (int pos = 0; pos < j; ++pos) {
    for (int v = prev + 1; v < s[pos]; ++v)
      r += binomial(n - v - 1, j - pos - 1);
    prev = s[pos];
  }
  return r;
}

} // namespace crystcoh
