#include "crystcoh/lattice.hpp"
#include "crystcoh/smith.hpp"

#include <cmath>

namespace crystcoh {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

// Greedy pairwise size reduction; keeps the lattice, shortens the basis.
void size_reduce(std::vector<Vec>& basis) {
  for (int round = 0; round < 50; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j)
          continue;
        std::int64_t nj = dot(basis[j], basis[j]);
        if (nj == 0)
          continue;
        auto q = static_cast<std::int64_t>(
          std::llround(static_cast<double>(dot(basis[i], basis[j])) /
                       static_cast<double>(nj)));
        if (q == 0)
          continue;
        Vec cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k)
          cand[k] -= q * basis[j][k];
        if (dot(cand, cand) < dot(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
    if (!changed)
      break;
  }
}

// Exact determinant of a small matrix with 128-bit Bareiss elimination.
__int128 small_det(std::vector<__int128> m, std::size_t n) {
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(m[k * n + c], m[p * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return sign * m[n * n - 1];
}

} // namespace

std::optional<IntMatrix> find_conjugator(const IntMatrix& T, const IntMatrix& A,
                                         int max_coeff) {
  const std::size_t n = T.rows();
  if (T.cols() != n || A.rows() != n || A.cols() != n)
    throw std::invalid_argument("find_conjugator: shape mismatch");
  if (n == 0)
    return IntMatrix();
  // unknown P(r, c) is variable r*n + c; row (r, c) encodes (TP - PA)(r, c)
  IntMatrix system(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) {
        system(r * n + c, k * n + c) += T(r, k);
        system(r * n + c, r * n + k) -= A(k, c);
      }
  IntMatrix ker = kernel_basis(system);
  std::vector<Vec> basis(ker.cols(), Vec(n * n));
  for (std::size_t b = 0; b < ker.cols(); ++b)
    for (std::size_t v = 0; v < n * n; ++v) {
      if (!ker(v, b).fits_slong_p())
        return std::nullopt;
      basis[b][v] = ker(v, b).get_si();
    }
  size_reduce(basis);
  const std::size_t m = basis.size();
  if (m == 0)
    return std::nullopt;

  auto accept = [&](const Vec& p) -> std::optional<IntMatrix> {
    std::vector<__int128> w(p.begin(), p.end());
    __int128 d = small_det(w, n);
    if (d != 1 && d != -1)
      return std::nullopt;
    IntMatrix P(n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      P(i / n, i % n) = static_cast<long>(p[i]);
    if (T * P != P * A || abs(determinant(P)) != 1)
      return std::nullopt;
    return P;
  };

  std::size_t budget = 4'000'000;
  // sparse combinations first: choose the support, then the coefficients
  for (int bound = 1; bound <= max_coeff; ++bound)
    for (std::size_t support = 1; support <= m; ++support) {
      std::vector<std::size_t> pos(support);
      for (std::size_t i = 0; i < support; ++i)
        pos[i] = i;
      for (;;) {
        std::vector<int> coeff(support, -bound);
        for (;;) {
          bool zero = false, at_bound = false;
          for (int c : coeff) {
            if (c == 0) zero = true;
            if (c == bound || c == -bound) at_bound = true;
          }
          if (!zero && at_bound) {
            if (budget-- == 0)
              return std::nullopt;
            Vec p(n * n, 0);
            for (std::size_t i = 0; i < support; ++i)
              for (std::size_t v = 0; v < n * n; ++v)
                p[v] += coeff[i] * basis[pos[i]][v];
            if (auto P = accept(p))
              return P;
          }
          std::size_t k = 0;
          while (k < support && coeff[k] == bound) {
            coeff[k] = -bound;
            ++k;
          }
          if (k == support)
            break;
          ++coeff[k];
        }
        // next support set
        std::size_t i = support;
        while (i > 0 && pos[i - 1] == m - support + i - 1)
          --i;
        if (i == 0)
          break;
        ++pos[i - 1];
        for (std::size_t k = i; k < support; ++k)
          pos[k] = pos[k - 1] + 1;
      }
    }
  return std::nullopt;
}

} // namespace crystcoh
