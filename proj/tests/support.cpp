#include "support.hpp"

#include "crystcoh/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace testing {

using namespace crystcoh;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(rng, lo, hi);
  return m;
}

namespace {

// P and P^-1 built from the same elementary steps.
std::pair<IntMatrix, IntMatrix> unimodular_pair(Rng& rng, std::size_t n, int steps) {
  IntMatrix P = identity_matrix(n), Pinv = identity_matrix(n);
  if (n == 0)
    return {P, Pinv};
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i == j) {
      // negate column i of P and row i of P^-1
      for (std::size_t r = 0; r < n; ++r) {
        P(r, i) = -P(r, i);
        Pinv(i, r) = -Pinv(i, r);
      }
      continue;
    }
    long c = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
    // P <- P (I + c e_ij): column j += c column i
    for (std::size_t r = 0; r < n; ++r)
      P(r, j) += c * P(r, i);
    // P^-1 <- (I - c e_ij) P^-1: row i -= c row j
    for (std::size_t r = 0; r < n; ++r)
      Pinv(i, r) -= c * Pinv(j, r);
  }
  return {P, Pinv};
}

} // namespace

IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps) {
  return unimodular_pair(rng, n, steps).first;
}

Lattice random_conjugate(Rng& rng, const Lattice& L, int steps) {
  auto [P, Pinv] = unimodular_pair(rng, L.T.rows(), steps);
  return Lattice(Pinv * L.T * P, L.N, L.label);
}

Lattice random_finite_order(Rng& rng, std::int64_t N, int max_rank) {
  std::vector<std::int64_t> divs = divisors(N);
  Lattice acc;
  bool have = false;
  int rank = 0;
  for (int attempt = 0; attempt < 12 && rank < max_rank; ++attempt) {
    std::int64_t d = divs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(divs.size()) - 1))];
    Lattice block;
    switch (uniform(rng, 0, 3)) {
    case 0: block = trivial_lattice(1, N); break;
    case 1:
      if (N % 2 != 0)
        continue;
      block = Lattice(make_matrix({{-1}}), N);
      break;
    case 2: block = regular_module(d); break;
    default:
      if (d < 2)
        continue;
      block = augmentation_ideal(d);
    }
    if (rank + block.rank() > max_rank)
      continue;
    block = lift(block, N);
    acc = have ? direct_sum(acc, block) : block;
    have = true;
    rank += block.rank();
  }
  if (!have)
    acc = trivial_lattice(1, N);
  return random_conjugate(rng, acc);
}

void random_complex(Rng& rng, std::size_t a, std::size_t b, std::size_t c,
                    IntMatrix& d_in, IntMatrix& d_out) {
  auto [W, Winv] = unimodular_pair(rng, b, 10);
  std::size_t r = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(b)));
  IntMatrix X(b, a), Y(c, b);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a; ++j)
      X(i, j) = uniform(rng, -4, 4) * (uniform(rng, 0, 2) ? 1 : 3);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = r; j < b; ++j)
      Y(i, j) = uniform(rng, -4, 4);
  d_in = W * X;
  d_out = Y * Winv;
}

std::size_t rational_rank(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = a(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k)
        m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  if (k > n)
    return;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
  }
}

} // namespace

std::vector<Int> determinantal_invariants(const IntMatrix& a) {
  const std::size_t m = std::min(a.rows(), a.cols());
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::vector<int>> rs, cs;
    combinations(static_cast<int>(a.rows()), static_cast<int>(k), rs);
    combinations(static_cast<int>(a.cols()), static_cast<int>(k), cs);
    Int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub(i, j) = a(static_cast<std::size_t>(r[i]), static_cast<std::size_t>(c[j]));
        g = gcd(g, determinant(sub));
      }
    out.push_back(prev == 0 ? Int(0) : Int(g / prev));
    prev = g;
  }
  return out;
}

AbelianGroup reference_homology(const IntMatrix& d_in, const IntMatrix& d_out) {
  const std::size_t b = d_in.rows();
  const std::size_t free = b - rational_rank(d_out) - rational_rank(d_in);
  std::vector<Int> torsion;
  for (const Int& s : determinantal_invariants(d_in))
    if (s != 0 && abs(s) != 1)
      torsion.push_back(abs(s));
  return AbelianGroup(free, torsion);
}

AbelianGroup trivial_module_cohomology(std::int64_t N, int i) {
  if (i == 0)
    return AbelianGroup::free(1);
  if (i % 2 == 1)
    return {};
  return AbelianGroup::cyclic(Int(static_cast<long>(N)));
}

} // namespace testing
