#include "crystcoh/lattice.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/exterior.hpp"

#include <numeric>

namespace crystcoh {

std::vector<std::int64_t> divisors(std::int64_t N) {
  std::vector<std::int64_t> d;
  for (std::int64_t k = 1; k <= N; ++k)
    if (N % k == 0)
      d.push_back(k);
  return d;
}

LatticeReport validate_lattice(const Lattice& L) {
  if (L.T.rows() != L.T.cols())
    throw InvalidLattice("lattice matrix must be square");
  if (L.N < 1)
    throw InvalidLattice("declared group order must be >= 1");
  LatticeReport rep;
  rep.det = determinant(L.T);
  if (abs(rep.det) != 1)
    throw InvalidLattice("det T = " + rep.det.get_str() + ", expected +-1");
  if (!is_identity(power(L.T, static_cast<std::size_t>(L.N))))
    throw InvalidLattice("T^" + std::to_string(L.N) + " != I" +
                         (L.label.empty() ? "" : " for " + L.label));
  for (std::int64_t d : divisors(L.N))
    if (is_identity(power(L.T, static_cast<std::size_t>(d)))) {
      rep.order = d;
      break;
    }
  rep.faithful = rep.order == L.N;
  return rep;
}

Lattice dual(const Lattice& L) {
  validate_lattice(L);
  // T^-1 = T^(N-1) for a lattice of finite order
  IntMatrix inv = power(L.T, static_cast<std::size_t>(L.N - 1));
  return Lattice(inv.transpose(), L.N, L.label.empty() ? "" : L.label + "*");
}

Lattice exterior_power(const Lattice& L, int j) {
  if (j < 0 || j > L.rank())
    throw std::invalid_argument("exterior_power: degree " + std::to_string(j) +
                                " outside [0, " + std::to_string(L.rank()) + "]");
  return Lattice(compound(L.T, j, Int(1)), L.N,
                 L.label.empty() ? "" : "L" + std::to_string(j) + "(" + L.label + ")");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.N != b.N)
    throw std::invalid_argument("direct_sum: declared orders differ (" +
                                std::to_string(a.N) + " vs " +
                                std::to_string(b.N) + "); lift explicitly");
  std::string label = a.label.empty() || b.label.empty()
                        ? std::string{} : a.label + "+" + b.label;
  return Lattice(block_diagonal(a.T, b.T), a.N, label);
}

Lattice lift(const Lattice& L, std::int64_t M) {
  if (M < 1 || M % L.N != 0)
    throw std::invalid_argument("lift: " + std::to_string(L.N) +
                                " does not divide " + std::to_string(M));
  return Lattice(L.T, M, L.label);
}

std::int64_t p_part(std::int64_t N, std::int64_t p) {
  std::int64_t q = 1;
  while (N % p == 0) {
    N /= p;
    q *= p;
  }
  return q;
}

Lattice restrict_to_sylow(const Lattice& L, std::int64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("restrict_to_sylow: " + std::to_string(p) +
                                " is not prime");
  if (L.N % p != 0)
    throw std::invalid_argument("restrict_to_sylow: " + std::to_string(p) +
                                " does not divide " + std::to_string(L.N));
  std::int64_t q = p_part(L.N, p);
  Lattice r(power(L.T, static_cast<std::size_t>(L.N / q)), q, L.label);
  if (!r.label.empty())
    r.label += "|" + std::to_string(q);
  return r;
}

PTypeDecomposition decompose_p_type(const Lattice& L) {
  if (!is_prime(L.N))
    throw std::invalid_argument("decompose_p_type: order " +
                                std::to_string(L.N) + " is not prime");
  validate_lattice(L);
  PTypeDecomposition d;
  d.p = L.N;
  d.t = static_cast<int>(cyclic_cohomology(L, 1).num_invariant_factors());
  d.r = static_cast<int>(cyclic_cohomology(L, 2).num_invariant_factors());
  std::int64_t rest = L.rank() - d.r - d.t * (d.p - 1);
  if (rest < 0 || rest % d.p != 0)
    throw InternalInconsistency(
      "decompose_p_type: rank " + std::to_string(L.rank()) +
      " is not r + s*p + t*(p-1) with r=" + std::to_string(d.r) +
      ", t=" + std::to_string(d.t) + ", p=" + std::to_string(d.p));
  d.s = static_cast<int>(rest / d.p);
  return d;
}

std::optional<std::vector<int>> as_permutation(const IntMatrix& T) {
  if (T.rows() != T.cols())
    return std::nullopt;
  const std::size_t n = T.rows();
  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      if (T(r, c) == 0)
        continue;
      if (T(r, c) != 1 || perm[c] != -1 || hit[r])
        return std::nullopt;
      perm[c] = static_cast<int>(r);
      hit[r] = true;
    }
  for (int v : perm)
    if (v < 0)
      return std::nullopt;
  return perm;
}

} // namespace crystcoh
