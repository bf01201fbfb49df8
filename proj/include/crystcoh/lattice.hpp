// ZG-lattices for a cyclic group G = Z/N.
//
// A lattice is Z^n together with the matrix T of a fixed generator t of G.
// Matrices act on column vectors: t . e_i = T e_i, so in multiplicative
// notation x_i^t = prod_k x_k^{T(k, i)}.

#ifndef CRYSTCOH_LATTICE_HPP_
#define CRYSTCOH_LATTICE_HPP_

#include "matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crystcoh {

struct Lattice {
  IntMatrix T;
  std::int64_t N = 1;  // declared order of G
  std::string label;

  Lattice() = default;
  Lattice(IntMatrix generator, std::int64_t order, std::string name = {})
    : T(std::move(generator)), N(order), label(std::move(name)) {}

  int rank() const { return static_cast<int>(T.rows()); }

  /// Same action and declared order (labels are ignored).
  bool operator==(const Lattice& o) const { return N == o.N && T == o.T; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
};

class InvalidLattice : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct LatticeReport {
  std::int64_t order = 1;  // exact multiplicative order of T, divides N
  Int det;                 // +-1
  bool faithful = true;    // order == N
};

/// Checks T^N = I and det T = +-1; throws InvalidLattice otherwise.
LatticeReport validate_lattice(const Lattice& L);

/// Hom(L, Z) with action transpose(T^-1).
Lattice dual(const Lattice& L);

/// j-th exterior power: the j-th compound matrix of T.
Lattice exterior_power(const Lattice& L, int j);

/// Block-diagonal sum; declared orders must agree (use lift() first).
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// The same action viewed as a Z/M-lattice through Z/M -> Z/N; requires N | M.
Lattice lift(const Lattice& L, std::int64_t M);

/// Restriction to the Sylow p-subgroup: generator T^(N/p^a), order p^a.
Lattice restrict_to_sylow(const Lattice& L, std::int64_t p);

/// p-part p^a of N.
std::int64_t p_part(std::int64_t N, std::int64_t p);

/// Type (r, s, t): L is Z_(p)-equivalent to Z^r + (ZG)^s + (IG)^t.
struct PTypeDecomposition {
  int r = 0;
  int s = 0;
  int t = 0;
  std::int64_t p = 0;

  bool operator==(const PTypeDecomposition& o) const {
    return r == o.r && s == o.s && t == o.t && p == o.p;
  }
};

/// Requires N prime. Read off from H^1 and H^2 of Z/p with coefficients in L.
PTypeDecomposition decompose_p_type(const Lattice& L);

/// Orders of the cyclic group dividing N, ascending.
std::vector<std::int64_t> divisors(std::int64_t N);

/// Unimodular P with P^-1 T P = A (an isomorphism from the lattice with matrix
/// A onto the one with matrix T), found by a bounded search in the integer
/// solution lattice of T P = P A. nullopt if none is found within the bound.
std::optional<IntMatrix> find_conjugator(const IntMatrix& T, const IntMatrix& A,
                                         int max_coeff = 2);

/// If T is a permutation matrix (T e_i = e_{perm[i]}), the permutation.
std::optional<std::vector<int>> as_permutation(const IntMatrix& T);

} // namespace crystcoh

#endif
