// Named lattices: the nine indecomposable Z/4-lattices, the companion-matrix
// indecomposables of the six-dimensional supersymmetric orbifolds,
// augmentation ideals, regular and trivial modules.

#ifndef CRYSTCOH_CATALOG_HPP_
#define CRYSTCOH_CATALOG_HPP_

#include "lattice.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystcoh {

enum class Coverage {
  Global,       // a compatible action for the whole group
  Local,        // compatible actions for every Sylow restriction
  Explicit,     // collapse known from a direct computation of this lattice alone
  Open,         // no compatible action known
};

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  std::string source;  // where the matrix comes from
  Coverage coverage = Coverage::Open;
  /// (prime, koszul preset name); prime 0 means a global action.
  std::vector<std::pair<std::int64_t, std::string>> presets;
  /// Orbifold indecomposable with no known (local) compatible action.
  bool flagged_uncovered = false;
};

/// theta with subdiagonal ones and last column v; v_1 must be +-1 and the
/// result must have order exactly N.
Lattice companion_from_v(std::int64_t N, const std::vector<long>& v);

/// The augmentation ideal of Z/N as the matrix xi_1 (rank N-1).
Lattice augmentation_ideal(std::int64_t N);
/// Cyclic permutation e_i -> e_{i+1 mod N}.
Lattice regular_module(std::int64_t N);
Lattice trivial_lattice(int n, std::int64_t N = 1);

/// Names accepted: rho1..rho9, ig(N) or igN, regular(N) or regularN,
/// trivial(n) or trivialN, sign, z2_1, z3_2, z4_2, z6_2, z4_3, z6_3, z6_4,
/// z8_4, z12_4, z6_5, z8_5, z7_6, z8_6, z12_6.
CatalogEntry preset(const std::string& name);

/// The fixed (non-parametric) names, in display order, plus the parametric
/// forms "ig(N)", "regular(N)", "trivial(n)".
std::vector<std::string> catalog_names();

/// A direct sum "name+name+..." of catalog entries, each lifted to the lcm of
/// the declared orders.
struct Assembly {
  Lattice lattice;
  std::vector<std::string> summands;
};
Assembly assemble(const std::string& expression);

/// Cyclotomic polynomial Phi_d, coefficients from the constant term up.
std::vector<Int> cyclotomic(std::int64_t d);

/// Exponents k (0 <= k < N) with eigenvalues zeta_N^k, with multiplicity,
/// from the multiplicity of each cyclotomic factor of the characteristic
/// polynomial.
std::vector<std::int64_t> eigenvalue_exponents(const Lattice& L);

struct CalabiYauReport {
  bool ok = false;
  std::vector<std::int64_t> exponents;
  std::optional<std::array<std::int64_t, 3>> selection;
  std::string diagnostic;
};

/// Rank-6 check: no eigenvalue 1, and one eigenvalue exponent from each
/// conjugate pair summing to 0 mod N.
CalabiYauReport calabi_yau_check(const Lattice& L);

} // namespace crystcoh

#endif
