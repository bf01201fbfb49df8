// Cohomology of Z/N with lattice coefficients and of Gamma = L x| Z/N.

#ifndef CRYSTCOH_COHOMOLOGY_HPP_
#define CRYSTCOH_COHOMOLOGY_HPP_

#include "abelian_group.hpp"
#include "lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystcoh {

/// H^i(Z/N, M) from the 2-periodic resolution
///   M --(A-I)--> M --Norm--> M --(A-I)--> M --Norm--> ...
AbelianGroup cyclic_cohomology(const Lattice& M, int i);

/// E_2 page of the extension: entry (i, j) = H^i(G, Lambda^j(L*)).
struct E2Page {
  int n = 0;
  std::int64_t N = 1;
  int kmax = 0;
  std::vector<std::vector<AbelianGroup>> rows;  // rows[j][i], 0 <= i <= kmax

  const AbelianGroup& at(int i, int j) const { return rows.at(j).at(i); }
  /// Direct sum of the antidiagonal i + j = k.
  AbelianGroup antidiagonal(int k) const;
};

E2Page e2_page(const Lattice& L, int kmax);

/// Catalog summand names a lattice was assembled from.
using Recipe = std::vector<std::string>;

struct Status {
  bool proved = false;
  std::string reason;  // the theorem used, or what is missing

  bool operator==(const Status& o) const {
    return proved == o.proved && reason == o.reason;
  }
};

/// Never upgrades a raw matrix of composite, non-square-free order.
Status classify_status(const Lattice& L, const std::optional<Recipe>& recipe = {});

struct CohomologyResult {
  std::vector<AbelianGroup> groups;  // degrees 0..kmax
  Status status;
  int periodic_from = 0;  // groups are 2-periodic in k from this degree on
};

inline int default_kmax(const Lattice& L) { return L.rank() + 2; }

/// H^k(Gamma, Z) = sum_{i+j=k} H^i(G, Lambda^j(L*)).
CohomologyResult total_cohomology(const Lattice& L, int kmax,
                                  const std::optional<Recipe>& recipe = {});

/// Torsion-free case with prime holonomy: L = Nlat + Z,
///   H^k = H^0(Z/p, Lambda^k L*) + H^1(Z/p, Lambda^{k-1} Nlat*), 0 <= k <= rk L,
/// and zero above rk L.
CohomologyResult bieberbach_cohomology(const Lattice& Nlat, int kmax);

struct GerbeResult {
  AbelianGroup group;
  Status status;
};

/// Gb([T^n / G]) = H^3(Gamma, Z).
GerbeResult gerbe_group(const Lattice& L, const std::optional<Recipe>& recipe = {});

} // namespace crystcoh

#endif
