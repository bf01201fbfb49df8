// The Koszul resolution K(x_1 - 1, ..., x_n - 1) of Z over Z[L] and
// compatible actions of G = Z/N on it.
//
// K_j is free over Z[L] on a_J, J a j-subset in lexicographic order. An action
// tau(t) is determined by its degree-1 matrix C (column i holds tau(t)(a_i))
// and extends multiplicatively, semilinearly over the twist x^e -> x^{Te}:
//   tau(t)(alpha * u) = alpha^t * tau(t)(u).

#ifndef CRYSTCOH_KOSZUL_HPP_
#define CRYSTCOH_KOSZUL_HPP_

#include "group_ring.hpp"
#include "lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystcoh {

/// d: K_j -> K_{j-1}, entries +-(x_i - 1); 1 <= j <= n.
GrMatrix koszul_differential(int n, int j);

struct TauAction {
  Lattice lattice;  // the lattice this action claims compatibility with
  GrMatrix images;  // images(k, i) = coefficient of a_k in tau(t)(a_i)

  int rank() const { return static_cast<int>(images.rows()); }
};

/// tau(t)(a_i) = a_{perm[i]} for the permutation lattice T e_i = e_{perm[i]}.
TauAction tau_permutation(const std::vector<int>& perm, std::int64_t N);
/// Same, read off a lattice whose matrix is a permutation matrix.
TauAction tau_permutation(const Lattice& L);

/// Action on the Koszul complex of the augmentation ideal (matrix xi_1, rank
/// N-1), with u = x_{N-1}^{-1}:
///   tau(t)(a_1) = -u a_{N-1},  tau(t)(a_k) = -u (a_{N-1} - a_{k-1}).
TauAction tau_ig(std::int64_t N);

/// Action on K(L1) (x) K(L2) = K(L1 + L2), generators concatenated.
TauAction tau_direct_sum(const TauAction& a, const TauAction& b);

/// Matrix of tau(t) on K_j (wedge products of the degree-1 images).
GrMatrix extend_tau(const TauAction& tau, int j);

/// Matrix of tau(t)^m on K_j, composing semilinearly.
GrMatrix tau_power(const TauAction& tau, int j, std::int64_t m);

struct CompatibilityReport {
  bool passed = false;
  /// "a" d tau(a_i) = (d a_i)^t, "b" tau^N = 1, "c" chain map,
  /// "d" augmentation; empty when passed.
  std::string failed_axiom;
  int degree = 0;
  std::string witness;
};

CompatibilityReport verify_compatibility(const Lattice& L, const TauAction& tau,
                                         int jmax);

/// A verified-by-construction action together with the lattice it serves.
/// tau.lattice.T = base_change^-1 * original.T * base_change, where original
/// is the catalog lattice (restricted to its Sylow p-subgroup when prime > 0).
struct CompatiblePreset {
  std::string name;
  std::int64_t prime = 0;
  Lattice original;
  IntMatrix base_change;
  TauAction tau;
};

/// Known actions: sign, z2_1, rho1..rho5, rho7, ig(N), regular(N),
/// trivial(n), z3_2, z4_2, z4_3, z7_6, z8_4, z8_6, z12_4_sylow2 and
/// <entry>_sylow<p> for catalog entries whose Sylow p-part has prime order.
CompatiblePreset tau_preset(const std::string& name);

/// A compatible action for the Sylow p-restriction of L when that restriction
/// is a permutation module or has prime order (through the (r,s,t) type and
/// an explicit isomorphism to Z^r + ZG^s + IG^t).
std::optional<CompatiblePreset> local_compatible_action(const Lattice& L,
                                                        std::int64_t p);

} // namespace crystcoh

#endif
