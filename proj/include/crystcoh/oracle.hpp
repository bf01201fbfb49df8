// Brute-force H^*(Gamma, Z) for Gamma = L x| Z/N from the total complex of
// the 2-periodic resolution of Z/N and the Koszul resolution over Z[L],
// glued by a verified compatible action.

#ifndef CRYSTCOH_ORACLE_HPP_
#define CRYSTCOH_ORACLE_HPP_

#include "abelian_group.hpp"
#include "exterior.hpp"
#include "koszul.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace crystcoh {

/// Element of Z[Gamma]: sum of c * x^e * t^a with 0 <= a < N.
class GammaElement {
public:
  using Key = std::pair<Monomial, std::int64_t>;

  GammaElement() = default;  // zero
  static GammaElement term(Monomial e, std::int64_t a, const Int& c = 1);
  /// alpha * t^a for alpha in Z[L].
  static GammaElement from_group_ring(const GroupRingElement& alpha, std::int64_t a);

  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GammaElement& operator+=(const GammaElement& o);
  bool operator==(const GammaElement& o) const { return terms_ == o.terms_; }
  Int augmentation() const;

private:
  friend class GammaRing;
  void add_term(const Monomial& m, std::int64_t a, const Int& c);
  std::map<Key, Int> terms_;
};

/// Multiplication (x^e t^a)(x^f t^b) = x^{e + T^a f} t^{a+b}, reduced mod N.
class GammaRing {
public:
  explicit GammaRing(const Lattice& L);
  GammaElement mul(const GammaElement& a, const GammaElement& b) const;
  std::int64_t order() const { return N_; }

private:
  std::int64_t N_;
  std::vector<IntMatrix> powers_;  // T^a, 0 <= a < N
};

using GammaMatrix = Matrix<GammaElement>;

/// Free generator f_i (x) a_J of total degree i + |J|.
struct ResolutionGenerator {
  int i = 0;
  IndexSet J;
};

struct TwistedResolution {
  Lattice lattice;
  int dmax = 0;
  /// basis[k] for 0 <= k <= dmax.
  std::vector<std::vector<ResolutionGenerator>> basis;
  /// D[k]: F_k -> F_{k-1} for 1 <= k <= dmax (D[0] unused); D[k](target,
  /// source) is the coefficient of the target generator in D(source).
  std::vector<GammaMatrix> D;
};

/// Throws std::invalid_argument if tau fails verification and
/// InternalInconsistency naming the degree if D^2 != 0.
TwistedResolution twisted_resolution(const Lattice& L, const TauAction& tau, int dmax);

/// H^0..H^kmax from the augmented cochain complex Hom_Gamma(F, Z).
std::vector<AbelianGroup> brute_force_cohomology(const Lattice& L,
                                                 const TauAction& tau, int kmax);

struct ComparisonRow {
  int k = 0;
  AbelianGroup formula;
  AbelianGroup oracle;
  bool match = false;
  /// (i, j, H^i(G, Lambda^j L*)) on the antidiagonal i + j = k.
  std::vector<std::tuple<int, int, AbelianGroup>> e2_terms;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  bool all_match() const;
  std::string render() const;
};

ComparisonReport compare(const Lattice& L, const TauAction& tau, int kmax);

} // namespace crystcoh

#endif
