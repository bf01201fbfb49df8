// The integral group ring Z[L] of a free abelian group: Laurent polynomials
// in commuting variables x_1..x_n.

#ifndef CRYSTCOH_GROUP_RING_HPP_
#define CRYSTCOH_GROUP_RING_HPP_

#include "matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace crystcoh {

/// Exponent vector of x_1^{e_1} ... x_n^{e_n}.
using Monomial = std::vector<std::int64_t>;

class GroupRingElement {
public:
  GroupRingElement() = default;  // zero

  static GroupRingElement one(int n);
  static GroupRingElement monomial(Monomial exps, const Int& coeff = 1);
  /// x_i^power in n variables (i is 0-based).
  static GroupRingElement variable(int n, int i, std::int64_t power = 1);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator*(const Int& c) const;
  bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const GroupRingElement& o) const { return terms_ != o.terms_; }

  /// Sum of coefficients (every monomial maps to 1).
  Int augmentation() const;

  /// x^e -> x^{T e}: the action of t on Z[L] for the lattice matrix T.
  GroupRingElement twist(const IntMatrix& T) const;

  /// Re-embed into total_n variables, shifting indices by offset.
  GroupRingElement embed(int offset, int total_n) const;

  /// "-x4^-1 + 1"; variables are printed 1-based.
  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int> terms_;
};

using GrMatrix = Matrix<GroupRingElement>;

GrMatrix gr_identity(std::size_t size, int n);
/// Entrywise twist by the lattice matrix.
GrMatrix twist(const GrMatrix& m, const IntMatrix& T);
/// Entrywise augmentation.
IntMatrix augment(const GrMatrix& m);

} // namespace crystcoh

#endif
