// Smith normal form, integer kernels, cokernels and homology.

#ifndef CRYSTCOH_SMITH_HPP_
#define CRYSTCOH_SMITH_HPP_

#include "abelian_group.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace crystcoh {

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... and the
/// zero diagonal entries last.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;  // kept because homology needs coordinates in V's basis
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal of the Smith form (d1 | d2 | ...), computed without
/// the transforms.
std::vector<Int> invariant_factors(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

/// Saturated basis of {x : A x = 0}, one column per basis vector.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows / (column span of A).
AbelianGroup cokernel_invariants(const IntMatrix& a);

/// Thrown when a sequence of matrices claimed to be a complex is not one.
class NotAComplex : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// ker(d_out) / im(d_in) for Z^a --d_in--> Z^b --d_out--> Z^c.
/// d_in is b x a, d_out is c x b; throws NotAComplex if d_out * d_in != 0.
AbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out);

/// Inverse of a matrix with determinant +-1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

} // namespace crystcoh

#endif
