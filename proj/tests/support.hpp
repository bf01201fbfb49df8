// Generators and independent reference computations shared by the tests.
// Nothing here calls the Smith normal form code.

#ifndef CRYSTCOH_TESTS_SUPPORT_HPP_
#define CRYSTCOH_TESTS_SUPPORT_HPP_

#include "crystcoh/abelian_group.hpp"
#include "crystcoh/lattice.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing {

using crystcoh::AbelianGroup;
using crystcoh::Int;
using crystcoh::IntMatrix;
using crystcoh::Lattice;

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Product of random elementary operations; det = +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 12);

/// P^-1 T P for a random unimodular P (computed by undoing the steps).
Lattice random_conjugate(Rng& rng, const Lattice& L, int steps = 8);

/// A random lattice of order N built as a block sum of trivial, sign (N even),
/// regular and augmentation-ideal blocks whose orders divide N, then
/// conjugated. Rank at most max_rank (> 0).
Lattice random_finite_order(Rng& rng, std::int64_t N, int max_rank);

/// Random complex Z^a --d_in--> Z^b --d_out--> Z^c (d_out d_in = 0).
void random_complex(Rng& rng, std::size_t a, std::size_t b, std::size_t c,
                    IntMatrix& d_in, IntMatrix& d_out);

/// Rank over Q by fraction-free elimination.
std::size_t rational_rank(const IntMatrix& a);

/// Invariant factors d_k / d_{k-1} from gcds of k x k minors (ones and
/// zeros included, length min(rows, cols)).
std::vector<Int> determinantal_invariants(const IntMatrix& a);

/// ker(d_out)/im(d_in): free rank from rational ranks, torsion from the
/// determinantal divisors of d_in (Z^b / ker d_out is free, so the torsion
/// of the homology is the torsion of coker d_in).
AbelianGroup reference_homology(const IntMatrix& d_in, const IntMatrix& d_out);

/// H^i(Z/N, Z) for the trivial module.
AbelianGroup trivial_module_cohomology(std::int64_t N, int i);

} // namespace testing

#endif
