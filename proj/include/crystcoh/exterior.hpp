// Exterior-algebra bases and compound matrices.
//
// The degree-j basis is indexed by j-element subsets of {0..n-1} in
// lexicographic order. Both the lattice exterior powers and the Koszul
// complex use this ordering, so their matrices are directly comparable.

#ifndef CRYSTCOH_EXTERIOR_HPP_
#define CRYSTCOH_EXTERIOR_HPP_

#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace crystcoh {

using IndexSet = std::vector<int>;

/// All j-subsets of {0..n-1}, lexicographically ordered.
std::vector<IndexSet> subsets(int n, int j);

std::size_t binomial(int n, int j);

/// Position of a sorted subset in subsets(n, subset.size()).
std::size_t subset_rank(int n, const IndexSet& subset);

/// j-th compound of a square matrix over a commutative ring: entry (I, J) is
/// the coefficient of e_I in (A e_{J1}) ^ ... ^ (A e_{Jj}), i.e. the minor
/// det A[I, J]. The 0-th compound is the 1x1 matrix [one].
template<typename R>
Matrix<R> compound(const Matrix<R>& a, int j, const R& one) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("compound: matrix must be square");
  int n = static_cast<int>(a.rows());
  if (j < 0 || j > n)
    throw std::invalid_argument("compound: degree out of range");
  std::vector<IndexSet> basis = subsets(n, j);
  Matrix<R> out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    // wedge the images of e_{J1}, ..., e_{Jj} one at a time
    std::map<IndexSet, R> acc{{IndexSet{}, one}};
    for (int src : basis[col]) {
      std::map<IndexSet, R> next;
      for (const auto& [set, coeff] : acc)
        for (int k = 0; k < n; ++k) {
          const R& entry = a(k, src);
          if (entry == R{})
            continue;
          int above = 0;
          bool repeated = false;
          for (int s : set) {
            if (s == k) repeated = true;
            if (s > k) ++above;
          }
          if (repeated)
            continue;
          IndexSet grown = set;
          grown.insert(std::lower_bound(grown.begin(), grown.end(), k), k);
          R term = coeff * entry;
          if (above % 2 == 1)
            term = -term;
          next[grown] += term;
        }
      acc = std::move(next);
    }
    for (const auto& [set, coeff] : acc)
      if (!(coeff == R{}))
        out(subset_rank(n, set), col) = coeff;
  }
  return out;
}

} // namespace crystcoh

#endif
