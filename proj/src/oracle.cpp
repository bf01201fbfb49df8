#include "crystcoh/oracle.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/exterior.hpp"
#include "crystcoh/smith.hpp"

#include <sstream>

namespace crystcoh {

GammaElement GammaElement::term(Monomial e, std::int64_t a, const Int& c) {
  GammaElement g;
  g.add_term(e, a, c);
  return g;
}

GammaElement GammaElement::from_group_ring(const GroupRingElement& alpha,
                                           std::int64_t a) {
  GammaElement g;
  for (const auto& [m, c] : alpha.terms())
    g.add_term(m, a, c);
  return g;
}

void GammaElement::add_term(const Monomial& m, std::int64_t a, const Int& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(Key{m, a}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GammaElement& GammaElement::operator+=(const GammaElement& o) {
  for (const auto& [k, c] : o.terms_)
    add_term(k.first, k.second, c);
  return *this;
}

Int GammaElement::augmentation() const {
  Int s = 0;
  for (const auto& [k, c] : terms_)
    s += c;
  return s;
}

GammaRing::GammaRing(const Lattice& L) : N_(L.N) {
  IntMatrix p = identity_matrix(L.T.rows());
  for (std::int64_t a = 0; a < N_; ++a) {
    powers_.push_back(p);
    p = L.T * p;
  }
}

GammaElement GammaRing::mul(const GammaElement& x, const GammaElement& y) const {
  GammaElement r;
  for (const auto& [kx, cx] : x.terms_) {
    const IntMatrix& Ta = powers_[static_cast<std::size_t>(kx.second)];
    const std::size_t n = Ta.rows();
    for (const auto& [ky, cy] : y.terms_) {
      Monomial m = kx.first;
      for (std::size_t row = 0; row < n; ++row) {
        std::int64_t s = 0;
        for (std::size_t col = 0; col < n; ++col)
          s += Ta(row, col).get_si() * ky.first[col];
        m[row] += s;
      }
      r.add_term(m, (kx.second + ky.second) % N_, cx * cy);
    }
  }
  return r;
}

namespace {

// Composite of F_k -> F_{k-1} -> F_{k-2} for left-module maps written with
// coefficients on the left: (second o first)(g, b) = sum_a first(a, b) second(g, a).
GammaMatrix compose(const GammaRing& ring, const GammaMatrix& second,
                    const GammaMatrix& first) {
  GammaMatrix out(second.rows(), first.cols());
  for (std::size_t b = 0; b < first.cols(); ++b)
    for (std::size_t a = 0; a < first.rows(); ++a) {
      if (first(a, b).is_zero())
        continue;
      for (std::size_t g = 0; g < second.rows(); ++g)
        if (!second(g, a).is_zero())
          out(g, b) += ring.mul(first(a, b), second(g, a));
    }
  return out;
}

IntMatrix augment(const GammaMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).augmentation();
  return r;
}

} // namespace

TwistedResolution twisted_resolution(const Lattice& L, const TauAction& tau,
                                     int dmax) {
  if (dmax < 0)
    throw std::invalid_argument("twisted_resolution: negative degree bound");
  const int n = L.rank();
  CompatibilityReport check = verify_compatibility(L, tau, n);
  if (!check.passed)
    throw std::invalid_argument("twisted_resolution: tau is not compatible (axiom " +
                                check.failed_axiom + ", degree " +
                                std::to_string(check.degree) + ": " + check.witness +
                                ")");
  TauAction t = tau;
  t.lattice = L;
  const std::int64_t N = L.N;
  GammaRing ring(L);

  // inverse_power[j][m] = tau(t)^{-m} = tau(t)^{N-m} on K_j
  std::vector<std::vector<GrMatrix>> inverse_power(static_cast<std::size_t>(n) + 1);
  std::vector<GrMatrix> koszul(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    if (j >= 1)
      koszul[static_cast<std::size_t>(j)] = koszul_differential(n, j);
    GrMatrix step = extend_tau(t, j);
    std::vector<GrMatrix> pw{gr_identity(step.rows(), n)};
    for (std::int64_t m = 1; m < N; ++m)
      pw.push_back(step * twist(pw.back(), L.T));
    auto& inv = inverse_power[static_cast<std::size_t>(j)];
    for (std::int64_t m = 0; m < N; ++m)
      inv.push_back(pw[static_cast<std::size_t>((N - m) % N)]);
  }

  TwistedResolution res;
  res.lattice = L;
  res.dmax = dmax;
  // offset[k][j]: first index of the (k - j, J) block in basis[k]
  std::vector<std::vector<std::size_t>> offset;
  for (int k = 0; k <= dmax; ++k) {
    std::vector<ResolutionGenerator> gens;
    std::vector<std::size_t> off;
    for (int j = 0; j <= std::min(k, n); ++j) {
      off.push_back(gens.size());
      for (IndexSet& J : subsets(n, j))
        gens.push_back({k - j, std::move(J)});
    }
    res.basis.push_back(std::move(gens));
    offset.push_back(std::move(off));
  }
  auto index = [&](int k, int i, const IndexSet& J) {
    (void)i;
    return offset[static_cast<std::size_t>(k)][J.size()] +
           subset_rank(n, J);
  };

  res.D.resize(static_cast<std::size_t>(dmax) + 1);
  for (int k = 1; k <= dmax; ++k) {
    const auto& src = res.basis[static_cast<std::size_t>(k)];
    GammaMatrix D(res.basis[static_cast<std::size_t>(k) - 1].size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const int i = src[col].i;
      const IndexSet& J = src[col].J;
      const int j = static_cast<int>(J.size());
      const std::size_t jcol = subset_rank(n, J);
      if (j >= 1) {
        const GrMatrix& d = koszul[static_cast<std::size_t>(j)];
        std::vector<IndexSet> faces = subsets(n, j - 1);
        for (std::size_t r = 0; r < faces.size(); ++r) {
          if (d(r, jcol).is_zero())
            continue;
          GroupRingElement c = i % 2 == 0 ? d(r, jcol) : -d(r, jcol);
          D(index(k - 1, i, faces[r]), col) += GammaElement::from_group_ring(c, 0);
        }
      }
      if (i >= 1) {
        const auto& inv = inverse_power[static_cast<std::size_t>(j)];
        std::vector<IndexSet> same = subsets(n, j);
        for (std::size_t r = 0; r < same.size(); ++r) {
          GammaElement e;
          if (i % 2 == 1) {
            // t . (tau^-1 a_J) - a_J
            e = ring.mul(GammaElement::term(Monomial(static_cast<std::size_t>(n), 0), 1 % N),
                         GammaElement::from_group_ring(inv[static_cast<std::size_t>(1 % N)](r, jcol), 0));
            if (r == jcol)
              e += GammaElement::term(Monomial(static_cast<std::size_t>(n), 0), 0, -1);
          } else {
            // sum_m t^m . (tau^-m a_J)
            for (std::int64_t m = 0; m < N; ++m)
              e += ring.mul(GammaElement::term(Monomial(static_cast<std::size_t>(n), 0), m),
                            GammaElement::from_group_ring(inv[static_cast<std::size_t>(m)](r, jcol), 0));
          }
          if (!e.is_zero())
            D(index(k - 1, i - 1, same[r]), col) += e;
        }
      }
    }
    res.D[static_cast<std::size_t>(k)] = std::move(D);
  }

  for (int k = 2; k <= dmax; ++k) {
    GammaMatrix dd = compose(ring, res.D[static_cast<std::size_t>(k) - 1],
                             res.D[static_cast<std::size_t>(k)]);
    for (std::size_t b = 0; b < dd.cols(); ++b)
      for (std::size_t g = 0; g < dd.rows(); ++g)
        if (!dd(g, b).is_zero()) {
          const auto& s = res.basis[static_cast<std::size_t>(k)][b];
          const auto& t2 = res.basis[static_cast<std::size_t>(k) - 2][g];
          throw InternalInconsistency(
            "twisted resolution: D^2 != 0 from bidegree (" + std::to_string(s.i) + "," +
            std::to_string(s.J.size()) + ") to bidegree (" + std::to_string(t2.i) +
            "," + std::to_string(t2.J.size()) + ") in total degree " +
            std::to_string(k));
        }
  }
  return res;
}

std::vector<AbelianGroup> brute_force_cohomology(const Lattice& L,
                                                 const TauAction& tau, int kmax) {
  if (kmax < 0)
    throw std::invalid_argument("brute_force_cohomology: negative kmax");
  TwistedResolution res = twisted_resolution(L, tau, kmax + 1);
  // delta^k = transpose of the augmented D_{k+1}
  std::vector<IntMatrix> delta;
  for (int k = 0; k <= kmax; ++k)
    delta.push_back(augment(res.D[static_cast<std::size_t>(k) + 1]).transpose());
  std::vector<AbelianGroup> out;
  for (int k = 0; k <= kmax; ++k) {
    IntMatrix in = k == 0 ? IntMatrix(res.basis[0].size(), 0)
                          : delta[static_cast<std::size_t>(k) - 1];
    out.push_back(homology_at(in, delta[static_cast<std::size_t>(k)]));
  }
  return out;
}

bool ComparisonReport::all_match() const {
  for (const auto& r : rows)
    if (!r.match)
      return false;
  return true;
}

std::string ComparisonReport::render() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "H^" << r.k << ": formula " << r.formula.to_string() << ", oracle "
       << r.oracle.to_string() << (r.match ? "  match" : "  MISMATCH") << '\n';
    if (!r.match)
      for (const auto& [i, j, g] : r.e2_terms)
        os << "    E2(" << i << "," << j << ") = " << g.to_string() << '\n';
  }
  return os.str();
}

ComparisonReport compare(const Lattice& L, const TauAction& tau, int kmax) {
  std::vector<AbelianGroup> oracle = brute_force_cohomology(L, tau, kmax);
  E2Page page = e2_page(L, kmax);
  ComparisonReport rep;
  for (int k = 0; k <= kmax; ++k) {
    ComparisonRow row;
    row.k = k;
    row.formula = page.antidiagonal(k);
    row.oracle = oracle[static_cast<std::size_t>(k)];
    row.match = row.formula == row.oracle;
    for (int j = 0; j <= std::min(k, page.n); ++j)
      row.e2_terms.emplace_back(k - j, j, page.at(k - j, j));
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace crystcoh
