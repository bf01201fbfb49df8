#include "crystcoh/cohomology.hpp"
#include "crystcoh/catalog.hpp"
#include "crystcoh/smith.hpp"

namespace crystcoh {

AbelianGroup cyclic_cohomology(const Lattice& M, int i) {
  if (i < 0)
    throw std::invalid_argument("cyclic_cohomology: negative degree");
  validate_lattice(M);
  const std::size_t n = M.T.rows();
  IntMatrix t_minus_1 = M.T - identity_matrix(n);
  if (i == 0)
    return homology_at(IntMatrix(n, 0), t_minus_1);
  IntMatrix norm(n, n);
  IntMatrix p = identity_matrix(n);
  for (std::int64_t m = 0; m < M.N; ++m) {
    norm = norm + p;
    p = p * M.T;
  }
  if (i % 2 == 1)
    return homology_at(t_minus_1, norm);
  return homology_at(norm, t_minus_1);
}

AbelianGroup E2Page::antidiagonal(int k) const {
  if (k < 0 || k > kmax)
    throw std::out_of_range("E2Page::antidiagonal: degree outside page");
  AbelianGroup sum;
  for (int j = 0; j <= std::min(k, n); ++j)
    sum += at(k - j, j);
  return sum;
}

E2Page e2_page(const Lattice& L, int kmax) {
  if (kmax < 0)
    throw std::invalid_argument("e2_page: negative kmax");
  E2Page page;
  page.n = L.rank();
  page.N = L.N;
  page.kmax = kmax;
  Lattice L_star = dual(L);
  for (int j = 0; j <= page.n; ++j) {
    Lattice coeff = exterior_power(L_star, j);
    // H^i for i >= 1 depends only on the parity of i
    AbelianGroup h0 = cyclic_cohomology(coeff, 0);
    AbelianGroup odd = kmax >= 1 ? cyclic_cohomology(coeff, 1) : AbelianGroup{};
    AbelianGroup even = kmax >= 2 ? cyclic_cohomology(coeff, 2) : AbelianGroup{};
    std::vector<AbelianGroup> row;
    for (int i = 0; i <= kmax; ++i)
      row.push_back(i == 0 ? h0 : (i % 2 ? odd : even));
    page.rows.push_back(std::move(row));
  }
  return page;
}

Status classify_status(const Lattice& L, const std::optional<Recipe>& recipe) {
  const std::string order = std::to_string(L.N);
  if (L.N == 1)
    return {true, "trivial holonomy"};
  if (is_prime(L.N))
    return {true, "prime order " + order};
  if (is_square_free(L.N))
    return {true, "square-free order " + order};
  if (recipe && !recipe->empty()) {
    std::string expr;
    for (const std::string& s : *recipe)
      expr += (expr.empty() ? "" : "+") + s;
    Assembly built = assemble(expr);
    if (built.lattice.T != L.T || built.lattice.N != L.N)
      throw std::invalid_argument("classify_status: recipe '" + expr +
                                  "' does not build this lattice");
    bool explicit_only = false;
    for (const std::string& name : *recipe) {
      CatalogEntry e = preset(name);
      switch (e.coverage) {
      case Coverage::Global:
      case Coverage::Local:
        break;
      case Coverage::Explicit:
        if (recipe->size() != 1)
          return {false, "summand " + e.name +
                           " is only known to collapse on its own, not inside a sum"};
        explicit_only = true;
        break;
      case Coverage::Open:
        return {false, "summand " + e.name + " has no known compatible action"};
      }
    }
    if (explicit_only)
      return {true, "collapse established by explicit computation for " + expr};
    return {true, "every summand of " + expr + " has a (local) compatible action"};
  }
  return {false, "order " + order +
                   " is neither prime nor square-free and the lattice has no"
                   " catalog provenance"};
}

CohomologyResult total_cohomology(const Lattice& L, int kmax,
                                  const std::optional<Recipe>& recipe) {
  E2Page page = e2_page(L, kmax);
  CohomologyResult res;
  for (int k = 0; k <= kmax; ++k)
    res.groups.push_back(page.antidiagonal(k));
  res.status = classify_status(L, recipe);
  res.periodic_from = L.rank() + 1;
  return res;
}

CohomologyResult bieberbach_cohomology(const Lattice& Nlat, int kmax) {
  if (!is_prime(Nlat.N))
    throw std::invalid_argument("bieberbach_cohomology: holonomy order " +
                                std::to_string(Nlat.N) + " is not prime");
  if (kmax < 0)
    throw std::invalid_argument("bieberbach_cohomology: negative kmax");
  Lattice L = direct_sum(Nlat, trivial_lattice(1, Nlat.N));
  Lattice L_star = dual(L), N_star = dual(Nlat);
  CohomologyResult res;
  for (int k = 0; k <= kmax; ++k) {
    AbelianGroup g;
    if (k <= L.rank()) {
      g = cyclic_cohomology(exterior_power(L_star, k), 0);
      if (k >= 1 && k - 1 <= Nlat.rank())
        g += cyclic_cohomology(exterior_power(N_star, k - 1), 1);
    }
    res.groups.push_back(g);
  }
  res.status = {true, "torsion-free with prime holonomy " + std::to_string(Nlat.N)};
  res.periodic_from = L.rank() + 1;
  return res;
}

GerbeResult gerbe_group(const Lattice& L, const std::optional<Recipe>& recipe) {
  CohomologyResult r = total_cohomology(L, 3, recipe);
  return {r.groups[3], r.status};
}

} // namespace crystcoh
