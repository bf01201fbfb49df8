#include "crystcoh/koszul.hpp"
#include "crystcoh/catalog.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/exterior.hpp"
#include "crystcoh/smith.hpp"

#include <cctype>

namespace crystcoh {

GrMatrix koszul_differential(int n, int j) {
  if (j < 1 || j > n)
    throw std::invalid_argument("koszul_differential: degree " + std::to_string(j) +
                                " outside [1, " + std::to_string(n) + "]");
  std::vector<IndexSet> src = subsets(n, j);
  GrMatrix d(binomial(n, j - 1), src.size());
  for (std::size_t col = 0; col < src.size(); ++col)
    for (int pos = 0; pos < j; ++pos) {
      IndexSet face = src[col];
      int v = face[static_cast<std::size_t>(pos)];
      face.erase(face.begin() + pos);
      GroupRingElement x_minus_1 =
        GroupRingElement::variable(n, v) - GroupRingElement::one(n);
      d(subset_rank(n, face), col) += pos % 2 == 0 ? x_minus_1 : -x_minus_1;
    }
  return d;
}

TauAction tau_permutation(const std::vector<int>& perm, std::int64_t N) {
  const int n = static_cast<int>(perm.size());
  IntMatrix T(perm.size(), perm.size());
  TauAction tau;
  tau.images = GrMatrix(perm.size(), perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int i = 0; i < n; ++i) {
    int target = perm[static_cast<std::size_t>(i)];
    if (target < 0 || target >= n || seen[static_cast<std::size_t>(target)])
      throw std::invalid_argument("tau_permutation: not a permutation");
    seen[static_cast<std::size_t>(target)] = true;
    T(static_cast<std::size_t>(target), static_cast<std::size_t>(i)) = 1;
    tau.images(static_cast<std::size_t>(target), static_cast<std::size_t>(i)) =
      GroupRingElement::one(n);
  }
  tau.lattice = Lattice(T, N);
  return tau;
}

TauAction tau_permutation(const Lattice& L) {
  auto perm = as_permutation(L.T);
  if (!perm)
    throw std::invalid_argument("tau_permutation: lattice matrix is not a permutation");
  TauAction tau = tau_permutation(*perm, L.N);
  tau.lattice = L;
  return tau;
}

TauAction tau_ig(std::int64_t N) {
  if (N < 2)
    throw std::invalid_argument("tau_ig: N must be >= 2");
  const int n = static_cast<int>(N - 1);
  const std::size_t last = static_cast<std::size_t>(n - 1);
  GroupRingElement u = GroupRingElement::variable(n, n - 1, -1);
  TauAction tau;
  tau.lattice = augmentation_ideal(N);
  tau.images = GrMatrix(last + 1, last + 1);
  tau.images(last, 0) = -u;
  for (std::size_t k = 1; k <= last; ++k) {
    tau.images(last, k) -= u;
    tau.images(k - 1, k) += u;
  }
  return tau;
}

TauAction tau_direct_sum(const TauAction& a, const TauAction& b) {
  if (a.lattice.N != b.lattice.N)
    throw std::invalid_argument("tau_direct_sum: group orders differ (" +
                                std::to_string(a.lattice.N) + " vs " +
                                std::to_string(b.lattice.N) + ")");
  const int na = a.rank(), nb = b.rank(), n = na + nb;
  TauAction s;
  s.lattice = direct_sum(a.lattice, b.lattice);
  s.images = GrMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < na; ++i)
    for (int k = 0; k < na; ++k)
      s.images(k, i) = a.images(k, i).embed(0, n);
  for (int i = 0; i < nb; ++i)
    for (int k = 0; k < nb; ++k)
      s.images(na + k, na + i) = b.images(k, i).embed(na, n);
  return s;
}

GrMatrix extend_tau(const TauAction& tau, int j) {
  const int n = tau.rank();
  if (j < 0 || j > n)
    throw std::invalid_argument("extend_tau: degree " + std::to_string(j) +
                                " outside [0, " + std::to_string(n) + "]");
  return compound(tau.images, j, GroupRingElement::one(n));
}

GrMatrix tau_power(const TauAction& tau, int j, std::int64_t m) {
  if (m < 0)
    throw std::invalid_argument("tau_power: negative exponent");
  GrMatrix step = extend_tau(tau, j);
  GrMatrix p = gr_identity(step.rows(), tau.rank());
  for (std::int64_t k = 0; k < m; ++k)
    p = step * twist(p, tau.lattice.T);
  return p;
}

CompatibilityReport verify_compatibility(const Lattice& L, const TauAction& tau,
                                         int jmax) {
  CompatibilityReport rep;
  const int n = L.rank();
  auto fail = [&](const char* axiom, int degree, std::string witness) {
    rep.passed = false;
    rep.failed_axiom = axiom;
    rep.degree = degree;
    rep.witness = std::move(witness);
    return rep;
  };
  if (tau.rank() != n)
    return fail("a", 1, "tau has rank " + std::to_string(tau.rank()) +
                          " but the lattice has rank " + std::to_string(n));
  // the twist must come from L, not from whatever tau carries
  TauAction t = tau;
  t.lattice = L;
  jmax = std::min(jmax, n);

  if (n > 0) {
    // (a) d tau(a_i) = (d a_i)^t
    GrMatrix d1 = koszul_differential(n, 1);
    GrMatrix lhs = d1 * t.images;
    GrMatrix rhs = twist(d1, L.T);
    for (int i = 0; i < n; ++i)
      if (lhs(0, i) != rhs(0, i))
        return fail("a", 1, "d tau(a_" + std::to_string(i + 1) + ") = " +
                              lhs(0, i).to_string() + " but (d a_" +
                              std::to_string(i + 1) + ")^t = " +
                              rhs(0, i).to_string());
    // (b) tau(t)^N = 1 on K_1
    GrMatrix pw = tau_power(t, 1, L.N);
    if (pw != gr_identity(static_cast<std::size_t>(n), n))
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          GroupRingElement expect =
            i == k ? GroupRingElement::one(n) : GroupRingElement{};
          if (pw(k, i) != expect)
            return fail("b", 1, "tau^" + std::to_string(L.N) + "(a_" +
                                  std::to_string(i + 1) + ") has coefficient " +
                                  pw(k, i).to_string() + " on a_" +
                                  std::to_string(k + 1));
        }
    // (c) d tau = tau d on K_j, composing semilinearly on the right-hand side
    GrMatrix prev = t.images;
    for (int j = 2; j <= jmax; ++j) {
      GrMatrix dj = koszul_differential(n, j);
      GrMatrix cj = extend_tau(t, j);
      GrMatrix l = dj * cj;
      GrMatrix r = prev * twist(dj, L.T);
      if (l != r)
        for (std::size_t row = 0; row < l.rows(); ++row)
          for (std::size_t col = 0; col < l.cols(); ++col)
            if (l(row, col) != r(row, col))
              return fail("c", j, "entry (" + std::to_string(row) + "," +
                                    std::to_string(col) + "): d tau = " +
                                    l(row, col).to_string() + ", tau d = " +
                                    r(row, col).to_string());
      prev = std::move(cj);
    }
  }
  // (d) K_0 = Z[L] is acted on by the twist alone, which preserves augmentation
  GrMatrix c0 = extend_tau(t, 0);
  if (c0(0, 0) != GroupRingElement::one(n))
    return fail("d", 0, "tau on K_0 is not the twist");
  for (int i = 0; i < n; ++i)
    if (GroupRingElement::variable(n, i).twist(L.T).augmentation() != 1)
      return fail("d", 0, "twist does not preserve augmentation");
  rep.passed = true;
  return rep;
}

namespace {

GroupRingElement var(int n, int i, std::int64_t pw = 1) {
  return GroupRingElement::variable(n, i, pw);
}

TauAction tau_sign(const Lattice& L) {
  TauAction t;
  t.lattice = L;
  t.images = GrMatrix(1, 1);
  t.images(0, 0) = -var(1, 0, -1);
  return t;
}

// rho4 = [[0,1],[-1,0]]: x1^t = x2^-1, x2^t = x1.
TauAction tau_rho4() {
  TauAction t;
  t.lattice = preset("rho4").lattice;
  t.images = GrMatrix(2, 2);
  t.images(1, 0) = -var(2, 1, -1);
  t.images(0, 1) = GroupRingElement::one(2);
  return t;
}

CompatiblePreset conjugated(const std::string& name, std::int64_t prime,
                            const Lattice& original, TauAction model) {
  model.lattice.N = original.N;
  auto P = find_conjugator(original.T, model.lattice.T);
  if (!P)
    throw InternalInconsistency("tau_preset " + name +
                                ": no unimodular conjugation to the model lattice found");
  model.lattice.label = original.label.empty() ? name : original.label;
  return {name, prime, original, *P, std::move(model)};
}

CompatiblePreset identity_preset(const std::string& name, std::int64_t prime,
                                 TauAction tau) {
  Lattice original = tau.lattice;
  IntMatrix P = identity_matrix(static_cast<std::size_t>(tau.rank()));
  return {name, prime, original, P, std::move(tau)};
}

// The companion forms of z8_4 and z8_6 are covered by actions written for the
// transposed matrix; the adapted lattice is T^t.
CompatiblePreset transposed_companion(const std::string& name) {
  Lattice original = preset(name).lattice;
  const int n = original.rank();
  TauAction t;
  t.lattice = Lattice(original.T.transpose(), original.N, name);
  t.images = GrMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const std::size_t last = static_cast<std::size_t>(n - 1);
  GroupRingElement u = var(n, n - 1, -1);
  GroupRingElement one = GroupRingElement::one(n);
  if (name == "z8_4") {
    // a1 -> -x4^-1 a4, a2 -> a1, a3 -> a2, a4 -> a3
    t.images(last, 0) = -u;
    for (std::size_t k = 1; k <= last; ++k)
      t.images(k - 1, k) = one;
  } else {
    // a1 -> -x6^-1 a6, a3 -> x6^-1 (a2 - a6), a5 -> x6^-1 (a4 - a6),
    // a2 -> a1, a4 -> a3, a6 -> a5
    t.images(last, 0) = -u;
    for (std::size_t k : {2u, 4u}) {
      t.images(k - 1, k) = u;
      t.images(last, k) = -u;
    }
    for (std::size_t k : {1u, 3u, 5u})
      t.images(k - 1, k) = one;
  }
  auto P = find_conjugator(original.T, t.lattice.T);
  if (!P)
    throw InternalInconsistency("tau_preset " + name + ": T not conjugate to T^t");
  return {name, 0, original, *P, std::move(t)};
}

} // namespace

std::optional<CompatiblePreset> local_compatible_action(const Lattice& L,
                                                        std::int64_t p) {
  Lattice R = restrict_to_sylow(L, p);
  std::string name = (L.label.empty() ? std::string("lattice") : L.label) +
                     "_sylow" + std::to_string(p);
  if (as_permutation(R.T))
    return identity_preset(name, p, tau_permutation(R));
  if (!is_prime(R.N))
    return std::nullopt;
  PTypeDecomposition type = decompose_p_type(R);
  std::optional<TauAction> model;
  auto add = [&](const TauAction& part) {
    model = model ? tau_direct_sum(*model, part) : part;
  };
  if (type.r > 0)
    add(tau_permutation(std::vector<int>([&] {
          std::vector<int> id(static_cast<std::size_t>(type.r));
          for (int i = 0; i < type.r; ++i) id[static_cast<std::size_t>(i)] = i;
          return id;
        }()), p));
  for (int i = 0; i < type.s; ++i)
    add(tau_permutation(regular_module(p)));
  for (int i = 0; i < type.t; ++i)
    add(tau_ig(p));
  if (!model)
    return std::nullopt;
  auto P = find_conjugator(R.T, model->lattice.T);
  if (!P)
    return std::nullopt;
  model->lattice.label = name;
  return CompatiblePreset{name, p, R, *P, std::move(*model)};
}

CompatiblePreset tau_preset(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  if (auto pos = name.rfind("_sylow"); pos != std::string::npos) {
    std::string base = name.substr(0, pos);
    std::int64_t p = std::stoll(name.substr(pos + 6));
    Lattice L = preset(base).lattice;
    if (base == "z12_4" && p == 2) {
      // T^3 squares to -I: two copies of rho4
      Lattice R = restrict_to_sylow(L, 2);
      return conjugated(name, 2, R, tau_direct_sum(tau_rho4(), tau_rho4()));
    }
    auto local = local_compatible_action(L, p);
    if (!local)
      throw std::invalid_argument("no local compatible action known for " + name);
    local->name = name;
    return *local;
  }
  if (name == "sign" || name == "z2_1" || name == "rho2")
    return identity_preset(name, 0, tau_sign(preset(name).lattice));
  if (name == "rho4")
    return identity_preset(name, 0, tau_rho4());
  if (name == "z4_2")
    return conjugated(name, 0, preset(name).lattice, tau_rho4());
  if (name == "rho5" || name == "z4_3")
    return conjugated(name, 0, preset(name).lattice, tau_ig(4));
  if (name == "z3_2")
    return conjugated(name, 0, preset(name).lattice, tau_ig(3));
  if (name == "z7_6")
    return conjugated(name, 0, preset(name).lattice, tau_ig(7));
  if (name == "z8_4" || name == "z8_6")
    return transposed_companion(name);

  CatalogEntry e = preset(name);
  if (as_permutation(e.lattice.T))
    return identity_preset(e.name, 0, tau_permutation(e.lattice));
  if (e.name.rfind("ig(", 0) == 0) {
    TauAction t = tau_ig(e.lattice.N);
    t.lattice.label = e.name;
    return identity_preset(e.name, 0, std::move(t));
  }
  throw std::invalid_argument("no compatible action known for " + e.name);
}

} // namespace crystcoh
