#include "crystcoh/catalog.hpp"
#include "crystcoh/smith.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <regex>

namespace crystcoh {

Lattice companion_from_v(std::int64_t N, const std::vector<long>& v) {
  if (v.empty())
    throw std::invalid_argument("companion_from_v: empty v");
  if (v.front() != 1 && v.front() != -1)
    throw std::invalid_argument("companion_from_v: v_1 must be +-1");
  const std::size_t n = v.size();
  IntMatrix theta(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    theta(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i)
    theta(i, n - 1) = v[i];
  Lattice L(theta, N);
  LatticeReport rep = validate_lattice(L);
  if (!rep.faithful)
    throw InvalidLattice("companion_from_v: matrix has order " +
                         std::to_string(rep.order) + ", not " +
                         std::to_string(N));
  return L;
}

Lattice augmentation_ideal(std::int64_t N) {
  if (N < 2)
    throw std::invalid_argument("augmentation ideal needs N >= 2");
  const std::size_t n = static_cast<std::size_t>(N - 1);
  IntMatrix xi(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    xi(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j)
    xi(n - 1, j) = -1;
  return Lattice(xi, N, "ig(" + std::to_string(N) + ")");
}

Lattice regular_module(std::int64_t N) {
  if (N < 1)
    throw std::invalid_argument("regular module needs N >= 1");
  const std::size_t n = static_cast<std::size_t>(N);
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    p((i + 1) % n, i) = 1;
  return Lattice(p, N, "regular(" + std::to_string(N) + ")");
}

Lattice trivial_lattice(int n, std::int64_t N) {
  if (n < 0)
    throw std::invalid_argument("trivial lattice needs n >= 0");
  return Lattice(identity_matrix(static_cast<std::size_t>(n)), N,
                 "trivial(" + std::to_string(n) + ")");
}

namespace {

struct Fixed {
  const char* name;
  std::int64_t N;
  std::vector<std::vector<long>> matrix;  // empty when built from v
  std::vector<long> v;
  Coverage coverage;
  bool flagged;
};

// Z/4 indecomposables rho1..rho9 and the orbifold companion indecomposables
// Z/N^(n), stored verbatim.
const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> entries = {
    {"rho1", 4, {{1}}, {}, Coverage::Global, false},
    {"rho2", 4, {{-1}}, {}, Coverage::Global, false},
    {"rho3", 4, {{0, 1}, {1, 0}}, {}, Coverage::Global, false},
    {"rho4", 4, {{0, 1}, {-1, 0}}, {}, Coverage::Global, false},
    {"rho5", 4, {{0, 0, -1}, {1, 0, -1}, {0, 1, -1}}, {}, Coverage::Global, false},
    {"rho6", 4, {{0, 1, 0}, {-1, 0, 1}, {0, 0, 1}}, {}, Coverage::Explicit, false},
    {"rho7", 4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}, {},
     Coverage::Global, false},
    {"rho8", 4, {{0, 0, -1, 1}, {1, 0, -1, 1}, {0, 1, -1, 0}, {0, 0, 0, 1}}, {},
     Coverage::Open, false},
    {"rho9", 4, {{0, 1, 0, 0}, {-1, 0, 0, 1}, {0, 0, -1, 1}, {0, 0, 0, 1}}, {},
     Coverage::Open, false},
    {"sign", 2, {{-1}}, {}, Coverage::Global, false},
    {"z2_1", 2, {}, {-1}, Coverage::Global, false},
    {"z3_2", 3, {}, {-1, -1}, Coverage::Global, false},
    {"z4_2", 4, {}, {-1, 0}, Coverage::Global, false},
    {"z6_2", 6, {}, {-1, 1}, Coverage::Local, false},
    {"z4_3", 4, {}, {-1, -1, -1}, Coverage::Global, false},
    {"z6_3", 6, {}, {-1, 0, 0}, Coverage::Local, false},
    {"z6_4", 6, {}, {-1, 0, -1, 0}, Coverage::Local, false},
    {"z8_4", 8, {}, {-1, 0, 0, 0}, Coverage::Global, false},
    {"z12_4", 12, {}, {-1, 0, 1, 0}, Coverage::Local, false},
    {"z6_5", 6, {}, {-1, -1, -1, -1, -1}, Coverage::Local, false},
    {"z8_5", 8, {}, {-1, -1, 0, 0, -1}, Coverage::Open, true},
    {"z7_6", 7, {}, {-1, -1, -1, -1, -1, -1}, Coverage::Global, false},
    {"z8_6", 8, {}, {-1, 0, -1, 0, -1, 0}, Coverage::Global, false},
    {"z12_6", 12, {}, {-1, -1, 0, 1, 0, -1}, Coverage::Open, true},
  };
  return entries;
}

std::vector<std::int64_t> prime_divisors(std::int64_t N) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p <= N; ++p)
    if (N % p == 0 && is_prime(p))
      ps.push_back(p);
  return ps;
}

void attach_presets(CatalogEntry& e) {
  if (e.coverage == Coverage::Global)
    e.presets = {{0, e.name}};
  else if (e.coverage == Coverage::Local)
    for (std::int64_t p : prime_divisors(e.lattice.N))
      e.presets.emplace_back(p, e.name + "_sylow" + std::to_string(p));
}

} // namespace

CatalogEntry preset(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)))
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  static const std::regex parametric(R"(^(ig|regular|trivial)\(?([0-9]+)\)?$)");
  std::smatch m;
  if (std::regex_match(name, m, parametric)) {
    const std::string kind = m[1];
    const long arg = std::stol(m[2]);
    CatalogEntry e;
    e.coverage = Coverage::Global;
    if (kind == "ig") {
      e.lattice = augmentation_ideal(arg);
      e.source = "augmentation ideal of Z/N (matrix xi_1)";
    } else if (kind == "regular") {
      e.lattice = regular_module(arg);
      e.source = "regular representation, cyclic permutation matrix";
    } else {
      e.lattice = trivial_lattice(static_cast<int>(arg));
      e.source = "trivial module";
    }
    e.name = e.lattice.label;
    attach_presets(e);
    return e;
  }

  for (const Fixed& f : fixed_entries()) {
    if (name != f.name)
      continue;
    CatalogEntry e;
    e.name = f.name;
    if (f.matrix.empty()) {
      e.lattice = companion_from_v(f.N, f.v);
      e.source = "orbifold indecomposable, companion form with v = (";
      for (std::size_t i = 0; i < f.v.size(); ++i)
        e.source += (i ? "," : "") + std::to_string(f.v[i]);
      e.source += ")";
    } else {
      e.lattice = Lattice(make_matrix(f.matrix), f.N);
      e.source = name == "sign" ? "sign representation of Z/2"
                                : "indecomposable Z/4-lattice";
    }
    e.lattice.label = e.name;
    e.coverage = f.coverage;
    e.flagged_uncovered = f.flagged;
    attach_presets(e);
    return e;
  }
  throw std::invalid_argument("unknown catalog name: " + raw);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const Fixed& f : fixed_entries())
    names.emplace_back(f.name);
  names.insert(names.end(), {"ig(N)", "regular(N)", "trivial(n)"});
  return names;
}

Assembly assemble(const std::string& expression) {
  std::vector<CatalogEntry> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t plus = expression.find('+', start);
    std::string token = expression.substr(start, plus == std::string::npos
                                                   ? std::string::npos
                                                   : plus - start);
    if (token.find_first_not_of(" \t") == std::string::npos)
      throw std::invalid_argument("empty summand in expression: " + expression);
    parts.push_back(preset(token));
    if (plus == std::string::npos)
      break;
    start = plus + 1;
  }
  std::int64_t N = 1;
  for (const CatalogEntry& e : parts)
    N = std::lcm(N, e.lattice.N);
  Assembly a;
  a.lattice = lift(parts.front().lattice, N);
  a.summands.push_back(parts.front().name);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    a.lattice = direct_sum(a.lattice, lift(parts[i].lattice, N));
    a.summands.push_back(parts[i].name);
  }
  a.lattice.label.clear();
  for (std::size_t i = 0; i < a.summands.size(); ++i)
    a.lattice.label += (i ? "+" : "") + a.summands[i];
  return a;
}

std::vector<Int> cyclotomic(std::int64_t d) {
  if (d < 1)
    throw std::invalid_argument("cyclotomic: d must be >= 1");
  // x^d - 1 divided by Phi_e for every proper divisor e
  std::vector<Int> poly(static_cast<std::size_t>(d) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (std::int64_t e : divisors(d)) {
    if (e == d)
      continue;
    std::vector<Int> div = cyclotomic(e);
    // exact division by a monic polynomial
    std::vector<Int> quot(poly.size() - div.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      Int c = poly[k + div.size() - 1];
      quot[k] = c;
      for (std::size_t i = 0; i < div.size(); ++i)
        poly[k + i] -= c * div[i];
    }
    poly = std::move(quot);
  }
  return poly;
}

std::vector<std::int64_t> eigenvalue_exponents(const Lattice& L) {
  validate_lattice(L);
  const std::size_t n = L.T.rows();
  std::vector<std::int64_t> exps;
  for (std::int64_t d : divisors(L.N)) {
    std::vector<Int> phi = cyclotomic(d);
    // Phi_d(T) by Horner's rule
    IntMatrix value(n, n);
    for (std::size_t k = phi.size(); k-- > 0;) {
      value = value * L.T;
      for (std::size_t i = 0; i < n; ++i)
        value(i, i) += phi[k];
    }
    std::size_t nullity = n - rank(value);
    std::size_t degree = phi.size() - 1;
    if (nullity % degree != 0)
      throw std::logic_error("eigenvalue_exponents: nullity not a multiple of deg Phi_d");
    for (std::size_t copy = 0; copy < nullity / degree; ++copy)
      for (std::int64_t u = 0; u < d; ++u)
        if (std::gcd(u, d) == 1)
          exps.push_back(u * (L.N / d));
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

CalabiYauReport calabi_yau_check(const Lattice& L) {
  if (L.rank() != 6)
    throw std::invalid_argument("calabi_yau_check: rank must be 6, got " +
                                std::to_string(L.rank()));
  CalabiYauReport rep;
  rep.exponents = eigenvalue_exponents(L);
  if (determinant(L.T - identity_matrix(6)) == 0) {
    rep.diagnostic = "eigenvalue 1 present (det(T - I) = 0)";
    return rep;
  }
  const std::int64_t N = L.N;
  std::vector<std::int64_t> left = rep.exponents;
  std::sort(left.begin(), left.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::function<bool()> search = [&]() -> bool {
    if (left.empty()) {
      // smallest sorted selection, so the reported witness is canonical
      std::optional<std::array<std::int64_t, 3>> best;
      for (int mask = 0; mask < 8; ++mask) {
        std::array<std::int64_t, 3> pick{};
        std::int64_t sum = 0;
        for (int i = 0; i < 3; ++i) {
          pick[i] = (mask >> i) & 1 ? pairs[i].second : pairs[i].first;
          sum += pick[i];
        }
        std::sort(pick.begin(), pick.end());
        if (sum % N == 0 && (!best || pick < *best))
          best = pick;
      }
      rep.selection = best;
      return best.has_value();
    }
    std::int64_t e = left.front();
    for (std::size_t j = 1; j < left.size(); ++j) {
      if ((e + left[j]) % N != 0)
        continue;
      std::int64_t f = left[j];
      std::vector<std::int64_t> saved = left;
      left.erase(left.begin() + static_cast<long>(j));
      left.erase(left.begin());
      pairs.emplace_back(e, f);
      if (search())
        return true;
      pairs.pop_back();
      left = std::move(saved);
    }
    return false;
  };
  if (search()) {
    rep.ok = true;
    rep.diagnostic = "exponents " + std::to_string((*rep.selection)[0]) + "+" +
                     std::to_string((*rep.selection)[1]) + "+" +
                     std::to_string((*rep.selection)[2]) + " = 0 mod " +
                     std::to_string(N);
  } else {
    rep.diagnostic = "no choice of one eigenvalue per conjugate pair has product 1";
  }
  return rep;
}

} // namespace crystcoh
