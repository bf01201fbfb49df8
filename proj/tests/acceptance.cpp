// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include "support.hpp"

#include "crystcoh/catalog.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/exterior.hpp"
#include "crystcoh/koszul.hpp"
#include "crystcoh/oracle.hpp"
#include "crystcoh/smith.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace crystcoh;
using testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

AbelianGroup G(std::size_t free, std::vector<long> tors = {}) {
  std::vector<Int> t(tors.begin(), tors.end());
  return AbelianGroup(free, t);
}

// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5)
      failures.push_back(what);
    else if (!ok)
      failures.back() = "... and more";
  }
  bool ok() const { return failures.empty(); }
};

std::string join(const std::vector<AbelianGroup>& gs) {
  std::string s;
  for (std::size_t k = 0; k < gs.size(); ++k)
    s += (k ? ", " : "") + gs[k].to_string();
  return s;
}

std::int64_t permutation_order(const std::vector<int>& perm) {
  std::int64_t order = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::int64_t len = 0;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      ++len;
    }
    if (len > 0)
      order = std::lcm(order, len);
  }
  return order;
}

// tau(t)^N is the identity in every degree 0..n.
bool tau_has_order(const TauAction& t) {
  const int n = t.rank();
  for (int j = 0; j <= n; ++j)
    if (tau_power(t, j, t.lattice.N) != gr_identity(binomial(n, j), n))
      return false;
  return true;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
    "sign", "z2_1", "rho1", "rho2", "rho3", "rho4", "rho5", "rho7", "z3_2", "z4_2",
    "z4_3", "z7_6", "z8_4", "z8_6", "z12_4_sylow2", "z12_4_sylow3", "z6_2_sylow2",
    "z6_2_sylow3", "z6_3_sylow2", "z6_3_sylow3", "z6_4_sylow2", "z6_4_sylow3",
    "z6_5_sylow2", "z6_5_sylow3", "z12_6_sylow3", "ig(3)", "ig(5)", "regular(2)",
    "regular(4)", "trivial(2)"};
  return names;
}

Check criterion_1() {
  Check c;
  auto t0 = Clock::now();
  CohomologyResult r = total_cohomology(preset("rho6").lattice, 6, Recipe{"rho6"});
  double dt = seconds_since(t0);
  std::vector<AbelianGroup> expected = {G(1),          G(1),          G(1, {4}),   G(1, {2}),
                                        G(0, {2, 4}), G(0, {2, 4}), G(0, {2, 4})};
  c.expect(r.groups == expected, "got " + join(r.groups));
  c.expect(r.periodic_from == 4, "periodic from " + std::to_string(r.periodic_from));
  c.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
  return c;
}

Check criterion_2() {
  Check c;
  struct Case {
    std::string name;
    TauAction tau;
    Lattice original;
  };
  std::vector<Case> cases;
  auto from_preset = [&](const std::string& label, const std::string& name) {
    CompatiblePreset p = tau_preset(name);
    cases.push_back({label, p.tau, p.original});
  };
  from_preset("sign", "sign");
  TauAction swap = tau_permutation({1, 0}, 2);
  cases.push_back({"swap", swap, swap.lattice});
  from_preset("regular(2)", "regular(2)");
  from_preset("xi_1 N=3", "ig(3)");
  from_preset("xi_1 N=5", "ig(5)");
  from_preset("rho4", "rho4");
  from_preset("rho7", "rho7");
  // the 2-Sylow subgroup of Z/8 is everything
  Lattice z84 = preset("z8_4").lattice;
  c.expect(restrict_to_sylow(z84, 2) == z84, "z8_4 is not its own 2-Sylow restriction");
  from_preset("z8_4", "z8_4");

  for (const Case& k : cases) {
    auto t0 = Clock::now();
    ComparisonReport rep = compare(k.tau.lattice, k.tau, 6);
    CohomologyResult total = total_cohomology(k.original, 6);
    double dt = seconds_since(t0);
    for (const ComparisonRow& row : rep.rows) {
      c.expect(row.match, k.name + " H^" + std::to_string(row.k) + ": formula " +
                            row.formula.to_string() + " vs oracle " + row.oracle.to_string());
      c.expect(row.oracle == total.groups[static_cast<std::size_t>(row.k)],
               k.name + " H^" + std::to_string(row.k) + ": total_cohomology " +
                 total.groups[static_cast<std::size_t>(row.k)].to_string());
    }
    c.expect(dt < 30.0, k.name + " took " + std::to_string(dt) + " s");
  }
  return c;
}

Check criterion_3() {
  Check c;
  Lattice sign(make_matrix({{-1}}), 2, "sign");
  std::vector<AbelianGroup> dihedral = total_cohomology(sign, 4).groups;
  c.expect(dihedral == std::vector<AbelianGroup>{G(1), G(0), G(0, {2, 2}), G(0), G(0, {2, 2})},
           "infinite dihedral: " + join(dihedral));
  std::vector<AbelianGroup> klein = bieberbach_cohomology(sign, 5).groups;
  c.expect(klein == std::vector<AbelianGroup>{G(1), G(1), G(0, {2}), G(0), G(0), G(0)},
           "Klein bottle: " + join(klein));
  for (int n = 0; n <= 4; ++n)
    for (std::int64_t N : {1, 2, 3, 4, 5, 6, 8}) {
      std::vector<AbelianGroup> h = total_cohomology(trivial_lattice(n, N), n + 3).groups;
      for (int k = 0; k <= n + 3; ++k) {
        AbelianGroup expect;
        for (int j = 0; j <= std::min(k, n); ++j)
          for (std::size_t m = 0; m < binomial(n, j); ++m)
            expect += testing::trivial_module_cohomology(N, k - j);
        c.expect(h[static_cast<std::size_t>(k)] == expect,
                 "Kuenneth n=" + std::to_string(n) + " N=" + std::to_string(N) + " k=" +
                   std::to_string(k));
      }
    }
  return c;
}

Check criterion_4() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      TauAction t = tau_permutation(perm, permutation_order(perm));
      std::ostringstream name;
      for (int p : perm)
        name << p;
      c.expect(verify_compatibility(t.lattice, t, n).passed, "permutation " + name.str());
      c.expect(tau_has_order(t), "permutation " + name.str() + ": tau^N != 1");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (std::int64_t N = 2; N <= 8; ++N) {
    TauAction t = tau_ig(N);
    c.expect(verify_compatibility(t.lattice, t, t.rank()).passed,
             "tau_ig(" + std::to_string(N) + ")");
    c.expect(tau_has_order(t), "tau_ig(" + std::to_string(N) + "): tau^N != 1");
  }
  for (const char* name : {"z8_4", "z8_6"}) {
    TauAction t = tau_preset(name).tau;
    c.expect(verify_compatibility(t.lattice, t, t.rank()).passed, name);
    c.expect(tau_has_order(t), std::string(name) + ": tau^N != 1");
  }
  // the identity on K_1 is not compatible with the sign action
  TauAction bad;
  bad.lattice = Lattice(make_matrix({{-1}}), 2);
  bad.images = gr_identity(1, 1);
  CompatibilityReport r = verify_compatibility(bad.lattice, bad, 1);
  c.expect(!r.passed && r.degree == 1 && !r.witness.empty(),
           "bad sign tau: passed=" + std::to_string(r.passed) + " degree=" +
             std::to_string(r.degree));
  return c;
}

Check criterion_5() {
  Check c;
  std::vector<Lattice> suite;
  for (const std::string& name : catalog_names())
    if (name.find('(') == std::string::npos)
      suite.push_back(preset(name).lattice);
  for (const char* name : {"ig(5)", "ig(7)", "regular(4)", "trivial(3)"})
    suite.push_back(preset(name).lattice);
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial)
    suite.push_back(testing::random_finite_order(rng, std::vector<std::int64_t>{2, 3, 4, 6}[trial % 4], 5));

  for (const Lattice& L : suite) {
    const int n = L.rank();
    std::string label = L.label.empty() ? "random" : L.label;
    CohomologyResult r = total_cohomology(L, n + 3);
    c.expect(r.groups[0] == G(1), label + ": H^0 = " + r.groups[0].to_string());
    for (const AbelianGroup& g : r.groups)
      c.expect(divides(g.torsion_exponent(), Int(static_cast<long>(L.N))),
               label + ": exponent of " + g.to_string());
    c.expect(r.groups[static_cast<std::size_t>(n) + 1] == r.groups[static_cast<std::size_t>(n) + 3],
             label + ": not 2-periodic above the rank");
  }
  for (const std::string& name : preset_names()) {
    CompatiblePreset p = tau_preset(name);
    try {
      twisted_resolution(p.tau.lattice, p.tau, std::min(p.tau.rank() + 3, 7));
    } catch (const InternalInconsistency& e) {
      c.expect(false, name + ": " + e.what());
    }
  }
  return c;
}

Check criterion_6() {
  Check c;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int r = 1; r <= 3; ++r)
      c.expect(decompose_p_type(trivial_lattice(r, p)) == PTypeDecomposition{r, 0, 0, p},
               "trivial^" + std::to_string(r) + " at p=" + std::to_string(p));
    c.expect(decompose_p_type(regular_module(p)) == PTypeDecomposition{0, 1, 0, p},
             "regular at p=" + std::to_string(p));
    c.expect(decompose_p_type(augmentation_ideal(p)) == PTypeDecomposition{0, 0, 1, p},
             "xi_1 at p=" + std::to_string(p));
  }

  Rng rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[trial % 4];
    int r = 0, s = 0, t = 0, n = 0;
    Lattice L = trivial_lattice(0, p);
    while (n == 0 || testing::uniform(rng, 0, 2) > 0) {
      long kind = testing::uniform(rng, 0, 2);
      Lattice block = kind == 0 ? trivial_lattice(1, p)
                    : kind == 1 ? regular_module(p)
                                : augmentation_ideal(p);
      if (n + block.rank() > 9)
        break;
      L = direct_sum(L, block);
      n += block.rank();
      (kind == 0 ? r : kind == 1 ? s : t) += 1;
    }
    L = testing::random_conjugate(rng, L, 6);
    PTypeDecomposition d = decompose_p_type(L);
    std::string tag = "p=" + std::to_string(p) + " (" + std::to_string(r) + "," +
                      std::to_string(s) + "," + std::to_string(t) + ")";
    c.expect(d.r + d.s * p + d.t * (p - 1) == L.rank(), tag + ": rank identity");
    c.expect(d == PTypeDecomposition{r, s, t, p}, tag + ": wrong type");

    Lattice rebuilt = trivial_lattice(d.r, p);
    for (int k = 0; k < d.s; ++k)
      rebuilt = direct_sum(rebuilt, regular_module(p));
    for (int k = 0; k < d.t; ++k)
      rebuilt = direct_sum(rebuilt, augmentation_ideal(p));
    E2Page a = e2_page(L, 6), b = e2_page(rebuilt, 6);
    for (int j = 0; j <= std::min(a.n, 6); ++j)
      for (int i = 0; i + j <= 6; ++i)
        c.expect(a.at(i, j) == b.at(i, j),
                 tag + ": E2(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return c;
}

Check criterion_7() {
  Check c;
  for (const std::string& name : catalog_names()) {
    if (name.find('(') != std::string::npos)
      continue;
    CatalogEntry e = preset(name);
    // rho1..rho3 are the trivial, sign and swap Z/4-lattices: T has order 1, 2, 2
    const std::int64_t expected = name == "rho1" ? 1 : (name == "rho2" || name == "rho3") ? 2
                                                                                        : e.lattice.N;
    try {
      LatticeReport r = validate_lattice(e.lattice);
      c.expect(r.order == expected && r.faithful == (expected == e.lattice.N),
               name + ": order " + std::to_string(r.order));
    } catch (const std::exception& ex) {
      c.expect(false, name + ": " + ex.what());
    }
  }
  c.expect(companion_from_v(2, {-1}).T == preset("rho2").lattice.T, "rho2 from its v-vector");
  c.expect(companion_from_v(4, {-1, -1, -1}).T == preset("rho5").lattice.T,
           "rho5 from its v-vector");
  std::set<std::string> flagged;
  for (const std::string& name : catalog_names())
    if (name.find('(') == std::string::npos && preset(name).flagged_uncovered)
      flagged.insert(name);
  c.expect(flagged == std::set<std::string>{"z8_5", "z12_6"}, "uncovered flags");
  c.expect(calabi_yau_check(preset("z7_6").lattice).ok, "z7_6 is Calabi-Yau");
  c.expect(!calabi_yau_check(trivial_lattice(6)).ok, "trivial Z^6 is not Calabi-Yau");
  return c;
}

Check criterion_8() {
  Check c;
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    std::size_t k = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    IntMatrix A = testing::random_matrix(rng, r, k, -9, 9);
    if (trial % 4 == 0)
      for (std::size_t j = 0; j < k; ++j)
        A(r - 1, j) = A(0, j) * testing::uniform(rng, -2, 2);
    SnfResult s = smith_normal_form(A);
    bool chain = true;
    std::vector<Int> d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0)
        chain = false;
      if (i > 0 && !(d[i] == 0 || (d[i - 1] != 0 && divides(d[i - 1], d[i]))))
        chain = false;
    }
    bool diag = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && s.D(i, j) != 0)
          diag = false;
    c.expect(s.U * A * s.V == s.D && diag, "U A V != D at trial " + std::to_string(trial));
    c.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1,
             "non-unimodular transform at trial " + std::to_string(trial));
    c.expect(chain, "not a divisor chain at trial " + std::to_string(trial));
    c.expect(d == testing::determinantal_invariants(A),
             "invariants disagree with minors at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t N = std::vector<std::int64_t>{2, 3, 4, 6}[trial % 4];
    Lattice A = testing::random_finite_order(rng, N, 5);
    Lattice B = testing::random_conjugate(rng, A, 4);
    const std::size_t n = A.T.rows();
    for (int j = 0; j <= static_cast<int>(n); ++j)
      c.expect(compound(A.T * B.T, j, Int(1)) ==
                 compound(A.T, j, Int(1)) * compound(B.T, j, Int(1)),
               "compound functoriality, trial " + std::to_string(trial) + " j=" +
                 std::to_string(j));
  }
  return c;
}

} // namespace

int main(int argc, char** argv) {
  // optional argument: run only the criterion with this number
  const std::string only = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
    {"1 rho6 golden table", criterion_1},
    {"2 collapse certified by the brute-force oracle", criterion_2},
    {"3 known groups", criterion_3},
    {"4 compatibility verifier", criterion_4},
    {"5 structural invariants", criterion_5},
    {"6 (r,s,t) decomposition", criterion_6},
    {"7 catalog fidelity", criterion_7},
    {"8 linear algebra properties", criterion_8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name.substr(0, name.find(' ')) != only)
      continue;
    auto t0 = Clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    std::cout << (c.ok() ? "PASS " : "FAIL ") << name << " (" << dt << " s)\n";
    for (const std::string& f : c.failures)
      std::cout << "    " << f << '\n';
    std::cout.flush();
    if (!c.ok())
      ++failed;
  }
  return failed == 0 ? 0 : 1;
}
