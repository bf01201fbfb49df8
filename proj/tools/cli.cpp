#include "cli.hpp"

#include "crystcoh/catalog.hpp"
#include "crystcoh/cohomology.hpp"
#include "crystcoh/errors.hpp"
#include "crystcoh/io.hpp"
#include "crystcoh/koszul.hpp"
#include "crystcoh/oracle.hpp"
#include "crystcoh/smith.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace crystcoh::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string catalog;
  std::string lattice_path;
  int kmax = -1;
  bool json = false;
  bool primary = false;
  std::int64_t prime = 0;
  std::string preset;
  std::string tau_path;
  std::string show_name;
};

struct Source {
  Lattice lattice;
  std::optional<Recipe> recipe;
};

Source load_source(const Options& o) {
  if (!o.catalog.empty() && !o.lattice_path.empty())
    throw std::invalid_argument("give either --catalog or --lattice, not both");
  if (!o.catalog.empty()) {
    Assembly a = assemble(o.catalog);
    return {a.lattice, a.summands};
  }
  if (!o.lattice_path.empty())
    return {load_lattice_file(o.lattice_path), std::nullopt};
  throw std::invalid_argument("a lattice is required: use --catalog <expr> or --lattice <file>");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const AbelianGroup& g, bool primary) {
  return primary ? g.to_primary_string() : g.to_string();
}

std::string describe(const Lattice& L) {
  return (L.label.empty() ? std::string("lattice") : L.label) + " (n=" +
         std::to_string(L.rank()) + ", N=" + std::to_string(L.N) + ")";
}

void print_groups(std::ostream& out, const CohomologyResult& r, bool primary) {
  for (std::size_t k = 0; k < r.groups.size(); ++k)
    out << "H^" << k << " = " << render(r.groups[k], primary) << '\n';
  out << "2-periodic in k from degree " << r.periodic_from << '\n';
  out << "status: " << (r.status.proved ? "proved" : "conjectural") << " ("
      << r.status.reason << ")\n";
}

const char* coverage_name(Coverage c) {
  switch (c) {
  case Coverage::Global: return "global";
  case Coverage::Local: return "local";
  case Coverage::Explicit: return "explicit";
  case Coverage::Open: return "open";
  }
  return "open";
}

// A compatible action for the lattice named by the options, in a basis
// adapted to the action. The returned preset's tau.lattice is the lattice the
// oracle runs on; it is conjugate to the requested one.
CompatiblePreset resolve_action(const Options& o) {
  if (!o.preset.empty())
    return tau_preset(o.preset);
  if (!o.tau_path.empty()) {
    std::optional<Source> src;
    if (!o.catalog.empty() || !o.lattice_path.empty())
      src = load_source(o);
    TauAction tau = tau_from_json(read_file(o.tau_path), src ? src->lattice : Lattice{});
    if (tau.lattice.rank() == 0 && !src)
      throw std::invalid_argument("the tau file has no lattice; add --catalog or --lattice");
    IntMatrix id = identity_matrix(static_cast<std::size_t>(tau.rank()));
    return {o.tau_path, 0, tau.lattice, id, tau};
  }
  if (o.catalog.empty())
    throw std::invalid_argument("need --preset, --tau or a --catalog expression");
  Assembly a = assemble(o.catalog);
  if (a.summands.size() == 1) {
    std::string name = a.summands.front();
    if (o.prime > 0)
      name += "_sylow" + std::to_string(o.prime);
    return tau_preset(name);
  }
  if (o.prime > 0)
    throw std::invalid_argument("--prime is only supported for a single summand");
  // a direct sum of global actions, each lifted to the common order
  std::optional<CompatiblePreset> sum;
  for (const std::string& s : a.summands) {
    CompatiblePreset p = tau_preset(s);
    p.tau.lattice = lift(p.tau.lattice, a.lattice.N);
    p.original = lift(p.original, a.lattice.N);
    if (!sum) {
      sum = std::move(p);
      continue;
    }
    sum->tau = tau_direct_sum(sum->tau, p.tau);
    sum->original = direct_sum(sum->original, p.original);
    sum->base_change = block_diagonal(sum->base_change, p.base_change);
  }
  sum->name = o.catalog;
  sum->tau.lattice.label = a.lattice.label;
  sum->original.label = a.lattice.label;
  return *sum;
}

int cmd_compute(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  int kmax = o.kmax >= 0 ? o.kmax : default_kmax(s.lattice);
  CohomologyResult r = total_cohomology(s.lattice, kmax, s.recipe);
  if (o.json) {
    out << result_to_json(r, o.primary) << '\n';
    return 0;
  }
  out << "H^k(Z^n x| Z/N, Z) for " << describe(s.lattice) << '\n';
  print_groups(out, r, o.primary);
  return 0;
}

int cmd_e2(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  int kmax = o.kmax >= 0 ? o.kmax : default_kmax(s.lattice);
  E2Page page = e2_page(s.lattice, kmax);
  if (o.json) {
    ordered_json j;
    j["n"] = page.n;
    j["N"] = page.N;
    ordered_json rows = ordered_json::array();
    for (int jj = 0; jj <= page.n; ++jj) {
      ordered_json row = ordered_json::array();
      for (int i = 0; i <= kmax; ++i)
        row.push_back(render(page.at(i, jj), o.primary));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int jj = 0; jj <= page.n; ++jj) {
    std::vector<std::string> row;
    for (int i = 0; i <= kmax; ++i) {
      row.push_back(render(page.at(i, jj), o.primary));
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  out << "E2(i,j) = H^i(Z/" << page.N << ", Lambda^j L*) for " << describe(s.lattice)
      << '\n';
  out << std::setw(4) << "j\\i";
  for (int i = 0; i <= kmax; ++i)
    out << " | " << std::setw(static_cast<int>(width)) << i;
  out << '\n';
  for (int jj = page.n; jj >= 0; --jj) {
    out << std::setw(4) << jj;
    for (const auto& c : cells[static_cast<std::size_t>(jj)])
      out << " | " << std::setw(static_cast<int>(width)) << c;
    out << '\n';
  }
  return 0;
}

int cmd_gerbe(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  GerbeResult g = gerbe_group(s.lattice, s.recipe);
  if (o.json) {
    ordered_json j;
    j["group"] = render(g.group, o.primary);
    j["status"] = g.status.proved ? "proved" : "conjectural";
    j["reason"] = g.status.reason;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Gb = H^3 = " << render(g.group, o.primary) << '\n';
  out << "status: " << (g.status.proved ? "proved" : "conjectural") << " ("
      << g.status.reason << ")\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CompatiblePreset p = resolve_action(o);
  CompatibilityReport rep = verify_compatibility(p.tau.lattice, p.tau, p.tau.rank());
  bool conj = unimodular_inverse(p.base_change) * p.original.T * p.base_change ==
              p.tau.lattice.T;
  if (o.json) {
    ordered_json j;
    j["name"] = p.name;
    j["passed"] = rep.passed && conj;
    if (!rep.passed) {
      j["axiom"] = rep.failed_axiom;
      j["degree"] = rep.degree;
      j["witness"] = rep.witness;
    }
    j["lattice"] = ordered_json::parse(lattice_to_json(p.tau.lattice));
    j["tau"] = ordered_json::parse(tau_to_json(p.tau));
    out << j.dump(2) << '\n';
  } else {
    out << "action " << p.name << " on " << describe(p.tau.lattice) << '\n';
    for (int i = 0; i < p.tau.rank(); ++i) {
      out << "  tau(a_" << i + 1 << ") =";
      bool first = true;
      for (int k = 0; k < p.tau.rank(); ++k) {
        const auto& c = p.tau.images(k, i);
        if (c.is_zero())
          continue;
        out << (first ? " " : " + ") << "(" << c.to_string() << ") a_" << k + 1;
        first = false;
      }
      out << (first ? " 0" : "") << '\n';
    }
    if (rep.passed)
      out << "PASS: axioms (a)-(d) hold through degree " << p.tau.rank() << '\n';
    else
      out << "FAIL: axiom (" << rep.failed_axiom << ") in degree " << rep.degree
          << ": " << rep.witness << '\n';
    if (!conj)
      out << "FAIL: base change does not conjugate the lattice\n";
  }
  if (!conj)
    throw InternalInconsistency("preset base change is not a conjugation");
  return rep.passed ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  CompatiblePreset p = resolve_action(o);
  const Lattice& L = p.tau.lattice;
  int kmax = o.kmax >= 0 ? o.kmax : default_kmax(L);
  ComparisonReport rep = compare(L, p.tau, kmax);
  if (o.json) {
    out << comparison_to_json(rep) << '\n';
  } else {
    out << "oracle for " << describe(L) << " with action " << p.name << '\n';
    out << rep.render();
  }
  if (!rep.all_match())
    throw InternalInconsistency("collapse formula disagrees with the brute-force resolution");
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  std::int64_t p = o.prime;
  if (p == 0) {
    if (!is_prime(s.lattice.N))
      throw std::invalid_argument("N = " + std::to_string(s.lattice.N) +
                                  " is not prime; pass --prime");
    p = s.lattice.N;
  }
  Lattice R = restrict_to_sylow(s.lattice, p);
  if (R.N != p)
    throw std::invalid_argument("Sylow " + std::to_string(p) + "-subgroup has order " +
                                std::to_string(R.N) + ", not prime");
  PTypeDecomposition d = decompose_p_type(R);
  if (o.json) {
    ordered_json j{{"p", d.p}, {"r", d.r}, {"s", d.s}, {"t", d.t}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << describe(s.lattice) << " at p = " << p << ": Z^" << d.r << " + (ZG)^" << d.s
      << " + (IG)^" << d.t << "  (r=" << d.r << ", s=" << d.s << ", t=" << d.t << ")\n";
  return 0;
}

int cmd_bieberbach(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  int kmax = o.kmax >= 0 ? o.kmax : s.lattice.rank() + 3;
  CohomologyResult r = bieberbach_cohomology(s.lattice, kmax);
  if (o.json) {
    out << result_to_json(r, o.primary) << '\n';
    return 0;
  }
  out << "H^k of the Bieberbach group with lattice " << describe(s.lattice)
      << " + Z\n";
  for (std::size_t k = 0; k < r.groups.size(); ++k)
    out << "H^" << k << " = " << render(r.groups[k], o.primary) << '\n';
  out << "status: proved (" << r.status.reason << ")\n";
  return 0;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  std::vector<std::string> names = catalog_names();
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const std::string& n : names)
      if (n.find('(') == std::string::npos)
        arr.push_back(ordered_json::parse(lattice_to_json(preset(n).lattice)));
    out << arr.dump(2) << '\n';
    return 0;
  }
  for (const std::string& n : names) {
    if (n.find('(') != std::string::npos) {
      out << n << '\n';
      continue;
    }
    CatalogEntry e = preset(n);
    out << std::left << std::setw(9) << e.name << std::right << " n=" << e.lattice.rank()
        << " N=" << std::setw(2) << e.lattice.N << "  " << coverage_name(e.coverage)
        << (e.flagged_uncovered ? "  [no known compatible action]" : "") << '\n';
  }
  return 0;
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
  CatalogEntry e = preset(o.show_name);
  Lattice L = e.lattice;
  L.label = e.name;
  out << lattice_to_json(L) << '\n';
  return 0;
}

int cmd_cy_check(const Options& o, std::ostream& out) {
  Source s = load_source(o);
  CalabiYauReport r = calabi_yau_check(s.lattice);
  if (o.json) {
    ordered_json j;
    j["ok"] = r.ok;
    j["exponents"] = r.exponents;
    if (r.selection)
      j["selection"] = *r.selection;
    j["diagnostic"] = r.diagnostic;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << (r.ok ? "Calabi-Yau: yes" : "Calabi-Yau: no") << " (" << r.diagnostic << ")\n";
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral cohomology of split crystallographic groups Z^n x| Z/N"};
  app.name("crystcoh");
  app.require_subcommand(1);
  Options o;

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--catalog,-c", o.catalog,
                    "catalog name or direct sum, e.g. z8_4+z2_1+trivial(1)");
    sub->add_option("--lattice,-l", o.lattice_path, "lattice JSON file");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_flag("--primary", o.primary, "render groups by primary decomposition");
  };
  auto add_kmax = [&](CLI::App* sub) {
    sub->add_option("--kmax,-k", o.kmax, "highest degree (default n + 2)")
      ->check(CLI::NonNegativeNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "total cohomology H^k(Gamma, Z)");
  add_source(compute); add_kmax(compute); add_output(compute);
  CLI::App* e2 = app.add_subcommand("e2", "E2 page table");
  add_source(e2); add_kmax(e2); add_output(e2);
  CLI::App* gerbe = app.add_subcommand("gerbe", "gerbe group H^3");
  add_source(gerbe); add_output(gerbe);
  CLI::App* verify = app.add_subcommand("verify", "check a compatible action");
  add_source(verify); add_output(verify);
  verify->add_option("--preset,-p", o.preset, "named action, e.g. z8_4 or z12_4_sylow2");
  verify->add_option("--tau", o.tau_path, "action JSON file");
  verify->add_option("--prime", o.prime, "use the local action at this prime");
  CLI::App* oracle = app.add_subcommand("oracle", "compare with a brute-force resolution");
  add_source(oracle); add_kmax(oracle); add_output(oracle);
  oracle->add_option("--preset,-p", o.preset, "named action");
  oracle->add_option("--tau", o.tau_path, "action JSON file");
  oracle->add_option("--prime", o.prime, "use the local action at this prime");
  CLI::App* decompose = app.add_subcommand("decompose", "(r, s, t) type at a prime");
  add_source(decompose); add_output(decompose);
  decompose->add_option("--prime", o.prime, "prime p (default N when N is prime)");
  CLI::App* bieberbach = app.add_subcommand("bieberbach", "torsion-free group on N + Z");
  add_source(bieberbach); add_kmax(bieberbach); add_output(bieberbach);
  CLI::App* catalog = app.add_subcommand("catalog", "browse named lattices");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "list catalog entries");
  list->add_flag("--json", o.json, "emit lattice JSON");
  CLI::App* show = catalog->add_subcommand("show", "print one entry as lattice JSON");
  show->add_option("name", o.show_name)->required();
  CLI::App* cy = app.add_subcommand("cy-check", "Calabi-Yau eigenvalue condition");
  add_source(cy); add_output(cy);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out);
    if (e2->parsed()) return cmd_e2(o, out);
    if (gerbe->parsed()) return cmd_gerbe(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (bieberbach->parsed()) return cmd_bieberbach(o, out);
    if (list->parsed()) return cmd_catalog_list(o, out);
    if (show->parsed()) return cmd_catalog_show(o, out);
    if (cy->parsed()) return cmd_cy_check(o, out);
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

} // namespace crystcoh::cli
