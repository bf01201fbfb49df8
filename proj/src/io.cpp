#include "crystcoh/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace crystcoh {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::int64_t as_int(const ordered_json& v, const char* what) {
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::int64_t checked_small(const Int& x, const char* what) {
  if (!x.fits_slong_p())
    throw std::out_of_range(std::string(what) + " does not fit in 64 bits");
  return x.get_si();
}

ordered_json lattice_value(const Lattice& L) {
  ordered_json j;
  j["n"] = L.rank();
  j["N"] = L.N;
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < L.T.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < L.T.cols(); ++c)
      row.push_back(checked_small(L.T(r, c), "matrix entry"));
    rows.push_back(std::move(row));
  }
  j["T"] = std::move(rows);
  if (!L.label.empty())
    j["label"] = L.label;
  return j;
}

Lattice lattice_of(const ordered_json& j) {
  if (!j.is_object())
    throw ParseError("lattice JSON must be an object");
  for (const char* key : {"n", "N", "T"})
    if (!j.contains(key))
      throw ParseError(std::string("lattice JSON lacks \"") + key + "\"");
  std::int64_t n = as_int(j["n"], "n");
  std::int64_t N = as_int(j["N"], "N");
  if (n < 0)
    throw ParseError("n must be non-negative");
  const ordered_json& rows = j["T"];
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != n)
    throw ParseError("T must have n rows");
  IntMatrix T(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || static_cast<std::int64_t>(rows[r].size()) != n)
      throw ParseError("row " + std::to_string(r + 1) + " of T must have n entries");
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      T(r, c) = static_cast<long>(as_int(rows[r][c], "matrix entry"));
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw ParseError("label must be a string");
    label = j["label"].get<std::string>();
  }
  Lattice L(std::move(T), N, std::move(label));
  validate_lattice(L);
  return L;
}

// Schema violations reported by the JSON library become ParseError.
template<typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace

std::string lattice_to_json(const Lattice& L) {
  return lattice_value(L).dump(2);
}

Lattice lattice_from_json(const std::string& text) {
  return guarded([&] { return lattice_of(parse_json(text)); });
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open lattice file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return lattice_from_json(ss.str());
}

std::string result_to_json(const CohomologyResult& r, bool primary) {
  ordered_json j;
  ordered_json degrees = ordered_json::array();
  for (std::size_t k = 0; k < r.groups.size(); ++k)
    degrees.push_back({{"k", k},
                       {"group", primary ? r.groups[k].to_primary_string()
                                         : r.groups[k].to_string()}});
  j["degrees"] = std::move(degrees);
  j["status"] = r.status.proved ? "proved" : "conjectural";
  if (!r.status.reason.empty())
    j["reason"] = r.status.reason;
  j["periodic_from"] = r.periodic_from;
  return j.dump(2);
}

CohomologyResult result_from_json(const std::string& text) {
  return guarded([&] {
    ordered_json j = parse_json(text);
    if (!j.is_object() || !j.contains("degrees") || !j["degrees"].is_array() ||
        !j.contains("status") || !j.contains("periodic_from"))
      throw ParseError("result JSON needs degrees, status and periodic_from");
    CohomologyResult r;
    for (const auto& d : j["degrees"]) {
      if (as_int(d.at("k"), "k") != static_cast<std::int64_t>(r.groups.size()))
        throw ParseError("degrees must be listed as k = 0, 1, 2, ...");
      r.groups.push_back(AbelianGroup::parse(d.at("group").get<std::string>()));
    }
    std::string status = j["status"].get<std::string>();
    if (status != "proved" && status != "conjectural")
      throw ParseError("status must be \"proved\" or \"conjectural\"");
    r.status.proved = status == "proved";
    if (j.contains("reason"))
      r.status.reason = j["reason"].get<std::string>();
    r.periodic_from = static_cast<int>(as_int(j["periodic_from"], "periodic_from"));
    return r;
  });
}

std::string tau_to_json(const TauAction& tau) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < tau.rank(); ++i) {
    ordered_json terms = ordered_json::array();
    for (int k = 0; k < tau.rank(); ++k)
      for (const auto& [m, c] : tau.images(k, i).terms())
        terms.push_back({{"coeff", checked_small(c, "coefficient")},
                         {"exp", m},
                         {"gen", k + 1}});
    rows.push_back({{"i", i + 1}, {"terms", std::move(terms)}});
  }
  return rows.dump(2);
}

TauAction tau_from_json(const std::string& text, const Lattice& fallback) {
  return guarded([&] {
    ordered_json j = parse_json(text);
    TauAction tau;
    tau.lattice = fallback;
    ordered_json rows;
    if (j.is_object()) {
      if (j.contains("lattice"))
        tau.lattice = lattice_of(j["lattice"]);
      if (!j.contains("tau"))
        throw ParseError("tau JSON object lacks \"tau\"");
      rows = j["tau"];
    } else {
      rows = j;
    }
    if (!rows.is_array())
      throw ParseError("tau must be an array of rows");
    const int n = tau.lattice.rank();
    tau.images = GrMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& row : rows) {
      std::int64_t i = as_int(row.at("i"), "i");
      if (i < 1 || i > n || seen[static_cast<std::size_t>(i - 1)])
        throw ParseError("row index i = " + std::to_string(i) + " invalid or repeated");
      seen[static_cast<std::size_t>(i - 1)] = true;
      for (const auto& t : row.at("terms")) {
        std::int64_t gen = as_int(t.at("gen"), "gen");
        if (gen < 1 || gen > n)
          throw ParseError("gen = " + std::to_string(gen) + " out of range");
        const auto& exp = t.at("exp");
        if (!exp.is_array() || static_cast<int>(exp.size()) != n)
          throw ParseError("exp must have n entries");
        Monomial m;
        for (const auto& e : exp)
          m.push_back(as_int(e, "exponent"));
        tau.images(static_cast<std::size_t>(gen - 1), static_cast<std::size_t>(i - 1)) +=
          GroupRingElement::monomial(std::move(m),
                                     Int(static_cast<long>(as_int(t.at("coeff"), "coeff"))));
      }
    }
    return tau;
  });
}

std::string comparison_to_json(const ComparisonReport& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"k", row.k},
                    {"formula", row.formula.to_string()},
                    {"oracle", row.oracle.to_string()},
                    {"match", row.match}});
  return rows.dump(2);
}

} // namespace crystcoh
