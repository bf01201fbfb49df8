// JSON forms of lattices, cohomology results, compatible actions and
// oracle comparisons. All writers emit two-space indented JSON with a fixed
// key order, so equal values serialize to identical bytes.

#ifndef CRYSTCOH_IO_HPP_
#define CRYSTCOH_IO_HPP_

#include "cohomology.hpp"
#include "koszul.hpp"
#include "oracle.hpp"

#include <string>

namespace crystcoh {

/// Malformed or schema-violating JSON input.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": int, "N": int, "T": [[int]], "label": string?}
std::string lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const std::string& text);
Lattice load_lattice_file(const std::string& path);

/// {"degrees": [{"k", "group"}], "status", "reason"?, "periodic_from"}
std::string result_to_json(const CohomologyResult& r, bool primary = false);
CohomologyResult result_from_json(const std::string& text);

/// [{"i": int, "terms": [{"coeff": int, "exp": [int], "gen": int}]}], with i
/// and gen 1-based: tau(t)(a_i) = sum coeff * x^exp * a_gen.
std::string tau_to_json(const TauAction& tau);
/// Accepts the row array, or {"lattice": {...}, "tau": [...]}. The lattice
/// is taken from the object when present, otherwise from fallback.
TauAction tau_from_json(const std::string& text, const Lattice& fallback);

/// [{"k", "formula", "oracle", "match"}]
std::string comparison_to_json(const ComparisonReport& r);

} // namespace crystcoh

#endif
