// Finitely generated abelian groups in invariant-factor form.

#ifndef CRYSTCOH_ABELIAN_GROUP_HPP_
#define CRYSTCOH_ABELIAN_GROUP_HPP_

#include "integer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crystcoh {

/// Z^free_rank + Z/d1 + ... + Z/dm with 2 <= d1 | d2 | ... | dm.
/// Always canonical, so == is isomorphism.
class AbelianGroup {
public:
  AbelianGroup() = default;
  /// Accepts arbitrary cyclic orders; 0 adds a free summand, +-1 is dropped.
  AbelianGroup(std::size_t free_rank, const std::vector<Int>& cyclic_orders);

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }
  static AbelianGroup cyclic(const Int& order) { return {0, {order}}; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Number of cyclic summands in invariant-factor form.
  std::size_t num_invariant_factors() const { return free_rank_ + torsion_.size(); }
  /// Exponent of the torsion subgroup (1 if torsion-free).
  Int torsion_exponent() const;
  Int torsion_order() const;

  AbelianGroup operator+(const AbelianGroup& o) const;
  AbelianGroup& operator+=(const AbelianGroup& o) { return *this = *this + o; }
  bool operator==(const AbelianGroup& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

  /// Divisor-chain rendering: "Z^2 + Z/2 + Z/4", "(Z/2)^6", "0".
  std::string to_string() const;
  /// Prime-power rendering, torsion first: "Z/4 + Z/2 + Z".
  std::string to_primary_string() const;
  /// Inverse of both renderings (also accepts unicode-free variants like
  /// "Z/4+Z").
  static AbelianGroup parse(const std::string& text);

private:
  std::size_t free_rank_ = 0;
  std::vector<Int> torsion_;
};

} // namespace crystcoh

#endif
