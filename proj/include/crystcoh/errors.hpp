#ifndef CRYSTCOH_ERRORS_HPP_
#define CRYSTCOH_ERRORS_HPP_

#include <stdexcept>

namespace crystcoh {

/// A computation contradicted a structural guarantee (d^2 != 0, an
/// impossible lattice type, ...). Always a bug or a wrong input convention,
/// never a user typo.
class InternalInconsistency : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace crystcoh

#endif
