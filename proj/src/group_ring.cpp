#include "crystcoh/group_ring.hpp"

#include <stdexcept>

namespace crystcoh {

GroupRingElement GroupRingElement::one(int n) {
  return monomial(Monomial(static_cast<std::size_t>(n), 0));
}

GroupRingElement GroupRingElement::monomial(Monomial exps, const Int& coeff) {
  GroupRingElement e;
  if (coeff != 0)
    e.terms_.emplace(std::move(exps), coeff);
  return e;
}

GroupRingElement GroupRingElement::variable(int n, int i, std::int64_t power) {
  if (i < 0 || i >= n)
    throw std::out_of_range("GroupRingElement::variable: index out of range");
  Monomial m(static_cast<std::size_t>(n), 0);
  m[static_cast<std::size_t>(i)] = power;
  return monomial(std::move(m));
}

void GroupRingElement::add_term(const Monomial& m, const Int& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  for (const auto& [m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  return r += o;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  return r -= o;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      if (m1.size() != m2.size())
        throw std::invalid_argument("group ring product: variable count mismatch");
      Monomial m = m1;
      for (std::size_t i = 0; i < m.size(); ++i)
        m[i] += m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

GroupRingElement GroupRingElement::operator*(const Int& c) const {
  if (c == 0)
    return {};
  GroupRingElement r = *this;
  for (auto& [m, coeff] : r.terms_)
    coeff *= c;
  return r;
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const auto& [m, c] : terms_)
    s += c;
  return s;
}

GroupRingElement GroupRingElement::twist(const IntMatrix& T) const {
  GroupRingElement r;
  const std::size_t n = T.rows();
  for (const auto& [m, c] : terms_) {
    if (m.size() != n)
      throw std::invalid_argument("twist: variable count != lattice rank");
    Monomial out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      Int s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += T(k, i) * m[i];
      out[k] = s.get_si();
    }
    r.add_term(out, c);
  }
  return r;
}

GroupRingElement GroupRingElement::embed(int offset, int total_n) const {
  GroupRingElement r;
  for (const auto& [m, c] : terms_) {
    Monomial out(static_cast<std::size_t>(total_n), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      out.at(static_cast<std::size_t>(offset) + i) = m[i];
    r.add_term(out, c);
  }
  return r;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] != 1)
        mono += "^" + std::to_string(m[i]);
    }
    Int mag = abs(c);
    std::string term;
    if (mono.empty())
      term = mag.get_str();
    else if (mag == 1)
      term = mono;
    else
      term = mag.get_str() + "*" + mono;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

GrMatrix gr_identity(std::size_t size, int n) {
  GrMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    m(i, i) = GroupRingElement::one(n);
  return m;
}

GrMatrix twist(const GrMatrix& m, const IntMatrix& T) {
  GrMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).twist(T);
  return r;
}

IntMatrix augment(const GrMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = m(i, j).augmentation();
  return r;
}

} // namespace crystcoh
