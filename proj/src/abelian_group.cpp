#include "crystcoh/abelian_group.hpp"
#include "crystcoh/smith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace crystcoh {

AbelianGroup::AbelianGroup(std::size_t free_rank,
                           const std::vector<Int>& cyclic_orders)
  : free_rank_(free_rank) {
  std::vector<Int> finite;
  for (const Int& d : cyclic_orders) {
    if (d == 0)
      ++free_rank_;
    else if (abs(d) != 1)
      finite.push_back(abs(d));
  }
  if (finite.empty())
    return;
  // canonical chain from the SNF of the diagonal stack
  SnfResult s = smith_normal_form(diagonal_matrix(finite));
  for (const Int& d : s.diagonal())
    if (d != 1)
      torsion_.push_back(d);
}

Int AbelianGroup::torsion_exponent() const {
  return torsion_.empty() ? Int(1) : torsion_.back();
}

Int AbelianGroup::torsion_order() const {
  Int o = 1;
  for (const Int& d : torsion_)
    o *= d;
  return o;
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& o) const {
  std::vector<Int> t = torsion_;
  t.insert(t.end(), o.torsion_.begin(), o.torsion_.end());
  return AbelianGroup(free_rank_ + o.free_rank_, t);
}

namespace {

void append_term(std::string& out, const std::string& base, std::size_t count) {
  if (count == 0)
    return;
  if (!out.empty())
    out += " + ";
  if (count == 1)
    out += base;
  else if (base == "Z")
    out += "Z^" + std::to_string(count);
  else
    out += "(" + base + ")^" + std::to_string(count);
}

// prime power factorisation of a (small or moderately sized) integer
std::vector<std::pair<Int, unsigned>> factor(Int n) {
  std::vector<std::pair<Int, unsigned>> f;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (divides(p, n)) {
      n /= p;
      ++e;
    }
    if (e)
      f.emplace_back(p, e);
  }
  if (n > 1)
    f.emplace_back(n, 1);
  return f;
}

} // namespace

std::string AbelianGroup::to_string() const {
  std::string out;
  append_term(out, "Z", free_rank_);
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i])
      ++j;
    append_term(out, "Z/" + torsion_[i].get_str(), j - i);
    i = j;
  }
  return out.empty() ? "0" : out;
}

std::string AbelianGroup::to_primary_string() const {
  // prime -> exponents, rendered with higher powers first
  std::map<Int, std::vector<unsigned>> parts;
  for (const Int& d : torsion_)
    for (const auto& [p, e] : factor(d))
      parts[p].push_back(e);
  std::string out;
  for (auto& [p, exps] : parts) {
    std::sort(exps.rbegin(), exps.rend());
    for (std::size_t i = 0; i < exps.size();) {
      std::size_t j = i;
      while (j < exps.size() && exps[j] == exps[i])
        ++j;
      Int q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), exps[i]);
      append_term(out, "Z/" + q.get_str(), j - i);
      i = j;
    }
  }
  append_term(out, "Z", free_rank_);
  return out.empty() ? "0" : out;
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty())
    throw std::invalid_argument("empty group string");
  if (s == "0")
    return {};
  std::size_t free = 0;
  std::vector<Int> orders;
  std::size_t pos = 0;
  auto read_uint = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
      ++p;
    if (p == start)
      throw std::invalid_argument("bad group string: " + text);
    return s.substr(start, p - start);
  };
  while (pos < s.size()) {
    bool paren = s[pos] == '(';
    if (paren)
      ++pos;
    if (pos >= s.size() || s[pos] != 'Z')
      throw std::invalid_argument("bad group string: " + text);
    ++pos;
    Int order = 0;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      order = Int(read_uint(pos));
    }
    if (paren) {
      if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("bad group string: " + text);
      ++pos;
    }
    std::size_t count = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      count = std::stoul(read_uint(pos));
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (order == 0)
        ++free;
      else
        orders.push_back(order);
    }
    if (pos < s.size()) {
      if (s[pos] != '+')
        throw std::invalid_argument("bad group string: " + text);
      ++pos;
    }
  }
  return AbelianGroup(free, orders);
}

} // namespace crystcoh
