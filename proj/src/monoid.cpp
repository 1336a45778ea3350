// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#include "levyfield/monoid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace levyfield {

StarMonoid StarMonoid::from_tables(std::string name,
                                   std::vector<std::string> elements,
                                   const std::string& unit,
                                   const std::vector<std::vector<std::string>>& product,
                                   const std::map<std::string, std::string>& involution) {
  StarMonoid m;
  m.name_ = std::move(name);
  m.elements_ = std::move(elements);
  if (m.elements_.empty()) throw ParseError("monoid '" + m.name_ + "': empty element list");
  for (int i = 0; i < m.size(); ++i) {
    if (!m.index_.emplace(m.elements_[i], i).second)
      throw ParseError("monoid '" + m.name_ + "': duplicate element id '" + m.elements_[i] + "'");
  }

  auto lookup = [&](const std::string& id, const std::string& where) {
    auto it = m.index_.find(id);
    if (it == m.index_.end())
      throw ParseError("monoid '" + m.name_ + "': unknown element id '" + id + "' in " + where);
    return it->second;
  };

  m.unit_ = lookup(unit, "unit");

  const int n = m.size();
  if (static_cast<int>(product.size()) != n)
    throw ParseError("monoid '" + m.name_ + "': product table has " +
                     std::to_string(product.size()) + " rows, expected " + std::to_string(n));
  m.product_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(product[a].size()) != n)
      throw ParseError("monoid '" + m.name_ + "': product row for '" + m.elements_[a] +
                       "' has " + std::to_string(product[a].size()) + " entries, expected " +
                       std::to_string(n));
    for (int c = 0; c < n; ++c)
      m.product_[a][c] = lookup(product[a][c],
                                "product entry (" + m.elements_[a] + "," + m.elements_[c] + ")");
  }

  m.involution_.assign(n, -1);
  for (const auto& [from, to] : involution)
    m.involution_[lookup(from, "involution key")] = lookup(to, "involution of '" + from + "'");
  for (int b = 0; b < n; ++b)
    if (m.involution_[b] < 0)
      throw ParseError("monoid '" + m.name_ + "': missing involution entry for '" +
                       m.elements_[b] + "'");
  return m;
}

int StarMonoid::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw Error("monoid '" + name_ + "': unknown element id '" + id + "'");
  return it->second;
}

std::vector<std::string> StarMonoid::validate() const {
  std::vector<std::string> diags;
  const int n = size();
  auto el = [&](int i) { return elements_[i]; };

  for (int a = 0; a < n; ++a) {
    bool done = false;
    for (int b = 0; b < n && !done; ++b)
      for (int c = 0; c < n && !done; ++c)
        if (product_[product_[a][b]][c] != product_[a][product_[b][c]]) {
          std::ostringstream os;
          os << "associativity violated at (" << el(a) << "," << el(b) << "," << el(c)
             << "): (" << el(a) << "*" << el(b) << ")*" << el(c) << " = "
             << el(product_[product_[a][b]][c]) << " but " << el(a) << "*(" << el(b) << "*"
             << el(c) << ") = " << el(product_[a][product_[b][c]]);
          diags.push_back(os.str());
          done = true;
        }
    if (done) break;
  }

  for (int b = 0; b < n; ++b) {
    if (product_[unit_][b] != b || product_[b][unit_] != b) {
      diags.push_back("unit violated at '" + el(b) + "': " + el(unit_) + "*" + el(b) + " = " +
                      el(product_[unit_][b]) + ", " + el(b) + "*" + el(unit_) + " = " +
                      el(product_[b][unit_]));
      break;
    }
  }

  if (involution_[unit_] != unit_)
    diags.push_back("involution does not fix the unit: inv(" + el(unit_) + ") = " +
                    el(involution_[unit_]));
  for (int b = 0; b < n; ++b) {
    if (involution_[involution_[b]] != b) {
      diags.push_back("involution is not an order-2 map at '" + el(b) + "': inv(inv(" + el(b) +
                      ")) = " + el(involution_[involution_[b]]));
      break;
    }
  }
  for (int a = 0; a < n; ++a) {
    bool done = false;
    for (int c = 0; c < n && !done; ++c)
      if (involution_[product_[a][c]] != product_[involution_[c]][involution_[a]]) {
        diags.push_back("involution is not anti-multiplicative at (" + el(a) + "," + el(c) +
                        "): inv(" + el(a) + "*" + el(c) + ") = " + el(involution_[product_[a][c]]) +
                        " but inv(" + el(c) + ")*inv(" + el(a) + ") = " +
                        el(product_[involution_[c]][involution_[a]]));
        done = true;
      }
    if (done) break;
  }

  // Identities of the derived star operation. Implied by the axioms above,
  // but checked exhaustively so that a broken table is named directly.
  for (int b = 0; b < n; ++b) {
    if (star(b, unit_) != b) {
      diags.push_back("star right unit violated at '" + el(b) + "'");
      break;
    }
    if (star(unit_, star(unit_, b)) != b) {
      diags.push_back("star double-involution violated at '" + el(b) + "'");
      break;
    }
  }
  for (int a = 0; a < n; ++a) {
    bool done = false;
    for (int b = 0; b < n && !done; ++b)
      for (int c = 0; c < n && !done; ++c)
        if (star(unit_, star(star(c, b), a)) != star(a, star(star(unit_, b), c))) {
          diags.push_back("star exchange identity violated at (" + el(a) + "," + el(b) + "," +
                          el(c) + ")");
          done = true;
        }
    if (done) break;
  }
  return diags;
}

AlgebraVector AlgebraVector::delta(const StarMonoid& m, int b) {
  AlgebraVector v(m);
  v.set(b, {1.0, 0.0});
  return v;
}

void AlgebraVector::set(int b, cplx v) {
  if (b < 0 || b >= m_->size())
    throw Error("algebra vector over '" + m_->name() + "': element index out of range");
  if (v == cplx{0.0, 0.0})
    coeff_.erase(b);
  else
    coeff_[b] = v;
}

cplx AlgebraVector::sum() const {
  cplx s{0.0, 0.0};
  for (const auto& [b, v] : coeff_) s += v;
  return s;
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& rhs) {
  if (!m_->same_as(rhs.monoid())) throw Error("algebra vectors over different monoids");
  for (const auto& [b, v] : rhs.coeff_) add(b, v);
  return *this;
}

AlgebraVector& AlgebraVector::operator*=(cplx s) {
  if (s == cplx{0.0, 0.0}) {
    coeff_.clear();
    return *this;
  }
  for (auto& [b, v] : coeff_) v *= s;
  return *this;
}

AlgebraVector convolve(const AlgebraVector& lhs, const AlgebraVector& rhs) {
  const StarMonoid& m = lhs.monoid();
  if (!m.same_as(rhs.monoid()))
    throw Error("convolve: vectors over different monoids ('" + m.name() + "' vs '" +
                rhs.monoid().name() + "')");
  AlgebraVector out(m);
  for (const auto& [a, va] : lhs.support())
    for (const auto& [c, vc] : rhs.support()) out.add(m.star(a, c), va * std::conj(vc));
  return out;
}

AlgebraVector involute(const AlgebraVector& v) {
  const StarMonoid& m = v.monoid();
  AlgebraVector out(m);
  for (const auto& [b, vb] : v.support()) out.add(m.involution(b), std::conj(vb));
  return out;
}

double distance(const AlgebraVector& a, const AlgebraVector& b) {
  double d = 0.0;
  for (const auto& [i, v] : a.support()) d = std::max(d, std::abs(v - b.coeff(i)));
  for (const auto& [i, v] : b.support()) d = std::max(d, std::abs(v - a.coeff(i)));
  return d;
}

StarMonoid cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: order must be positive");
  std::vector<std::string> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = std::to_string(i);
  std::vector<std::vector<std::string>> prod(n, std::vector<std::string>(n));
  std::map<std::string, std::string> inv;
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) prod[a][c] = ids[(a + c) % n];
    inv[ids[a]] = ids[(n - a) % n];
  }
  return StarMonoid::from_tables("z" + std::to_string(n), ids, ids[0], prod, inv);
}

StarMonoid boolean_filter() {
  return StarMonoid::from_tables("boolean", {"u", "p"}, "u",
                                 {{"u", "p"}, {"p", "p"}}, {{"u", "u"}, {"p", "p"}});
}

StarMonoid symmetric_group_3() {
  // Permutations of {0,1,2} as images (p0 p1 p2); composition (p*q)(x) = p(q(x)).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  const std::vector<std::string> ids = {"e", "r", "rr", "s01", "s12", "s02"};
  auto find = [&](const std::array<int, 3>& p) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw Error("symmetric_group_3: composition escaped the element list");
  };
  const int n = 6;
  std::vector<std::vector<std::string>> prod(n, std::vector<std::string>(n));
  std::map<std::string, std::string> inv;
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      std::array<int, 3> pc{};
      for (int x = 0; x < 3; ++x) pc[x] = perms[a][perms[c][x]];
      prod[a][c] = ids[find(pc)];
    }
    std::array<int, 3> pi{};
    for (int x = 0; x < 3; ++x) pi[perms[a][x]] = x;
    inv[ids[a]] = ids[find(pi)];
  }
  return StarMonoid::from_tables("s3", ids, ids[0], prod, inv);
}

}  // namespace levyfield
