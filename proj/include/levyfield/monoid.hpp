// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "levyfield/common.hpp"

namespace levyfield {

/// A finite monoid with involution, given extensionally: an ordered element
/// list, a full Cayley table and an involution table. The element order of
/// the input fixes every matrix index ordering downstream.
///
/// The derived Hermitian operation is star(a, c) = a * inv(c); it determines
/// both the product and the involution and is the single operation the rest
/// of the library is written against.
class StarMonoid {
 public:
  StarMonoid() = default;

  /// Builds from id-level tables. Throws ParseError if an id is unknown or a
  /// table entry is missing; semantic axioms are checked by validate().
  static StarMonoid from_tables(std::string name,
                                std::vector<std::string> elements,
                                const std::string& unit,
                                const std::vector<std::vector<std::string>>& product,
                                const std::map<std::string, std::string>& involution);

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int unit() const { return unit_; }

  const std::string& id(int b) const { return elements_.at(b); }
  const std::vector<std::string>& ids() const { return elements_; }

  /// Index of an element id; throws Error for unknown ids.
  int index(const std::string& id) const;
  bool has(const std::string& id) const { return index_.count(id) != 0; }

  int product(int a, int c) const { return product_[a][c]; }
  int involution(int b) const { return involution_[b]; }

  /// star(a, c) = a * inv(c).
  int star(int a, int c) const { return product_[a][involution_[c]]; }

  /// Exhaustive axiom check. Returns one diagnostic per violated axiom,
  /// naming the first offending pair or triple; empty means valid.
  /// Covers associativity, the two-sided unit, the involution laws, and the
  /// three identities of the derived star operation.
  std::vector<std::string> validate() const;

  bool same_as(const StarMonoid& other) const { return this == &other || name_ == other.name_; }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::map<std::string, int> index_;
  int unit_ = 0;
  std::vector<std::vector<int>> product_;
  std::vector<int> involution_;
};

/// Finitely supported complex coefficient vector over a monoid; an element
/// of the enveloping semigroup algebra.
class AlgebraVector {
 public:
  explicit AlgebraVector(const StarMonoid& m) : m_(&m) {}

  static AlgebraVector delta(const StarMonoid& m, int b);

  const StarMonoid& monoid() const { return *m_; }

  cplx coeff(int b) const {
    auto it = coeff_.find(b);
    return it == coeff_.end() ? cplx{0.0, 0.0} : it->second;
  }
  void set(int b, cplx v);
  void add(int b, cplx v) { set(b, coeff(b) + v); }

  /// Support as (element index, coefficient) pairs in element order.
  const std::map<int, cplx>& support() const { return coeff_; }

  /// Sum of all coefficients.
  cplx sum() const;
  /// Sum of conjugated coefficients; equals conj(sum()).
  cplx sum_star() const { return std::conj(sum()); }

  /// Membership in the ideal of zero-sum vectors.
  bool in_ideal(double tol) const { return std::abs(sum()) <= tol; }

  AlgebraVector& operator+=(const AlgebraVector& rhs);
  AlgebraVector& operator*=(cplx s);

 private:
  const StarMonoid* m_;
  std::map<int, cplx> coeff_;
};

/// Hermitian convolution: result_b = sum over star(a, c) = b of
/// lhs_a * conj(rhs_c). delta(unit) is a right identity; convolving
/// delta(unit) from the left involutes.
AlgebraVector convolve(const AlgebraVector& lhs, const AlgebraVector& rhs);

/// Involution on coefficient vectors: result_b = conj(v at inv(b)).
AlgebraVector involute(const AlgebraVector& v);

double distance(const AlgebraVector& a, const AlgebraVector& b);

// Built-in instances, mirroring the bundled corpus files.
StarMonoid cyclic_group(int n);          // b* = inverse
StarMonoid boolean_filter();             // {u, p}, p*p = p, trivial involution
StarMonoid symmetric_group_3();          // b* = inverse

}  // namespace levyfield
