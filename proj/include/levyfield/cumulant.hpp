// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "levyfield/common.hpp"
#include "levyfield/monoid.hpp"

namespace levyfield {

/// A complex functional on a monoid, candidate exponent density for an
/// infinitely divisible state: Hermitian, vanishing at the unit, and
/// conditionally positive definite. Validity is decided by
/// validate_cumulant; the type itself only stores a total value table.
class Cumulant {
 public:
  Cumulant(const StarMonoid& m, std::vector<cplx> values);

  /// From an id-keyed map; every element must be present exactly once.
  static Cumulant from_values(const StarMonoid& m, const std::map<std::string, cplx>& values);

  static Cumulant zero(const StarMonoid& m) {
    return Cumulant(m, std::vector<cplx>(m.size(), cplx{0.0, 0.0}));
  }

  const StarMonoid& monoid() const { return *m_; }
  cplx value(int b) const { return values_.at(b); }
  const std::vector<cplx>& values() const { return values_; }

  double max_abs() const;

  Cumulant scaled(double t) const;
  Cumulant plus(const Cumulant& other) const;

 private:
  const StarMonoid* m_;
  std::vector<cplx> values_;
};

/// Centered Gram kernel over the elements other than the unit, in element
/// order with the unit row/column removed:
///   G[a, c] = l(a * inv(c)) - l(a) - l(inv(c)).
/// Hermitian whenever l is; conditional positivity of l is equivalent to
/// G being positive semidefinite.
Eigen::MatrixXcd reduced_gram(const Cumulant& l);

/// Same kernel over all elements; the unit row and column vanish identically.
Eigen::MatrixXcd full_gram(const Cumulant& l);

struct CumulantReport {
  bool hermitian = false;
  bool unit_zero = false;
  double hermitian_error = 0.0;
  double min_gram_eigenvalue = 0.0;
  double gram_scale = 0.0;  // largest eigenvalue magnitude
  bool valid = false;
};

/// Decides validity: unit value exactly zero, Hermitian within tol, and the
/// centered Gram matrix PSD within tol relative to its spectral scale.
CumulantReport validate_cumulant(const Cumulant& l, double tol = 1e-9);

/// Pointwise exponential of a weighted cumulant: phi(b) = exp(mu * l(b)).
class GeneratingState {
 public:
  GeneratingState(const StarMonoid& m, std::vector<cplx> values, double mu = 0.0);

  const StarMonoid& monoid() const { return *m_; }
  cplx value(int b) const { return values_.at(b); }
  double mu() const { return mu_; }

 private:
  const StarMonoid* m_;
  std::vector<cplx> values_;
  double mu_;
};

/// phi(b) = exp(mu * l(b)). Requires mu >= 0 and a valid cumulant; pass
/// force to exponentiate an invalid one anyway.
GeneratingState generating_state(const Cumulant& l, double mu, double tol = 1e-9,
                                 bool force = false);

/// Pointwise product; the semigroup law in the weight.
GeneratingState pointwise_product(const GeneratingState& a, const GeneratingState& b);

struct PositivityReport {
  double min_eigenvalue = 0.0;
  double scale = 0.0;
  bool pass = false;
};

/// Positivity of the full kernel M[a, c] = phi(star(a, c)) over all
/// elements. Throws if M is not Hermitian within tol (inconsistent phi).
PositivityReport check_positive_definite(const GeneratingState& phi, double tol = 1e-9);

}  // namespace levyfield
