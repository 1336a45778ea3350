// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "levyfield/cumulant.hpp"
#include "levyfield/monoid.hpp"
#include "levyfield/report.hpp"

namespace levyfield {

struct QuadrupleResiduals {
  double gram_identity = 0.0;   // worst deviation of <k*(a), k(c)> from the lambda differences
  double cocycle_lsq = 0.0;     // worst least-squares residual of the j solve
  double min_gram_eigenvalue = 0.0;
  bool forced = false;          // built from an invalid cumulant under force
};

/// The canonical quadruple (lambda, k, k*, j): scalar part lambda(b), vector
/// cocycle k(b) in a Euclidean space of dimension dimK, and a unital
/// *-representation j(b) on that space, tied together by
///   kstar(a) k(c) = lambda(a c) - lambda(a) - lambda(c)
///   j(a) k(c)     = k(a c) - k(a)
///   kstar(a) j(c) = kstar(a c) - kstar(c)
/// with kstar(a) the conjugate transpose of k(inv(a)).
class CanonicalQuadruple {
 public:
  CanonicalQuadruple(const StarMonoid& m, double mu, int dim_k,
                     std::vector<Eigen::VectorXcd> k, std::vector<Eigen::MatrixXcd> j,
                     std::vector<cplx> lambda, Eigen::VectorXd gram_eigenvalues,
                     QuadrupleResiduals residuals, double rank_tol);

  const StarMonoid& monoid() const { return *m_; }
  double mu() const { return mu_; }
  int dim_k() const { return dim_k_; }

  const Eigen::VectorXcd& k(int b) const { return k_.at(b); }
  /// Row vector kstar(b) = k(inv(b))^H.
  Eigen::RowVectorXcd kstar(int b) const { return k_.at(m_->involution(b)).adjoint(); }
  const Eigen::MatrixXcd& j(int b) const { return j_.at(b); }
  cplx lambda(int b) const { return lambda_.at(b); }

  const Eigen::VectorXd& gram_eigenvalues() const { return gram_eigenvalues_; }
  const QuadrupleResiduals& residuals() const { return residuals_; }
  double rank_tol() const { return rank_tol_; }

  /// <kstar(a), k(c)> as a scalar.
  cplx gram_product(int a, int c) const { return k_.at(m_->involution(a)).dot(k_.at(c)); }

 private:
  const StarMonoid* m_;
  double mu_;
  int dim_k_;
  std::vector<Eigen::VectorXcd> k_;
  std::vector<Eigen::MatrixXcd> j_;
  std::vector<cplx> lambda_;
  Eigen::VectorXd gram_eigenvalues_;
  QuadrupleResiduals residuals_;
  double rank_tol_;
};

/// Kolmogorov-factorizes the weighted centered Gram kernel of a valid
/// cumulant and solves the cocycle relation for j by least squares over the
/// spanning family {k(c)}.
///
/// Eigenvalues at or below rank_tol * max(largest eigenvalue, 1) are
/// dropped; dimK is the retained rank. A negative eigenvalue beyond that
/// tolerance, or a cocycle residual above it, throws unless force is set;
/// under force both are recorded in the residuals and construction
/// proceeds on the positive part of the spectrum.
CanonicalQuadruple build_canonical_quadruple(const Cumulant& l, double mu,
                                             double rank_tol = 1e-9, bool force = false);

/// Triangular representation of the quadruple on C + K + C:
///
///   block(b) = [ 1   kstar(b)   lambda(b) ]
///              [ 0     j(b)        k(b)   ]
///              [ 0      0           1     ]
///
/// carrying the indefinite pairing (x | y) = x^H g y with the metric g that
/// swaps the two scalar corners and is the identity on K.
class MinkowskiRep {
 public:
  explicit MinkowskiRep(CanonicalQuadruple quadruple);

  const CanonicalQuadruple& quadruple() const { return quad_; }
  const StarMonoid& monoid() const { return quad_.monoid(); }
  int dim_k() const { return quad_.dim_k(); }
  int dim() const { return quad_.dim_k() + 2; }

  const Eigen::MatrixXcd& block(int b) const { return blocks_.at(b); }
  const Eigen::MatrixXd& metric() const { return metric_; }

  /// Column vector e with unit in the last slot; the distinguished vector of
  /// zero pseudo-norm. Its dual row (1, 0, ..., 0) reads lambda back:
  /// dual_evec() * block(b) * evec() = lambda(b).
  Eigen::VectorXcd evec() const;
  Eigen::RowVectorXcd dual_evec() const;

  /// Indefinite pairing (x | y) = x^H g y.
  cplx pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;

 private:
  CanonicalQuadruple quad_;
  std::vector<Eigen::MatrixXcd> blocks_;
  Eigen::MatrixXd metric_;
};

MinkowskiRep assemble_minkowski(CanonicalQuadruple quadruple);

/// Pseudo-Euclidean adjoint g * block(b)^H * g; equals block(inv(b)) for a
/// faithful construction.
Eigen::MatrixXcd minkowski_adjoint(const MinkowskiRep& rep, int b);

/// Checks every identity of the representation, reporting the worst error
/// per identity: unitality, multiplicativity over all element pairs, the
/// dagger property, the Gram identity, both cocycle identities, Hermitian
/// lambda, the lambda readback through e, and the null pairing of e.
RunReport verify_representation(const MinkowskiRep& rep, double tol = 1e-9);

/// Seminorm of a K-vector through the representation: |j(h) k|.
double polynorm(const MinkowskiRep& rep, const Eigen::VectorXcd& k, int h);

}  // namespace levyfield
