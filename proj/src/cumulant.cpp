// Copyright (c) the levyfield developers.
// SPDX-License-Identifier: Apache-2.0

#include "levyfield/cumulant.hpp"

#include <algorithm>
#include <cmath>

namespace levyfield {

Cumulant::Cumulant(const StarMonoid& m, std::vector<cplx> values)
    : m_(&m), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != m.size())
    throw Error("cumulant over '" + m.name() + "': expected " + std::to_string(m.size()) +
                " values, got " + std::to_string(values_.size()));
}

Cumulant Cumulant::from_values(const StarMonoid& m, const std::map<std::string, cplx>& values) {
  std::vector<cplx> v(m.size());
  std::vector<bool> seen(m.size(), false);
  for (const auto& [id, z] : values) {
    const int b = m.index(id);
    v[b] = z;
    seen[b] = true;
  }
  for (int b = 0; b < m.size(); ++b)
    if (!seen[b])
      throw Error("cumulant over '" + m.name() + "': missing value for element '" + m.id(b) + "'");
  return Cumulant(m, std::move(v));
}

double Cumulant::max_abs() const {
  double s = 0.0;
  for (const auto& z : values_) s = std::max(s, std::abs(z));
  return s;
}

Cumulant Cumulant::scaled(double t) const {
  std::vector<cplx> v(values_);
  for (auto& z : v) z *= t;
  return Cumulant(*m_, std::move(v));
}

Cumulant Cumulant::plus(const Cumulant& other) const {
  if (!m_->same_as(other.monoid())) throw Error("cumulant sum: different monoids");
  std::vector<cplx> v(values_);
  for (int b = 0; b < m_->size(); ++b) v[b] += other.value(b);
  return Cumulant(*m_, std::move(v));
}

Eigen::MatrixXcd full_gram(const Cumulant& l) {
  const StarMonoid& m = l.monoid();
  const int n = m.size();
  Eigen::MatrixXcd g(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      g(a, c) = l.value(m.star(a, c)) - l.value(a) - l.value(m.involution(c));
  return g;
}

Eigen::MatrixXcd reduced_gram(const Cumulant& l) {
  const StarMonoid& m = l.monoid();
  const int n = m.size();
  const int u = m.unit();
  Eigen::MatrixXcd g(n - 1, n - 1);
  int i = 0;
  for (int a = 0; a < n; ++a) {
    if (a == u) continue;
    int j = 0;
    for (int c = 0; c < n; ++c) {
      if (c == u) continue;
      g(i, j) = l.value(m.star(a, c)) - l.value(a) - l.value(m.involution(c));
      ++j;
    }
    ++i;
  }
  return g;
}

CumulantReport validate_cumulant(const Cumulant& l, double tol) {
  const StarMonoid& m = l.monoid();
  CumulantReport r;
  r.unit_zero = l.value(m.unit()) == cplx{0.0, 0.0};

  double herm = 0.0;
  for (int b = 0; b < m.size(); ++b)
    herm = std::max(herm, std::abs(l.value(m.involution(b)) - std::conj(l.value(b))));
  r.hermitian_error = herm;
  r.hermitian = herm <= tol * std::max(1.0, l.max_abs());

  if (m.size() > 1) {
    Eigen::MatrixXcd g = reduced_gram(l);
    // The eigensolver reads only one triangle; symmetrize so a slightly
    // non-Hermitian l still yields a meaningful spectrum for the report.
    Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    r.min_gram_eigenvalue = es.eigenvalues().minCoeff();
    r.gram_scale = es.eigenvalues().cwiseAbs().maxCoeff();
  } else {
    r.min_gram_eigenvalue = 0.0;
    r.gram_scale = 0.0;
  }
  const bool psd = r.min_gram_eigenvalue >= -tol * std::max(1.0, r.gram_scale);
  r.valid = r.unit_zero && r.hermitian && psd;
  return r;
}

GeneratingState::GeneratingState(const StarMonoid& m, std::vector<cplx> values, double mu)
    : m_(&m), values_(std::move(values)), mu_(mu) {
  if (static_cast<int>(values_.size()) != m.size())
    throw Error("state over '" + m.name() + "': wrong number of values");
}

GeneratingState generating_state(const Cumulant& l, double mu, double tol, bool force) {
  if (mu < 0.0) throw Error("generating_state: weight must be nonnegative");
  if (!force) {
    CumulantReport r = validate_cumulant(l, tol);
    if (!r.valid)
      throw Error("generating_state: cumulant is not valid (min Gram eigenvalue " +
                  std::to_string(r.min_gram_eigenvalue) + "); pass force to exponentiate anyway");
  }
  const StarMonoid& m = l.monoid();
  std::vector<cplx> v(m.size());
  for (int b = 0; b < m.size(); ++b) v[b] = std::exp(mu * l.value(b));
  return GeneratingState(m, std::move(v), mu);
}

GeneratingState pointwise_product(const GeneratingState& a, const GeneratingState& b) {
  if (!a.monoid().same_as(b.monoid())) throw Error("pointwise_product: different monoids");
  const int n = a.monoid().size();
  std::vector<cplx> v(n);
  for (int i = 0; i < n; ++i) v[i] = a.value(i) * b.value(i);
  return GeneratingState(a.monoid(), std::move(v), a.mu() + b.mu());
}

PositivityReport check_positive_definite(const GeneratingState& phi, double tol) {
  const StarMonoid& m = phi.monoid();
  const int n = m.size();
  Eigen::MatrixXcd mat(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) mat(a, c) = phi.value(m.star(a, c));

  const double scale0 = std::max(1.0, mat.cwiseAbs().maxCoeff());
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol * scale0)
    throw Error("check_positive_definite: kernel is not Hermitian (deviation " +
                std::to_string(herm) + "); the state values are inconsistent");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (mat + mat.adjoint()));
  PositivityReport r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.scale = es.eigenvalues().cwiseAbs().maxCoeff();
  r.pass = r.min_eigenvalue >= -tol * std::max(1.0, r.scale);
  return r;
}

}  // namespace levyfield
