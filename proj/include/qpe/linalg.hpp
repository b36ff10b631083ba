#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qpe {

/// Eigendecomposition of a real symmetric matrix, eigenvalues ascending,
/// eigenvectors orthonormal columns.
struct SpectralDecomp {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Orthogonal projectors onto eigenspaces, eigenvalues grouped by tolerance.
struct ProjectorSet {
  std::vector<double> eigenvalues;        // one representative per group
  std::vector<Eigen::MatrixXd> projectors;

  size_t size() const { return projectors.size(); }
};

/// Symmetric eigendecomposition. Input must be symmetric within 1e-12
/// (max abs asymmetry) and finite.
SpectralDecomp sym_eig(const Eigen::MatrixXd& m);

/// e^{-iMt} v through the spectral decomposition of M. Norm preserving.
Eigen::VectorXcd propagate(const SpectralDecomp& d, double t,
                           const Eigen::VectorXcd& v);

/// Default grouping tolerance: 1e-8 * max(1, spectral radius).
double default_eigen_group_tol(const SpectralDecomp& d);

/// Group eigenvalues within tol of their neighbor and form P^lambda.
ProjectorSet projectors(const SpectralDecomp& d, double tol);
ProjectorSet projectors(const SpectralDecomp& d);

}  // namespace qpe
