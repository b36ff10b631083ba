#include "qpe/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpe {

SpectralDecomp sym_eig(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("sym_eig: matrix not square");
  if (!m.allFinite()) throw std::invalid_argument("sym_eig: non-finite entries");
  double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw std::invalid_argument("sym_eig: matrix not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() == Eigen::Success)
    return SpectralDecomp{solver.eigenvalues(), solver.eigenvectors()};

  // The QL iteration can stall on spectra with large degenerate clusters
  // (adjacency matrices of occupation graphs of strongly regular graphs
  // hit this); divide and conquer handles them.
  int n = static_cast<int>(m.rows());
  Eigen::MatrixXd vectors = m;
  Eigen::VectorXd values(n);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                   vectors.data(), n, values.data());
  if (info != 0)
    throw std::runtime_error("sym_eig: eigensolver failed to converge");
  return SpectralDecomp{values, vectors};
}

Eigen::VectorXcd propagate(const SpectralDecomp& d, double t,
                           const Eigen::VectorXcd& v) {
  if (v.size() != d.eigenvalues.size())
    throw std::invalid_argument("propagate: dimension mismatch");
  Eigen::VectorXcd coeffs = d.eigenvectors.transpose() * v;
  for (int i = 0; i < coeffs.size(); ++i)
    coeffs(i) *= std::exp(std::complex<double>(0.0, -d.eigenvalues(i) * t));
  return d.eigenvectors * coeffs;
}

double default_eigen_group_tol(const SpectralDecomp& d) {
  double radius = 0.0;
  if (d.dim() > 0)
    radius = std::max(std::abs(d.eigenvalues(0)),
                      std::abs(d.eigenvalues(d.dim() - 1)));
  return 1e-8 * std::max(1.0, radius);
}

ProjectorSet projectors(const SpectralDecomp& d, double tol) {
  if (tol <= 0) throw std::invalid_argument("projectors: tol must be positive");
  ProjectorSet out;
  int n = d.dim();
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && d.eigenvalues(end) - d.eigenvalues(end - 1) <= tol) ++end;
    auto block = d.eigenvectors.middleCols(start, end - start);
    out.projectors.push_back(block * block.transpose());
    out.eigenvalues.push_back(d.eigenvalues.segment(start, end - start).mean());
    start = end;
  }
  return out;
}

ProjectorSet projectors(const SpectralDecomp& d) {
  return projectors(d, default_eigen_group_tol(d));
}

}  // namespace qpe
