// Copyright 2026 The ri-thermalizer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RI_LINALG_HPP
#define RI_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ri/error.hpp"

namespace ri {

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
// Hermitian, positive semidefinite, unit trace. Checked with is_density_matrix.
using DensityMatrix = ComplexMatrix;

template <typename Real>
struct HermitianEigenDecomposition {
  RealVectorT<Real> eigenvalues;  // ascending
  ComplexMatrixT<Real> basis;     // columns are eigenvectors
  int sweeps = 0;
};

struct JacobiOptions {
  double relative_tolerance = 1e-13;  // off-diagonal Frobenius norm / ||H||_F
  int max_sweeps = 100;
};

// (i_a*d_b + i_b, j_a*d_b + j_b) -> a(i_a, j_a) * b(i_b, j_b)
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.template cast<Scalar>();
    }
  }
  return out;
}

namespace detail {

inline void require_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols || rows == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " expects a non-empty square matrix, got " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

// Rotation G acting on columns (p, q); A <- G^H A G zeroes A(p, q).
template <typename Real>
void jacobi_rotate(ComplexMatrixT<Real>& a, ComplexMatrixT<Real>& v, Eigen::Index p,
                   Eigen::Index q) {
  using C = std::complex<Real>;
  const C apq = a(p, q);
  const Real mag = std::abs(apq);
  if (mag == Real(0)) return;
  const C phase = apq / mag;
  const Real zeta = (a(q, q).real() - a(p, p).real()) / (Real(2) * mag);
  Real t;
  if (std::abs(zeta) > Real(1e150)) {
    t = Real(1) / (Real(2) * zeta);
  } else {
    t = (zeta >= Real(0) ? Real(1) : Real(-1)) /
        (std::abs(zeta) + std::sqrt(zeta * zeta + Real(1)));
  }
  const Real c = Real(1) / std::sqrt(Real(1) + t * t);
  const Real s = t * c;
  const C gpp(c, 0);
  const C gpq = s * phase;
  const C gqp = -s * std::conj(phase);
  const C gqq(c, 0);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const C akp = a(k, p);
    const C akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const C apk = a(p, k);
    const C aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = C(0);
  a(q, p) = C(0);
  a(p, p) = C(a(p, p).real(), 0);
  a(q, q) = C(a(q, q).real(), 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    const C vkp = v(k, p);
    const C vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

template <typename Real>
Real off_diagonal_norm(const ComplexMatrixT<Real>& a) {
  Real sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) sum += std::norm(a(i, j));
  }
  return std::sqrt(Real(2) * sum);
}

}  // namespace detail

// Cyclic Jacobi diagonalisation of a complex Hermitian matrix.
template <typename Derived>
auto hermitian_eigen(const Eigen::MatrixBase<Derived>& h, const JacobiOptions& options = {}) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  detail::require_square(h.rows(), h.cols(), "hermitian_eigen");
  const ComplexMatrixT<Real> m = h.template cast<C>();
  const Eigen::Index n = m.rows();

  const Real max_abs = m.cwiseAbs().maxCoeff();
  if (!std::isfinite(max_abs)) {
    throw Error(ErrorCode::InvalidArgument, "hermitian_eigen: non-finite entries");
  }
  const Real deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > Real(1e-10) * max_abs) {
    throw Error(ErrorCode::NotHermitian,
                "max |h - h^H| = " + std::to_string(static_cast<double>(deviation)));
  }

  ComplexMatrixT<Real> a = (m + m.adjoint()) / Real(2);
  ComplexMatrixT<Real> v = ComplexMatrixT<Real>::Identity(n, n);
  const Real threshold = Real(options.relative_tolerance) * m.norm();

  HermitianEigenDecomposition<Real> out;
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= threshold) {
      out.sweeps = sweep;
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "hermitian_eigen: no convergence after " + std::to_string(options.max_sweeps) +
                    " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });
  out.eigenvalues.resize(n);
  out.basis.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src).real();
    out.basis.col(k) = v.col(src);
  }
  return out;
}

// exp(-i h tau) through the spectral decomposition of h.
template <typename Derived>
auto unitary_from_hamiltonian(const Eigen::MatrixBase<Derived>& h,
                              typename Eigen::NumTraits<typename Derived::Scalar>::Real tau) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  const auto eig = hermitian_eigen(h);
  Eigen::Matrix<C, Eigen::Dynamic, 1> phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(Real(1), -eig.eigenvalues(k) * tau);
  }
  ComplexMatrixT<Real> u = eig.basis * phases.asDiagonal() * eig.basis.adjoint();
  return u;
}

// Tr_B of a matrix on H_A (x) H_B with dim(H_A) = d_sys, dim(H_B) = d_anc.
template <typename Derived>
auto partial_trace_second(const Eigen::MatrixBase<Derived>& rho, Eigen::Index d_sys,
                          Eigen::Index d_anc) {
  using Scalar = typename Derived::Scalar;
  if (d_sys < 1 || d_anc < 1 || rho.rows() != d_sys * d_anc || rho.cols() != d_sys * d_anc) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_trace_second: matrix is " + std::to_string(rho.rows()) + "x" +
                    std::to_string(rho.cols()) + ", expected " +
                    std::to_string(d_sys * d_anc));
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(d_sys, d_sys);
  for (Eigen::Index i = 0; i < d_sys; ++i) {
    for (Eigen::Index j = 0; j < d_sys; ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < d_anc; ++k) acc += rho(i * d_anc + k, j * d_anc + k);
      out(i, j) = acc;
    }
  }
  return out;
}

// 1/2 sum |eig(rho - sigma)|
template <typename DerivedA, typename DerivedB>
auto trace_distance(const Eigen::MatrixBase<DerivedA>& rho,
                    const Eigen::MatrixBase<DerivedB>& sigma) {
  using Real = typename Eigen::NumTraits<typename DerivedA::Scalar>::Real;
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "trace_distance: dimensions differ");
  }
  const auto eig = hermitian_eigen(rho - sigma);
  return static_cast<Real>(eig.eigenvalues.cwiseAbs().sum() / Real(2));
}

// Trace distance between commuting diagonal states given by their populations.
template <typename DerivedA, typename DerivedB>
auto population_distance(const Eigen::MatrixBase<DerivedA>& p,
                         const Eigen::MatrixBase<DerivedB>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::DimensionMismatch, "population_distance: lengths differ");
  }
  return (p - q).cwiseAbs().sum() / 2;
}

template <typename Derived>
bool is_density_matrix(const Eigen::MatrixBase<Derived>& rho, double tolerance = 1e-10) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) return false;
  if (!rho.allFinite()) return false;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) return false;
  if (std::abs(rho.trace() - typename Derived::Scalar(1)) > tolerance) return false;
  return hermitian_eigen(rho).eigenvalues.minCoeff() >= -tolerance;
}

}  // namespace ri

#endif  // RI_LINALG_HPP
