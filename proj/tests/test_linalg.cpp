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

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "ri/linalg.hpp"

using ri::Complex;
using ri::ComplexMatrix;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return (g + g.adjoint()) / 2.0;
}

ComplexMatrix random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix k = ri::kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3));
  CHECK(k.rows() == 6);
  CHECK(max_abs(k - ComplexMatrix::Identity(6, 6)) == 0.0);
}

TEST_CASE("kron index convention") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  ComplexMatrix a(2, 3), b(3, 2);
  for (int i = 0; i < a.size(); ++i) a(i) = Complex(u(rng), u(rng));
  for (int i = 0; i < b.size(); ++i) b(i) = Complex(u(rng), u(rng));
  const ComplexMatrix k = ri::kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (int ia = 0; ia < 2; ++ia)
    for (int ja = 0; ja < 3; ++ja)
      for (int ib = 0; ib < 3; ++ib)
        for (int jb = 0; jb < 2; ++jb) CHECK(k(ia * 3 + ib, ja * 2 + jb) == a(ia, ja) * b(ib, jb));

  ComplexMatrix sx = ComplexMatrix::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 1.0;
  CHECK(ri::kron(sx, sx)(0, 3) == Complex(1.0, 0.0));
}

TEST_CASE("kron builds the free qutrit-qubit Hamiltonian diagonal") {
  const double w = 1.3;
  Eigen::Vector3d hs(-w, 0, w);
  Eigen::Vector2d ha(-w / 2, w / 2);
  const Eigen::MatrixXd h0 = ri::kron(Eigen::MatrixXd(hs.asDiagonal()), Eigen::MatrixXd::Identity(2, 2)) +
                             ri::kron(Eigen::MatrixXd::Identity(3, 3), Eigen::MatrixXd(ha.asDiagonal()));
  const double expected[] = {-1.5 * w, -0.5 * w, -0.5 * w, 0.5 * w, 0.5 * w, 1.5 * w};
  for (int k = 0; k < 6; ++k) CHECK(h0(k, k) == doctest::Approx(expected[k]).epsilon(1e-15));
  CHECK((h0 - Eigen::MatrixXd(h0.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hermitian_eigen on diagonal input returns a permutation basis") {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 0) = 3;
  h(1, 1) = 1;
  h(2, 2) = 2;
  const auto eig = ri::hermitian_eigen(h);
  CHECK(eig.eigenvalues(0) == 1.0);
  CHECK(eig.eigenvalues(1) == 2.0);
  CHECK(eig.eigenvalues(2) == 3.0);
  CHECK(std::abs(eig.basis(1, 0)) == 1.0);
  CHECK(std::abs(eig.basis(2, 1)) == 1.0);
  CHECK(std::abs(eig.basis(0, 2)) == 1.0);
}

TEST_CASE("hermitian_eigen ties keep original index order") {
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(0, 0) = 2;
  h(1, 1) = 1;
  h(2, 2) = 2;
  const auto eig = ri::hermitian_eigen(h);
  CHECK(std::abs(eig.basis(0, 1)) == 1.0);
  CHECK(std::abs(eig.basis(2, 2)) == 1.0);
}

TEST_CASE("hermitian_eigen on a 2x2 flip-flop block") {
  const double w = 0.8, j = 0.3;
  ComplexMatrix h(2, 2);
  h << -w / 2, j, j, -w / 2;
  const auto eig = ri::hermitian_eigen(h);
  CHECK(eig.eigenvalues(0) == doctest::Approx(-w / 2 - j).epsilon(1e-15));
  CHECK(eig.eigenvalues(1) == doctest::Approx(-w / 2 + j).epsilon(1e-15));
}

TEST_CASE("hermitian_eigen satisfies its invariants on random input") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 5, 12, 20}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto eig = ri::hermitian_eigen(h);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    CHECK(max_abs(eig.basis.adjoint() * eig.basis - id) <= 1e-12);
    const ComplexMatrix rebuilt =
        eig.basis * eig.eigenvalues.cast<Complex>().asDiagonal() * eig.basis.adjoint();
    CHECK(max_abs(rebuilt - h) <= 1e-10 * max_abs(h));
    for (int k = 1; k < n; ++k) CHECK(eig.eigenvalues(k - 1) <= eig.eigenvalues(k));

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
    CHECK((oracle.eigenvalues() - eig.eigenvalues).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("hermitian_eigen matches characteristic-polynomial roots for a 3x3 stochastic similarity") {
  // D^{-1/2} M D^{1/2} of a symmetric-izable tridiagonal map; roots of det(M - x) by hand.
  const double p = 0.7, s = 0.4;
  const double a = p * s, b = (1 - p) * s;
  Eigen::Matrix3d m;
  m << 1 - b, a, 0, b, 1 - s, a, 0, b, 1 - a;
  ComplexMatrix sym = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) sym(k, k) = m(k, k);
  sym(0, 1) = sym(1, 0) = std::sqrt(a * b);
  sym(1, 2) = sym(2, 1) = std::sqrt(a * b);
  // Eigenvalues: 1 and 1 - s +/- sqrt(a b) (columns sum to one; remaining pair from the trace and
  // determinant of the deflated 2x2).
  const auto eig = ri::hermitian_eigen(sym);
  CHECK(eig.eigenvalues(0) == doctest::Approx(1 - s - std::sqrt(a * b)).epsilon(1e-14));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1 - s + std::sqrt(a * b)).epsilon(1e-14));
  CHECK(eig.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  ComplexMatrix h = ComplexMatrix::Identity(2, 2);
  h(0, 1) = Complex(0.5, 0);
  CHECK_THROWS_AS(ri::hermitian_eigen(h), ri::Error);
  try {
    ri::hermitian_eigen(h);
  } catch (const ri::Error& e) {
    CHECK(e.code() == ri::ErrorCode::NotHermitian);
  }
}

TEST_CASE("hermitian_eigen reports NoConvergence when the sweep cap is zero") {
  std::mt19937_64 rng(3);
  const ComplexMatrix h = random_hermitian(4, rng);
  ri::JacobiOptions options;
  options.max_sweeps = 0;
  try {
    ri::hermitian_eigen(h, options);
    FAIL("expected NoConvergence");
  } catch (const ri::Error& e) {
    CHECK(e.code() == ri::ErrorCode::NoConvergence);
  }
}

TEST_CASE("unitary at zero time is the identity") {
  std::mt19937_64 rng(5);
  const ComplexMatrix h = random_hermitian(6, rng);
  CHECK(max_abs(ri::unitary_from_hamiltonian(h, 0.0) - ComplexMatrix::Identity(6, 6)) <= 1e-14);
}

TEST_CASE("unitary is unitary and satisfies the group property") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = random_hermitian(8, rng);
    const ComplexMatrix u = ri::unitary_from_hamiltonian(h, 0.9);
    CHECK(max_abs(u * u.adjoint() - ComplexMatrix::Identity(8, 8)) <= 1e-12);
    const ComplexMatrix u1 = ri::unitary_from_hamiltonian(h, 0.37);
    const ComplexMatrix u2 = ri::unitary_from_hamiltonian(h, 1.21);
    const ComplexMatrix u12 = ri::unitary_from_hamiltonian(h, 1.58);
    CHECK(max_abs(u1 * u2 - u12) <= 1e-10);
    // Independent oracle: Eigen's solver for the same spectral formula.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    Eigen::VectorXcd phases(8);
    for (int k = 0; k < 8; ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k) * 0.9);
    const ComplexMatrix oracle = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    CHECK(max_abs(u - oracle) <= 1e-12);
  }
}

TEST_CASE("flip-flop qutrit-qubit unitary has the explicit closed form") {
  const double w = 1.0, j = 0.43, tau = 1.7;
  ComplexMatrix h = ComplexMatrix::Zero(6, 6);
  const double diag[] = {-1.5 * w, -0.5 * w, -0.5 * w, 0.5 * w, 0.5 * w, 1.5 * w};
  for (int k = 0; k < 6; ++k) h(k, k) = diag[k];
  h(1, 2) = h(2, 1) = j;
  h(3, 4) = h(4, 3) = j;
  const ComplexMatrix u = ri::unitary_from_hamiltonian(h, tau);

  const Complex i(0, 1);
  ComplexMatrix expected = ComplexMatrix::Zero(6, 6);
  const Complex plus = std::exp(i * tau * w / 2.0), minus = std::exp(-i * tau * w / 2.0);
  expected(0, 0) = std::exp(1.5 * i * tau * w);
  expected(1, 1) = expected(2, 2) = plus * std::cos(j * tau);
  expected(1, 2) = expected(2, 1) = -i * plus * std::sin(j * tau);
  expected(3, 3) = expected(4, 4) = minus * std::cos(j * tau);
  expected(3, 4) = expected(4, 3) = -i * minus * std::sin(j * tau);
  expected(5, 5) = std::exp(-1.5 * i * tau * w);
  CHECK(max_abs(u - expected) <= 1e-13);
}

TEST_CASE("partial trace of a product state returns the system factor") {
  std::mt19937_64 rng(13);
  const ComplexMatrix rs = random_state(3, rng);
  const ComplexMatrix ra = random_state(2, rng);
  CHECK(max_abs(ri::partial_trace_second(ri::kron(rs, ra), 3, 2) - rs) <= 1e-15);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = psi * psi.adjoint();
  CHECK(max_abs(ri::partial_trace_second(rho, 2, 2) - ComplexMatrix::Identity(2, 2) / 2.0) <= 1e-15);
}

TEST_CASE("partial trace matches the index-sum oracle") {
  std::mt19937_64 rng(17);
  const ComplexMatrix rho = random_state(6, rng);
  const ComplexMatrix reduced = ri::partial_trace_second(rho, 3, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex sum = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
      CHECK(std::abs(reduced(i, j) - sum) == 0.0);
    }
  }
  CHECK(std::abs(reduced.trace() - rho.trace()) <= 1e-13);
}

TEST_CASE("partial trace rejects mismatched dimensions") {
  try {
    ri::partial_trace_second(ComplexMatrix::Identity(6, 6), 4, 2);
    FAIL("expected DimensionMismatch");
  } catch (const ri::Error& e) {
    CHECK(e.code() == ri::ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("trace distance basics") {
  std::mt19937_64 rng(19);
  const ComplexMatrix rho = random_state(4, rng);
  CHECK(ri::trace_distance(rho, rho) == 0.0);
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2), one = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1;
  one(1, 1) = 1;
  CHECK(ri::trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(ri::trace_distance(zero, ComplexMatrix::Identity(3, 3)), ri::Error);
}

TEST_CASE("trace distance of diagonal states is half the l1 population gap") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 1);
  Eigen::VectorXd p(5), q(5);
  for (int k = 0; k < 5; ++k) {
    p(k) = u(rng);
    q(k) = u(rng);
  }
  p /= p.sum();
  q /= q.sum();
  const ComplexMatrix rp = p.cast<Complex>().asDiagonal();
  const ComplexMatrix rq = q.cast<Complex>().asDiagonal();
  CHECK(ri::trace_distance(rp, rq) == doctest::Approx(0.5 * (p - q).cwiseAbs().sum()).epsilon(1e-14));
  CHECK(ri::population_distance(p, q) == doctest::Approx(0.5 * (p - q).cwiseAbs().sum()).epsilon(1e-15));
}

TEST_CASE("trace distance is symmetric and obeys the triangle inequality") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_state(4, rng);
    const ComplexMatrix b = random_state(4, rng);
    const ComplexMatrix c = random_state(4, rng);
    const double ab = ri::trace_distance(a, b);
    CHECK(std::abs(ab - ri::trace_distance(b, a)) <= 1e-15);
    CHECK(ab <= ri::trace_distance(a, c) + ri::trace_distance(c, b) + 1e-12);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0 + 1e-15);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(a - b);
    CHECK(ab == doctest::Approx(0.5 * oracle.eigenvalues().cwiseAbs().sum()).epsilon(1e-13));
  }
}

TEST_CASE("partial trace inverts tensoring with a fixed ancilla state") {
  std::mt19937_64 rng(31);
  const ComplexMatrix ra = random_state(2, rng);
  for (int d : {2, 3, 7}) {
    const ComplexMatrix rs = random_state(d, rng);
    CHECK(max_abs(ri::partial_trace_second(ri::kron(rs, ra), d, 2) - rs) <= 1e-13);
  }
}
