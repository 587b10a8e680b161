#include "quditx/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quditx/error.hpp"

namespace quditx {

std::string to_string(HalfInt m) {
  const int t = m.twice();
  if (t % 2 == 0) return std::to_string(t / 2);
  return std::to_string(t) + "/2";
}

namespace {

constexpr std::array<int, 4> kQuditTwiceM = {3, 1, -1, -3};
constexpr std::array<std::pair<int, int>, 4> kPairTwiceM = {
    {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

void check_index(int index) {
  if (index < 1 || index > 4) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside 1..4");
  }
}

}  // namespace

HalfInt IndexMap::qudit_label(int index) {
  check_index(index);
  return HalfInt::from_twice(kQuditTwiceM[index - 1]);
}

int IndexMap::qudit_index(HalfInt m) {
  for (int i = 0; i < 4; ++i)
    if (kQuditTwiceM[i] == m.twice()) return i + 1;
  throw std::out_of_range("no qudit basis vector with m = " + to_string(m));
}

QubitPair IndexMap::pair_label(int index) {
  check_index(index);
  const auto [m1, m2] = kPairTwiceM[index - 1];
  return {HalfInt::from_twice(m1), HalfInt::from_twice(m2)};
}

int IndexMap::pair_index(const QubitPair& pair) {
  for (int i = 0; i < 4; ++i) {
    if (kPairTwiceM[i].first == pair.first.twice() &&
        kPairTwiceM[i].second == pair.second.twice())
      return i + 1;
  }
  throw std::out_of_range("no two-qubit basis vector |" +
                          to_string(pair.first) + "," +
                          to_string(pair.second) + ">");
}

Complex DensityMatrix4::at(int row, int col) const {
  check_index(row);
  check_index(col);
  return entries_[row - 1][col - 1];
}

void DensityMatrix4::set(int row, int col, Complex value) {
  check_index(row);
  check_index(col);
  entries_[row - 1][col - 1] = value;
}

void check_xstate(const XState& x) {
  const std::array<double, 6> all = {x.d1,       x.d2,       x.d3,
                                     x.d4,       std::abs(x.a), std::abs(x.c)};
  for (double v : all) {
    if (!std::isfinite(v))
      throw Error(ErrorKind::NonFinite, "X-state parameter is not finite");
  }
  const auto diag = x.diagonal();
  for (int i = 0; i < 4; ++i) {
    if (diag[i] < 0.0) {
      std::ostringstream msg;
      msg << "diagonal rho_" << i + 1 << i + 1 << " = " << diag[i]
          << " is negative";
      throw Error(ErrorKind::NegativeDiagonal, msg.str());
    }
  }
  const double tr = x.d1 + x.d2 + x.d3 + x.d4;
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "trace " << tr << " differs from 1";
    throw Error(ErrorKind::TraceNotOne, msg.str());
  }
  if (x.d1 * x.d4 < std::norm(x.a) - kPsdTolerance) {
    throw BlockPositivityError(Block::Outer,
                               "rho_11 rho_44 >= |rho_14|^2 violated");
  }
  if (x.d2 * x.d3 < std::norm(x.c) - kPsdTolerance) {
    throw BlockPositivityError(Block::Inner,
                               "rho_22 rho_33 >= |rho_23|^2 violated");
  }
}

XState new_xstate(double d1, double d2, double d3, double d4, Complex a,
                  Complex c) {
  XState x{d1, d2, d3, d4, a, c};
  check_xstate(x);
  return x;
}

DensityMatrix4 to_matrix(const XState& x) {
  Matrix4 m{};
  m[0][0] = x.d1;
  m[1][1] = x.d2;
  m[2][2] = x.d3;
  m[3][3] = x.d4;
  m[0][3] = x.a;
  m[3][0] = std::conj(x.a);
  m[1][2] = x.c;
  m[2][1] = std::conj(x.c);
  return DensityMatrix4(m);
}

namespace {

bool on_x_pattern(int i, int j) { return i == j || i + j == 3; }

}  // namespace

XState from_matrix(const DensityMatrix4& m, double tol) {
  const ValidationReport report = validate(m);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << "not a density matrix:";
    if (!report.hermitian)
      msg << " hermiticity residual " << report.hermiticity_residual << ";";
    if (!report.unit_trace)
      msg << " trace residual " << report.trace_residual << ";";
    if (!report.positive)
      msg << " smallest eigenvalue " << report.min_eigenvalue << ";";
    throw Error(ErrorKind::InvalidDensityMatrix, msg.str());
  }

  const Matrix4& raw = m.raw();
  std::vector<IndexPair> offending;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!on_x_pattern(i, j) && std::abs(raw[i][j]) > tol)
        offending.emplace_back(i + 1, j + 1);
  if (!offending.empty()) {
    std::ostringstream msg;
    msg << "entries outside the X pattern exceed " << tol << ":";
    for (const auto& [r, c] : offending) msg << " (" << r << "," << c << ")";
    throw NotXShapedError(std::move(offending), msg.str());
  }

  return XState{raw[0][0].real(), raw[1][1].real(), raw[2][2].real(),
                raw[3][3].real(), raw[0][3],        raw[1][2]};
}

SpinOperators spin_operators() {
  SpinOperators ops;
  std::array<double, 4> jz{};
  std::array<double, 4> z1{};
  std::array<double, 4> z2{};
  for (int i = 1; i <= 4; ++i) {
    jz[i - 1] = IndexMap::qudit_label(i).value();
    const auto [m1, m2] = IndexMap::pair_label(i);
    z1[i - 1] = m1.twice();
    z2[i - 1] = m2.twice();
  }
  ops.jz = diagonal_matrix(jz);
  ops.two_jz1 = diagonal_matrix(z1);
  ops.two_jz2 = diagonal_matrix(z2);
  return ops;
}

ValidationReport validate(const DensityMatrix4& m) {
  ValidationReport r;
  const Matrix4& raw = m.raw();

  r.hermiticity_residual = hermiticity_residual(raw);
  r.hermitian = r.hermiticity_residual <= kHermTolerance;

  r.trace_residual = std::abs(trace(raw).real() - 1.0);
  r.unit_trace = r.trace_residual <= kTraceTolerance;

  if (std::isfinite(r.hermiticity_residual) && std::isfinite(r.trace_residual)) {
    const Matrix4 herm_part = 0.5 * (raw + adjoint(raw));
    r.min_eigenvalue = hermitian_eigenvalues(herm_part).min();
    r.positive = r.min_eigenvalue >= -kPsdTolerance;
  } else {
    r.min_eigenvalue = std::nan("");
    r.positive = false;
  }
  return r;
}

std::array<double, 4> random_simplex_point(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::array<double, 4> d{};
  double total = 0.0;
  for (double& v : d) {
    v = expo(rng);
    total += v;
  }
  for (double& v : d) v /= total;
  return d;
}

XState random_xstate(std::mt19937_64& rng) {
  const auto d = random_simplex_point(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double a_mag = unit(rng) * std::sqrt(d[0] * d[3]);
  const double c_mag = unit(rng) * std::sqrt(d[1] * d[2]);
  return XState{d[0], d[1], d[2], d[3], std::polar(a_mag, angle(rng)),
                std::polar(c_mag, angle(rng))};
}

}  // namespace quditx
