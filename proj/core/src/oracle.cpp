// Copyright 2026 The ergogap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergogap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ergogap/error.hpp"

namespace ergogap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_oracle_input(const DenseMatrix& m, std::size_t cap) {
  if (!m.square()) throw Error(ErrorCode::kNonSquare, "eigenvalues need a square matrix");
  if (m.rows() == 0) throw Error(ErrorCode::kEmptyMatrix, "eigenvalues of an empty matrix");
  if (m.rows() > cap) {
    throw Error(ErrorCode::kDimensionCapExceeded, "dimension " + std::to_string(m.rows()) +
                                                      " exceeds oracle cap " + std::to_string(cap));
  }
}

// Similarity scaling by powers of the radix so that row and column norms are
// comparable. Leaves eigenvalues unchanged and improves their accuracy.
void balance(DenseMatrix& a) {
  constexpr double kRadix = std::numeric_limits<double>::radix;
  constexpr double kRadix2 = kRadix * kRadix;
  const std::size_t n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kRadix2;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kRadix2;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Reduction to upper Hessenberg form by elimination with row pivoting.
void to_hessenberg(DenseMatrix& a) {
  const std::size_t n = a.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double x = 0.0;
    std::size_t piv = m;
    for (std::size_t j = m; j < n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        piv = j;
      }
    }
    if (piv != m) {
      for (std::size_t j = m - 1; j < n; ++j) std::swap(a(piv, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, piv), a(j, m));
    }
    if (x == 0.0) continue;
    for (std::size_t i = m + 1; i < n; ++i) {
      double y = a(i, m - 1);
      if (y == 0.0) continue;
      y /= x;
      a(i, m - 1) = 0.0;
      for (std::size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
      for (std::size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
    }
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) a(i, j) = 0.0;
}

double sign_of(double magnitude, double s) { return s >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude); }

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<std::complex<double>> hessenberg_qr(DenseMatrix& a) {
  using std::abs;
  const int n = static_cast<int>(a.rows());
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  auto A = [&a](int i, int j) -> double& {
    return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };

  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += abs(A(i, j));

  constexpr int kMaxIts = 60;
  int nn = n - 1;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 0) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l > 0; --l) {
        s = abs(A(l - 1, l - 1)) + abs(A(l, l));
        if (s == 0.0) s = anorm;
        if (abs(A(l, l - 1)) <= kEps * s) {
          A(l, l - 1) = 0.0;
          break;
        }
      }
      x = A(nn, nn);
      if (l == nn) {
        w[static_cast<std::size_t>(nn--)] = x + t;
      } else {
        y = A(nn - 1, nn - 1);
        double wprod = A(nn, nn - 1) * A(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + wprod;
          z = std::sqrt(abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            w[static_cast<std::size_t>(nn - 1)] = w[static_cast<std::size_t>(nn)] = x + z;
            if (z != 0.0) w[static_cast<std::size_t>(nn)] = x - wprod / z;
          } else {
            w[static_cast<std::size_t>(nn)] = {x + p, -z};
            w[static_cast<std::size_t>(nn - 1)] = std::conj(w[static_cast<std::size_t>(nn)]);
          }
          nn -= 2;
        } else {
          if (its == kMaxIts) {
            throw Error(ErrorCode::kNoConvergence, "QR iteration did not converge");
          }
          if (its % 10 == 0 && its > 0) {
            // Exceptional shift to break cycles (e.g. permutation matrices).
            t += x;
            for (int i = 0; i <= nn; ++i) A(i, i) -= x;
            s = abs(A(nn, nn - 1)) + abs(A(nn - 1, nn - 2));
            y = x = 0.75 * s;
            wprod = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = A(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - wprod) / A(m + 1, m) + A(m, m + 1);
            q = A(m + 1, m + 1) - z - r - s;
            r = A(m + 2, m + 1);
            s = abs(p) + abs(q) + abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = abs(A(m, m - 1)) * (abs(q) + abs(r));
            const double v = abs(p) * (abs(A(m - 1, m - 1)) + abs(z) + abs(A(m + 1, m + 1)));
            if (u <= kEps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            A(i + 2, i) = 0.0;
            if (i != m) A(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = A(k, k - 1);
              q = A(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = A(k + 2, k - 1);
              if ((x = abs(p) + abs(q) + abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) A(k, k - 1) = -A(k, k - 1);
              } else {
                A(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = A(k, j) + q * A(k + 1, j);
                if (k + 1 != nn) {
                  p += r * A(k + 2, j);
                  A(k + 2, j) -= p * z;
                }
                A(k + 1, j) -= p * y;
                A(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * A(i, k) + y * A(i, k + 1);
                if (k + 1 != nn) {
                  p += z * A(i, k + 2);
                  A(i, k + 2) -= p * r;
                }
                A(i, k + 1) -= p * q;
                A(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
  return w;
}

void sort_spectrum(std::vector<std::complex<double>>& ev) {
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    return std::abs(a) > std::abs(b);
  });
  double scale = 1.0;
  for (const auto& e : ev) scale = std::max(scale, std::abs(e));
  const double tie = 1e-9 * scale;
  auto by_parts = [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  };
  std::size_t start = 0;
  while (start < ev.size()) {
    std::size_t end = start + 1;
    const double lead = std::abs(ev[start]);
    while (end < ev.size() && lead - std::abs(ev[end]) <= tie) ++end;
    std::sort(ev.begin() + static_cast<std::ptrdiff_t>(start),
              ev.begin() + static_cast<std::ptrdiff_t>(end), by_parts);
    start = end;
  }
}

// Permutation step of balancing. An index whose row or column is zero off the
// diagonal (within the indices still active) splits the matrix into block
// triangular form, so its diagonal entry is an eigenvalue, exactly. Removing
// such indices first keeps defective eigenvalues of structurally nilpotent
// parts (common in sparse chains) away from QR, where they would come back
// perturbed by eps^(1/k). Returns the remaining active block.
DenseMatrix isolate_eigenvalues(const DenseMatrix& m, std::vector<std::complex<double>>& isolated) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  bool found = true;
  while (found && !active.empty()) {
    found = false;
    for (std::size_t pos = 0; pos < active.size(); ++pos) {
      const std::size_t j = active[pos];
      bool row_zero = true;
      bool col_zero = true;
      for (std::size_t other : active) {
        if (other == j) continue;
        row_zero = row_zero && m(j, other) == 0.0;
        col_zero = col_zero && m(other, j) == 0.0;
      }
      if (row_zero || col_zero) {
        isolated.emplace_back(m(j, j), 0.0);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
        found = true;
        break;
      }
    }
  }
  DenseMatrix rest(active.size(), active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = 0; j < active.size(); ++j) rest(i, j) = m(active[i], active[j]);
  }
  return rest;
}

}  // namespace


Spectrum eigenvalues_dense(const DenseMatrix& m, std::size_t cap) {
  check_oracle_input(m, cap);
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  }
  Spectrum s;
  DenseMatrix a = isolate_eigenvalues(m, s.eigenvalues);
  if (a.rows() > 0) {
    balance(a);
    to_hessenberg(a);
    auto rest = hessenberg_qr(a);
    s.eigenvalues.insert(s.eigenvalues.end(), rest.begin(), rest.end());
  }
  // Clean roundoff-level imaginary parts from real eigenvalue pairs.
  for (auto& e : s.eigenvalues) {
    if (e.imag() != 0.0 && std::abs(e.imag()) <= 4 * kEps * std::max(1.0, std::abs(e.real()))) {
      e = {e.real(), 0.0};
    }
  }
  sort_spectrum(s.eigenvalues);
  return s;
}

double second_modulus(const DenseMatrix& m, std::size_t cap) {
  const Spectrum s = eigenvalues_dense(m, cap);
  return s.size() < 2 ? 0.0 : std::abs(s.eigenvalues[1]);
}

double second_modulus(const StochasticMatrix& m, std::size_t cap) {
  return second_modulus(densify(m, cap), cap);
}

NullSpace null_space(const DenseMatrix& m, double rel_threshold) {
  DenseMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const double threshold = rel_threshold * max_abs(m);
  std::vector<std::size_t> col_perm(cols);
  for (std::size_t j = 0; j < cols; ++j) col_perm[j] = j;

  std::size_t rank = 0;
  while (rank < std::min(rows, cols)) {
    double best = 0.0;
    std::size_t bi = rank;
    std::size_t bj = rank;
    for (std::size_t i = rank; i < rows; ++i) {
      for (std::size_t j = rank; j < cols; ++j) {
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (!(best > threshold)) break;
    if (bi != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(bi, j), a(rank, j));
    }
    if (bj != rank) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, bj), a(i, rank));
      std::swap(col_perm[bj], col_perm[rank]);
    }
    // Reduced row echelon: clear the pivot column above and below.
    const double pivot = a(rank, rank);
    for (std::size_t j = 0; j < cols; ++j) a(rank, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const double f = a(i, rank);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }

  NullSpace ns;
  ns.rank = rank;
  // With pivots in the leading rank columns, each free column f gives the
  // vector x with x_f = 1 and x_pivot_i = -a(i, f).
  for (std::size_t f = rank; f < cols; ++f) {
    std::vector<double> x(cols, 0.0);
    x[col_perm[f]] = 1.0;
    for (std::size_t i = 0; i < rank; ++i) x[col_perm[i]] = -a(i, f);
    ns.basis.push_back(std::move(x));
  }
  return ns;
}

std::size_t fixed_space_dimension(const DenseMatrix& p, std::size_t cap) {
  check_oracle_input(p, cap);
  DenseMatrix d = p;
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= 1.0;
  return d.rows() - null_space(d).rank;
}

std::size_t fixed_space_dimension(const StochasticMatrix& p, std::size_t cap) {
  return fixed_space_dimension(densify(p, cap), cap);
}

std::vector<std::vector<double>> fixed_space_basis(const StochasticMatrix& p, std::size_t cap) {
  DenseMatrix d = densify(p, cap);
  check_oracle_input(d, cap);
  for (std::size_t i = 0; i < d.rows(); ++i) d(i, i) -= 1.0;
  return null_space(d).basis;
}

bool transpose_spectrum_check(const DenseMatrix& m, std::size_t cap) {
  const Spectrum a = eigenvalues_dense(m, cap);
  const Spectrum b = eigenvalues_dense(m.transpose(), cap);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.eigenvalues[i] - b.eigenvalues[i]) > 1e-7) return false;
  }
  return true;
}

std::vector<double> solve_linear(DenseMatrix m, std::vector<double> b) {
  if (!m.square() || m.rows() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_linear: incompatible shapes");
  }
  const std::size_t n = m.rows();
  const double scale = max_abs(m);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
    if (!(std::abs(m(piv, col)) > 1e-13 * scale)) {
      throw Error(ErrorCode::kSingularSystem, "linear system is singular");
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      const double f = m(i, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

std::vector<double> stationary_vector_dense(const DenseMatrix& a, std::size_t cap) {
  check_oracle_input(a, cap);
  const std::size_t n = a.rows();
  DenseMatrix sys = a.transpose();
  for (std::size_t i = 0; i < n; ++i) sys(i, i) -= 1.0;
  // One equation is redundant; replace it by the normalization.
  for (std::size_t j = 0; j < n; ++j) sys(n - 1, j) = 1.0;
  std::vector<double> rhs(n, 0.0);
  rhs[n - 1] = 1.0;
  return solve_linear(std::move(sys), std::move(rhs));
}

}  // namespace ergogap
