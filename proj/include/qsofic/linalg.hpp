// Copyright 2026 The qsofic Authors
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

#ifndef QSOFIC_LINALG_HPP
#define QSOFIC_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsofic {

using Complex = std::complex<double>;

/// Default entrywise tolerance for structural checks (unitarity, projectors).
inline constexpr double kDefaultTolerance = 1e-9;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(std::span<const Complex> values, const char* what) {
  for (Complex z : values) {
    if (!finite(z)) throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
  }
}

}  // namespace detail

/// State vector in bra (row) convention.
class ComplexRowVector {
 public:
  ComplexRowVector() = default;
  explicit ComplexRowVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {}
  explicit ComplexRowVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    detail::require_finite(entries_, "row vector");
  }
  ComplexRowVector(std::initializer_list<Complex> entries) : ComplexRowVector(std::vector<Complex>(entries)) {}

  static ComplexRowVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("basis index out of range");
    ComplexRowVector v(dim);
    v.entries_[index] = 1.0;
    return v;
  }

  std::size_t dim() const { return entries_.size(); }
  Complex operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexRowVector scaled(Complex factor) const {
    ComplexRowVector out = *this;
    for (auto& z : out.entries_) z *= factor;
    return out;
  }

  friend ComplexRowVector operator+(const ComplexRowVector& a, const ComplexRowVector& b) {
    if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
    ComplexRowVector out = a;
    for (std::size_t i = 0; i < a.dim(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }

  friend bool operator==(const ComplexRowVector&, const ComplexRowVector&) = default;

 private:
  std::vector<Complex> entries_;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), entries_(std::move(row_major)) {
    if (entries_.size() != dim_ * dim_) throw DimensionError("matrix entry count does not match dim*dim");
    detail::require_finite(entries_, "matrix");
  }

  /// Builds from nested rows; every row must have as many entries as there are rows.
  static ComplexMatrix from_rows(const std::vector<std::vector<Complex>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw DimensionError("matrix is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(flat));
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Diagonal 0/1 matrix selecting the given basis states.
  static ComplexMatrix basis_projector(std::size_t dim, std::span<const std::size_t> indices) {
    ComplexMatrix m(dim);
    for (std::size_t i : indices) {
      if (i >= dim) throw DimensionError("basis index out of range");
      m(i, i) = 1.0;
    }
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus of a - b.
inline double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

/// Returns v·M.
inline ComplexRowVector evolve(const ComplexRowVector& v, const ComplexMatrix& m) {
  if (v.dim() != m.dim()) throw DimensionError("evolve: vector dim " + std::to_string(v.dim()) +
                                               " does not match matrix dim " + std::to_string(m.dim()));
  const std::size_t n = m.dim();
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vk = v[k];
    if (vk == Complex{}) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += vk * m(k, j);
  }
  return ComplexRowVector(std::move(out));
}

inline double squared_norm(const ComplexRowVector& v) {
  double sum = 0.0;
  for (Complex z : v.entries()) sum += std::norm(z);
  return sum;
}

struct UnitarityCheck {
  bool unitary = false;
  double max_deviation = 0.0;
  explicit operator bool() const { return unitary; }
};

/// Compares M·M† against the identity entrywise.
inline UnitarityCheck is_unitary(const ComplexMatrix& m, double tol = kDefaultTolerance) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tolerance must be positive");
  const double dev = max_abs_difference(m * m.adjoint(), ComplexMatrix::identity(m.dim()));
  return {dev <= tol, dev};
}

enum class ProjectorCheck { Dimension, Hermiticity, Idempotency, Orthogonality, Completeness };

inline const char* to_string(ProjectorCheck c) {
  switch (c) {
    case ProjectorCheck::Dimension: return "dimension";
    case ProjectorCheck::Hermiticity: return "hermiticity";
    case ProjectorCheck::Idempotency: return "idempotency";
    case ProjectorCheck::Orthogonality: return "orthogonality";
    case ProjectorCheck::Completeness: return "completeness";
  }
  return "unknown";
}

struct ProjectorIssue {
  ProjectorCheck check;
  std::vector<std::size_t> symbols;  // indices into the family; empty for completeness
  double deviation = 0.0;
};

struct ProjectorReport {
  std::vector<ProjectorIssue> issues;
  bool ok() const { return issues.empty(); }
  bool failed(ProjectorCheck c) const {
    return std::any_of(issues.begin(), issues.end(), [c](const ProjectorIssue& i) { return i.check == c; });
  }
};

/// Checks that the family is a complete set of mutually orthogonal
/// Hermitian projectors. Failures are collected, never thrown.
inline ProjectorReport validate_projector_family(std::span<const ComplexMatrix> family, double tol = kDefaultTolerance) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate_projector_family: tolerance must be positive");
  ProjectorReport report;
  if (family.empty()) {
    report.issues.push_back({ProjectorCheck::Completeness, {}, 1.0});
    return report;
  }
  const std::size_t n = family.front().dim();
  for (std::size_t s = 0; s < family.size(); ++s) {
    if (family[s].dim() != n) {
      report.issues.push_back({ProjectorCheck::Dimension, {s}, 0.0});
    }
  }
  if (!report.ok()) return report;

  for (std::size_t s = 0; s < family.size(); ++s) {
    const auto& p = family[s];
    if (double d = max_abs_difference(p, p.adjoint()); d > tol) report.issues.push_back({ProjectorCheck::Hermiticity, {s}, d});
    if (double d = max_abs_difference(p * p, p); d > tol) report.issues.push_back({ProjectorCheck::Idempotency, {s}, d});
  }
  const ComplexMatrix zero(n);
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      double d = std::max(max_abs_difference(family[a] * family[b], zero), max_abs_difference(family[b] * family[a], zero));
      if (d > tol) report.issues.push_back({ProjectorCheck::Orthogonality, {a, b}, d});
    }
  ComplexMatrix sum(n);
  for (const auto& p : family) sum = sum + p;
  if (double d = max_abs_difference(sum, ComplexMatrix::identity(n)); d > tol)
    report.issues.push_back({ProjectorCheck::Completeness, {}, d});
  return report;
}

}  // namespace qsofic

#endif  // QSOFIC_LINALG_HPP
