#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicft/cyclotomic.hpp"
#include "padicft/laurent_poly.hpp"

namespace padicft {

// Dense square matrix over LaurentPoly (symbolic) or CycNumber (specialized
// at zeta). Entries are stored row-major.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t dim, const T& fill) : dim_(dim), entries_(dim * dim, fill) {
    if (dim == 0) throw std::invalid_argument("Matrix: dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  Matrix transpose() const {
    Matrix out = *this;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(j, i);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t j = 0; j < a.dim_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.dim_; ++k) acc += a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t dim_;
  std::vector<T> entries_;
};

using SymbolicMatrix = Matrix<LaurentPoly>;
using ZetaMatrix = Matrix<CycNumber>;

// Z = (q^(ij)); U upper unipotent with u_{n,k} = [k n]_q; V lower unipotent
// with v_{n,k} = (-1)^(n-k) q^C(n-k,2) [n k]_q; D diagonal with
// (-1)^n q^C(n,2) (q;q)_n; L = D^-1 V.
enum class MatrixKind { Z, U, V, D, L };

std::string to_string(MatrixKind kind);

/// Symbolic entries in Z[q]. L is rejected: its entries leave Z[q].
SymbolicMatrix build_symbolic_matrix(MatrixKind kind, std::size_t d);

/// Entries specialized at zeta. L needs d <= ctx->order() so that every
/// (zeta; zeta)_n with n < d is invertible.
ZetaMatrix build_zeta_matrix(MatrixKind kind, std::size_t d, const ContextPtr& ctx);

struct EntryMismatch {
  std::string identity;
  std::size_t row;
  std::size_t col;
};

struct IdentityReport {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> identities;  // names of the identities checked
  std::vector<EntryMismatch> failures;
  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  /// Symbolic entry degrees grow like d^2; larger symbolic checks are refused.
  std::size_t symbolic_cap = 16;
};

/// V * transpose(U) == I and transpose(U) * D * U == Z, entry by entry.
IdentityReport verify_ldu_decomposition(std::size_t d, const VerifyOptions& options = {});
IdentityReport verify_ldu_decomposition(std::size_t d, const ContextPtr& ctx);

/// L * Z == U over Q(zeta).
IdentityReport verify_lower_factor_identity(std::size_t d, const ContextPtr& ctx);

/// Structural facts of the level-r matrices (ctx of order d = p^(2r)):
/// Z symmetric, U/V unipotent triangular, D diagonal, U and transpose(V) = U^-1
/// integral, Z*Z = d*R, Z*J = p^r J.
IdentityReport verify_matrix_structure(const ContextPtr& ctx);

}  // namespace padicft
