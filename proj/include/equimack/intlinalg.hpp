#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "equimack/errors.hpp"

namespace equimack {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/// Dense matrix of arbitrary-precision integers.
/// Entry (i, j) is the coefficient of target basis element i in the image of
/// source basis element j, so composition of maps is matrix multiplication.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  static IntMatrix fromColumns(int rows, const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const Int& c) const;
  IntMatrix operator-() const { return *this * Int(-1); }

  IntVec apply(const IntVec& v) const;
  IntMatrix transpose() const;
  /// Kronecker product; tensor basis index (i, j) maps to i * other.cols + j.
  IntMatrix kron(const IntMatrix& o) const;
  IntMatrix hcat(const IntMatrix& o) const;
  IntMatrix vcat(const IntMatrix& o) const;
  IntVec column(int j) const;
  bool isZero() const;
  bool isIdentity() const;

  std::string toString() const;

 private:
  int rows_ = 0, cols_ = 0;
  IntVec a_;
};

/// A sublattice of Z^ambient, spanned by linearly independent basis vectors.
struct Lattice {
  int ambient = 0;
  std::vector<IntVec> basis;
  int rank() const { return int(basis.size()); }
  IntMatrix basisMatrix() const;  // ambient x rank
};

/// U * m * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
/// Pivoting picks the smallest absolute value, ties broken row-major, so the
/// decomposition is reproducible.
struct SmithDecomposition {
  IntMatrix u, d, v;
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

struct SolveResult {
  IntVec particular;
  Lattice kernel;
};

/// Integer solutions of a * x = b; nullopt when none exist.
std::optional<SolveResult> solve(const IntMatrix& a, const IntVec& b);

/// Basis of the integer kernel of a.
Lattice kernel_lattice(const IntMatrix& a);

bool is_unimodular(const IntMatrix& m);
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

/// Invariant factors of coker(m) = Z^rows / column span: the factors > 1 in
/// divisibility order, followed by one 0 per free summand.
std::vector<Int> cokernel_invariants(const IntMatrix& m);

/// Coordinates of v in the lattice's basis, or nullopt when v is outside.
std::optional<IntVec> lattice_coordinates(const Lattice& lat, const IntVec& v);

}  // namespace equimack
