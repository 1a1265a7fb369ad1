#include "equimack/intlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace equimack {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = int(init.size());
  cols_ = rows_ ? int(init.begin()->size()) : 0;
  a_.resize(size_t(rows_) * cols_);
  int i = 0;
  for (const auto& row : init) {
    if (int(row.size()) != cols_) throw InvalidInputError("ragged initializer");
    int j = 0;
    for (long x : row) at(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromColumns(int rows, const std::vector<IntVec>& cols) {
  IntMatrix m(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    if (int(cols[j].size()) != rows) throw InvalidInputError("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInputError("matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInputError("matrix sum dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInputError("matrix difference dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (int(v.size()) != cols_) throw InvalidInputError("matrix-vector dimension mismatch");
  IntVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::kron(const IntMatrix& o) const {
  IntMatrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) == 0) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = at(i, j) * o.at(p, q);
    }
  return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw InvalidInputError("hcat row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const {
  if (cols_ != o.cols_) throw InvalidInputError("vcat column mismatch");
  IntMatrix r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

IntVec IntMatrix::column(int j) const {
  IntVec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool IntMatrix::isZero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::toString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix Lattice::basisMatrix() const {
  return IntMatrix::fromColumns(ambient, basis);
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

void swapRows(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swapCols(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void addRow(IntMatrix& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}
void addCol(IntMatrix& m, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}
void negateRow(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& d = s.d;
  int n = std::min(d.rows(), d.cols());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, row-major tie-break;
      // re-picked every pass so the pivot magnitude never increases.
      int pi = -1, pj = -1;
      for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) { pj = -1; break; }
      if (pi != t) { swapRows(d, pi, t); swapRows(s.u, pi, t); }
      if (pj != t) { swapCols(d, pj, t); swapCols(s.v, pj, t); }

      // Reduce the pivot row and column by truncated division; any nonzero
      // remainder is strictly smaller than the pivot and triggers a re-pick.
      bool shrunk = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        addRow(d, i, t, q);
        addRow(s.u, i, t, q);
        if (d.at(i, t) != 0) shrunk = true;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        addCol(d, j, t, q);
        addCol(s.v, j, t, q);
        if (d.at(t, j) != 0) shrunk = true;
      }
      if (shrunk) continue;
      // Pivot divides everything below-right, or we fold an offending column
      // into column t, which forces a strictly smaller pivot next pass.
      bool divides = true;
      for (int i = t + 1; i < d.rows() && divides; ++i)
        for (int j = t + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            addCol(d, t, j, Int(-1));  // col t += col j
            addCol(s.v, t, j, Int(-1));
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(t, t) == 0) break;
    if (d.at(t, t) < 0) { negateRow(d, t); negateRow(s.u, t); }
  }
  return s;
}

Lattice kernel_lattice(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  auto diag = s.diagonal();
  int rank = 0;
  for (const Int& x : diag)
    if (x != 0) ++rank;
  Lattice ker{a.cols(), {}};
  for (int j = rank; j < a.cols(); ++j) ker.basis.push_back(s.v.column(j));
  return ker;
}

std::optional<SolveResult> solve(const IntMatrix& a, const IntVec& b) {
  if (int(b.size()) != a.rows()) throw InvalidInputError("solve: rhs length mismatch");
  SmithDecomposition s = smith_normal_form(a);
  IntVec ub = s.u.apply(b);
  auto diag = s.diagonal();
  int rank = 0;
  for (const Int& x : diag)
    if (x != 0) ++rank;
  IntVec y(a.cols());
  for (int i = 0; i < rank; ++i) {
    if (ub[i] % diag[i] != 0) return std::nullopt;
    y[i] = ub[i] / diag[i];
  }
  for (int i = rank; i < a.rows(); ++i)
    if (ub[i] != 0) return std::nullopt;
  SolveResult r;
  r.particular = s.v.apply(y);
  r.kernel.ambient = a.cols();
  for (int j = rank; j < a.cols(); ++j) r.kernel.basis.push_back(s.v.column(j));
  return r;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("unimodularity requires a square matrix");
  auto diag = smith_normal_form(m).diagonal();
  for (const Int& x : diag)
    if (x != 1) return false;
  return true;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("inverse requires a square matrix");
  SmithDecomposition s = smith_normal_form(m);
  for (const Int& x : s.diagonal())
    if (x != 1) return std::nullopt;
  return s.v * s.u;  // u m v = I, so m^{-1} = v u
}

std::vector<Int> cokernel_invariants(const IntMatrix& m) {
  auto diag = smith_normal_form(m).diagonal();
  std::vector<Int> out;
  int nonzero = 0;
  for (const Int& x : diag)
    if (x != 0) {
      ++nonzero;
      if (x != 1) out.push_back(x);
    }
  for (int i = nonzero; i < m.rows(); ++i) out.push_back(0);
  return out;
}

std::optional<IntVec> lattice_coordinates(const Lattice& lat, const IntVec& v) {
  auto r = solve(lat.basisMatrix(), v);
  if (!r) return std::nullopt;
  return r->particular;
}

}  // namespace equimack
