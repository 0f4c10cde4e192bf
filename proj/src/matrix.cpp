#include "endoscope/matrix.hpp"

#include <sstream>

#include "endoscope/error.hpp"

namespace endoscope {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_int(rows[i][j]);
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::require_same_shape(const Matrix& rhs, const char* op) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::InvalidArgument, std::string("shape mismatch in ") + op);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::InvalidArgument, "shape mismatch in product");
  Matrix out(field_, rows_, rhs.cols_);
  const std::size_t n = rhs.cols_;
  if (field_->prime()) {
    const std::uint64_t p = field_->p();
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = data_[i * cols_ + k];
        if (a == 0) continue;
        any = true;
        const Scalar* b = rhs.data_.data() + k * n;
        for (std::size_t j = 0; j < n; ++j) acc[j] += a * b[j];
      }
      if (!any) continue;
      Scalar* o = out.data_.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) o[j] = static_cast<Scalar>(acc[j] % p);
    }
    return out;
  }
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Scalar* b = rhs.data_.data() + k * n;
      Scalar* o = out.data_.data() + i * n;
      for (std::size_t j = 0; j < n; ++j)
        if (b[j]) o[j] = f.add(o[j], f.mul(a, b[j]));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_shape(rhs, "difference");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-() const { return scaled(field_->neg(1)); }

Matrix Matrix::scaled(Scalar c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_->mul(x, c);
  return out;
}

void Matrix::axpy(Scalar c, const Matrix& other) {
  require_same_shape(other, "axpy");
  if (c == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (other.data_[i]) data_[i] = field_->add(data_[i], field_->mul(c, other.data_[i]));
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  if (!square()) throw Error(ErrorKind::InvalidArgument, "power of non-square matrix");
  Matrix result = identity(field_, rows_);
  for (unsigned i = 0; i < k; ++i) result = *this * result;
  return result;
}

Matrix Matrix::embed(FieldPtr extension) const {
  if (extension->p() != field_->p())
    throw Error(ErrorKind::InvalidArgument, "embedding requires equal characteristic");
  if (field_->e() != 1 && extension->e() != field_->e())
    throw Error(ErrorKind::InvalidArgument, "only the prime field embeds");
  Matrix out = *this;
  out.field_ = std::move(extension);
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  Vector out(rows_, 0);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar s = 0;
    const Scalar* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j] && v[j]) s = f.add(s, f.mul(r[j], v[j]));
    out[i] = s;
  }
  return out;
}

Vector Matrix::apply_left(const Vector& row_vec) const {
  Vector out(cols_, 0);
  const Field& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Scalar a = row_vec[i];
    if (a == 0) continue;
    const Scalar* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (r[j]) out[j] = f.add(out[j], f.mul(a, r[j]));
  }
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar x = a(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l)) out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidArgument, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) throw Error(ErrorKind::InvalidArgument, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix out(blocks[0].field(), blocks[0].rows(), cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, offset + j) = b(i, j);
    offset += b.cols();
  }
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(blocks.at(0).field(), r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(ro + i, co + j) = b(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return out;
}

Matrix columns_to_matrix(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix out(std::move(field), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, cols[j]);
  return out;
}

Echelon row_reduce(Matrix m) {
  const Field& f = *m.field();
  Echelon out;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const Scalar inv = f.inv(m(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar factor = m(i, c);
      if (!factor) continue;
      const Scalar nf = f.neg(factor);
      auto src = m.row(r);
      auto dst = m.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (src[j]) dst[j] = f.add(dst[j], f.mul(nf, src[j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only; operate on the smaller orientation.
  Matrix a = m.rows() <= m.cols() ? m : m.transpose();
  const Field& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const Scalar inv = f.inv(a(r, c));
    auto src = a.row(r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar factor = a(i, c);
      if (!factor) continue;
      const Scalar nf = f.neg(f.mul(factor, inv));
      auto dst = a.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (src[j]) dst[j] = f.add(dst[j], f.mul(nf, src[j]));
    }
    ++r;
  }
  return r;
}

Matrix nullspace(const Matrix& m) {
  const Echelon ech = row_reduce(m);
  const Field& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return columns_to_matrix(m.field(), m.cols(), basis);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::InvalidArgument, "solve: row mismatch");
  const Echelon ech = row_reduce(hstack({a, b}));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const std::size_t c = ech.pivots[r];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = ech.reduced(r, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || !(m * *x == Matrix::identity(m.field(), m.rows()))) return std::nullopt;
  return x;
}

Scalar determinant(Matrix a) {
  if (!a.square()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const Field& f = *a.field();
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Scalar inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Scalar factor = a(i, c);
      if (!factor) continue;
      const Scalar nf = f.neg(f.mul(factor, inv));
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.add(a(i, j), f.mul(nf, a(c, j)));
    }
  }
  return det;
}

Vector SpanBuilder::reduce(Vector v) const {
  const Field& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c) continue;
    const Scalar nc = f.neg(c);
    const Vector& row = rows_[r];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row[j]) v[j] = f.add(v[j], f.mul(nc, row[j]));
  }
  return v;
}

bool SpanBuilder::add(const Vector& v) {
  Vector w = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && w[piv] == 0) ++piv;
  if (piv == dim_) return false;
  const Field& f = *field_;
  const Scalar inv = f.inv(w[piv]);
  for (auto& x : w) x = f.mul(x, inv);
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (!c) continue;
    const Scalar nc = f.neg(c);
    for (std::size_t j = 0; j < dim_; ++j)
      if (w[j]) row[j] = f.add(row[j], f.mul(nc, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  for (auto x : reduce(v))
    if (x) return false;
  return true;
}

std::size_t JordanType::dimension() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < multiplicity.size(); ++i) d += (i + 1) * multiplicity[i];
  return d;
}

std::string JordanType::to_string() const {
  std::string s;
  for (std::size_t i = multiplicity.size(); i-- > 0;) {
    if (!multiplicity[i]) continue;
    if (!s.empty()) s += "+";
    s += std::to_string(multiplicity[i]) + "[" + std::to_string(i + 1) + "]";
  }
  return s.empty() ? "0" : s;
}

std::vector<std::size_t> rank_sequence(const Matrix& m, std::uint32_t p) {
  std::vector<std::size_t> ranks{m.rows()};
  Matrix power = m;
  for (std::uint32_t i = 1; i <= p; ++i) {
    ranks.push_back(rank(power));
    if (i < p) power = power * m;
  }
  return ranks;
}

JordanType nilpotent_jordan_type(const Matrix& m, std::uint32_t p) {
  if (!m.square()) throw Error(ErrorKind::InvalidArgument, "Jordan type of non-square matrix");
  const auto r = rank_sequence(m, p);
  if (r[p] != 0) throw Error(ErrorKind::NotNilpotentOfOrderP, "matrix power m^p is nonzero");
  JordanType jt;
  jt.multiplicity.resize(p);
  for (std::uint32_t i = 1; i <= p; ++i) {
    const std::size_t next = i + 1 <= p ? r[i + 1] : 0;
    jt.multiplicity[i - 1] = r[i - 1] - 2 * r[i] + next;
  }
  return jt;
}

}  // namespace endoscope
