#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endoscope/field.hpp"

namespace endoscope {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Entries are reduced into the prime subfield.
  static Matrix from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }
  bool square() const { return rows_ == cols_; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(Scalar c) const;
  Matrix transpose() const;
  Matrix pow(unsigned k) const;
  /// Same entries read in an extension field of the same characteristic.
  Matrix embed(FieldPtr extension) const;

  Vector apply(const Vector& v) const;            // M v
  Vector apply_left(const Vector& row) const;     // row^T M
  void axpy(Scalar c, const Matrix& other);       // this += c * other

  bool is_zero() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void require_same_shape(const Matrix& rhs, const char* op) const;

  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
Matrix columns_to_matrix(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols);

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0} as the columns of the result.
Matrix nullspace(const Matrix& m);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

/// Incremental row-echelon basis of a subspace of F^n, for membership tests and
/// extension to a basis.
class SpanBuilder {
 public:
  SpanBuilder(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// Adds v to the span; false if v was already in it.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Block-size multiplicities a_1..a_p of a nilpotent matrix with m^p = 0.
struct JordanType {
  std::vector<std::size_t> multiplicity;  // multiplicity[i-1] = number of [i] blocks

  std::size_t dimension() const;
  std::size_t blocks(std::size_t size) const {
    return size >= 1 && size <= multiplicity.size() ? multiplicity[size - 1] : 0;
  }
  bool operator==(const JordanType&) const = default;
  /// e.g. "8[3]+1[2]"; the zero module prints as "0".
  std::string to_string() const;
};

JordanType nilpotent_jordan_type(const Matrix& m, std::uint32_t p);
/// Ranks of m^0, m^1, ..., m^p.
std::vector<std::size_t> rank_sequence(const Matrix& m, std::uint32_t p);

}  // namespace endoscope
