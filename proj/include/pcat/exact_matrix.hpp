#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pcat {

using Rational = mpq_class;

/// Dense row-major matrix over the rationals. Equality is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Row-major integer entries, for tests and small literals.
  ExactMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ExactMatrix transpose() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// a (x) b, row index of a most significant.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

/// `rows cols` then row-major entries `p/q` (or integers), whitespace
/// separated.
std::string to_text(const ExactMatrix& m);
ExactMatrix parse_matrix(std::string_view text);

}  // namespace pcat
