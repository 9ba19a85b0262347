#include "pcat/exact_matrix.hpp"

#include <sstream>

#include "pcat/errors.hpp"

namespace pcat {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries)
    : ExactMatrix(rows, cols) {
  if (entries.size() != rows * cols)
    throw InputError("matrix literal has the wrong number of entries");
  std::size_t i = 0;
  for (long v : entries) data_[i++] = v;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw InputError("matrix product: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " times " + std::to_string(b.rows_) +
                     "x" + std::to_string(b.cols_));
  ExactMatrix out(a.rows_, b.cols_);
  // Partition matrices and permutation-type models are very sparse.
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Rational& x = a(r, t);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Rational& y = b(t, c);
        if (sgn(y) == 0) continue;
        out(r, c) += x * y;
      }
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("matrix sum: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("matrix difference: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Rational& x = a(ar, ac);
      if (sgn(x) == 0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
    }
  return out;
}

std::string to_text(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c).get_str();
    }
    out << '\n';
  }
  return out.str();
}

ExactMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw InputError("matrix text must start with 'rows cols'");
  ExactMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string token;
      if (!(in >> token)) throw InputError("matrix text has too few entries");
      Rational v;
      if (v.set_str(token, 10) != 0 || sgn(v.get_den()) == 0)
        throw InputError("bad rational entry '" + token + "'");
      v.canonicalize();
      m(r, c) = v;
    }
  std::string extra;
  if (in >> extra) throw InputError("matrix text has too many entries");
  return m;
}

}  // namespace pcat
