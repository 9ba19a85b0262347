#include "pcat/tensor_maps.hpp"

#include <algorithm>
#include <set>

#include "pcat/category.hpp"
#include "pcat/errors.hpp"

namespace pcat {

namespace {

// Hard cap on dense storage regardless of the configured budget.
constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 26;

std::size_t checked_power(std::size_t n, std::size_t e, std::size_t limit) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > limit / std::max<std::size_t>(n, 1)) return limit + 1;
    v *= n;
  }
  return v;
}

void ensure_relations(const MatrixModel& m) {
  if (!hyperoct_relations_check(m))
    throw PreconditionError("model does not satisfy the local symmetry relations");
}

}  // namespace

ExactMatrix t_map(const Partition& p, std::size_t n, std::size_t entry_budget) {
  if (n < 1) throw InputError("t_map needs n >= 1");
  const std::size_t k = p.upper_count();
  const std::size_t l = p.lower_count();
  if (checked_power(n, std::max(k, l), entry_budget) > entry_budget)
    throw ResourceError("t_map: n^max(k,l) exceeds the size budget");
  const std::size_t cols = checked_power(n, k, kMaxDenseEntries);
  const std::size_t rows = checked_power(n, l, kMaxDenseEntries);
  if (rows > kMaxDenseEntries / cols)
    throw ResourceError("t_map: dense matrix would be too large");

  ExactMatrix t(rows, cols);
  // Enumerate only index tuples that are constant on blocks: one value per
  // block, n^{#blocks} choices.
  const std::size_t blocks = p.block_count();
  std::vector<std::size_t> value(blocks, 0);
  for (;;) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < k; ++i) col = col * n + value[p.upper(i)];
    std::size_t row = 0;
    for (std::size_t j = 0; j < l; ++j) row = row * n + value[p.lower(j)];
    t(row, col) = 1;
    std::size_t pos = 0;
    while (pos < blocks && ++value[pos] == n) value[pos++] = 0;
    if (pos == blocks) break;
  }
  return t;
}

bool functoriality_check(const Partition& p, const Partition& q, std::size_t n) {
  const auto [qp, loops] = compose(p, q);
  Rational scale = 1;
  for (std::size_t i = 0; i < loops; ++i) scale *= static_cast<long>(n);
  return t_map(q, n) * t_map(p, n) == scale * t_map(qp, n);
}

ExactMatrix MatrixModel::block(std::size_t i, std::size_t j) const {
  ExactMatrix b(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) b(r, c) = u(i * d + r, j * d + c);
  return b;
}

MatrixModel model_from_matrix(ExactMatrix u, std::size_t n) {
  if (n == 0 || u.rows() != u.cols() || u.rows() % n != 0 || u.rows() == 0)
    throw InputError("model matrix must be square with size a multiple of n");
  const std::size_t d = u.rows() / n;
  return MatrixModel{n, d, std::move(u)};
}

MatrixModel signed_permutation_model(std::span<const std::size_t> sigma,
                                     std::span<const int> signs) {
  const std::size_t n = sigma.size();
  if (n == 0 || signs.size() != n)
    throw InputError("signed permutation needs one sign per column");
  std::vector<char> hit(n, 0);
  ExactMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sigma[j] >= n || hit[sigma[j]])
      throw InputError("sigma is not a permutation");
    if (signs[j] != 1 && signs[j] != -1) throw InputError("signs must be +1 or -1");
    hit[sigma[j]] = 1;
    u(sigma[j], j) = signs[j];
  }
  return MatrixModel{n, 1, std::move(u)};
}

FiniteGroup FiniteGroup::elementary_abelian(unsigned r) {
  FiniteGroup g;
  g.order = std::size_t{1} << r;
  g.identity = 0;
  g.table.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) g.table[a * g.order + b] = a ^ b;
  return g;
}

void FiniteGroup::validate() const {
  if (order == 0 || table.size() != order * order || identity >= order)
    throw InputError("group table has the wrong shape");
  for (auto x : table)
    if (x >= order) throw InputError("group table leaves the group");
  for (std::size_t a = 0; a < order; ++a) {
    if (multiply(identity, a) != a || multiply(a, identity) != a)
      throw InputError("group table: identity element is wrong");
    bool has_inverse = false;
    for (std::size_t b = 0; b < order; ++b)
      if (multiply(a, b) == identity) has_inverse = true;
    if (!has_inverse) throw InputError("group table: missing inverse");
  }
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          throw InputError("group table is not associative");
}

std::vector<ExactMatrix> regular_representation(const FiniteGroup& group) {
  group.validate();
  std::vector<ExactMatrix> rep;
  rep.reserve(group.order);
  for (std::size_t g = 0; g < group.order; ++g) {
    ExactMatrix m(group.order, group.order);
    for (std::size_t h = 0; h < group.order; ++h) m(group.multiply(g, h), h) = 1;
    rep.push_back(std::move(m));
  }
  return rep;
}

MatrixModel crossed_model(const FiniteGroup& group, std::span<const ExactMatrix> rep,
                          std::span<const std::optional<std::size_t>> sigma,
                          std::span<const std::size_t> g) {
  group.validate();
  const std::size_t n = sigma.size();
  if (n == 0 || g.size() != n) throw InputError("crossed model needs one g_j per column");
  if (rep.size() != group.order)
    throw InputError("representation must give a matrix for every group element");
  const std::size_t d = rep[0].rows();
  for (const auto& m : rep)
    if (m.rows() != d || m.cols() != d || d == 0)
      throw InputError("representation matrices must be square and equal-sized");
  const ExactMatrix id = ExactMatrix::identity(d);
  for (std::size_t a = 0; a < group.order; ++a) {
    if (rep[a].transpose() * rep[a] != id)
      throw InputError("representation is not orthogonal");
    for (std::size_t b = 0; b < group.order; ++b) {
      if (rep[a] * rep[b] != rep[group.multiply(a, b)])
        throw InputError("representation is not a homomorphism");
      if (a != b && rep[a] == rep[b])
        throw InputError("representation is not faithful");
    }
  }

  std::vector<char> hit(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (!sigma[j]) throw InputError("sigma is undefined on column " + std::to_string(j));
    if (*sigma[j] >= n || hit[*sigma[j]]) throw InputError("sigma is not a permutation");
    hit[*sigma[j]] = 1;
    if (g[j] >= group.order) throw InputError("g_j is not a group element");
    if (group.multiply(g[j], g[j]) != group.identity)
      throw InputError("g_" + std::to_string(j) + " is not an involution");
  }

  ExactMatrix u(n * d, n * d);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = *sigma[j];
    const ExactMatrix& b = rep[g[j]];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) u(i * d + r, j * d + c) = b(r, c);
  }
  return MatrixModel{n, d, std::move(u)};
}

ExactMatrix model_tensor_power(const MatrixModel& m, std::size_t k) {
  const std::size_t n = m.n;
  const std::size_t d = m.d;
  std::vector<ExactMatrix> blocks;  // n x n
  blocks.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) blocks.push_back(m.block(i, j));

  ExactMatrix power = ExactMatrix::identity(d);
  std::size_t dim = 1;  // n^t
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t next_dim = dim * n;
    ExactMatrix next(next_dim * d, next_dim * d);
    for (std::size_t I = 0; I < dim; ++I)
      for (std::size_t J = 0; J < dim; ++J) {
        ExactMatrix left(d, d);
        bool zero = true;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) {
            left(r, c) = power(I * d + r, J * d + c);
            if (sgn(left(r, c)) != 0) zero = false;
          }
        if (zero) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const ExactMatrix prod = left * blocks[i * n + j];
            const std::size_t row = I * n + i;
            const std::size_t col = J * n + j;
            for (std::size_t r = 0; r < d; ++r)
              for (std::size_t c = 0; c < d; ++c)
                next(row * d + r, col * d + c) = prod(r, c);
          }
      }
    power = std::move(next);
    dim = next_dim;
  }
  return power;
}

bool intertwines(const Partition& p, const MatrixModel& m, std::size_t entry_budget) {
  const ExactMatrix t = kron(t_map(p, m.n, entry_budget), ExactMatrix::identity(m.d));
  return t * model_tensor_power(m, p.upper_count()) ==
         model_tensor_power(m, p.lower_count()) * t;
}

bool hyperoct_relations_check(const MatrixModel& m) {
  const std::size_t n = m.n;
  const ExactMatrix id = ExactMatrix::identity(m.d);
  std::vector<ExactMatrix> blocks, squares;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactMatrix b = m.block(i, j);
      if (b.transpose() != b) return false;
      ExactMatrix s = b * b;
      if (s * s != s) return false;
      blocks.push_back(std::move(b));
      squares.push_back(std::move(s));
    }
  for (std::size_t i = 0; i < n; ++i) {
    ExactMatrix row(m.d, m.d), col(m.d, m.d);
    for (std::size_t k = 0; k < n; ++k) {
      row = row + squares[i * n + k];
      col = col + squares[k * n + i];
    }
    if (row != id || col != id) return false;
  }
  for (const auto& s : squares)
    for (const auto& b : blocks)
      if (s * b != b * s) return false;
  return true;
}

namespace {

bool projection_check_unchecked(const MatrixModel& m, const Partition& line,
                                const Assignment& assignment) {
  ExactMatrix product = ExactMatrix::identity(m.d);
  ExactMatrix range = ExactMatrix::identity(m.d);
  for (auto b : line.blocks()) {
    const auto [i, j] = assignment[b];
    const ExactMatrix a = m.block(i, j);
    product = product * a;
    range = range * (a * a);
  }
  return product == range;
}

Partition checked_single_leg(const Partition& p) {
  if (p.upper_count() != 0)
    throw InputError("word/projection check expects a partition without upper points");
  if (!is_single_leg(p))
    throw InputError("word/projection check expects a single leg partition");
  return p;
}

}  // namespace

bool word_projection_check(const MatrixModel& m, const Partition& p,
                           const Assignment& assignment) {
  const Partition line = checked_single_leg(p);
  if (assignment.size() != line.block_count())
    throw InputError("assignment needs one generator per letter");
  for (const auto& [i, j] : assignment)
    if (i >= m.n || j >= m.n) throw InputError("assignment index out of range");
  ensure_relations(m);
  return projection_check_unchecked(m, line, assignment);
}

bool word_projection_check_all(const MatrixModel& m, const Partition& p) {
  const Partition line = checked_single_leg(p);
  ensure_relations(m);
  const std::size_t letters = line.block_count();
  const std::size_t choices = m.n * m.n;
  std::vector<std::size_t> pick(letters, 0);
  Assignment assignment(letters);
  for (;;) {
    for (std::size_t r = 0; r < letters; ++r)
      assignment[r] = {pick[r] / m.n, pick[r] % m.n};
    if (!projection_check_unchecked(m, line, assignment)) return false;
    std::size_t pos = 0;
    while (pos < letters && ++pick[pos] == choices) pick[pos++] = 0;
    if (pos == letters) break;
  }
  return true;
}

}  // namespace pcat
