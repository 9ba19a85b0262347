#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcat/exact_matrix.hpp"
#include "pcat/partition.hpp"

namespace pcat {

/// Default bound on n^max(k,l) for a single operator.
inline constexpr std::size_t kDefaultEntryBudget = 1'000'000;

/**
 * T_p as an n^l x n^k matrix with entry (j, i) = delta_p(i, j). Multi-indices
 * are ordered big-endian, so t_map(p (x) q) is the Kronecker product.
 * Throws ResourceError if n^max(k,l) exceeds the budget.
 **/
ExactMatrix t_map(const Partition& p, std::size_t n,
                  std::size_t entry_budget = kDefaultEntryBudget);

/// T_q T_p == n^loops T_{qp}.
bool functoriality_check(const Partition& p, const Partition& q, std::size_t n);

/**
 * An n x n matrix u whose entries u_ij are d x d rational blocks, stored as
 * one (n d) x (n d) matrix. d == 1 gives a scalar model.
 **/
struct MatrixModel {
  std::size_t n = 0;
  std::size_t d = 1;
  ExactMatrix u;

  ExactMatrix block(std::size_t i, std::size_t j) const;
};

/// Wraps an (n d) x (n d) matrix. Throws InputError if the size is not a
/// multiple of n.
MatrixModel model_from_matrix(ExactMatrix u, std::size_t n);

/// u(sigma[j], j) = signs[j]; signs are +1 or -1, sigma a permutation of
/// 0..n-1.
MatrixModel signed_permutation_model(std::span<const std::size_t> sigma,
                                     std::span<const int> signs);

/// A finite group given by its multiplication table.
struct FiniteGroup {
  std::size_t order = 1;
  std::vector<std::size_t> table{0};  // table[a * order + b] = ab
  std::size_t identity = 0;

  std::size_t multiply(std::size_t a, std::size_t b) const {
    return table[a * order + b];
  }

  /// Z_2^r with elements as bitmasks and xor as the product.
  static FiniteGroup elementary_abelian(unsigned r);
  /// Checks closure, identity, associativity and inverses.
  void validate() const;
};

/// Left regular representation as permutation matrices.
std::vector<ExactMatrix> regular_representation(const FiniteGroup& group);

/**
 * u_ij = [sigma(j) == i] pi(g_j): a group-valued permutation model.
 * `rep` holds pi(g) for every element; it must be a faithful orthogonal
 * representation. Throws InputError if sigma is not a permutation (an
 * undefined column counts), some g_j is not an involution, or rep is not a
 * faithful orthogonal homomorphism.
 **/
MatrixModel crossed_model(const FiniteGroup& group, std::span<const ExactMatrix> rep,
                          std::span<const std::optional<std::size_t>> sigma,
                          std::span<const std::size_t> g);

/// u^{(x)k} over the model's block algebra, of size n^k d.
ExactMatrix model_tensor_power(const MatrixModel& m, std::size_t k);

/// T_p u^{(x)k} == u^{(x)l} T_p.
bool intertwines(const Partition& p, const MatrixModel& m,
                 std::size_t entry_budget = kDefaultEntryBudget);

/**
 * The defining relations of the pair positioner algebra on a model:
 * u_ij self-adjoint with u_ij^2 a projection, row and column sums of the
 * u_ij^2 equal to 1, and u_ij^2 commuting with every u_kl.
 **/
bool hyperoct_relations_check(const MatrixModel& m);

/// One (row, column) generator choice per block of the one-line form of p.
using Assignment = std::vector<std::pair<std::size_t, std::size_t>>;

/**
 * For single leg p = a_{i(1)} ... a_{i(l)}: the product of the assigned
 * generators equals the product of their squares. Throws InputError if p is
 * not single leg or the assignment does not fit, PreconditionError if the
 * model fails hyperoct_relations_check().
 **/
bool word_projection_check(const MatrixModel& m, const Partition& p,
                           const Assignment& assignment);

/// word_projection_check() over every assignment.
bool word_projection_check_all(const MatrixModel& m, const Partition& p);

}  // namespace pcat
