#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/errors.hpp"
#include "pcat/partition.hpp"

namespace pcat {

// ---------------------------------------------------------------------------
// Named partitions

enum class NamedKind {
  singleton,         // P(0,1)
  double_singleton,  // P(0,2), two blocks
  pair,              // P(0,2), one block
  identity,          // P(1,1)
  four_block,        // P(0,4), one block
  crossing,          // P(2,2), {1,2'},{2,1'}
  half_lib,          // P(3,3), {1,3'},{2,2'},{3,1'}
  h,                 // P(0,2s), word abab...ab
  k,                 // P(l+2,l+2)
  pair_positioner    // P(3,3), {1,2,2',3'},{3,1'}
};

struct NamedPartitionId {
  NamedKind kind;
  unsigned parameter = 0;  // s for h, l for k
};

Partition named_partition(NamedPartitionId id);

/// Mnemonics: singleton, dsingleton, pair, id, fourblock, cross, halflib,
/// h:s=N, k:l=N, primary. Underscores and a few long forms are accepted.
/// Throws InputError for unknown names or bad parameters.
Partition named_partition(std::string_view mnemonic);

/// k_l built from its block description.
Partition k_partition_direct(unsigned l);
/// k_l built by the recursion k_{l+1} = (|^{l+1} (x) U (x) |^2)
/// (k_l (x) k_1)(|^{l+1} (x) n (x) |^2) starting from k_1.
Partition k_partition_recursive(unsigned l);

/// l pairs nested into each other, in P(2l, 0).
Partition nested_pairs(std::size_t l);

/// id^{alpha} (x) p (x) id^{beta}.
Partition pad_with_identities(const Partition& p, std::size_t alpha,
                              std::size_t beta);

// ---------------------------------------------------------------------------
// Single leg machinery

/// Merges blocks b1 and b2 (0-based canonical ids). Throws InputError if they
/// are equal or do not exist.
Partition connect_blocks(const Partition& p, BlockId b1, BlockId b2);

/// One pass of run parity reduction on a P(0,l) partition: every maximal run
/// a^k of equal adjacent points becomes a^(k mod 2). Throws InputError if p
/// has upper points.
Partition parity_reduce(const Partition& p);

/// Iterates parity_reduce() to a fixed point after rotating all points down.
Partition single_leg_version(const Partition& p);

/// Throws InputError if p has upper points.
bool is_single_leg(const Partition& p);

// ---------------------------------------------------------------------------
// Closure

inline constexpr std::size_t kDefaultSlack = 4;
inline constexpr std::uint64_t kDefaultBudget = 2'000'000'000ULL;
/// Largest N + slack the closure engine supports.
inline constexpr std::size_t kMaxClosurePoints = 16;

/**
 * The points-bounded slice of a category of partitions.
 *
 * Members are stored by their one-line forms (see one_line()); a partition
 * p with k+l <= N is a member iff one_line(p) is.
 **/
class CategoryTruncation {
 public:
  CategoryTruncation() = default;

  const std::vector<Partition>& generators() const { return generators_; }
  std::size_t max_points() const { return max_points_; }
  std::size_t slack() const { return slack_; }
  bool saturated() const { return saturated_; }
  std::uint64_t steps() const { return steps_; }

  /// Throws InputError if p has more than max_points() points.
  bool contains(const Partition& p) const;

  /// Members without upper points, sorted.
  std::vector<Partition> line_members() const;
  /// Members with exactly m points and no upper points.
  std::vector<Partition> line_members(std::size_t m) const;
  /// Every member in every P(k,l), sorted.
  std::vector<Partition> members() const;
  std::size_t line_member_count() const;
  std::size_t member_count() const;

  bool same_members(const CategoryTruncation& other) const;

  /// Cache file: header line then one member per line.
  std::string header_line() const;
  void save(const std::string& path) const;
  static CategoryTruncation load(const std::string& path);

 private:
  friend CategoryTruncation closure(std::span<const Partition>, std::size_t,
                                    std::size_t, std::uint64_t);
  friend CategoryTruncation from_members(std::span<const Partition>,
                                         std::span<const Partition>,
                                         std::size_t, std::size_t, bool);

  std::vector<Partition> generators_;
  std::size_t max_points_ = 0;
  std::size_t slack_ = 0;
  bool saturated_ = false;
  std::uint64_t steps_ = 0;
  // lines_[m]: sorted packed one-line keys of size m.
  std::vector<std::vector<std::uint64_t>> lines_;
};

/**
 * Fixpoint of the category operations seeded with the generators, the
 * identity and the pair, keeping intermediates of at most max_points + slack
 * points and retaining members of at most max_points points.
 *
 * Throws InputError if max_points < 2 or a generator exceeds the
 * intermediate bound, ResourceError if max_points + slack exceeds
 * kMaxClosurePoints. If more than `budget` operations would be applied the
 * result is returned with saturated() == false.
 **/
CategoryTruncation closure(std::span<const Partition> generators,
                           std::size_t max_points,
                           std::size_t slack = kDefaultSlack,
                           std::uint64_t budget = kDefaultBudget);

/// Rebuilds a truncation from a stored member list (all (k,l) forms accepted).
CategoryTruncation from_members(std::span<const Partition> generators,
                                std::span<const Partition> members,
                                std::size_t max_points, std::size_t slack,
                                bool saturated);

/// yes iff p is a member, otherwise unknown. Throws InputError if p has more
/// than max_points points.
Membership member(const CategoryTruncation& t, const Partition& p);

/// Members without upper points that are in single leg form.
std::vector<Partition> sl_subset(const CategoryTruncation& t);

}  // namespace pcat
