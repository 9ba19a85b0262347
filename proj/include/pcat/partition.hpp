#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/word.hpp"

namespace pcat {

using BlockId = std::uint32_t;

/**
 * A set partition of k upper and l lower points.
 *
 * Points are indexed upper left-to-right (0..k-1), then lower left-to-right
 * (k..k+l-1). Block ids are always canonical: 0, 1, 2, ... in order of first
 * appearance in that indexing, so two equal partitions have identical
 * storage and compare/hash equal.
 **/
class Partition {
 public:
  /// The empty partition in P(0,0).
  Partition() = default;

  /// Builds from arbitrary labels (equal label = same block) and
  /// canonicalizes. Throws InputError if labels.size() != k + l.
  static Partition from_labels(std::size_t k, std::size_t l,
                               std::span<const std::int64_t> labels);

  std::size_t upper_count() const { return upper_; }
  std::size_t lower_count() const { return lower_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t block_count() const { return block_count_; }

  /// Canonical block id of every point, in point order.
  std::span<const BlockId> blocks() const { return blocks_; }
  BlockId block_of(std::size_t point) const { return blocks_.at(point); }
  BlockId upper(std::size_t i) const { return blocks_.at(i); }
  BlockId lower(std::size_t j) const { return blocks_.at(upper_ + j); }

  /// Point indices of every block, blocks in id order.
  std::vector<std::vector<std::size_t>> block_members() const;
  std::vector<std::size_t> block_sizes() const;

  /// Orders by total size, then upper count, then block sequence.
  std::strong_ordering operator<=>(const Partition& other) const;
  bool operator==(const Partition& other) const = default;

 private:
  std::size_t upper_ = 0;
  std::size_t lower_ = 0;
  std::size_t block_count_ = 0;
  std::vector<BlockId> blocks_;
};

Partition make_partition(std::size_t k, std::size_t l,
                         const std::vector<std::int64_t>& labels);

/// Relabels to first-appearance order. Idempotent.
Partition canonicalize(const Partition& p);

/// P(0, |w|) partition connecting equal letters.
Partition from_word(const Word& w);

/// Counterclockwise reading: lower points left to right, then upper points
/// right to left. Letters are assigned 1, 2, ... by first appearance in that
/// order. Not reduced.
Word to_word(const Partition& p);

/// The P(0, k+l) partition with the points of p in counterclockwise order,
/// i.e. from_word(to_word(p)). Every category contains p iff it contains
/// this one-line form.
Partition one_line(const Partition& p);

/// Inverse of one_line(): splits a P(0, m) partition into P(k, m-k) by moving
/// the last k points, right to left, onto the upper row.
Partition from_one_line(const Partition& line, std::size_t k);

Partition tensor(const Partition& p, const Partition& q);

struct CompositionResult {
  Partition partition;
  /// Closed middle components that touched no upper or lower point.
  std::size_t loops = 0;
};

/// qp: p on top (P(k,l)), q below (P(l,m)). Throws InputError if the middle
/// rows do not match.
CompositionResult compose(const Partition& p, const Partition& q);

Partition involute(const Partition& p);

enum class Side { left, right };
enum class Direction { up, down };

/**
 * Moves one point between rows, keeping its block.
 *  down: the extreme upper point on `side` moves to the same end of the
 *        lower row, P(k,l) -> P(k-1,l+1).
 *  up:   the extreme lower point on `side` moves to the same end of the
 *        upper row.
 * Throws InputError if the source row is empty.
 **/
Partition rotate(const Partition& p, Side side, Direction direction);

/// Cyclic shift of a P(0,l) partition: the first point moves to the end,
/// `steps` times. Throws InputError if p has upper points.
Partition rotate_line(const Partition& p, std::size_t steps = 1);

/// Vertical reflection of a P(0,l) partition (points in reverse order).
Partition reflect_line(const Partition& p);

/// 1 iff every block of p sees a single index value, with upper indices i
/// and lower indices j both read left to right.
int delta(const Partition& p, std::span<const std::size_t> upper_indices,
          std::span<const std::size_t> lower_indices);

/// Text format `k;l;b1,...,b(k+l)` with 1-based canonical block ids.
std::string to_text(const Partition& p);
/// Accepts any labels (not only canonical ones). Throws InputError.
Partition parse_text(std::string_view text);

}  // namespace pcat
