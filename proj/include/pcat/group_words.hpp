#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcat/category.hpp"
#include "pcat/errors.hpp"
#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat {

// ---------------------------------------------------------------------------
// Words in the free product of copies of Z_2 (every letter squares to e)

/// Deletes adjacent equal letters until none are left.
Word reduce_word(const Word& w);
bool is_reduced(const Word& w);
Word multiply(const Word& a, const Word& b);
Word inverse(const Word& w);
/// a w a, reduced.
Word conjugate(const Word& w, Letter a);

/// Letters not in the map are fixed. The result is reduced.
Word identify_letters(const Word& w, const std::map<Letter, Letter>& map);

/// The reduced counterclockwise reading of p, letters named by first
/// appearance in the unreduced reading.
Word word_of_partition(const Partition& p);

/// Counterclockwise reading of p with a caller-chosen letter per block,
/// reduced.
Word labelled_word(const Partition& p, std::span<const Letter> block_letters);

/// Non-identity words of the generators.
std::vector<Word> f_generators(std::span<const Partition> generators);

// ---------------------------------------------------------------------------
// Invariant normal subgroups

enum class OracleKind {
  trivial_subgroup,
  full_group,
  even_letter_count,
  even_length,
  dihedral,
  bfs_closure
};

struct OracleSpec {
  OracleKind kind = OracleKind::trivial_subgroup;
  unsigned s = 0;                // dihedral
  std::vector<Word> generators;  // bfs_closure
  std::size_t max_length = 12;   // bfs_closure

  static OracleSpec trivial() { return of(OracleKind::trivial_subgroup); }
  static OracleSpec full() { return of(OracleKind::full_group); }
  static OracleSpec even_count() { return of(OracleKind::even_letter_count); }
  static OracleSpec even_length() { return of(OracleKind::even_length); }
  static OracleSpec dihedral(unsigned s) { return of(OracleKind::dihedral, s); }
  static OracleSpec bfs(std::vector<Word> gens, std::size_t max_length = 12) {
    OracleSpec o = of(OracleKind::bfs_closure);
    o.generators = std::move(gens);
    o.max_length = max_length;
    return o;
  }

 private:
  static OracleSpec of(OracleKind kind, unsigned s = 0) {
    OracleSpec o;
    o.kind = kind;
    o.s = s;
    return o;
  }
};

/// `trivial`, `full`, `even-count`, `even-length`, `dihedral:s=3`,
/// `bfs:gens=abcabc,abab;L=12`.
OracleSpec parse_oracle(std::string_view text);
std::string to_string(const OracleSpec& spec);

/// Default cap on the number of canonical words a bfs_closure oracle stores.
inline constexpr std::size_t kDefaultBfsWordLimit = 200'000;

/**
 * Membership in an sS-invariant normal subgroup H.
 *
 * Closed-form kinds answer yes/no. bfs_closure precomputes, up to
 * max_length, words reachable from the generators by inversion,
 * conjugation by a letter, products of letter-disjoint copies and letter
 * identifications; it answers yes for words found and unknown otherwise.
 **/
class SubgroupOracle {
 public:
  explicit SubgroupOracle(OracleSpec spec,
                          std::size_t word_limit = kDefaultBfsWordLimit);
  ~SubgroupOracle();
  SubgroupOracle(SubgroupOracle&&) noexcept;
  SubgroupOracle& operator=(SubgroupOracle&&) noexcept;

  const OracleSpec& spec() const { return spec_; }
  /// Throws InputError for dihedral kinds if w uses more than two letters.
  Membership contains(const Word& w) const;
  /// bfs_closure only: false if the word limit cut the search short.
  bool exhausted() const;
  /// bfs_closure only: number of canonical words found.
  std::size_t explored_words() const;

 private:
  struct Bfs;
  OracleSpec spec_;
  std::unique_ptr<Bfs> bfs_;
};

Membership subgroup_member(const Word& w, const OracleSpec& oracle);

/// Membership of p in the category w^{-1}(H).
Membership category_of_subgroup_member(const Partition& p,
                                       const SubgroupOracle& oracle);
Membership category_of_subgroup_member(const Partition& p,
                                       const OracleSpec& oracle);

// ---------------------------------------------------------------------------
// Partitions realizing the group operations on single leg words

enum class WitnessOp { product, inverse, conjugate };

/// p (x) q with, for every (bp, bq) in shared, block bp of p connected to
/// block bq of q. Both inputs must be single leg after rotating down.
Partition witness_product(const Partition& p, const Partition& q,
                          std::span<const std::pair<BlockId, BlockId>> shared = {});
/// Vertical reflection.
Partition witness_inverse(const Partition& p);
/// An outer pair around p. If `letter` names a block of p, the outer pair is
/// connected to it; otherwise it is a fresh block.
Partition witness_conjugate(const Partition& p, std::optional<BlockId> letter = {});

Partition group_witness(WitnessOp op, const Partition& p,
                        const std::optional<Partition>& q = {},
                        std::optional<BlockId> letter = {});

// ---------------------------------------------------------------------------
// Generated categories against C_H

struct BijectionReport {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  /// Partitions the oracle could not decide; not counted as disagreements.
  std::size_t oracle_unknown = 0;
  bool saturated = false;
  /// The first few disagreeing partitions.
  std::vector<Partition> examples;
};

/**
 * For every p in P(0,l) with l <= max_points and at most max_blocks blocks
 * (0 = any number), compares membership in
 * closure(generators + pair positioner, max_points, slack) with membership
 * in w^{-1}(H).
 **/
BijectionReport bijection_test(std::span<const Partition> generators,
                               const SubgroupOracle& oracle, std::size_t max_points,
                               std::size_t slack = kDefaultSlack,
                               std::uint64_t budget = kDefaultBudget,
                               std::size_t max_blocks = 0);

}  // namespace pcat
