#include "pcat/group_words.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pcat/category.hpp"

namespace pcat {

Word reduce_word(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    if (!out.letters.empty() && out.letters.back() == x)
      out.letters.pop_back();
    else
      out.letters.push_back(x);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

Word multiply(const Word& a, const Word& b) {
  Word joined = a;
  joined.letters.insert(joined.letters.end(), b.letters.begin(), b.letters.end());
  return reduce_word(joined);
}

Word inverse(const Word& w) {
  Word r(std::vector<Letter>(w.letters.rbegin(), w.letters.rend()));
  return reduce_word(r);
}

Word conjugate(const Word& w, Letter a) {
  Word joined;
  joined.letters.reserve(w.size() + 2);
  joined.letters.push_back(a);
  joined.letters.insert(joined.letters.end(), w.letters.begin(), w.letters.end());
  joined.letters.push_back(a);
  return reduce_word(joined);
}

Word identify_letters(const Word& w, const std::map<Letter, Letter>& map) {
  Word out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    auto it = map.find(x);
    out.letters.push_back(it == map.end() ? x : it->second);
  }
  return reduce_word(out);
}

Word word_of_partition(const Partition& p) { return reduce_word(to_word(p)); }

Word labelled_word(const Partition& p, std::span<const Letter> block_letters) {
  if (block_letters.size() != p.block_count())
    throw InputError("labelled_word needs one letter per block");
  Word out;
  out.letters.reserve(p.size());
  for (std::size_t j = 0; j < p.lower_count(); ++j)
    out.letters.push_back(block_letters[p.lower(j)]);
  for (std::size_t i = p.upper_count(); i-- > 0;)
    out.letters.push_back(block_letters[p.upper(i)]);
  return reduce_word(out);
}

std::vector<Word> f_generators(std::span<const Partition> generators) {
  std::vector<Word> out;
  for (const auto& g : generators) {
    Word w = word_of_partition(g);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle specs

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("bad number in oracle spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

OracleSpec parse_oracle(std::string_view text) {
  if (text == "trivial") return OracleSpec::trivial();
  if (text == "full") return OracleSpec::full();
  if (text == "even-count") return OracleSpec::even_count();
  if (text == "even-length") return OracleSpec::even_length();
  if (text.starts_with("dihedral:s=")) {
    const unsigned s = parse_unsigned(text.substr(11), text);
    if (s < 1) throw InputError("dihedral oracle needs s >= 1");
    return OracleSpec::dihedral(s);
  }
  if (text.starts_with("bfs:")) {
    std::vector<Word> gens;
    std::size_t max_length = 12;
    bool have_gens = false;
    std::string body(text.substr(4));
    std::stringstream fields(body);
    for (std::string field; std::getline(fields, field, ';');) {
      if (field.starts_with("gens=")) {
        have_gens = true;
        std::stringstream items(field.substr(5));
        for (std::string item; std::getline(items, item, ',');)
          gens.push_back(reduce_word(parse_word(item)));
      } else if (field.starts_with("L=")) {
        max_length = parse_unsigned(std::string_view(field).substr(2), text);
      } else {
        throw InputError("unknown field '" + field + "' in oracle spec");
      }
    }
    if (!have_gens) throw InputError("bfs oracle needs gens=...");
    return OracleSpec::bfs(std::move(gens), max_length);
  }
  throw InputError("unknown oracle '" + std::string(text) + "'");
}

std::string to_string(const OracleSpec& spec) {
  switch (spec.kind) {
    case OracleKind::trivial_subgroup:
      return "trivial";
    case OracleKind::full_group:
      return "full";
    case OracleKind::even_letter_count:
      return "even-count";
    case OracleKind::even_length:
      return "even-length";
    case OracleKind::dihedral:
      return "dihedral:s=" + std::to_string(spec.s);
    case OracleKind::bfs_closure: {
      std::string out = "bfs:gens=";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        if (i) out += ',';
        out += format_word(spec.generators[i]);
      }
      return out + ";L=" + std::to_string(spec.max_length);
    }
  }
  return "trivial";
}

// ---------------------------------------------------------------------------
// Bounded breadth-first exploration of the invariant normal closure

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter x : w.letters) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

Word shifted(const Word& w, Letter offset) {
  Word out = w;
  for (auto& x : out.letters) x += offset;
  return out;
}

Word joined(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

}  // namespace

struct SubgroupOracle::Bfs {
  std::size_t max_length;
  std::size_t word_limit;
  bool exhausted = true;
  std::unordered_set<Word, WordHash> found;
  std::vector<Word> queue;
  std::vector<std::vector<Word>> done;  // by length

  Bfs(const OracleSpec& spec, std::size_t limit)
      : max_length(spec.max_length), word_limit(limit), done(spec.max_length + 1) {
    for (const auto& g : spec.generators) offer(g);
    run();
  }

  // Canonical (reduced, letters renamed by first appearance) words only.
  void offer(const Word& w) {
    Word r = reduce_word(w);
    if (r.empty() || r.size() > max_length) return;
    r = canonical_renaming(r);
    if (found.size() >= word_limit) {
      if (!found.contains(r)) exhausted = false;
      return;
    }
    if (found.insert(r).second) queue.push_back(std::move(r));
  }

  void run() {
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Word x = queue[head];
      const Letter letters = max_letter(x);
      done[x.size()].push_back(x);

      offer(inverse(x));
      for (Letter a = 1; a <= letters + 1; ++a) offer(conjugate(x, a));
      for (Letter i = 1; i <= letters; ++i)
        for (Letter j = i + 1; j <= letters; ++j) offer(identify_letters(x, {{j, i}}));
      for (std::size_t len = 1; len + x.size() <= max_length; ++len) {
        for (std::size_t idx = 0; idx < done[len].size(); ++idx) {
          const Word& y = done[len][idx];
          offer(joined(x, shifted(y, letters)));
          offer(joined(y, shifted(x, max_letter(y))));
        }
      }
    }
  }
};

SubgroupOracle::SubgroupOracle(OracleSpec spec, std::size_t word_limit)
    : spec_(std::move(spec)) {
  if (spec_.kind == OracleKind::dihedral && spec_.s < 1)
    throw InputError("dihedral oracle needs s >= 1");
  if (spec_.kind == OracleKind::bfs_closure)
    bfs_ = std::make_unique<Bfs>(spec_, word_limit);
}

SubgroupOracle::~SubgroupOracle() = default;
SubgroupOracle::SubgroupOracle(SubgroupOracle&&) noexcept = default;
SubgroupOracle& SubgroupOracle::operator=(SubgroupOracle&&) noexcept = default;

bool SubgroupOracle::exhausted() const { return bfs_ ? bfs_->exhausted : true; }

std::size_t SubgroupOracle::explored_words() const {
  return bfs_ ? bfs_->found.size() : 0;
}

Membership SubgroupOracle::contains(const Word& w) const {
  auto answer = [](bool b) { return b ? Membership::yes : Membership::no; };
  switch (spec_.kind) {
    case OracleKind::trivial_subgroup:
      return answer(reduce_word(w).empty());
    case OracleKind::full_group:
      return Membership::yes;
    case OracleKind::even_letter_count: {
      std::map<Letter, std::size_t> counts;
      for (Letter x : w.letters) ++counts[x];
      for (const auto& [letter, count] : counts)
        if (count % 2) return Membership::no;
      return Membership::yes;
    }
    case OracleKind::even_length:
      return answer(w.size() % 2 == 0);
    case OracleKind::dihedral: {
      std::set<Letter> alphabet(w.letters.begin(), w.letters.end());
      if (alphabet.size() > 2)
        throw InputError("dihedral oracle only handles words in two letters, got '" +
                         format_word(w) + "'");
      // In Z2 * Z2 the normal closure of (ab)^s is generated by (ab)^s, so
      // membership is reduced length divisible by 2s.
      return answer(reduce_word(w).size() % (2 * std::size_t{spec_.s}) == 0);
    }
    case OracleKind::bfs_closure: {
      Word r = reduce_word(w);
      if (r.empty()) return Membership::yes;
      if (bfs_->found.contains(canonical_renaming(r))) return Membership::yes;
      return Membership::unknown;
    }
  }
  return Membership::unknown;
}

Membership subgroup_member(const Word& w, const OracleSpec& oracle) {
  return SubgroupOracle(oracle).contains(w);
}

Membership category_of_subgroup_member(const Partition& p,
                                       const SubgroupOracle& oracle) {
  return oracle.contains(word_of_partition(p));
}

Membership category_of_subgroup_member(const Partition& p,
                                       const OracleSpec& oracle) {
  return category_of_subgroup_member(p, SubgroupOracle(oracle));
}

// ---------------------------------------------------------------------------
// Witnesses

namespace {

Partition single_leg_line(const Partition& p, const char* what) {
  Partition line = one_line(p);
  if (!is_single_leg(line))
    throw InputError(std::string(what) + ": input " + to_text(p) +
                     " is not in single leg form");
  return line;
}

}  // namespace

Partition witness_product(const Partition& p, const Partition& q,
                          std::span<const std::pair<BlockId, BlockId>> shared) {
  const Partition a = single_leg_line(p, "product witness");
  const Partition b = single_leg_line(q, "product witness");
  const auto offset = static_cast<std::int64_t>(a.block_count());
  std::vector<std::int64_t> relabel(b.block_count());
  for (std::size_t i = 0; i < relabel.size(); ++i)
    relabel[i] = offset + static_cast<std::int64_t>(i);
  for (const auto& [bp, bq] : shared) {
    if (bp >= a.block_count() || bq >= b.block_count())
      throw InputError("product witness: shared block id out of range");
    relabel[bq] = bp;
  }
  std::vector<std::int64_t> labels(a.blocks().begin(), a.blocks().end());
  for (auto x : b.blocks()) labels.push_back(relabel[x]);
  return Partition::from_labels(0, labels.size(), labels);
}

Partition witness_inverse(const Partition& p) {
  return reflect_line(single_leg_line(p, "inverse witness"));
}

Partition witness_conjugate(const Partition& p, std::optional<BlockId> letter) {
  const Partition line = single_leg_line(p, "conjugate witness");
  // Compose the pair with | (x) p (x) |: an outer pair around p.
  Partition r = compose(named_partition({NamedKind::pair}),
                        pad_with_identities(line, 1, 1))
                    .partition;
  if (letter && *letter < line.block_count()) {
    // Point 0 is the outer pair; the letter's first point in p sits one
    // position to the right of its position in the line.
    const auto& b = line.blocks();
    const auto first = std::find(b.begin(), b.end(), *letter) - b.begin();
    r = connect_blocks(r, r.block_of(0), r.block_of(static_cast<std::size_t>(first) + 1));
  }
  return r;
}

Partition group_witness(WitnessOp op, const Partition& p,
                        const std::optional<Partition>& q,
                        std::optional<BlockId> letter) {
  switch (op) {
    case WitnessOp::product:
      if (!q) throw InputError("product witness needs a second partition");
      return witness_product(p, *q);
    case WitnessOp::inverse:
      return witness_inverse(p);
    case WitnessOp::conjugate:
      return witness_conjugate(p, letter);
  }
  throw InputError("unknown witness operation");
}

BijectionReport bijection_test(std::span<const Partition> generators,
                               const SubgroupOracle& oracle, std::size_t max_points,
                               std::size_t slack, std::uint64_t budget,
                               std::size_t max_blocks) {
  std::vector<Partition> gens(generators.begin(), generators.end());
  gens.push_back(named_partition({NamedKind::pair_positioner}));
  const CategoryTruncation t = closure(gens, max_points, slack, budget);

  BijectionReport report;
  report.saturated = t.saturated();
  for (std::size_t m = 0; m <= max_points; ++m) {
    // Restricted growth strings enumerate P(0,m) once each.
    std::vector<std::int64_t> rgs(m, 0);
    std::vector<std::int64_t> prefix_max(m + 1, -1);
    std::size_t i = 0;
    bool more = true;
    while (more) {
      for (; i < m; ++i) prefix_max[i + 1] = std::max(prefix_max[i], rgs[i]);
      const auto blocks = static_cast<std::size_t>(prefix_max[m] + 1);
      if (max_blocks == 0 || blocks <= max_blocks) {
        const Partition p = Partition::from_labels(0, m, rgs);
        const bool in_closure = t.contains(p);
        const Membership in_h = category_of_subgroup_member(p, oracle);
        ++report.checked;
        if (in_h == Membership::unknown) {
          ++report.oracle_unknown;
        } else if (in_closure != (in_h == Membership::yes)) {
          ++report.disagreements;
          if (report.examples.size() < 8) report.examples.push_back(p);
        }
      }
      // Next string: bump the last position that can grow, reset the rest.
      more = false;
      for (std::size_t pos = m; pos-- > 0;) {
        if (rgs[pos] <= prefix_max[pos]) {
          ++rgs[pos];
          std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rgs.end(), 0);
          i = pos;
          more = true;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace pcat
