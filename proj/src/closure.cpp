// Closure engine for categories of partitions.
//
// A category contains p in P(k,l) iff it contains the one-line form of p in
// P(0,k+l), and the one-line slices are closed under cyclic rotation and
// reflection. The engine therefore only stores one-line partitions, packed
// as restricted growth strings (4 bits per point, at most 16 points), and
// saturates them under
//
//   * rotation and reflection (whole dihedral orbits are inserted at once),
//   * contraction of the last two points, i.e. composing with a cup after
//     rotating those two points to the upper row,
//   * concatenation x ++ y, the tensor product; y ++ x is a rotation of it,
//   * gluing x to a rotated seed g: concatenate and contract the j innermost
//     pairs across the junction, which is composition of x with g. Only used
//     when x ++ g exceeds the bound. Seeds are rotated, not reflected.
//
// Together with the identity/pair seed these generate the same category as
// tensor, composition, involution and rotation.

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "pcat/category.hpp"

namespace pcat {

namespace {

using Key = std::uint64_t;
using Points = std::array<std::uint8_t, kMaxClosurePoints>;

Key pack(const Points& canon, std::size_t m) {
  Key key = 0;
  for (std::size_t i = 0; i < m; ++i) key |= Key{canon[i]} << (4 * i);
  return key;
}

Points unpack(Key key, std::size_t m) {
  Points out{};
  for (std::size_t i = 0; i < m; ++i) out[i] = (key >> (4 * i)) & 0xF;
  return out;
}

// Relabels raw[0..m) to first-appearance order and packs it.
Key canonical_key(const Points& raw, std::size_t m, std::uint8_t* blocks = nullptr) {
  std::array<std::uint8_t, kMaxClosurePoints> names;
  names.fill(0xFF);
  std::uint8_t next = 0;
  Key key = 0;
  for (std::size_t i = 0; i < m; ++i) {
    auto& n = names[raw[i]];
    if (n == 0xFF) n = next++;
    key |= Key{n} << (4 * i);
  }
  if (blocks) *blocks = next;
  return key;
}

Key key_of_line(const Partition& line) {
  Points raw{};
  for (std::size_t i = 0; i < line.size(); ++i)
    raw[i] = static_cast<std::uint8_t>(line.block_of(i));
  return pack(raw, line.size());
}

Partition line_of_key(Key key, std::size_t m) {
  const Points pts = unpack(key, m);
  std::vector<std::int64_t> labels(pts.begin(), pts.begin() + m);
  return Partition::from_labels(0, m, labels);
}

std::uint8_t block_count_of(Key key, std::size_t m) {
  std::uint8_t top = 0;
  for (std::size_t i = 0; i < m; ++i)
    top = std::max<std::uint8_t>(top, ((key >> (4 * i)) & 0xF) + 1);
  return top;
}

std::array<std::uint64_t, kMaxClosurePoints + 1> bell_numbers() {
  // Bell triangle.
  std::array<std::uint64_t, kMaxClosurePoints + 1> bell{};
  std::vector<std::uint64_t> row{1};
  bell[0] = 1;
  for (std::size_t n = 1; n <= kMaxClosurePoints; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell[n] = next.front();
    row = std::move(next);
  }
  return bell;
}

class Engine {
 public:
  Engine(std::size_t bound, std::uint64_t budget)
      : bound_(bound), budget_(budget), seen_(bound + 1), done_(bound + 1),
        bell_(bell_numbers()) {}

  // Adds a generator and saturates again. A generator that is already a
  // member is not used as a glue seed. Returns false if the budget ran out.
  bool add(const Partition& line) {
    const Key key = key_of_line(line);
    const std::size_t s = line.size();
    if (seen_[s].contains(key)) return true;
    insert_orbit(key, s);
    const auto keys = orbit(key, s);
    std::vector<Key> fresh;
    for (std::size_t r = 0; r < s; ++r)
      if (seed_keys_[s].insert(keys[r]).second) fresh.push_back(keys[r]);
    // Members processed so far have not seen the new seeds yet.
    for (std::size_t m = bound_ + 1 - s; m <= bound_; ++m)
      for (const auto& x : done_[m])
        if (!glue_all(x.key, m, x.blocks, fresh, s)) return false;
    seeds_[s].insert(seeds_[s].end(), fresh.begin(), fresh.end());
    return run();
  }

  std::uint64_t steps() const { return steps_; }

  std::vector<Key> sorted_slice(std::size_t m) const {
    std::vector<Key> out(seen_[m].begin(), seen_[m].end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Done {
    Key key;
    std::uint8_t blocks;
  };

  // Returns true iff the fixpoint was reached within the budget.
  bool run() {
    while (head_ < queue_.size()) {
      const auto [x, m] = queue_[head_++];
      const std::uint8_t x_blocks = block_count_of(x, m);
      done_[m].push_back({x, x_blocks});

      if (m >= 2 && !complete(m - 2)) {
        if (!step()) return false;
        contract(x, m);
      }
      for (std::size_t s = bound_ + 1 - m; s <= bound_; ++s)
        if (!glue_all(x, m, x_blocks, seeds_[s], s)) return false;
      for (std::size_t my = 0; m + my <= bound_; ++my) {
        if (complete(m + my)) continue;
        const Key shift_mask = nibble_mask(my) * x_blocks;
        for (const auto& y : done_[my]) {
          if (!step()) return false;
          const Key joined =
              my == 0 ? x : x | ((y.key + shift_mask) << (4 * m));
          if (!seen_[m + my].contains(joined)) insert_orbit(joined, m + my);
        }
      }
    }
    return true;
  }


  static Key nibble_mask(std::size_t m) {
    Key mask = 0;
    for (std::size_t i = 0; i < m; ++i) mask |= Key{1} << (4 * i);
    return mask;
  }

  bool complete(std::size_t m) const { return seen_[m].size() == bell_[m]; }

  bool step() { return ++steps_ <= budget_; }

  bool glue_all(Key x, std::size_t m, std::uint8_t x_blocks, const std::vector<Key>& seeds,
                std::size_t s) {
    if (seeds.empty() || m + s <= bound_) return true;
    const std::size_t total = m + s;
    for (std::size_t j = (total - bound_ + 1) / 2; j <= std::min(m, s); ++j) {
      if (complete(total - 2 * j)) continue;
      for (Key g : seeds) {
        if (!step()) return false;
        glue(x, m, x_blocks, g, s, j);
      }
    }
    return true;
  }

  void contract(Key x, std::size_t m) {
    Points pts = unpack(x, m);
    const auto keep = pts[m - 2];
    const auto drop = pts[m - 1];
    if (keep != drop)
      for (std::size_t i = 0; i < m - 2; ++i)
        if (pts[i] == drop) pts[i] = keep;
    const Key key = canonical_key(pts, m - 2);
    if (!seen_[m - 2].contains(key)) insert_orbit(key, m - 2);
  }

  // x ++ g with x[m-1-i] joined to g[i] for i < j, those 2j points removed.
  void glue(Key x, std::size_t m, std::uint8_t x_blocks, Key g, std::size_t s,
            std::size_t j) {
    constexpr std::size_t kLabels = 2 * kMaxClosurePoints;
    std::array<std::uint8_t, kLabels> parent;
    for (std::size_t i = 0; i < kLabels; ++i) parent[i] = static_cast<std::uint8_t>(i);
    auto find = [&](std::uint8_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    const Points xs = unpack(x, m);
    const Points gs = unpack(g, s);
    for (std::size_t i = 0; i < j; ++i) {
      const auto a = find(xs[m - 1 - i]);
      const auto b = find(static_cast<std::uint8_t>(gs[i] + x_blocks));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    const std::size_t out = m + s - 2 * j;
    std::array<std::uint8_t, kLabels> names;
    names.fill(0xFF);
    std::uint8_t next = 0;
    Key key = 0;
    for (std::size_t i = 0; i < out; ++i) {
      const std::uint8_t label = i < m - j
                                     ? xs[i]
                                     : static_cast<std::uint8_t>(gs[i - (m - j) + j] + x_blocks);
      auto& n = names[find(label)];
      if (n == 0xFF) n = next++;
      key |= Key{n} << (4 * i);
    }
    if (!seen_[out].contains(key)) insert_orbit(key, out);
  }

  static std::vector<Key> orbit(Key key, std::size_t m) {
    std::vector<Key> out;
    if (m == 0) return {0};
    const Points pts = unpack(key, m);
    Points raw{};
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < m; ++i) {
          const std::size_t src = (i + r) % m;
          raw[i] = pts[mirrored ? m - 1 - src : src];
        }
        out.push_back(canonical_key(raw, m));
      }
    }
    return out;
  }

  void insert_orbit(Key key, std::size_t m) {
    for (Key k : orbit(key, m))
      if (seen_[m].insert(k).second) queue_.push_back({k, m});
  }

  std::size_t bound_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<absl::flat_hash_set<Key>> seen_;
  std::vector<std::vector<Done>> done_;
  std::vector<std::pair<Key, std::size_t>> queue_;
  std::size_t head_ = 0;
  // Rotations of the seeds, by size.
  std::array<std::vector<Key>, kMaxClosurePoints + 1> seeds_;
  std::array<absl::flat_hash_set<Key>, kMaxClosurePoints + 1> seed_keys_;
  std::array<std::uint64_t, kMaxClosurePoints + 1> bell_;
};

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw InputError("expected true/false, got '" + s + "'");
}

std::size_t parse_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw InputError("bad integer '" + s + "'");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InputError("bad integer '" + s + "'");
  }
}

}  // namespace

CategoryTruncation closure(std::span<const Partition> generators,
                           std::size_t max_points, std::size_t slack,
                           std::uint64_t budget) {
  if (max_points < 2) throw InputError("closure needs max_points >= 2");
  const std::size_t bound = max_points + slack;
  if (bound > kMaxClosurePoints)
    throw ResourceError("max_points + slack = " + std::to_string(bound) +
                        " exceeds the supported " +
                        std::to_string(kMaxClosurePoints) + " points");
  for (const auto& g : generators)
    if (g.size() > bound)
      throw InputError("generator " + to_text(g) +
                       " has more points than max_points + slack");

  std::vector<Partition> lines;
  for (const auto& g : generators) lines.push_back(one_line(g));
  std::stable_sort(lines.begin(), lines.end(), [](const Partition& a, const Partition& b) {
    return a.size() < b.size();
  });

  Engine engine(bound, budget);
  bool saturated = engine.add(named_partition({NamedKind::pair}));
  for (std::size_t i = 0; saturated && i < lines.size(); ++i) saturated = engine.add(lines[i]);

  CategoryTruncation t;
  t.generators_.assign(generators.begin(), generators.end());
  t.max_points_ = max_points;
  t.slack_ = slack;
  t.saturated_ = saturated;
  t.steps_ = engine.steps();
  t.lines_.resize(max_points + 1);
  for (std::size_t m = 0; m <= max_points; ++m) t.lines_[m] = engine.sorted_slice(m);
  return t;
}

CategoryTruncation from_members(std::span<const Partition> generators,
                                std::span<const Partition> members,
                                std::size_t max_points, std::size_t slack,
                                bool saturated) {
  if (max_points > kMaxClosurePoints)
    throw ResourceError("max_points exceeds the supported point count");
  CategoryTruncation t;
  t.generators_.assign(generators.begin(), generators.end());
  t.max_points_ = max_points;
  t.slack_ = slack;
  t.saturated_ = saturated;
  t.lines_.resize(max_points + 1);
  for (const auto& p : members) {
    if (p.size() > max_points)
      throw InputError("member " + to_text(p) + " exceeds max_points");
    t.lines_[p.size()].push_back(key_of_line(one_line(p)));
  }
  for (auto& slice : t.lines_) {
    std::sort(slice.begin(), slice.end());
    slice.erase(std::unique(slice.begin(), slice.end()), slice.end());
  }
  return t;
}

bool CategoryTruncation::contains(const Partition& p) const {
  if (p.size() > max_points_)
    throw InputError("partition " + to_text(p) + " has more than " +
                     std::to_string(max_points_) + " points");
  const auto& slice = lines_[p.size()];
  return std::binary_search(slice.begin(), slice.end(), key_of_line(one_line(p)));
}

std::vector<Partition> CategoryTruncation::line_members(std::size_t m) const {
  std::vector<Partition> out;
  if (m >= lines_.size()) return out;
  out.reserve(lines_[m].size());
  for (Key key : lines_[m]) out.push_back(line_of_key(key, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> CategoryTruncation::line_members() const {
  std::vector<Partition> out;
  for (std::size_t m = 0; m < lines_.size(); ++m) {
    auto slice = line_members(m);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::vector<Partition> CategoryTruncation::members() const {
  std::vector<Partition> out;
  out.reserve(member_count());
  for (std::size_t m = 0; m < lines_.size(); ++m)
    for (Key key : lines_[m]) {
      const Partition line = line_of_key(key, m);
      for (std::size_t k = 0; k <= m; ++k) out.push_back(from_one_line(line, k));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CategoryTruncation::line_member_count() const {
  std::size_t n = 0;
  for (const auto& slice : lines_) n += slice.size();
  return n;
}

std::size_t CategoryTruncation::member_count() const {
  std::size_t n = 0;
  for (std::size_t m = 0; m < lines_.size(); ++m) n += (m + 1) * lines_[m].size();
  return n;
}

bool CategoryTruncation::same_members(const CategoryTruncation& other) const {
  return max_points_ == other.max_points_ && lines_ == other.lines_;
}

std::string CategoryTruncation::header_line() const {
  std::string gens;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) gens += '|';
    gens += to_text(generators_[i]);
  }
  return "generators=" + gens + ";N=" + std::to_string(max_points_) +
         ";slack=" + std::to_string(slack_) +
         ";saturated=" + (saturated_ ? "true" : "false");
}

void CategoryTruncation::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write cache file '" + path + "'");
  out << header_line() << '\n';
  for (const auto& p : members()) out << to_text(p) << '\n';
  if (!out) throw InputError("failed writing cache file '" + path + "'");
}

CategoryTruncation CategoryTruncation::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read cache file '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || !header.starts_with("generators="))
    throw InputError("cache file '" + path + "' lacks a generators= header");

  // generators=<g1>|<g2>;N=..;slack=..;saturated=..  (parsed from the right).
  auto take_field = [&](const std::string& name) {
    const std::string tag = ";" + name + "=";
    auto pos = header.rfind(tag);
    if (pos == std::string::npos)
      throw InputError("cache header misses field '" + name + "'");
    std::string value = header.substr(pos + tag.size());
    header.erase(pos);
    return value;
  };
  const bool saturated = parse_bool(take_field("saturated"));
  const std::size_t slack = parse_size(take_field("slack"));
  const std::size_t max_points = parse_size(take_field("N"));
  std::vector<Partition> gens;
  std::string gen_text = header.substr(std::string("generators=").size());
  std::stringstream gs(gen_text);
  for (std::string item; std::getline(gs, item, '|');)
    if (!item.empty()) gens.push_back(parse_text(item));

  std::vector<Partition> members;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) members.push_back(parse_text(line));
  return from_members(gens, members, max_points, slack, saturated);
}

Membership member(const CategoryTruncation& t, const Partition& p) {
  return t.contains(p) ? Membership::yes : Membership::unknown;
}

std::vector<Partition> sl_subset(const CategoryTruncation& t) {
  std::vector<Partition> out;
  for (auto& p : t.line_members())
    if (is_single_leg(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace pcat
