#include "pcat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>

#include "pcat/errors.hpp"

namespace pcat {

namespace {

// Small union-find over point indices; used by compose().
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("bad integer '" + std::string(s) + "' in '" +
                     std::string(whole) + "'");
  return v;
}

}  // namespace

Partition Partition::from_labels(std::size_t k, std::size_t l,
                                 std::span<const std::int64_t> labels) {
  if (labels.size() != k + l)
    throw InputError("partition needs " + std::to_string(k + l) +
                     " labels, got " + std::to_string(labels.size()));
  Partition p;
  p.upper_ = k;
  p.lower_ = l;
  p.blocks_.reserve(labels.size());
  std::unordered_map<std::int64_t, BlockId> ids;
  for (auto label : labels) {
    auto [it, inserted] =
        ids.try_emplace(label, static_cast<BlockId>(ids.size()));
    p.blocks_.push_back(it->second);
  }
  p.block_count_ = ids.size();
  return p;
}

std::vector<std::vector<std::size_t>> Partition::block_members() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    out[blocks_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> out(block_count_, 0);
  for (auto b : blocks_) ++out[b];
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  if (auto c = upper_ <=> other.upper_; c != 0) return c;
  return blocks_ <=> other.blocks_;
}

Partition make_partition(std::size_t k, std::size_t l,
                         const std::vector<std::int64_t>& labels) {
  return Partition::from_labels(k, l, labels);
}

namespace {

template <typename Range>
Partition build(std::size_t k, std::size_t l, const Range& labels) {
  std::vector<std::int64_t> tmp(labels.begin(), labels.end());
  return Partition::from_labels(k, l, tmp);
}

}  // namespace

Partition canonicalize(const Partition& p) {
  return build(p.upper_count(), p.lower_count(), p.blocks());
}

Partition from_word(const Word& w) {
  return build(0, w.size(), w.letters);
}

Word to_word(const Partition& p) {
  const std::size_t k = p.upper_count();
  const std::size_t l = p.lower_count();
  std::vector<BlockId> reading;
  reading.reserve(k + l);
  for (std::size_t j = 0; j < l; ++j) reading.push_back(p.lower(j));
  for (std::size_t i = k; i-- > 0;) reading.push_back(p.upper(i));

  std::vector<Letter> names(p.block_count(), 0);
  Letter next = 1;
  Word w;
  w.letters.reserve(reading.size());
  for (auto b : reading) {
    if (names[b] == 0) names[b] = next++;
    w.letters.push_back(names[b]);
  }
  return w;
}

Partition one_line(const Partition& p) { return from_word(to_word(p)); }

Partition from_one_line(const Partition& line, std::size_t k) {
  if (line.upper_count() != 0)
    throw InputError("from_one_line expects a partition without upper points");
  const std::size_t m = line.size();
  if (k > m) throw InputError("cannot move more points than the line has");
  std::vector<std::int64_t> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < k; ++i) labels.push_back(line.block_of(m - 1 - i));
  for (std::size_t j = 0; j < m - k; ++j) labels.push_back(line.block_of(j));
  return Partition::from_labels(k, m - k, labels);
}

Partition tensor(const Partition& p, const Partition& q) {
  const std::size_t k = p.upper_count() + q.upper_count();
  const std::size_t l = p.lower_count() + q.lower_count();
  const auto offset = static_cast<std::int64_t>(p.block_count());
  std::vector<std::int64_t> labels;
  labels.reserve(k + l);
  for (std::size_t i = 0; i < p.upper_count(); ++i) labels.push_back(p.upper(i));
  for (std::size_t i = 0; i < q.upper_count(); ++i)
    labels.push_back(offset + q.upper(i));
  for (std::size_t j = 0; j < p.lower_count(); ++j) labels.push_back(p.lower(j));
  for (std::size_t j = 0; j < q.lower_count(); ++j)
    labels.push_back(offset + q.lower(j));
  return Partition::from_labels(k, l, labels);
}

CompositionResult compose(const Partition& p, const Partition& q) {
  if (p.lower_count() != q.upper_count())
    throw InputError("cannot compose: " + std::to_string(p.lower_count()) +
                     " lower points on top, " +
                     std::to_string(q.upper_count()) + " upper points below");
  const std::size_t k = p.upper_count();
  const std::size_t l = p.lower_count();
  const std::size_t m = q.lower_count();
  // Nodes: top row [0,k), middle row [k,k+l), bottom row [k+l,k+l+m).
  DisjointSets sets(k + l + m);
  {
    std::vector<std::size_t> first(p.block_count(), SIZE_MAX);
    for (std::size_t pt = 0; pt < p.size(); ++pt) {
      const auto b = p.block_of(pt);
      if (first[b] == SIZE_MAX)
        first[b] = pt;
      else
        sets.unite(first[b], pt);
    }
  }
  {
    std::vector<std::size_t> first(q.block_count(), SIZE_MAX);
    for (std::size_t pt = 0; pt < q.size(); ++pt) {
      const auto node = k + pt;  // q's upper row is the middle row
      const auto b = q.block_of(pt);
      if (first[b] == SIZE_MAX)
        first[b] = node;
      else
        sets.unite(first[b], node);
    }
  }

  std::vector<std::int64_t> labels;
  labels.reserve(k + m);
  std::vector<char> retained(k + l + m, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = sets.find(i);
    retained[r] = 1;
    labels.push_back(static_cast<std::int64_t>(r));
  }
  for (std::size_t j = 0; j < m; ++j) {
    const auto r = sets.find(k + l + j);
    retained[r] = 1;
    labels.push_back(static_cast<std::int64_t>(r));
  }
  std::vector<char> seen(k + l + m, 0);
  std::size_t loops = 0;
  for (std::size_t j = 0; j < l; ++j) {
    const auto r = sets.find(k + j);
    if (!retained[r] && !seen[r]) {
      seen[r] = 1;
      ++loops;
    }
  }
  return {Partition::from_labels(k, m, labels), loops};
}

Partition involute(const Partition& p) {
  std::vector<std::int64_t> labels;
  labels.reserve(p.size());
  for (std::size_t j = 0; j < p.lower_count(); ++j) labels.push_back(p.lower(j));
  for (std::size_t i = 0; i < p.upper_count(); ++i) labels.push_back(p.upper(i));
  return Partition::from_labels(p.lower_count(), p.upper_count(), labels);
}

Partition rotate(const Partition& p, Side side, Direction direction) {
  std::vector<std::int64_t> upper(p.blocks().begin(),
                                  p.blocks().begin() + p.upper_count());
  std::vector<std::int64_t> lower(p.blocks().begin() + p.upper_count(),
                                  p.blocks().end());
  auto& from = direction == Direction::down ? upper : lower;
  auto& to = direction == Direction::down ? lower : upper;
  if (from.empty())
    throw InputError(direction == Direction::down
                         ? "no upper point to rotate down"
                         : "no lower point to rotate up");
  if (side == Side::left) {
    to.insert(to.begin(), from.front());
    from.erase(from.begin());
  } else {
    to.push_back(from.back());
    from.pop_back();
  }
  std::vector<std::int64_t> labels = upper;
  labels.insert(labels.end(), lower.begin(), lower.end());
  return Partition::from_labels(upper.size(), lower.size(), labels);
}

Partition rotate_line(const Partition& p, std::size_t steps) {
  if (p.upper_count() != 0)
    throw InputError("rotate_line expects a partition without upper points");
  const std::size_t m = p.size();
  if (m == 0) return p;
  std::vector<std::int64_t> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = p.block_of((i + steps) % m);
  return Partition::from_labels(0, m, labels);
}

Partition reflect_line(const Partition& p) {
  if (p.upper_count() != 0)
    throw InputError("reflect_line expects a partition without upper points");
  std::vector<std::int64_t> labels(p.blocks().rbegin(), p.blocks().rend());
  return Partition::from_labels(0, p.size(), labels);
}

int delta(const Partition& p, std::span<const std::size_t> upper_indices,
          std::span<const std::size_t> lower_indices) {
  if (upper_indices.size() != p.upper_count() ||
      lower_indices.size() != p.lower_count())
    throw InputError("delta: multi-index arity does not match the partition");
  std::vector<std::size_t> value(p.block_count(), SIZE_MAX);
  auto check = [&](BlockId b, std::size_t v) {
    if (value[b] == SIZE_MAX) {
      value[b] = v;
      return true;
    }
    return value[b] == v;
  };
  for (std::size_t i = 0; i < p.upper_count(); ++i)
    if (!check(p.upper(i), upper_indices[i])) return 0;
  for (std::size_t j = 0; j < p.lower_count(); ++j)
    if (!check(p.lower(j), lower_indices[j])) return 0;
  return 1;
}

std::string to_text(const Partition& p) {
  std::string out = std::to_string(p.upper_count()) + ";" +
                    std::to_string(p.lower_count()) + ";";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.block_of(i) + 1);
  }
  return out;
}

Partition parse_text(std::string_view text) {
  auto s1 = text.find(';');
  auto s2 = s1 == std::string_view::npos ? s1 : text.find(';', s1 + 1);
  if (s2 == std::string_view::npos)
    throw InputError("partition text must look like 'k;l;b1,b2,...', got '" +
                     std::string(text) + "'");
  const auto k = parse_int(text.substr(0, s1), text);
  const auto l = parse_int(text.substr(s1 + 1, s2 - s1 - 1), text);
  if (k < 0 || l < 0) throw InputError("negative point count in '" +
                                       std::string(text) + "'");
  std::vector<std::int64_t> labels;
  auto rest = text.substr(s2 + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    labels.push_back(parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw InputError("trailing comma in '" +
                                       std::string(text) + "'");
  }
  return Partition::from_labels(static_cast<std::size_t>(k),
                                static_cast<std::size_t>(l), labels);
}

}  // namespace pcat
