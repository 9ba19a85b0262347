#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "pcat/category.hpp"

namespace pcat {

namespace {

Partition p_of(std::size_t k, std::size_t l, std::vector<std::int64_t> labels) {
  return Partition::from_labels(k, l, labels);
}

unsigned parse_parameter(std::string_view text, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("bad parameter in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Partition named_partition(NamedPartitionId id) {
  switch (id.kind) {
    case NamedKind::singleton:
      return p_of(0, 1, {0});
    case NamedKind::double_singleton:
      return p_of(0, 2, {0, 1});
    case NamedKind::pair:
      return p_of(0, 2, {0, 0});
    case NamedKind::identity:
      return p_of(1, 1, {0, 0});
    case NamedKind::four_block:
      return p_of(0, 4, {0, 0, 0, 0});
    case NamedKind::crossing:
      return p_of(2, 2, {0, 1, 1, 0});
    case NamedKind::half_lib:
      return p_of(3, 3, {0, 1, 2, 2, 1, 0});
    case NamedKind::pair_positioner:
      return p_of(3, 3, {0, 0, 1, 1, 0, 0});
    case NamedKind::h: {
      if (id.parameter < 1) throw InputError("h_s needs s >= 1");
      std::vector<std::int64_t> labels(2 * std::size_t{id.parameter});
      for (std::size_t i = 0; i < labels.size(); ++i)
        labels[i] = static_cast<std::int64_t>(i % 2);
      return Partition::from_labels(0, labels.size(), labels);
    }
    case NamedKind::k:
      return k_partition_direct(id.parameter);
  }
  throw InputError("unknown named partition");
}

Partition named_partition(std::string_view mnemonic) {
  std::string name;
  for (char c : mnemonic) {
    if (c == '_' || c == '-' || c == ' ') continue;
    name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (name == "singleton" || name == "single")
    return named_partition({NamedKind::singleton});
  if (name == "dsingleton" || name == "doublesingleton")
    return named_partition({NamedKind::double_singleton});
  if (name == "pair") return named_partition({NamedKind::pair});
  if (name == "copair") return involute(named_partition({NamedKind::pair}));
  if (name == "id" || name == "identity")
    return named_partition({NamedKind::identity});
  if (name == "fourblock") return named_partition({NamedKind::four_block});
  if (name == "cross" || name == "crossing")
    return named_partition({NamedKind::crossing});
  if (name == "halflib" || name == "halfliberating")
    return named_partition({NamedKind::half_lib});
  if (name == "primary" || name == "pairpositioner")
    return named_partition({NamedKind::pair_positioner});
  if (name == "empty") return Partition{};
  auto param = [&](std::string_view prefix) -> std::optional<unsigned> {
    if (name.starts_with(prefix))
      return parse_parameter(std::string_view(name).substr(prefix.size()),
                             mnemonic);
    return std::nullopt;
  };
  if (auto s = param("h:s=")) return named_partition({NamedKind::h, *s});
  if (auto l = param("k:l=")) return named_partition({NamedKind::k, *l});
  throw InputError("unknown partition name '" + std::string(mnemonic) + "'");
}

Partition k_partition_direct(unsigned l) {
  if (l < 1) throw InputError("k_l needs l >= 1");
  const std::size_t n = std::size_t{l} + 2;
  std::vector<std::int64_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t b = (i == 0 || i == n - 1) ? 0 : static_cast<std::int64_t>(i);
    labels[i] = b;
    labels[n + i] = b;
  }
  return Partition::from_labels(n, n, labels);
}

Partition k_partition_recursive(unsigned l) {
  if (l < 1) throw InputError("k_l needs l >= 1");
  const Partition pair = named_partition({NamedKind::pair});
  const Partition copair = involute(pair);
  const Partition k1 = k_partition_direct(1);
  Partition current = k1;
  for (unsigned step = 1; step < l; ++step) {
    const Partition open = pad_with_identities(pair, step + 1, 2);
    const Partition close = pad_with_identities(copair, step + 1, 2);
    current =
        compose(compose(open, tensor(current, k1)).partition, close).partition;
  }
  return current;
}

Partition nested_pairs(std::size_t l) {
  std::vector<std::int64_t> labels(2 * l);
  for (std::size_t i = 0; i < l; ++i) {
    labels[i] = static_cast<std::int64_t>(i);
    labels[2 * l - 1 - i] = static_cast<std::int64_t>(i);
  }
  return Partition::from_labels(2 * l, 0, labels);
}

Partition pad_with_identities(const Partition& p, std::size_t alpha,
                              std::size_t beta) {
  const Partition id = named_partition({NamedKind::identity});
  Partition out;
  for (std::size_t i = 0; i < alpha; ++i) out = tensor(out, id);
  out = tensor(out, p);
  for (std::size_t i = 0; i < beta; ++i) out = tensor(out, id);
  return out;
}

}  // namespace pcat
