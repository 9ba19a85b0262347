#include "pcat/category.hpp"

namespace pcat {

Partition connect_blocks(const Partition& p, BlockId b1, BlockId b2) {
  if (b1 == b2) throw InputError("connect_blocks needs two different blocks");
  if (b1 >= p.block_count() || b2 >= p.block_count())
    throw InputError("connect_blocks: block id out of range (partition has " +
                     std::to_string(p.block_count()) + " blocks)");
  std::vector<std::int64_t> labels(p.blocks().begin(), p.blocks().end());
  for (auto& x : labels)
    if (x == b2) x = b1;
  return Partition::from_labels(p.upper_count(), p.lower_count(), labels);
}

Partition parity_reduce(const Partition& p) {
  if (p.upper_count() != 0)
    throw InputError("parity_reduce expects a partition without upper points");
  std::vector<std::int64_t> labels;
  const auto b = p.blocks();
  std::size_t i = 0;
  while (i < b.size()) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    if ((j - i) % 2 == 1) labels.push_back(b[i]);
    i = j;
  }
  return Partition::from_labels(0, labels.size(), labels);
}

Partition single_leg_version(const Partition& p) {
  Partition current = one_line(p);
  for (;;) {
    Partition next = parity_reduce(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_single_leg(const Partition& p) {
  if (p.upper_count() != 0)
    throw InputError("is_single_leg expects a partition without upper points");
  const auto b = p.blocks();
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] == b[i - 1]) return false;
  return true;
}

}  // namespace pcat
