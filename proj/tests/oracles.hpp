#pragma once

// Reference routines for the tests, written without one_line(), reduce_word()
// or t_map().

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat_test {

using pcat::Partition;

// Every set partition of k upper and l lower points, via restricted growth
// strings.
inline std::vector<Partition> all_partitions(std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  std::vector<std::int64_t> labels(k + l);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t top) {
    if (i == k + l) {
      out.push_back(pcat::make_partition(k, l, labels));
      return;
    }
    for (std::int64_t b = 0; b <= top + 1; ++b) {
      labels[i] = b;
      rec(i + 1, std::max(top, b));
    }
  };
  rec(0, -1);
  return out;
}

// All partitions in every P(k,l) with k + l <= m.
inline std::vector<Partition> all_partitions_upto(std::size_t m) {
  std::vector<Partition> out;
  for (std::size_t total = 0; total <= m; ++total)
    for (std::size_t k = 0; k <= total; ++k) {
      auto part = all_partitions(k, total - k);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

// Block labels of p around the circle: lower points left to right, then
// upper points right to left.
inline std::vector<std::uint32_t> circular_labels(const Partition& p) {
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < p.lower_count(); ++j) out.push_back(p.lower(j));
  for (std::size_t i = p.upper_count(); i-- > 0;) out.push_back(p.upper(i));
  return out;
}

inline bool is_noncrossing(const Partition& p) {
  const auto c = circular_labels(p);
  const std::size_t m = c.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t x = b + 1; x < m; ++x)
        for (std::size_t d = x + 1; d < m; ++d)
          if (c[a] == c[x] && c[b] == c[d] && c[a] != c[b]) return false;
  return true;
}

inline bool all_blocks_even(const Partition& p) {
  std::vector<std::size_t> count(p.block_count(), 0);
  for (auto b : p.blocks()) ++count[b];
  for (auto c : count)
    if (c % 2) return false;
  return true;
}

// Free reduction with a stack.
inline std::vector<std::uint32_t> stack_reduce(const std::vector<std::uint32_t>& w) {
  std::vector<std::uint32_t> out;
  for (auto x : w) {
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline std::vector<std::uint32_t> reduced_circular_word(const Partition& p) {
  return stack_reduce(circular_labels(p));
}

// T_p entry (row j, column i) by checking every block directly.
inline std::vector<std::vector<int>> brute_tmap(const Partition& p, std::size_t n) {
  const std::size_t k = p.upper_count();
  const std::size_t l = p.lower_count();
  std::size_t cols = 1, rows = 1;
  for (std::size_t t = 0; t < k; ++t) cols *= n;
  for (std::size_t t = 0; t < l; ++t) rows *= n;
  std::vector<std::vector<int>> out(rows, std::vector<int>(cols, 0));
  std::vector<std::size_t> index(k + l);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t v = c;
      for (std::size_t t = k; t-- > 0;) {
        index[t] = v % n;
        v /= n;
      }
      v = r;
      for (std::size_t t = k + l; t-- > k;) {
        index[t] = v % n;
        v /= n;
      }
      bool ok = true;
      for (std::size_t a = 0; a < k + l && ok; ++a)
        for (std::size_t b = a + 1; b < k + l && ok; ++b)
          if (p.block_of(a) == p.block_of(b) && index[a] != index[b]) ok = false;
      out[r][c] = ok;
    }
  return out;
}

// Every reduced word over letters 1..letters with length <= max_length.
inline std::vector<pcat::Word> all_reduced_words(std::size_t max_length, pcat::Letter letters) {
  std::vector<pcat::Word> out{pcat::Word{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_length) continue;
    for (pcat::Letter a = 1; a <= letters; ++a) {
      if (!out[i].empty() && out[i].letters.back() == a) continue;
      auto w = out[i];
      w.letters.push_back(a);
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline bool letter_counts_even(const pcat::Word& w) {
  std::vector<std::size_t> count(pcat::max_letter(w) + 1, 0);
  for (auto a : w.letters) ++count[a];
  for (auto c : count)
    if (c % 2) return false;
  return true;
}

// Membership in the dihedral quotient of order 2s for a word on at most two
// letters: after reduction the word alternates, and (ab)^s = e.
inline bool dihedral_trivial(const pcat::Word& w, std::size_t s) {
  std::vector<std::uint32_t> raw(w.letters.begin(), w.letters.end());
  return stack_reduce(raw).size() % (2 * s) == 0;
}

inline std::vector<std::vector<long>> int_product(const std::vector<std::vector<int>>& a,
                                                  const std::vector<std::vector<int>>& b) {
  const std::size_t rows = a.size();
  const std::size_t mid = b.size();
  const std::size_t cols = mid ? b[0].size() : 0;
  std::vector<std::vector<long>> out(rows, std::vector<long>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t t = 0; t < mid; ++t)
      if (a[r][t])
        for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][t] * b[t][c];
  return out;
}

}  // namespace pcat_test
