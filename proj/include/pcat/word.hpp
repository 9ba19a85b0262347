#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pcat {

/// Letter ids are positive; 1 prints as `a`, 26 as `z`, 27 as `[27]`.
using Letter = std::uint32_t;

/// A finite sequence of letters. Not necessarily reduced; see reduce_word().
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
  Word(std::initializer_list<Letter> ls) : letters(ls) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

/// Text form: a-z, then bracketed integers; the empty word prints as `e`.
std::string format_word(const Word& w);

/// Inverse of format_word(). Accepts `e` and the empty string for the
/// identity. Throws InputError on anything else it cannot read.
Word parse_word(std::string_view text);

/// Renames letters to 1, 2, ... in order of first appearance.
Word canonical_renaming(const Word& w);

/// Largest letter id occurring in w (0 for the empty word).
Letter max_letter(const Word& w);

}  // namespace pcat
