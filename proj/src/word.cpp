#include "pcat/word.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "pcat/errors.hpp"

namespace pcat {

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  out.reserve(w.size());
  for (Letter x : w.letters) {
    if (x == 0) throw InputError("letter ids start at 1");
    if (x <= 26) {
      out.push_back(static_cast<char>('a' + (x - 1)));
    } else {
      out += '[';
      out += std::to_string(x);
      out += ']';
    }
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.empty() || text == "e") return w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c >= 'a' && c <= 'z') {
      w.letters.push_back(static_cast<Letter>(c - 'a' + 1));
      ++i;
    } else if (c == '[') {
      auto close = text.find(']', i);
      if (close == std::string_view::npos)
        throw InputError("unterminated bracketed letter in '" +
                         std::string(text) + "'");
      Letter value = 0;
      auto first = text.data() + i + 1;
      auto last = text.data() + close;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || value == 0)
        throw InputError("bad bracketed letter in '" + std::string(text) +
                         "'");
      w.letters.push_back(value);
      i = close + 1;
    } else {
      throw InputError("unexpected character '" + std::string(1, c) +
                       "' in word '" + std::string(text) + "'");
    }
  }
  return w;
}

Word canonical_renaming(const Word& w) {
  std::unordered_map<Letter, Letter> names;
  Word out;
  out.letters.reserve(w.size());
  for (Letter x : w.letters) {
    auto [it, inserted] =
        names.try_emplace(x, static_cast<Letter>(names.size() + 1));
    out.letters.push_back(it->second);
  }
  return out;
}

Letter max_letter(const Word& w) {
  if (w.empty()) return 0;
  return *std::max_element(w.letters.begin(), w.letters.end());
}

}  // namespace pcat
