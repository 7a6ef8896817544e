#include "plactic/alphabet.hpp"

#include <charconv>
#include <sstream>

namespace plactic {

Word::Word(int n_, std::vector<Letter> letters_) : n(n_), letters(std::move(letters_)) {
  if (n < 1 || n > kMaxRank / 2) {
    throw std::invalid_argument("alphabet parameter out of range: " + std::to_string(n));
  }
  for (Letter a : letters) {
    if (a.value() < 1 || a.value() > n) {
      throw std::invalid_argument("letter " + format_letter(a) + " outside C_" +
                                  std::to_string(n));
    }
  }
}

std::strong_ordering compare_letters(Letter a, Letter b) { return a <=> b; }

Letter parse_letter(std::string_view token, int n) {
  std::string tok(token);
  int value = 0;
  auto const* first = token.data();
  auto const* last = token.data() + token.size();
  bool negative = !token.empty() && token.front() == '-';
  if (negative) ++first;
  if (first == last) throw ParseError(tok, "empty number");
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(tok, "not an integer");
  if (value < 1) throw ParseError(tok, "letters start at 1");
  if (value > n) throw ParseError(tok, "exceeds n = " + std::to_string(n));
  return Letter(value, negative);
}

Word parse_word(std::string_view text, int n) {
  Word w(n);
  if (n < 1 || n > kMaxRank / 2) {
    throw std::invalid_argument("alphabet parameter out of range: " + std::to_string(n));
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.letters.push_back(parse_letter(token, n));
  return w;
}

std::string format_letter(Letter a) { return std::to_string(a.code()); }

std::string format_word(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

std::string pretty_word(Word const& w) {
  std::string out;
  for (Letter a : w) {
    out += std::to_string(a.value());
    if (a.barred()) out += "̅";  // combining overline
  }
  return out;
}

Word concat(Word const& a, Word const& b) {
  require_same_alphabet(a, b);
  Word out(a.n);
  out.letters.reserve(a.size() + b.size());
  out.letters.insert(out.letters.end(), a.begin(), a.end());
  out.letters.insert(out.letters.end(), b.begin(), b.end());
  return out;
}

std::uint64_t count_words(std::size_t length, int n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= static_cast<std::uint64_t>(2 * n);
  return total;
}

Word word_from_index(std::uint64_t index, std::size_t length, int n) {
  Word w(n);
  w.letters.resize(length);
  auto const base = static_cast<std::uint64_t>(2 * n);
  for (std::size_t j = length; j-- > 0;) {
    w.letters[j] = Letter::from_rank(static_cast<int>(index % base) + 1, n);
    index /= base;
  }
  return w;
}

}  // namespace plactic
