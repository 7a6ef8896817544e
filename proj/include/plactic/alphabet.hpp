#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plactic {

/// One symbol of the ordered alphabet 1 < 2 < ... < n < n̄ < ... < 1̄.
///
/// Stored as a signed code: +k for k, -k for k̄. The order between two
/// letters does not depend on n, so comparisons need no alphabet parameter.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int value, bool barred)
      : code_(static_cast<std::int8_t>(barred ? -value : value)) {}

  static constexpr Letter unbarred(int value) { return Letter(value, false); }
  static constexpr Letter bar(int value) { return Letter(value, true); }
  static constexpr Letter from_code(int code) {
    return Letter(code < 0 ? -code : code, code < 0);
  }

  constexpr int value() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool barred() const { return code_ < 0; }
  constexpr int code() const { return code_; }

  /// Position in 1..2n.
  constexpr int rank(int n) const { return barred() ? 2 * n + 1 - value() : value(); }
  static constexpr Letter from_rank(int rank, int n) {
    return rank <= n ? unbarred(rank) : bar(2 * n + 1 - rank);
  }

  /// The letter paired with this one: k <-> k̄.
  constexpr Letter conjugate() const { return from_code(-code_); }

  constexpr std::strong_ordering operator<=>(Letter const& other) const {
    return key() <=> other.key();
  }
  constexpr bool operator==(Letter const& other) const = default;

 private:
  constexpr int key() const { return code_ > 0 ? code_ : 256 + code_; }

  std::int8_t code_ = 1;
};

inline constexpr int kMaxRank = 127;

/// A word over C_n. The alphabet parameter travels with the letters.
struct Word {
  int n = 1;
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(int n_) : n(n_) {}
  Word(int n_, std::vector<Letter> letters_);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  bool operator==(Word const&) const = default;
  auto operator<=>(Word const& other) const {
    if (auto c = n <=> other.n; c != 0) return c;
    return letters <=> other.letters;
  }
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& token, std::string const& why)
      : std::invalid_argument("bad token '" + token + "': " + why), token_(token) {}
  std::string const& token() const { return token_; }

 private:
  std::string token_;
};

/// Thrown when two words over different alphabets meet in one operation.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_alphabet(Word const& a, Word const& b) {
  if (a.n != b.n) {
    throw AlphabetMismatch("words over C_" + std::to_string(a.n) + " and C_" +
                           std::to_string(b.n));
  }
}

std::strong_ordering compare_letters(Letter a, Letter b);

/// Tokens are decimal k (unbarred) or -k (barred), whitespace separated.
Word parse_word(std::string_view text, int n);
Letter parse_letter(std::string_view token, int n);

std::string format_letter(Letter a);
std::string format_word(Word const& w);
/// Overlined rendering, for human-facing output only.
std::string pretty_word(Word const& w);

Word concat(Word const& a, Word const& b);

/// All words of exactly `length` letters over C_n, in lexicographic rank order.
/// `index` enumerates them: digit j (most significant first) is rank - 1.
Word word_from_index(std::uint64_t index, std::size_t length, int n);
std::uint64_t count_words(std::size_t length, int n);

}  // namespace plactic
