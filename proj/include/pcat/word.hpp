#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

/// A one-row partition as a letter sequence in canonical labeling.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<BlockId> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  BlockId operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<BlockId>& letters() const noexcept { return letters_; }
  std::size_t num_letters() const noexcept;

  /// The word read from position `offset` cyclically.
  Word rotated(std::size_t offset) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<BlockId> letters_;
};

Word to_word(const Partition& p);
Partition from_word(const Word& w);

/// Accepts "abba", ";abba" or catalog names with no upper points.
Word parse_word(std::string_view text);
std::string format(const Word& w);

Word single_double_form(const Word& w);

struct DyckPath {
  std::vector<int> steps;   // -1 or +1
  std::vector<int> levels;  // levels[0] = 0, levels[i+1] = levels[i] + steps[i]

  std::string to_string() const;  // D for -1, U for +1
  bool returns_to_zero() const { return levels.back() == 0; }
};

DyckPath dyck_path(const Word& w);

enum class DoublingKind {
  odd_letter_between,  // (a): some b != a occurs an odd number of times between two a's
  odd_gap,             // (b): the gap between two a's has odd length
  gap_without_pair,    // (c): even gap of length >= 2 without two equal neighbours
};

struct DoublingViolation {
  DoublingKind kind;
  BlockId letter;             // the a
  std::size_t first, second;  // positions of the two consecutive a's (second may wrap)
  std::optional<BlockId> other;  // the b for odd_letter_between
};

std::string describe(const DoublingViolation& v);

/// Checks every factor a X a (consecutive occurrences, cyclically) against the
/// parity rules satisfied by words of hyperoctahedral categories without the
/// pair positioner.
std::vector<DoublingViolation> doubling_check(const Word& w);

/// One leg S of a W: a closed interval [begin, end] of the rotated word plus
/// the positions of a_1..a_k (ascending legs) or a_k..a_1 (descending legs).
struct WLeg {
  std::size_t begin = 0, end = 0;
  std::vector<std::size_t> marks;
};

struct WWitness {
  std::size_t rotation = 0;       // witness refers to w.rotated(rotation)
  std::vector<BlockId> letters;   // a_1..a_k, labels of the original word
  std::array<WLeg, 4> legs;       // S_alpha, S_beta, S_gamma, S_delta

  std::size_t depth() const { return letters.size(); }
};

/// Independent check of all witness conditions against w.
bool validate_witness(const Word& w, const WWitness& witness, std::string* why = nullptr);

/// Renders the segmentation Y1 S_alpha X S_beta Y2 S_gamma X S_delta Y3.
std::string describe(const Word& w, const WWitness& witness);

inline constexpr std::size_t kDefaultWordLengthCap = 24;

struct WSearchOptions {
  std::size_t length_cap = kDefaultWordLengthCap;
  bool override_cap = false;
};

class LengthCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

std::optional<WWitness> contains_w(const Word& w, std::size_t k, const WSearchOptions& opt = {});

struct WDepth {
  std::size_t depth = 0;
  std::optional<WWitness> witness;
};

WDepth wdepth(const Word& w, const WSearchOptions& opt = {});

}  // namespace pcat
