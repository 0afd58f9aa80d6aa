#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcat {

using BlockId = std::uint32_t;

/// Raised by parse() with the offending character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A set partition of k upper and l lower points.
///
/// Points are indexed upper row left to right (0..k-1), then lower row left to
/// right (k..k+l-1). Block ids are always in first-occurrence order over that
/// reading, so two partitions are equal iff their encodings are identical.
class Partition {
 public:
  Partition() = default;

  /// Builds from arbitrary labels; relabels to canonical form.
  Partition(std::size_t upper_arity, std::size_t lower_arity, std::vector<BlockId> labels);

  /// Partition with no upper points, given as a word of labels.
  static Partition from_lower(std::vector<BlockId> labels);

  std::size_t upper_arity() const noexcept { return upper_; }
  std::size_t lower_arity() const noexcept { return blocks_.size() - upper_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  bool empty() const noexcept { return blocks_.empty(); }

  std::size_t num_blocks() const noexcept { return num_blocks_; }
  BlockId block_of(std::size_t point) const { return blocks_.at(point); }
  BlockId upper(std::size_t i) const { return blocks_.at(i); }
  BlockId lower(std::size_t j) const { return blocks_.at(upper_ + j); }
  const std::vector<BlockId>& labels() const noexcept { return blocks_; }

  /// Sizes indexed by block id.
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.upper_ != b.upper_) return a.upper_ <=> b.upper_;
    if (a.blocks_.size() != b.blocks_.size()) return a.blocks_.size() <=> b.blocks_.size();
    return a.blocks_ <=> b.blocks_;
  }

 private:
  std::size_t upper_ = 0;
  std::size_t num_blocks_ = 0;
  std::vector<BlockId> blocks_;
};

std::size_t hash_value(const Partition& p) noexcept;

/// Relabels a sequence in first-occurrence order (0, 1, 2, ...).
std::vector<BlockId> canonical_labels(std::span<const BlockId> labels);

// ---------------------------------------------------------------------------
// text form

Partition parse(std::string_view text);
std::string format(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Canonical letter for block id: a..z, then {b27}, {b28}, ...
std::string block_letter(BlockId id);

// ---------------------------------------------------------------------------
// category operations

Partition tensor(const Partition& p, const Partition& q);

struct Composition {
  Partition result;
  std::size_t removed_loops = 0;
};

/// q∘p: p on top, q below. Requires lower_arity(p) == upper_arity(q).
Composition compose(const Partition& q, const Partition& p);

Partition involute(const Partition& p);

/// Corner of the point that changes rows. The point keeps its block and lands
/// at the same end of the other row: top_left takes the leftmost upper point to
/// the left end of the lower row, bottom_right takes the rightmost lower point
/// to the right end of the upper row, and so on.
enum class Corner { top_left, top_right, bottom_left, bottom_right };

Corner inverse(Corner c) noexcept;

Partition rotate(const Partition& p, Corner corner);

/// All points to the lower row: upper row reversed, then lower row.
Partition to_one_row(const Partition& p);

/// Cyclic shift of a one-row partition: the first `shift` points move to the end.
Partition cyclic_shift(const Partition& p, std::size_t shift);

/// Inverse of to_one_row: the first `upper` points of w (reversed) become the upper row.
Partition split_one_row(const Partition& w, std::size_t upper);

Partition vertical_reflect(const Partition& p);

bool is_noncrossing(const Partition& p);

// ---------------------------------------------------------------------------
// named partitions

enum class NamedTag {
  empty,
  singleton,
  double_singleton,
  pair,
  identity,
  four_block,
  crossing,
  fat_crossing,
  half_liberator,
  pair_positioner,
  leg,
  h,
  pi,
};

struct NamedPartition {
  NamedTag tag;
  std::size_t parameter = 0;  // s for h(s), k for pi(k)
};

Partition named(NamedPartition n);
inline Partition named(NamedTag tag, std::size_t parameter = 0) { return named({tag, parameter}); }

/// Parses catalog names such as "fatcross", "h3", "pi4", "pairpositioner".
std::optional<NamedPartition> parse_named(std::string_view name);
std::string to_string(NamedPartition n);

/// Catalog name or partition literal.
Partition parse_partition_arg(std::string_view text);

}  // namespace pcat

template <>
struct std::hash<pcat::Partition> {
  std::size_t operator()(const pcat::Partition& p) const noexcept { return pcat::hash_value(p); }
};
