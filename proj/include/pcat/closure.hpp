#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat {

/// Largest supported bound; one-row words are packed five bits per letter.
inline constexpr std::size_t kMaxBound = 24;
inline constexpr std::size_t kDefaultBound = 12;

enum class ClosureMode { full, erasure_only };

std::string to_string(ClosureMode m);
std::optional<ClosureMode> parse_mode(std::string_view s);

struct ClosureOptions {
  std::size_t bound = kDefaultBound;
  ClosureMode mode = ClosureMode::full;
  unsigned workers = 1;
  /// Stop once this many members exist (0 = no limit). A stopped closure is
  /// flagged incomplete.
  std::size_t max_members = 0;
};

enum class DerivationOp : std::uint8_t {
  axiom,       // empty partition or the pair
  generator,   // one-row form of generators[param]
  rotate,      // cyclic shift of a by param
  reverse,     // involution of a, read on one row
  tensor,      // a ⊗ b
  compose,     // last param letters of a glued to b, see compose_words
  erase_pair,  // last two points of a joined and removed (param = position)
  connect,     // blocks of the last two points of a merged; b is the four block
};

std::string to_string(DerivationOp op);

struct Derivation {
  DerivationOp op = DerivationOp::axiom;
  std::uint32_t a = 0, b = 0;
  std::uint32_t param = 0;
};

struct ClosureStats {
  std::uint64_t tensor_products = 0;
  std::uint64_t compositions = 0;
  std::uint64_t discarded_over_bound = 0;  // operations whose result exceeded the bound
  std::vector<std::size_t> members_by_length;
};

/// Certificates are properties shared by every generator and preserved by all
/// category operations; a query lacking the property cannot be in the category.
enum class Invariant { blocks_at_most_two, blocks_even, length_even, noncrossing };

std::string to_string(Invariant inv);
bool holds(Invariant inv, const Partition& p);

struct Certificate {
  std::string property;
  std::string detail;
};

struct InClosure {
  std::uint32_t member = 0;
  std::vector<std::string> trace;  // derivation steps ending at the query
};
struct ExcludedByCertificate {
  Certificate certificate;
};
struct NotFoundUpToBound {
  std::size_t bound = 0;
};

using MembershipAnswer = std::variant<InClosure, ExcludedByCertificate, NotFoundUpToBound>;

std::string verdict_name(const MembershipAnswer& a);

/// Truncated closure of a generator set.
///
/// Every partition is stored through its one-row form (rotating all upper
/// points down), so membership of p ∈ P(k,l) is membership of to_one_row(p).
/// Members are closed under rotation and reflection; tensor products are
/// formed when they fit the bound and compositions whenever the result fits.
class CategoryClosure {
 public:
  CategoryClosure(std::vector<Partition> generators, const ClosureOptions& options);
  ~CategoryClosure();
  CategoryClosure(CategoryClosure&&) noexcept;
  CategoryClosure& operator=(CategoryClosure&&) noexcept;

  const std::vector<Partition>& generators() const noexcept { return generators_; }
  std::size_t bound() const noexcept { return options_.bound; }
  ClosureMode mode() const noexcept { return options_.mode; }
  const ClosureOptions& options() const noexcept { return options_; }
  bool complete() const noexcept { return complete_; }
  const ClosureStats& stats() const noexcept { return stats_; }

  std::size_t size() const noexcept;
  Word word(std::uint32_t id) const;
  const Derivation& derivation(std::uint32_t id) const;

  std::optional<std::uint32_t> find(const Word& w) const;
  std::optional<std::uint32_t> find(const Partition& p) const;
  bool contains(const Partition& p) const { return find(p).has_value(); }

  /// Members with exactly n points, in id order.
  std::vector<Word> members_of_length(std::size_t n) const;
  std::vector<Word> members() const;

  /// Human-readable derivation chain of a member, generators first.
  std::vector<std::string> trace(std::uint32_t id) const;

  /// Recomputes each member from its recorded operands; returns the first id
  /// that fails, if any.
  std::optional<std::uint32_t> replay() const;

  /// Certificates valid for the untruncated category.
  std::optional<Certificate> certificate_against(const Partition& p) const;

  /// Versioned JSON document; byte-stable for fixed inputs.
  std::string export_document(bool with_derivations = true) const;
  static CategoryClosure import_document(std::string_view text);

 private:
  CategoryClosure() = default;
  struct Store;

  std::vector<Partition> generators_;
  ClosureOptions options_;
  bool complete_ = true;
  ClosureStats stats_;
  std::unique_ptr<Store> store_;
};

CategoryClosure closure(const std::vector<Partition>& generators, std::size_t bound,
                        ClosureMode mode = ClosureMode::full, unsigned workers = 1);

MembershipAnswer member(const CategoryClosure& c, const Partition& p);

/// Joins points position and position+1 (0-based, cyclic for the last one)
/// with a cap and removes them.
Partition erase_pair(const Partition& p, std::size_t position);

/// Merges the blocks through points position and position+1 (0-based).
Partition connect_neighbouring_blocks(const Partition& p, std::size_t position);

/// Glues the last k points of a to the first k points of b (the upper row of
/// b after splitting it at k) and keeps the rest: one-row composition.
Word compose_words(const Word& a, const Word& b, std::size_t k);

/// Single generator equivalent to the list.
Partition normalize_generators(const std::vector<Partition>& gens);

// ---------------------------------------------------------------------------
// catalog

struct NamedCategory {
  std::string name;
  std::string notation;
  std::vector<Partition> generators;
};

/// Accepts names such as "free-hyperoctahedral", "group-P", "pi-series(3)" or
/// "half-liberated-series(4)".
std::optional<NamedCategory> named_category(std::string_view tag);

/// The 7 free and 6 group categories, in catalog order.
std::vector<NamedCategory> free_and_group_categories();
std::vector<std::string> category_names();

}  // namespace pcat
