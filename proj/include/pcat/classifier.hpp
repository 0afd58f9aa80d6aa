#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pcat/closure.hpp"
#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat {

enum class CategoryClass { non_hyperoctahedral, group_theoretical, pi_series };

std::string to_string(CategoryClass c);

/// One of the 13 categories that are not hyperoctahedral, with its expected
/// membership pattern on the probes singleton, double singleton, leg,
/// four block, crossing, half-liberating partition (in that order).
struct CaseEntry {
  std::string name;  // catalog name, see named_category
  std::string notation;
  std::array<bool, 6> pattern;
};

const std::vector<CaseEntry>& non_hyperoctahedral_cases();

struct Probe {
  std::string name;
  Partition partition;
  MembershipAnswer answer;

  bool found() const { return std::holds_alternative<InClosure>(answer); }
  bool excluded() const { return std::holds_alternative<ExcludedByCertificate>(answer); }
};

struct DepthMaximum {
  std::size_t depth = 0;
  std::optional<Word> member;  // a member realizing the maximum
  std::optional<WWitness> witness;
};

/// Maximum of wdepth over the members, evaluated on single-double forms.
DepthMaximum max_wdepth(const CategoryClosure& c, const WSearchOptions& opt = {});

/// Odd-block certificate, available when every generator has only even blocks.
std::optional<Certificate> parity_certificate(const CategoryClosure& c, const Partition& p);

/// Excludes the pair positioner when every generator commutes with σ_∞
/// (which the pair positioner does not). Empty if a generator fails or is too
/// large for the budget.
std::optional<Certificate> sigma_infty_certificate(const std::vector<Partition>& generators);

/// A factor a b^m a with m odd and b != a, read cyclically.
bool has_odd_aba_pattern(const Word& w);

struct ClassificationReport {
  CategoryClass category_class = CategoryClass::non_hyperoctahedral;
  std::string case_name;      // non_hyperoctahedral only
  std::string case_notation;  // non_hyperoctahedral only
  std::size_t k = 0;          // pi_series only

  std::size_t bound = 0;
  std::size_t members = 0;
  std::vector<Partition> generators;
  std::vector<Probe> probes;
  std::vector<std::string> certificates;
  std::vector<std::string> notes;

  bool proved_at_bound = false;
  bool depth_saturated = false;  // 4(k+1) points exceed the bound
  bool unbounded_growth_suspected = false;
  std::optional<Word> depth_member;
  std::optional<WWitness> depth_witness;

  std::string verdict() const;  // "PiSeries(2)", "GroupTheoretical", "NonHyperoctahedral(...)"
  std::string to_text() const;
  std::string to_json() const;
};

struct ClassifyOptions {
  unsigned workers = 1;
  WSearchOptions wsearch;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides the class of ⟨generators⟩ from the closure up to `bound` points.
ClassificationReport classify(const std::vector<Partition>& generators, std::size_t bound,
                              const ClassifyOptions& options = {});

/// Same, over an already built closure.
ClassificationReport classify(const CategoryClosure& c, const ClassifyOptions& options = {});

}  // namespace pcat
