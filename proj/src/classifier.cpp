#include "pcat/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "pcat/intertwiner.hpp"

namespace pcat {

std::string to_string(CategoryClass c) {
  switch (c) {
    case CategoryClass::non_hyperoctahedral: return "non-hyperoctahedral";
    case CategoryClass::group_theoretical: return "group-theoretical";
    case CategoryClass::pi_series: return "pi-series";
  }
  return "?";
}

const std::vector<CaseEntry>& non_hyperoctahedral_cases() {
  //                                       singleton, pair of singletons, leg, four block, crossing, halflib
  static const std::vector<CaseEntry> cases = [] {
    const std::vector<std::pair<const char*, std::array<bool, 6>>> table = {
        {"free-orthogonal", {0, 0, 0, 0, 0, 0}},
        {"free-bistochastic-sharp", {0, 1, 0, 0, 0, 0}},
        {"free-bistochastic-prime", {0, 1, 1, 0, 0, 0}},
        {"free-bistochastic", {1, 1, 1, 0, 0, 0}},
        {"group-orthogonal", {0, 0, 0, 0, 1, 1}},
        {"group-bistochastic-prime", {0, 1, 1, 0, 1, 1}},
        {"group-bistochastic", {1, 1, 1, 0, 1, 1}},
        {"half-liberated-orthogonal", {0, 0, 0, 0, 0, 1}},
        {"half-liberated-bistochastic-sharp", {0, 1, 0, 0, 0, 1}},
        {"free-symmetric", {1, 1, 1, 1, 0, 0}},
        {"free-symmetric-prime", {0, 1, 1, 1, 0, 0}},
        {"group-symmetric", {1, 1, 1, 1, 1, 1}},
        {"group-symmetric-prime", {0, 1, 1, 1, 1, 1}},
    };
    std::vector<CaseEntry> out;
    for (const auto& [name, pattern] : table) {
      const auto c = named_category(name);
      out.push_back({name, c->notation, pattern});
    }
    return out;
  }();
  return cases;
}

// ---------------------------------------------------------------------------

DepthMaximum max_wdepth(const CategoryClosure& c, const WSearchOptions& opt) {
  DepthMaximum best;
  std::unordered_set<std::string> seen;
  for (std::uint32_t id = 0; id < c.size(); ++id) {
    const Word sd = single_double_form(c.word(id));
    if (!seen.insert(format(sd)).second) continue;
    WDepth d = wdepth(sd, opt);
    if (!best.member || d.depth > best.depth) {
      best.depth = d.depth;
      best.member = sd;
      best.witness = std::move(d.witness);
    }
  }
  return best;
}

std::optional<Certificate> parity_certificate(const CategoryClosure& c, const Partition& p) {
  const auto& gens = c.generators();
  if (!std::all_of(gens.begin(), gens.end(), [](const Partition& g) { return holds(Invariant::blocks_even, g); }))
    return std::nullopt;
  if (holds(Invariant::blocks_even, p)) return std::nullopt;
  std::size_t odd = 0;
  for (std::size_t s : p.block_sizes()) odd += s % 2;
  return Certificate{to_string(Invariant::blocks_even),
                     "all generator blocks are even, " + format(p) + " has " + std::to_string(odd) + " odd block" +
                         (odd == 1 ? "" : "s")};
}

std::optional<Certificate> sigma_infty_certificate(const std::vector<Partition>& generators) {
  const MatrixRep rep = build_sigma_infty();
  static const bool pp_fails = !intertwiner_check(balanced_form(named(NamedTag::pair_positioner)), rep);
  if (!pp_fails) throw ClassificationError("internal check failed: the pair positioner commutes with sigma_infty");
  try {
    for (const auto& g : generators)
      if (!intertwiner_check(balanced_form(g), rep)) return std::nullopt;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return Certificate{"sigma_infty",
                     "every generator intertwines sigma_infty, the pair positioner does not"};
}

bool has_odd_aba_pattern(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const BlockId a = w[i];
    const BlockId b = w[(i + 1) % n];
    if (b == a) continue;
    std::size_t m = 1;
    while (m + 2 <= n && w[(i + 1 + m) % n] == b) ++m;
    if (m + 2 <= n && m % 2 == 1 && w[(i + 1 + m) % n] == a) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

std::string ClassificationReport::verdict() const {
  switch (category_class) {
    case CategoryClass::non_hyperoctahedral: return "NonHyperoctahedral(" + case_name + ")";
    case CategoryClass::group_theoretical: return "GroupTheoretical";
    case CategoryClass::pi_series: return "PiSeries(" + std::to_string(k) + ")";
  }
  return "?";
}

namespace {

std::string answer_detail(const Probe& p) {
  if (const auto* in = std::get_if<InClosure>(&p.answer))
    return "member #" + std::to_string(in->member) + " (" + std::to_string(in->trace.size()) + " steps)";
  if (const auto* ex = std::get_if<ExcludedByCertificate>(&p.answer))
    return ex->certificate.property + ": " + ex->certificate.detail;
  return "not among " + std::to_string(std::get<NotFoundUpToBound>(p.answer).bound) + "-point members";
}

}  // namespace

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  os << "verdict: " << verdict() << "\n";
  if (category_class == CategoryClass::non_hyperoctahedral) os << "category: " << case_notation << "\n";
  os << "confidence: " << (proved_at_bound ? "proved-at-bound" : "bound-limited") << "\n";
  os << "bound: " << bound << ", members: " << members << "\n";
  os << "generators:";
  for (const auto& g : generators) os << " " << format(g);
  os << "\nprobes:\n";
  for (const auto& p : probes)
    os << "  " << p.name << " " << format(p.partition) << ": " << verdict_name(p.answer) << ", " << answer_detail(p)
       << "\n";
  if (depth_member) {
    os << "max wdepth: " << (depth_witness ? depth_witness->depth() : 0) << " on " << format(*depth_member) << "\n";
    if (depth_witness) os << "  " << describe(*depth_member, *depth_witness) << "\n";
  }
  if (depth_saturated) os << "depth saturated: wdepth " << k + 1 << " needs more points than the bound\n";
  if (unbounded_growth_suspected) os << "unbounded growth suspected\n";
  for (const auto& c : certificates) os << "certificate: " << c << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

std::string ClassificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["format"] = "pcat-classification";
  doc["version"] = 1;
  doc["verdict"] = verdict();
  doc["class"] = to_string(category_class);
  if (category_class == CategoryClass::non_hyperoctahedral) {
    doc["case"] = case_name;
    doc["notation"] = case_notation;
  }
  if (category_class == CategoryClass::pi_series) doc["k"] = k;
  doc["confidence"] = proved_at_bound ? "proved-at-bound" : "bound-limited";
  doc["bound"] = bound;
  doc["members"] = members;
  auto& gens = doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : generators) gens.push_back(format(g));
  auto& probes_doc = doc["probes"] = nlohmann::ordered_json::array();
  for (const auto& p : probes) {
    nlohmann::ordered_json e;
    e["name"] = p.name;
    e["partition"] = format(p.partition);
    e["answer"] = verdict_name(p.answer);
    e["detail"] = answer_detail(p);
    probes_doc.push_back(std::move(e));
  }
  if (depth_member) {
    doc["max_wdepth"] = depth_witness ? depth_witness->depth() : 0;
    doc["max_wdepth_member"] = format(*depth_member);
    if (depth_witness) doc["max_wdepth_witness"] = describe(*depth_member, *depth_witness);
  }
  doc["depth_saturated"] = depth_saturated;
  doc["unbounded_growth_suspected"] = unbounded_growth_suspected;
  doc["certificates"] = certificates;
  doc["notes"] = notes;
  return doc.dump(1) + "\n";
}

// ---------------------------------------------------------------------------

ClassificationReport classify(const std::vector<Partition>& generators, std::size_t bound,
                              const ClassifyOptions& options) {
  for (const auto& g : generators)
    if (g.size() > bound)
      throw std::invalid_argument("classify: generator " + format(g) + " has more than " + std::to_string(bound) +
                                  " points");
  return classify(closure(generators, bound, ClosureMode::full, options.workers), options);
}

ClassificationReport classify(const CategoryClosure& c, const ClassifyOptions& options) {
  ClassificationReport r;
  r.bound = c.bound();
  r.members = c.size();
  r.generators = c.generators();
  if (!c.complete()) r.notes.push_back("closure stopped early at the member limit");

  auto probe = [&](const char* name) -> Probe& {
    const Partition p = parse_partition_arg(name);
    r.probes.push_back({name, p, member(c, p)});
    return r.probes.back();
  };
  auto certified = [&](const Probe& p) {
    if (const auto* ex = std::get_if<ExcludedByCertificate>(&p.answer))
      r.certificates.push_back(p.name + " excluded, " + ex->certificate.property + ": " + ex->certificate.detail);
    else if (const auto* in = std::get_if<InClosure>(&p.answer))
      r.certificates.push_back(p.name + " derived as member #" + std::to_string(in->member));
  };

  const bool four = probe("fourblock").found();
  const Probe pair_of_singletons = probe("doublesingleton");
  const bool hyperoctahedral = four && !pair_of_singletons.found();

  if (hyperoctahedral) {
    certified(r.probes[0]);
    certified(pair_of_singletons);
    if (!pair_of_singletons.excluded())
      r.notes.push_back("doublesingleton not found up to the bound and not excluded by a certificate");
    Probe& pp = probe("pairpositioner");
    if (std::holds_alternative<NotFoundUpToBound>(pp.answer))
      if (auto cert = sigma_infty_certificate(c.generators())) pp.answer = ExcludedByCertificate{*cert};
    certified(pp);

    if (pp.found()) {
      r.category_class = CategoryClass::group_theoretical;
      r.proved_at_bound = pair_of_singletons.excluded();
      return r;
    }

    r.category_class = CategoryClass::pi_series;
    const DepthMaximum dm = max_wdepth(c, options.wsearch);
    r.k = dm.depth;
    r.depth_member = dm.member;
    r.depth_witness = dm.witness;
    if (r.k == 0) throw ClassificationError("internal check failed: four block present but max wdepth is 0");

    const Partition pi_k = named(NamedTag::pi, r.k);
    bool pi_found = false;
    if (pi_k.size() <= c.bound()) {
      // π_k from the deepest member by pair erasure and block connection alone
      const CategoryClosure erasure = closure({from_word(*dm.member)}, dm.member->size(), ClosureMode::erasure_only,
                                              options.workers);
      if (auto id = erasure.find(pi_k)) {
        pi_found = true;
        r.certificates.push_back("pi" + std::to_string(r.k) + " derived from " + format(*dm.member) +
                                 " by erasures and connections (" + std::to_string(erasure.trace(*id).size()) +
                                 " steps)");
      } else if (auto full = c.find(pi_k)) {
        pi_found = true;
        r.certificates.push_back("pi" + std::to_string(r.k) + " derived as member #" + std::to_string(*full));
        r.notes.push_back("erasure-only search from the deepest member missed pi" + std::to_string(r.k));
      }
    }
    if (!pi_found) r.notes.push_back("pi" + std::to_string(r.k) + " not derived up to the bound");

    std::size_t generator_depth = 0;
    for (const auto& g : c.generators())
      generator_depth = std::max(generator_depth, wdepth(single_double_form(to_word(to_one_row(g))), options.wsearch).depth);
    r.depth_saturated = 4 * (r.k + 1) > c.bound();
    r.unbounded_growth_suspected = r.depth_saturated && r.k > generator_depth;
    r.proved_at_bound = pi_found && pair_of_singletons.excluded() && pp.excluded();
    return r;
  }

  // not hyperoctahedral: pin the case by the probe pattern
  probe("pairpositioner");
  const bool crossing = probe("crossing").found();
  const bool halflib = probe("halflib").found();
  const bool singleton = probe("singleton").found();
  const bool leg = probe("leg").found();
  const std::array<bool, 6> pattern = {singleton, pair_of_singletons.found(), leg, four, crossing, halflib};
  const auto& cases = non_hyperoctahedral_cases();
  const auto it = std::find_if(cases.begin(), cases.end(), [&](const CaseEntry& e) { return e.pattern == pattern; });
  if (it == cases.end())
    throw ClassificationError("probe pattern matches none of the non-hyperoctahedral categories; raise the bound");
  r.category_class = CategoryClass::non_hyperoctahedral;
  r.case_name = it->name;
  r.case_notation = it->notation;
  bool all_settled = true;
  for (const auto& p : r.probes) {
    if (p.name == "pairpositioner") continue;
    certified(p);
    all_settled = all_settled && (p.found() || p.excluded());
  }
  r.proved_at_bound = all_settled;
  return r;
}

}  // namespace pcat
