#include "pcat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pcat/classifier.hpp"
#include "pcat/closure.hpp"
#include "pcat/intertwiner.hpp"
#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": ") << c.detail << "\n";
  os << name << ": " << passed() << "/" << checks.size() << " pass";
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2f s)", seconds);
  os << buf << "\n";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;
using Checks = std::vector<CheckResult>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

CheckResult time_limit(const std::string& what, Clock::time_point t0, double limit) {
  const double s = since(t0);
  return {what + " within " + seconds_text(limit), s < limit, seconds_text(s)};
}

Partition arg(std::string_view s) { return parse_partition_arg(s); }

std::vector<std::string> sorted_members(const CategoryClosure& c) {
  std::vector<std::string> out;
  for (const auto& w : c.members()) out.push_back(format(w));
  std::sort(out.begin(), out.end());
  return out;
}

// all set partitions of n points as restricted growth strings
void for_each_labeling(std::size_t n, const std::function<void(const std::vector<BlockId>&)>& f) {
  std::vector<BlockId> v(n, 0);
  std::function<void(std::size_t, BlockId)> rec = [&](std::size_t i, BlockId used) {
    if (i == n) {
      f(v);
      return;
    }
    for (BlockId b = 0; b <= used && b < 64; ++b) {
      v[i] = b;
      rec(i + 1, std::max<BlockId>(used, b + 1));
    }
  };
  rec(0, 0);
}

std::vector<Partition> all_partitions(std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  for_each_labeling(k + l, [&](const std::vector<BlockId>& v) { out.emplace_back(k, l, v); });
  return out;
}

Partition random_partition(std::mt19937_64& rng, std::size_t k, std::size_t l) {
  const std::size_t n = k + l;
  std::uniform_int_distribution<std::size_t> blocks(1, std::max<std::size_t>(n, 1));
  const std::size_t m = blocks(rng);
  std::uniform_int_distribution<BlockId> pick(0, static_cast<BlockId>(m - 1));
  std::vector<BlockId> v(n);
  for (auto& x : v) x = pick(rng);
  return Partition(k, l, std::move(v));
}

// pair partitions on n points; stack oracle for noncrossing
std::vector<std::string> brute_force_pairings(std::size_t n, bool noncrossing_only) {
  std::set<std::string> out;
  for_each_labeling(n, [&](const std::vector<BlockId>& v) {
    std::map<BlockId, int> count;
    for (BlockId b : v) ++count[b];
    if (!std::all_of(count.begin(), count.end(), [](const auto& e) { return e.second == 2; })) return;
    if (noncrossing_only) {
      std::vector<BlockId> stack;
      std::set<BlockId> opened;
      for (BlockId b : v) {
        if (opened.insert(b).second) {
          stack.push_back(b);
        } else {
          if (stack.empty() || stack.back() != b) return;
          stack.pop_back();
        }
      }
    }
    out.insert(format(Word(v)));
  });
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// check groups

Checks generation_facts(const VerifyOptions& o) {
  Checks out;
  const auto t0 = Clock::now();
  struct Fact {
    const char* query;
    const char* generator;
    std::size_t bound;
  };
  for (const Fact& f : {Fact{"fourblock", "fatcross", 8}, Fact{"fatcross", "pairpositioner", 10},
                        Fact{"pairpositioner", "h3", 10}}) {
    const auto t = Clock::now();
    const CategoryClosure c = closure({arg(f.generator)}, f.bound, ClosureMode::full, o.workers);
    const auto answer = member(c, arg(f.query));
    const bool replayed = !c.replay().has_value();
    std::string detail = verdict_name(answer) + ", " + std::to_string(c.size()) + " members, " + seconds_text(since(t));
    if (const auto* in = std::get_if<InClosure>(&answer)) detail += ", " + std::to_string(in->trace.size()) + " steps";
    out.push_back({std::string(f.query) + " in <" + f.generator + "> at bound " + std::to_string(f.bound),
                   std::holds_alternative<InClosure>(answer) && replayed, detail});
  }
  out.push_back(time_limit("generation facts", t0, 60));
  return out;
}

Checks pi_chain(const VerifyOptions& o) {
  Checks out;
  const auto t0 = Clock::now();
  for (const char* g : {"pi3", "pairpositioner"}) {
    const auto t = Clock::now();
    const CategoryClosure c = closure({arg(g)}, 12, ClosureMode::full, o.workers);
    const auto answer = member(c, named(NamedTag::pi, 2));
    out.push_back({std::string("pi2 in <") + g + "> at bound 12", std::holds_alternative<InClosure>(answer),
                   verdict_name(answer) + ", " + std::to_string(c.size()) + " members, " + seconds_text(since(t))});
  }
  out.push_back(time_limit("pi chain", t0, 120));
  return out;
}

Checks catalog_checks(const VerifyOptions& o) {
  Checks out;
  const std::vector<const char*> probes = {"singleton", "doublesingleton", "leg", "fourblock",
                                           "crossing",  "halflib",         "h3",  "pairpositioner"};
  std::vector<std::string> names, vectors;
  std::vector<std::vector<std::string>> member_sets;
  for (const auto& cat : free_and_group_categories()) {
    const CategoryClosure c = closure(cat.generators, 8, ClosureMode::full, o.workers);
    std::string v;
    for (const char* p : probes) v += c.contains(arg(p)) ? '1' : '0';
    names.push_back(cat.name);
    vectors.push_back(v);
    member_sets.push_back(sorted_members(c));
  }
  std::string clashes;
  bool distinct_sets = true;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (vectors[i] == vectors[j]) clashes += " " + names[i] + "=" + names[j];
      distinct_sets = distinct_sets && member_sets[i] != member_sets[j];
    }
  std::string table;
  for (std::size_t i = 0; i < names.size(); ++i) table += (i ? " " : "") + names[i] + ":" + vectors[i];
  out.push_back({"13 catalog closures at bound 8 separated by probes", clashes.empty(),
                 clashes.empty() ? table : "clash" + clashes});
  out.push_back({"13 catalog closures at bound 8 pairwise distinct", distinct_sets, ""});

  const auto nc2 = brute_force_pairings(6, true);
  const CategoryClosure free = closure({}, 6, ClosureMode::full, o.workers);
  std::vector<std::string> got;
  for (const auto& w : free.members_of_length(6)) got.push_back(format(w));
  std::sort(got.begin(), got.end());
  out.push_back({"<> has the 5 noncrossing pairings of 6 points", got == nc2 && got.size() == 5,
                 std::to_string(got.size()) + " members, oracle " + std::to_string(nc2.size())});

  const auto p2 = brute_force_pairings(6, false);
  const CategoryClosure group = closure({arg("crossing")}, 6, ClosureMode::full, o.workers);
  got.clear();
  for (const auto& w : group.members_of_length(6)) got.push_back(format(w));
  std::sort(got.begin(), got.end());
  out.push_back({"<crossing> has the 15 pairings of 6 points", got == p2 && got.size() == 15,
                 std::to_string(got.size()) + " members, oracle " + std::to_string(p2.size())});
  return out;
}

Checks wdepth_values() {
  Checks out;
  struct Example {
    const char* word;
    std::size_t depth;
  };
  for (const Example& e : {Example{"abccddbaeffghhgeabba", 2}, Example{"abccddbaaeebccbaijji", 3}}) {
    const Word w = parse_word(e.word);
    const WDepth d = wdepth(w);
    std::string why;
    const bool valid = d.witness && validate_witness(w, *d.witness, &why);
    out.push_back({std::string("wdepth ") + e.word + " = " + std::to_string(e.depth), d.depth == e.depth && valid,
                   "got " + std::to_string(d.depth) + (d.witness ? ", " + describe(w, *d.witness) : "") +
                       (valid ? "" : ", invalid witness " + why)});
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    const Word w = to_word(named(NamedTag::pi, k));
    const WDepth d = wdepth(w);
    const bool valid = d.witness && validate_witness(w, *d.witness);
    out.push_back({"wdepth pi" + std::to_string(k) + " = " + std::to_string(k), d.depth == k && valid,
                   "got " + std::to_string(d.depth)});
  }
  std::mt19937_64 rng(20260101);
  std::size_t bad = 0;
  std::string example;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
    const BlockId m = std::uniform_int_distribution<BlockId>(1, 8)(rng);
    std::vector<BlockId> v(n);
    for (auto& x : v) x = std::uniform_int_distribution<BlockId>(0, m - 1)(rng);
    const Word w(v);
    const std::size_t d0 = wdepth(w).depth;
    for (std::size_t r = 1; r < n; ++r)
      if (wdepth(w.rotated(r)).depth != d0) {
        ++bad;
        if (example.empty()) example = format(w) + " rotated by " + std::to_string(r);
        break;
      }
  }
  out.push_back({"wdepth is rotation invariant on 200 random words", bad == 0,
                 std::to_string(bad) + " failures" + (example.empty() ? "" : ", e.g. " + example)});
  return out;
}

enum StructurePart : unsigned { even_blocks = 1, doubling = 2, depth_bound = 4, single_double = 8, aba = 16 };

Checks structure(unsigned parts, const VerifyOptions& o) {
  Checks out;
  for (const auto& [k, bound] : {std::pair<std::size_t, std::size_t>{2, 10}, {3, 12}}) {
    const CategoryClosure c = closure({named(NamedTag::pi, k)}, bound, ClosureMode::full, o.workers);
    const std::string where = "members of <pi" + std::to_string(k) + "> at bound " + std::to_string(bound);
    std::size_t odd = 0, doubling_bad = 0, deep = 0, sd_missing = 0, aba_hits = 0;
    std::string first;
    auto note = [&](const Word& w) {
      if (first.empty()) first = format(w);
    };
    for (const Word& w : c.members()) {
      if (parts & even_blocks)
        if (!holds(Invariant::blocks_even, from_word(w))) ++odd, note(w);
      if (parts & doubling)
        if (!doubling_check(w).empty()) ++doubling_bad, note(w);
      if (parts & depth_bound)
        if (wdepth(w).depth > k) ++deep, note(w);
      if (parts & single_double)
        if (!c.find(single_double_form(w))) ++sd_missing, note(w);
      if (parts & aba)
        if (has_odd_aba_pattern(w)) ++aba_hits, note(w);
    }
    const std::string tail = ", " + std::to_string(c.size()) + " members" + (first.empty() ? "" : ", first " + first);
    if (parts & even_blocks) out.push_back({where + " have even blocks", odd == 0, std::to_string(odd) + " violations" + tail});
    if (parts & doubling)
      out.push_back({where + " pass the doubling check", doubling_bad == 0, std::to_string(doubling_bad) + " violations" + tail});
    if (parts & depth_bound)
      out.push_back({where + " have wdepth <= " + std::to_string(k), deep == 0, std::to_string(deep) + " violations" + tail});
    if (parts & single_double)
      out.push_back({where + " have their single-double form as a member", sd_missing == 0,
                     std::to_string(sd_missing) + " violations" + tail});
    if (parts & aba)
      out.push_back({where + " avoid a b^odd a factors", aba_hits == 0, std::to_string(aba_hits) + " hits" + tail});
  }
  return out;
}

Checks classification(const VerifyOptions& o) {
  Checks out;
  const auto t0 = Clock::now();
  struct Case {
    const char* generator;
    std::size_t bound;
    const char* verdict;
  };
  for (const Case& c : {Case{"fourblock", 8, "PiSeries(1)"}, Case{"fatcross", 10, "PiSeries(2)"},
                        Case{"pi3", 12, "PiSeries(3)"}, Case{"pairpositioner", 10, "GroupTheoretical"},
                        Case{"crossing", 8, "NonHyperoctahedral(group-orthogonal)"},
                        Case{"halflib", 8, "NonHyperoctahedral(half-liberated-orthogonal)"},
                        Case{"singleton", 8, "NonHyperoctahedral(free-bistochastic)"}}) {
    ClassifyOptions opt;
    opt.workers = o.workers;
    const auto r = classify({arg(c.generator)}, c.bound, opt);
    bool ok = r.verdict() == c.verdict;
    if (r.category_class == CategoryClass::pi_series) ok = ok && r.proved_at_bound;
    out.push_back({std::string("classify <") + c.generator + "> at bound " + std::to_string(c.bound) + " = " + c.verdict,
                   ok, r.verdict() + (r.proved_at_bound ? ", proved-at-bound" : ", bound-limited")});
  }
  out.push_back(time_limit("classification", t0, 300));
  return out;
}

Checks sigma_checks() {
  Checks out;
  const auto t0 = Clock::now();
  for (std::size_t k = 2; k <= 4; ++k) {
    const MatrixRep rep = build_sigma_k(k);
    const RelationReport at = check_relations(rep, k);
    const RelationReport above = check_relations(rep, k + 1);
    out.push_back({"sigma_" + std::to_string(k) + " satisfies the relations at depth " + std::to_string(k), at.ok(),
                   at.first_violation ? describe(*at.first_violation) : std::to_string(at.products_checked) + " products"});
    const bool violated = !above.commutation && above.first_violation && above.first_violation->depth == k + 1;
    out.push_back({"sigma_" + std::to_string(k) + " violates commutation at depth " + std::to_string(k + 1), violated,
                   above.first_violation ? describe(*above.first_violation) : "no violation"});
  }
  const MatrixRep inf = build_sigma_infty();
  const RelationReport r = check_relations(inf, 6);
  out.push_back({"sigma_infty satisfies the relations up to depth 6", r.ok(),
                 r.first_violation ? describe(*r.first_violation) : std::to_string(r.products_checked) + " products"});
  const QMatrix a = inf.u(0, 0) * inf.u(0, 0), b = inf.u(2, 2);
  out.push_back({"sigma_infty: u11^2 and u33 do not commute", !(a * b == b * a),
                 "u11^2 u33 = " + (a * b).to_string() + ", u33 u11^2 = " + (b * a).to_string()});
  out.push_back(time_limit("separating representations", t0, 60));
  return out;
}

Checks functoriality() {
  Checks out;
  std::vector<Partition> small;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l)
      for (auto& p : all_partitions(k, l)) small.push_back(std::move(p));
  std::size_t checked = 0, bad = 0;
  std::string first;
  auto run = [&](const Partition& p, const Partition& q, std::size_t n) {
    ++checked;
    const auto rep = verify_functoriality(p, q, n);
    if (!rep.ok()) {
      ++bad;
      if (first.empty()) first = format(p) + " / " + format(q) + " at n=" + std::to_string(n);
    }
  };
  for (std::size_t n : {2, 3})
    for (const auto& p : small)
      for (const auto& q : small) run(p, q, n);
  out.push_back({"functoriality on all pairs with at most 2+2 points", bad == 0,
                 std::to_string(checked) + " pairs, " + std::to_string(bad) + " failures" + (first.empty() ? "" : ", " + first)});

  checked = bad = 0;
  first.clear();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> arity(0, 3);
  for (int t = 0; t < 500; ++t) {
    const std::size_t k = arity(rng), l = arity(rng), m = arity(rng);
    const Partition p = random_partition(rng, k, l), q = random_partition(rng, l, m);
    for (std::size_t n : {2, 3}) run(p, q, n);
  }
  out.push_back({"functoriality on 500 random composable pairs with at most 3+3 points", bad == 0,
                 std::to_string(checked) + " checks, " + std::to_string(bad) + " failures" + (first.empty() ? "" : ", " + first)});
  return out;
}

Checks singly_generated(const VerifyOptions& o) {
  Checks out;
  for (const auto& [a, b] : singly_generated_pairs()) {
    const std::vector<Partition> pair = {arg(a), arg(b)};
    const Partition single = normalize_generators(pair);
    const auto t = Clock::now();
    const CategoryClosure c1 = closure(pair, 12, ClosureMode::full, o.workers);
    const CategoryClosure c2 = closure({single}, 12, ClosureMode::full, o.workers);
    const bool same = sorted_members(c1) == sorted_members(c2);
    out.push_back({"<" + a + ", " + b + "> = <" + format(single) + "> at bound 12", same,
                   std::to_string(c1.size()) + " vs " + std::to_string(c2.size()) + " members, " + seconds_text(since(t))});
  }
  return out;
}

void append(Checks& to, Checks from) {
  for (auto& c : from) to.push_back(std::move(c));
}

SuiteReport make(std::string name, const std::function<Checks()>& body) {
  SuiteReport r;
  r.name = std::move(name);
  const auto t0 = Clock::now();
  r.checks = body();
  r.seconds = since(t0);
  return r;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> singly_generated_pairs() {
  return {
      {"fourblock", "fourblock"},  {"pair", "fourblock"},      {"fourblock", "pair"},
      {"identity", "fourblock"},   {"empty", "fourblock"},     {"halflib", "halflib"},
      {"identity", "halflib"},     {"halflib", "identity"},    {"pair", "halflib"},
      {"empty", "halflib"},        {"pair", "pair"},           {"identity", "identity"},
      {"identity", "pair"},        {"doublesingleton", "doublesingleton"},
      {"identity", "doublesingleton"}, {"pair", "doublesingleton"},
      {"crossing", "crossing"},    {"crossing", "pair"},       {"pairpositioner", "pairpositioner"},
      {"pairpositioner", "fourblock"},
  };
}

std::vector<std::string> suite_names() { return {"lemma2.1", "lemma3.x", "doubling", "wdepth", "thmain", "sigma", "catalog"}; }

std::optional<SuiteReport> run_suite(std::string_view name, const VerifyOptions& o) {
  if (name == "lemma2.1") return make("lemma2.1", [&] { return generation_facts(o); });
  if (name == "lemma3.x") return make("lemma3.x", [&] { return structure(single_double, o); });
  if (name == "doubling") return make("doubling", [&] { return structure(even_blocks | doubling | aba, o); });
  if (name == "wdepth")
    return make("wdepth", [&] {
      Checks c = wdepth_values();
      append(c, structure(depth_bound, o));
      return c;
    });
  if (name == "thmain")
    return make("thmain", [&] {
      Checks c = pi_chain(o);
      append(c, classification(o));
      append(c, singly_generated(o));
      return c;
    });
  if (name == "sigma")
    return make("sigma", [&] {
      Checks c = sigma_checks();
      append(c, functoriality());
      return c;
    });
  if (name == "catalog") return make("catalog", [&] { return catalog_checks(o); });
  return std::nullopt;
}

std::string criterion_title(int index) {
  switch (index) {
    case 1: return "generation facts";
    case 2: return "pi chain";
    case 3: return "named-category regression";
    case 4: return "wdepth values";
    case 5: return "structure invariants";
    case 6: return "classification pipeline";
    case 7: return "separating representations";
    case 8: return "tensor functoriality";
    case 9: return "finitely vs singly generated";
  }
  return "?";
}

SuiteReport run_criterion(int index, const VerifyOptions& o) {
  const std::string name = "criterion " + std::to_string(index) + " (" + criterion_title(index) + ")";
  switch (index) {
    case 1: return make(name, [&] { return generation_facts(o); });
    case 2: return make(name, [&] { return pi_chain(o); });
    case 3: return make(name, [&] { return catalog_checks(o); });
    case 4: return make(name, [&] { return wdepth_values(); });
    case 5: return make(name, [&] { return structure(even_blocks | doubling | depth_bound | single_double, o); });
    case 6: return make(name, [&] { return classification(o); });
    case 7: return make(name, [&] { return sigma_checks(); });
    case 8: return make(name, [&] { return functoriality(); });
    case 9: return make(name, [&] { return singly_generated(o); });
  }
  throw std::out_of_range("run_criterion: index must be 1.." + std::to_string(kCriteria));
}

}  // namespace pcat
