// pcat: command-line front end for the partition library.
//
// Exit codes: 0 expected outcome, 1 unexpected result, 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcat/classifier.hpp"
#include "pcat/closure.hpp"
#include "pcat/intertwiner.hpp"
#include "pcat/partition.hpp"
#include "pcat/verify.hpp"
#include "pcat/word.hpp"
#include "render.hpp"

namespace {

using namespace pcat;
using Json = nlohmann::ordered_json;

struct CliConfig {
  std::size_t bound = kDefaultBound;
  std::string mode = "full";
  std::string format = "text";
  std::size_t intertwiner_budget = kDefaultIntertwinerBudget;
  std::size_t word_length_cap = kDefaultWordLengthCap;
  unsigned workers = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CliConfig config;

bool structured() { return config.format == "structured"; }
bool svg() { return config.format == "svg"; }

std::string literal(const Partition& p) { return p.empty() ? "empty" : format(p); }

ClosureMode closure_mode() {
  auto m = parse_mode(config.mode);
  if (!m) throw UsageError("unknown mode '" + config.mode + "' (full, erasure-only)");
  return *m;
}

std::vector<Partition> parse_generators(const std::vector<std::string>& gens) {
  std::vector<Partition> out;
  for (const auto& g : gens) out.push_back(parse_partition_arg(g));
  for (const auto& p : out)
    if (p.size() > config.bound)
      throw UsageError("generator " + format(p) + " has " + std::to_string(p.size()) + " points, more than the bound " +
                       std::to_string(config.bound));
  return out;
}

WSearchOptions word_options(bool override_cap) {
  WSearchOptions o;
  o.length_cap = config.word_length_cap;
  o.override_cap = override_cap;
  return o;
}

Corner parse_corner(const std::string& s) {
  if (s == "top-left") return Corner::top_left;
  if (s == "top-right") return Corner::top_right;
  if (s == "bottom-left") return Corner::bottom_left;
  if (s == "bottom-right") return Corner::bottom_right;
  throw UsageError("unknown corner '" + s + "' (top-left, top-right, bottom-left, bottom-right)");
}

void print_partition(const Partition& p, Json extra = Json::object()) {
  if (svg()) {
    std::cout << render::partition_svg(p);
  } else if (structured()) {
    Json doc;
    doc["result"] = format(p);
    for (auto& [k, v] : extra.items()) doc[k] = v;
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << literal(p);
    for (auto& [k, v] : extra.items()) std::cout << ", " << k << "=" << v.dump();
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_op(const std::string& what, const std::vector<std::string>& args, const std::string& corner) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw UsageError("op " + what + " takes " + std::to_string(n) + " partition" + (n == 1 ? "" : "s"));
  };
  if (what == "tensor") {
    need(2);
    print_partition(tensor(parse_partition_arg(args[0]), parse_partition_arg(args[1])));
  } else if (what == "compose") {
    need(2);
    const Partition q = parse_partition_arg(args[0]), p = parse_partition_arg(args[1]);
    if (p.lower_arity() != q.upper_arity())
      throw UsageError("cannot compose: " + format(p) + " has " + std::to_string(p.lower_arity()) +
                       " lower points, " + format(q) + " has " + std::to_string(q.upper_arity()) + " upper points");
    const Composition c = compose(q, p);
    print_partition(c.result, Json{{"loops", c.removed_loops}});
  } else if (what == "involute") {
    need(1);
    print_partition(involute(parse_partition_arg(args[0])));
  } else if (what == "rotate") {
    need(1);
    print_partition(rotate(parse_partition_arg(args[0]), parse_corner(corner)));
  } else if (what == "reflect") {
    need(1);
    print_partition(vertical_reflect(parse_partition_arg(args[0])));
  } else if (what == "one-row") {
    need(1);
    print_partition(to_one_row(parse_partition_arg(args[0])));
  } else {
    throw UsageError("unknown op '" + what + "' (tensor, compose, involute, rotate, reflect, one-row)");
  }
  return 0;
}

int cmd_word(const std::string& what, const std::string& text, bool override_cap) {
  const Word w = parse_word(text);
  if (what == "sdl") {
    const Word sd = single_double_form(w);
    if (structured()) std::cout << Json{{"result", format(sd)}}.dump(1) << "\n";
    else std::cout << format(sd) << "\n";
  } else if (what == "dyck") {
    const DyckPath path = dyck_path(w);
    if (svg()) std::cout << render::dyck_svg(path);
    else if (structured()) std::cout << Json{{"steps", path.to_string()}, {"levels", path.levels}}.dump(1) << "\n";
    else std::cout << path.to_string() << "\n";
  } else if (what == "wdepth") {
    const WDepth d = wdepth(w, word_options(override_cap));
    if (structured()) {
      Json doc{{"wdepth", d.depth}};
      if (d.witness) doc["witness"] = describe(w, *d.witness);
      std::cout << doc.dump(1) << "\n";
    } else {
      std::cout << d.depth << "\n";
      if (d.witness) std::cout << describe(w, *d.witness) << "\n";
    }
  } else if (what == "doubling") {
    const auto v = doubling_check(w);
    if (structured()) {
      Json list = Json::array();
      for (const auto& x : v) list.push_back(describe(x));
      std::cout << Json{{"violations", list}}.dump(1) << "\n";
    } else {
      std::cout << v.size() << " violation" << (v.size() == 1 ? "" : "s") << "\n";
      for (const auto& x : v) std::cout << describe(x) << "\n";
    }
  } else {
    throw UsageError("unknown word command '" + what + "' (sdl, dyck, wdepth, doubling)");
  }
  return 0;
}

int cmd_generate(const std::vector<std::string>& gens, bool derivations, const std::string& output) {
  const CategoryClosure c = closure(parse_generators(gens), config.bound, closure_mode(), config.workers);
  const std::string doc = c.export_document(derivations);
  if (output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream(output) << doc;
    std::cout << c.size() << " members written to " << output << "\n";
  }
  return 0;
}

int cmd_member(const std::vector<std::string>& gens, const std::string& query, const std::string& expect) {
  const CategoryClosure c = closure(parse_generators(gens), config.bound, closure_mode(), config.workers);
  const Partition q = parse_partition_arg(query);
  const MembershipAnswer a = member(c, q);
  if (structured()) {
    Json doc{{"query", format(q)}, {"verdict", verdict_name(a)}, {"bound", c.bound()}, {"members", c.size()}};
    if (const auto* in = std::get_if<InClosure>(&a)) doc["trace"] = in->trace;
    if (const auto* ex = std::get_if<ExcludedByCertificate>(&a))
      doc["certificate"] = Json{{"property", ex->certificate.property}, {"detail", ex->certificate.detail}};
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << verdict_name(a) << "\n";
    if (const auto* in = std::get_if<InClosure>(&a))
      for (const auto& line : in->trace) std::cout << "  " << line << "\n";
    if (const auto* ex = std::get_if<ExcludedByCertificate>(&a))
      std::cout << "  " << ex->certificate.property << ": " << ex->certificate.detail << "\n";
    if (std::holds_alternative<NotFoundUpToBound>(a))
      std::cout << "  not among the " << c.size() << " members with at most " << c.bound() << " points\n";
  }
  return expect.empty() || expect == verdict_name(a) ? 0 : 1;
}

int cmd_classify(const std::vector<std::string>& gens, bool override_cap, const std::string& expect) {
  ClassifyOptions o;
  o.workers = config.workers;
  o.wsearch = word_options(override_cap);
  const auto r = classify(parse_generators(gens), config.bound, o);
  std::cout << (structured() ? r.to_json() : r.to_text());
  return expect.empty() || expect == r.verdict() ? 0 : 1;
}

int print_relations(const RelationReport& r, bool expect_violation, const std::string& label) {
  const bool violated = !r.ok();
  if (structured()) {
    Json doc{{"representation", label},
             {"depth", r.depth},
             {"self_adjoint", r.self_adjoint},
             {"orthogonality", r.orthogonality},
             {"square_sums", r.square_sums},
             {"partial_isometries", r.partial_isometries},
             {"commutation", r.commutation},
             {"products_checked", r.products_checked}};
    if (r.first_violation) doc["first_violation"] = describe(*r.first_violation);
    std::cout << doc.dump(1) << "\n";
  } else {
    auto line = [](const char* name, bool ok) { std::cout << "  " << name << ": " << (ok ? "holds" : "fails") << "\n"; };
    std::cout << label << ", depth " << r.depth << "\n";
    line("(i) self-adjoint", r.self_adjoint);
    line("(iii) orthogonality", r.orthogonality);
    line("(iv) square sums", r.square_sums);
    line("partial isometries", r.partial_isometries);
    line("(ii) commutation", r.commutation);
    std::cout << "  products checked: " << r.products_checked << "\n";
    if (r.first_violation) std::cout << "violation at l=" << r.first_violation->depth << ": " << describe(*r.first_violation) << "\n";
    else std::cout << "all pass\n";
  }
  return violated == expect_violation ? 0 : 1;
}

MatrixRep pick_rep(const std::string& which, std::size_t k) {
  if (which == "sigma-inf") return build_sigma_infty();
  if (which == "sigma-k") {
    if (k < 2) throw UsageError("--k must be at least 2");
    return build_sigma_k(k);
  }
  throw UsageError("unknown representation '" + which + "' (sigma-k, sigma-inf)");
}

int cmd_rep(const std::string& what, std::size_t k, std::size_t depth, bool expect_violation, std::size_t prime_samples,
            const std::string& which, const std::string& gen) {
  if (what == "sigma-k") {
    if (k < 2) throw UsageError("--k must be at least 2");
    const MatrixRep rep = build_sigma_k(k);
    const std::size_t d = depth ? depth : k;
    int rc = print_relations(check_relations(rep, d), expect_violation, "sigma_" + std::to_string(k) + " on " + rep.space);
    if (prime_samples) {
      const std::size_t bad = check_relations_prime(rep, d, prime_samples);
      if (!structured()) std::cout << "(ii)' sampled identities: " << bad << " failures\n";
      if (bad && !expect_violation) rc = 1;
    }
    return rc;
  }
  if (what == "sigma-inf") {
    const MatrixRep rep = build_sigma_infty();
    const int rc = print_relations(check_relations(rep, depth ? depth : 6), expect_violation, "sigma_infty on " + rep.space);
    const QMatrix a = rep.u(0, 0) * rep.u(0, 0), b = rep.u(2, 2);
    const bool commute = a * b == b * a;
    if (!structured())
      std::cout << "u11^2 u33 = " << (a * b).to_string() << "\nu33 u11^2 = " << (b * a).to_string() << "\n"
                << (commute ? "u11^2 and u33 commute\n" : "u11^2 and u33 do not commute\n");
    return commute ? 1 : rc;
  }
  if (what == "export") {
    std::cout << export_matrix_literal(pick_rep(which, k));
    return 0;
  }
  if (what == "intertwines") {
    if (gen.empty()) throw UsageError("rep intertwines needs --gen");
    const Partition p = balanced_form(parse_partition_arg(gen));
    const bool ok = intertwiner_check(p, pick_rep(which, k), config.intertwiner_budget);
    if (structured()) std::cout << Json{{"partition", format(p)}, {"intertwines", ok}}.dump(1) << "\n";
    else std::cout << format(p) << (ok ? " intertwines " : " does not intertwine ") << which << "\n";
    return 0;
  }
  throw UsageError("unknown rep command '" + what + "' (sigma-k, sigma-inf, export, intertwines)");
}

int cmd_verify(const std::string& suite) {
  VerifyOptions o;
  o.workers = config.workers;
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  for (const auto& name : names) {
    const auto r = run_suite(name, o);
    if (!r) throw UsageError("unknown suite '" + name + "'");
    std::cout << r->to_text();
    ok = ok && r->ok();
  }
  return ok ? 0 : 1;
}

int cmd_config_show() {
  if (structured()) {
    std::cout << Json{{"bound", config.bound},
                      {"mode", config.mode},
                      {"format", config.format},
                      {"intertwiner_budget", config.intertwiner_budget},
                      {"word_length_cap", config.word_length_cap},
                      {"workers", config.workers}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << "bound " << config.bound << "\nmode " << config.mode << "\nformat " << config.format
              << "\nintertwiner-budget " << config.intertwiner_budget << "\nword-length-cap " << config.word_length_cap
              << "\nworkers " << config.workers << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categories of partitions: operations, closures, classification and representations"};
  app.require_subcommand(1);
  app.add_option("--format", config.format, "text, structured or svg")->check(CLI::IsMember({"text", "structured", "svg"}));
  app.add_option("--workers", config.workers, "threads for closure expansion");

  std::function<int()> run;
  std::vector<std::string> args, gens;
  std::string what, text, corner = "top-left", query, expect, output, which = "sigma-inf", gen, suite;
  bool override_cap = false, expect_violation = false, no_derivations = false;
  std::size_t k = 2, depth = 0, prime_samples = 0;

  auto add_closure_options = [&](CLI::App* sub) {
    sub->add_option("--gen", gens, "generator: literal or catalog name (repeatable)");
    sub->add_option("--bound", config.bound, "largest number of points");
    sub->add_option("--mode", config.mode, "full or erasure-only");
    sub->add_option("--workers", config.workers, "threads for closure expansion");
    sub->add_option("--format", config.format, "text or structured")->check(CLI::IsMember({"text", "structured", "svg"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "text, structured or svg")->check(CLI::IsMember({"text", "structured", "svg"}));
  };

  auto* op = app.add_subcommand("op", "partition operations: tensor, compose, involute, rotate, reflect, one-row");
  op->add_option("operation", what)->required();
  op->add_option("partitions", args, "literals or catalog names; compose Q P puts P on top");
  op->add_option("--corner", corner, "rotation corner: top-left, top-right, bottom-left, bottom-right");
  add_format(op);
  op->callback([&] { run = [&] { return cmd_op(what, args, corner); }; });

  auto* word = app.add_subcommand("word", "word analytics: sdl, dyck, wdepth, doubling");
  word->add_option("command", what)->required();
  word->add_option("word", text)->required();
  word->add_flag("--length-cap-override", override_cap, "allow words longer than the length cap");
  add_format(word);
  word->callback([&] { run = [&] { return cmd_word(what, text, override_cap); }; });

  auto* generate = app.add_subcommand("generate", "emit the closure document");
  add_closure_options(generate);
  generate->add_flag("--no-derivations", no_derivations, "omit derivation records");
  generate->add_option("--output", output, "write the document to a file");
  generate->callback([&] { run = [&] { return cmd_generate(gens, !no_derivations, output); }; });

  auto* mem = app.add_subcommand("member", "membership verdict with trace or certificate");
  add_closure_options(mem);
  mem->add_option("--query", query)->required();
  mem->add_option("--expect", expect, "InClosure, ExcludedByCertificate or NotFoundUpToBound");
  mem->callback([&] { run = [&] { return cmd_member(gens, query, expect); }; });

  auto* cls = app.add_subcommand("classify", "classification report");
  add_closure_options(cls);
  cls->add_flag("--length-cap-override", override_cap, "allow members longer than the word length cap");
  cls->add_option("--expect", expect, "expected verdict, e.g. PiSeries(2)");
  cls->callback([&] { run = [&] { return cmd_classify(gens, override_cap, expect); }; });

  auto* rep = app.add_subcommand("rep", "representations: sigma-k, sigma-inf, export, intertwines");
  rep->add_option("command", what)->required();
  rep->add_option("--k", k, "parameter of sigma_k");
  rep->add_option("--depth", depth, "depth of the commutation relations");
  rep->add_flag("--expect-violation", expect_violation, "succeed only if a relation fails");
  rep->add_option("--prime-samples", prime_samples, "also test the equivalent relations on random indices");
  rep->add_option("--rep", which, "sigma-k or sigma-inf (export, intertwines)");
  rep->add_option("--gen", gen, "partition to test (intertwines)");
  rep->add_option("--budget", config.intertwiner_budget, "size budget for intertwines");
  add_format(rep);
  rep->callback([&] { run = [&] { return cmd_rep(what, k, depth, expect_violation, prime_samples, which, gen); }; });

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "lemma2.1, lemma3.x, doubling, wdepth, thmain, sigma, catalog or all")->required();
  ver->add_option("--workers", config.workers, "threads for closure expansion");
  ver->callback([&] { run = [&] { return cmd_verify(suite); }; });

  auto* cfg = app.add_subcommand("config", "configuration");
  auto* show = cfg->add_subcommand("show", "print the defaults");
  add_format(show);
  cfg->require_subcommand(1);
  show->callback([&] { run = [&] { return cmd_config_show(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pcat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LengthCapError& e) {
    std::cerr << "error: " << e.what() << " (use --length-cap-override)\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
