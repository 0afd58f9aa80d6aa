#include "pcat/closure.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/numeric/int128.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace pcat {

namespace {

// One-row word with at most kMaxBound letters, canonically labelled.
struct Packed {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxBound> l{};

  absl::uint128 key() const {
    absl::uint128 k = n;
    for (std::size_t i = 0; i < n; ++i) k |= absl::uint128(l[i]) << (5 + 5 * i);
    return k;
  }
};

// Relabels raw[0..n) (values < 64) in first-occurrence order.
Packed canonical(const std::uint8_t* raw, std::size_t n) {
  std::array<std::uint8_t, 64> map;
  map.fill(0xff);
  Packed p;
  p.n = static_cast<std::uint8_t>(n);
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& m = map[raw[i]];
    if (m == 0xff) m = next++;
    p.l[i] = m;
  }
  return p;
}

Packed pack(const Word& w) {
  if (w.size() > kMaxBound) throw std::length_error("word longer than the supported bound");
  std::array<std::uint8_t, kMaxBound> raw{};
  for (std::size_t i = 0; i < w.size(); ++i) raw[i] = static_cast<std::uint8_t>(w[i]);
  return canonical(raw.data(), w.size());
}

Word unpack(const Packed& p) { return Word(std::vector<BlockId>(p.l.begin(), p.l.begin() + p.n)); }

Packed rotated(const Packed& w, std::size_t s) {
  std::array<std::uint8_t, kMaxBound> raw{};
  for (std::size_t i = 0; i < w.n; ++i) raw[i] = w.l[(i + s) % w.n];
  return canonical(raw.data(), w.n);
}

Packed reversed(const Packed& w) {
  std::array<std::uint8_t, kMaxBound> raw{};
  for (std::size_t i = 0; i < w.n; ++i) raw[i] = w.l[w.n - 1 - i];
  return canonical(raw.data(), w.n);
}

Packed tensored(const Packed& a, const Packed& b) {
  std::array<std::uint8_t, 2 * kMaxBound> raw{};
  for (std::size_t i = 0; i < a.n; ++i) raw[i] = a.l[i];
  for (std::size_t i = 0; i < b.n; ++i) raw[a.n + i] = static_cast<std::uint8_t>(b.l[i] + 32);
  return canonical(raw.data(), a.n + b.n);
}

// a's last k letters are glued to b's first k letters in reverse order.
Packed composed(const Packed& a, const Packed& b, std::size_t k) {
  std::array<std::uint8_t, 64> parent;
  std::iota(parent.begin(), parent.end(), std::uint8_t{0});
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const auto x = find(a.l[a.n - k + i]);
    const auto y = find(static_cast<std::uint8_t>(32 + b.l[k - 1 - i]));
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::array<std::uint8_t, 2 * kMaxBound> raw{};
  std::size_t m = 0;
  for (std::size_t i = 0; i + k < a.n; ++i) raw[m++] = find(a.l[i]);
  for (std::size_t i = k; i < b.n; ++i) raw[m++] = find(static_cast<std::uint8_t>(32 + b.l[i]));
  return canonical(raw.data(), m);
}

// Blocks of the last two letters merged.
Packed connected_tail(const Packed& w) {
  std::array<std::uint8_t, kMaxBound> raw{};
  const auto from = w.l[w.n - 1], to = w.l[w.n - 2];
  for (std::size_t i = 0; i < w.n; ++i) raw[i] = w.l[i] == from ? to : w.l[i];
  return canonical(raw.data(), w.n);
}

}  // namespace

struct CategoryClosure::Store {
  std::vector<Packed> words;
  std::vector<Derivation> derivations;
  absl::flat_hash_map<absl::uint128, std::uint32_t> index;

  std::optional<std::uint32_t> find(const Packed& w) const {
    auto it = index.find(w.key());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Returns {id, inserted}.
  std::pair<std::uint32_t, bool> insert(const Packed& w, const Derivation& d) {
    auto [it, inserted] = index.try_emplace(w.key(), static_cast<std::uint32_t>(words.size()));
    if (inserted) {
      words.push_back(w);
      derivations.push_back(d);
    }
    return {it->second, inserted};
  }

  // Adds w together with all rotations of w and of its reflection.
  void insert_with_orbit(const Packed& w, const Derivation& d) {
    auto [id, inserted] = insert(w, d);
    if (!inserted) return;
    for (std::uint32_t s = 1; s < w.n; ++s) insert(rotated(w, s), {DerivationOp::rotate, id, 0, s});
    const Packed r = reversed(w);
    auto [rid, rnew] = insert(r, {DerivationOp::reverse, id, 0, 0});
    if (!rnew) return;
    for (std::uint32_t s = 1; s < r.n; ++s) insert(rotated(r, s), {DerivationOp::rotate, rid, 0, s});
  }
};

// ---------------------------------------------------------------------------

std::string to_string(ClosureMode m) { return m == ClosureMode::full ? "full" : "erasure-only"; }

std::optional<ClosureMode> parse_mode(std::string_view s) {
  if (s == "full") return ClosureMode::full;
  if (s == "erasure-only" || s == "erasure") return ClosureMode::erasure_only;
  return std::nullopt;
}

std::string to_string(DerivationOp op) {
  switch (op) {
    case DerivationOp::axiom: return "axiom";
    case DerivationOp::generator: return "generator";
    case DerivationOp::rotate: return "rotate";
    case DerivationOp::reverse: return "reverse";
    case DerivationOp::tensor: return "tensor";
    case DerivationOp::compose: return "compose";
    case DerivationOp::erase_pair: return "erase_pair";
    case DerivationOp::connect: return "connect";
  }
  return "?";
}

namespace {

std::optional<DerivationOp> parse_op(std::string_view s) {
  for (auto op : {DerivationOp::axiom, DerivationOp::generator, DerivationOp::rotate, DerivationOp::reverse,
                  DerivationOp::tensor, DerivationOp::compose, DerivationOp::erase_pair, DerivationOp::connect})
    if (to_string(op) == s) return op;
  return std::nullopt;
}

struct Candidate {
  Packed word;
  Derivation derivation;
};

}  // namespace

CategoryClosure::~CategoryClosure() = default;
CategoryClosure::CategoryClosure(CategoryClosure&&) noexcept = default;
CategoryClosure& CategoryClosure::operator=(CategoryClosure&&) noexcept = default;

CategoryClosure::CategoryClosure(std::vector<Partition> generators, const ClosureOptions& options)
    : generators_(std::move(generators)), options_(options), store_(std::make_unique<Store>()) {
  const std::size_t B = options_.bound;
  if (B < 2 || B > kMaxBound)
    throw std::invalid_argument("closure: bound must be between 2 and " + std::to_string(kMaxBound));
  for (const auto& g : generators_)
    if (g.size() > B)
      throw std::invalid_argument("closure: bound " + std::to_string(B) + " is too small for generator " +
                                  format(g));
  const unsigned workers = std::max(1u, options_.workers);
  Store& st = *store_;

  st.insert_with_orbit(Packed{}, {DerivationOp::axiom});
  const Packed pair = pack(Word({0, 0}));
  st.insert_with_orbit(pair, {DerivationOp::axiom});
  const std::uint32_t pair_id = *st.find(pair);
  for (std::uint32_t g = 0; g < generators_.size(); ++g)
    st.insert_with_orbit(pack(to_word(to_one_row(generators_[g]))), {DerivationOp::generator, 0, 0, g});

  const Packed four = pack(Word({0, 0, 0, 0}));
  std::optional<std::uint32_t> four_id;
  std::vector<std::uint32_t> rev_of;
  auto ensure_rev = [&] {
    while (rev_of.size() < st.words.size()) rev_of.push_back(*st.find(reversed(st.words[rev_of.size()])));
  };

  // Compositions of a and b where a ⊗ b would exceed the bound; smaller ones
  // are reached by a tensor product followed by pair contractions. Only the
  // narrowest window that fits is needed: widening the window by one contracts
  // the two points that meet at the seam.
  auto compose_pair = [&](std::uint32_t x, std::uint32_t y, std::vector<Candidate>& out, ClosureStats& stats) {
    const Packed& a = st.words[x];
    const Packed& b = st.words[y];
    const std::size_t total = std::size_t(a.n) + b.n;
    const std::size_t k = (total - B + 1) / 2;
    if (k > std::min<std::size_t>(a.n, b.n)) return;
    stats.discarded_over_bound += k - 1;
    ++stats.compositions;
    Packed r = composed(a, b, k);
    if (!st.find(r)) out.push_back({r, {DerivationOp::compose, x, y, static_cast<std::uint32_t>(k)}});
  };

  auto pairs_with = [&](std::uint32_t i, std::uint32_t j_begin, std::uint32_t j_end, std::vector<Candidate>& out,
                        ClosureStats& stats) {
    const Packed& a = st.words[i];
    for (std::uint32_t j = j_begin; j < j_end; ++j) {
      const Packed& b = st.words[j];
      if (std::size_t(a.n) + b.n <= B) {
        ++stats.tensor_products;
        Packed r = tensored(a, b);
        if (!st.find(r)) out.push_back({r, {DerivationOp::tensor, i, j, 0}});
        continue;
      }
      // (x, y) and (rev y, rev x) give mirror images; take the first to come up.
      auto consider = [&](std::uint32_t x, std::uint32_t y) {
        const std::uint32_t rx = rev_of[y], ry = rev_of[x];
        if (std::tuple{std::max(rx, ry), rx, ry} < std::tuple{std::max(x, y), x, y}) return;
        compose_pair(x, y, out, stats);
      };
      consider(i, j);
      if (j != i) consider(j, i);
    }
  };

  std::vector<Candidate> batch;
  std::uint32_t connected_upto = 0;
  for (std::uint32_t i = 0; i < st.words.size(); ++i) {
    if (options_.max_members && st.words.size() >= options_.max_members) {
      complete_ = false;
      break;
    }
    ensure_rev();
    batch.clear();
    const Packed a = st.words[i];

    if (options_.mode == ClosureMode::full) {
      if (a.n >= 2) {
        Packed r = composed(a, pair, 2);
        if (!st.find(r)) batch.push_back({r, {DerivationOp::compose, i, pair_id, 2}});
      }
      if (workers == 1 || i < 64) {
        pairs_with(i, 0, i + 1, batch, stats_);
      } else {
        std::vector<std::vector<Candidate>> parts(workers);
        std::vector<ClosureStats> part_stats(workers);
        std::vector<std::thread> threads;
        const std::uint32_t chunk = (i + 1 + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
          const std::uint32_t b0 = std::min<std::uint32_t>(i + 1, t * chunk);
          const std::uint32_t b1 = std::min<std::uint32_t>(i + 1, b0 + chunk);
          threads.emplace_back([&, t, b0, b1] { pairs_with(i, b0, b1, parts[t], part_stats[t]); });
        }
        for (auto& th : threads) th.join();
        for (unsigned t = 0; t < workers; ++t) {
          batch.insert(batch.end(), parts[t].begin(), parts[t].end());
          stats_.tensor_products += part_stats[t].tensor_products;
          stats_.compositions += part_stats[t].compositions;
          stats_.discarded_over_bound += part_stats[t].discarded_over_bound;
        }
      }
    } else {
      if (!four_id) four_id = st.find(four);
      if (a.n >= 2) {
        Packed r = composed(a, pair, 2);
        if (!st.find(r)) batch.push_back({r, {DerivationOp::erase_pair, i, 0, std::uint32_t(a.n - 2)}});
      }
      if (four_id) {
        // members seen before the four block appeared still need their merges
        for (std::uint32_t t = connected_upto; t <= i; ++t) {
          const Packed& w = st.words[t];
          if (w.n < 2) continue;
          Packed r = connected_tail(w);
          if (!st.find(r)) batch.push_back({r, {DerivationOp::connect, t, *four_id, std::uint32_t(w.n - 2)}});
        }
        connected_upto = i + 1;
      }
    }
    for (const auto& c : batch) st.insert_with_orbit(c.word, c.derivation);
  }

  stats_.members_by_length.assign(B + 1, 0);
  for (const auto& w : st.words) ++stats_.members_by_length[w.n];
}

std::size_t CategoryClosure::size() const noexcept { return store_->words.size(); }

Word CategoryClosure::word(std::uint32_t id) const { return unpack(store_->words.at(id)); }

const Derivation& CategoryClosure::derivation(std::uint32_t id) const { return store_->derivations.at(id); }

std::optional<std::uint32_t> CategoryClosure::find(const Word& w) const {
  if (w.size() > options_.bound) return std::nullopt;
  return store_->find(pack(w));
}

std::optional<std::uint32_t> CategoryClosure::find(const Partition& p) const {
  return find(to_word(to_one_row(p)));
}

std::vector<Word> CategoryClosure::members_of_length(std::size_t n) const {
  std::vector<Word> out;
  for (const auto& w : store_->words)
    if (w.n == n) out.push_back(unpack(w));
  return out;
}

std::vector<Word> CategoryClosure::members() const {
  std::vector<Word> out;
  out.reserve(size());
  for (const auto& w : store_->words) out.push_back(unpack(w));
  return out;
}

namespace {

std::string show(const Word& w) { return w.empty() ? std::string("(empty)") : format(w); }

}  // namespace

std::vector<std::string> CategoryClosure::trace(std::uint32_t id) const {
  std::vector<std::uint32_t> order;
  std::vector<char> seen(size(), 0);
  std::vector<std::pair<std::uint32_t, bool>> stack{{id, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(x);
      continue;
    }
    if (seen[x]) continue;
    seen[x] = 1;
    stack.push_back({x, true});
    const Derivation& d = derivation(x);
    switch (d.op) {
      case DerivationOp::tensor:
      case DerivationOp::compose:
      case DerivationOp::connect: stack.push_back({d.b, false}); [[fallthrough]];
      case DerivationOp::rotate:
      case DerivationOp::reverse:
      case DerivationOp::erase_pair: stack.push_back({d.a, false}); break;
      default: break;
    }
  }
  std::vector<std::string> lines;
  for (std::uint32_t x : order) {
    const Derivation& d = derivation(x);
    std::ostringstream os;
    os << "#" << x << " " << show(word(x)) << " = ";
    switch (d.op) {
      case DerivationOp::axiom: os << "axiom"; break;
      case DerivationOp::generator: os << "generator " << format(generators_.at(d.param)); break;
      case DerivationOp::rotate: os << "rotate(#" << d.a << ", " << d.param << ")"; break;
      case DerivationOp::reverse: os << "reverse(#" << d.a << ")"; break;
      case DerivationOp::tensor: os << "tensor(#" << d.a << ", #" << d.b << ")"; break;
      case DerivationOp::compose: os << "compose(#" << d.a << ", #" << d.b << ", k=" << d.param << ")"; break;
      case DerivationOp::erase_pair: os << "erase_pair(#" << d.a << ", " << d.param << ")"; break;
      case DerivationOp::connect: os << "connect(#" << d.a << ", " << d.param << ") using #" << d.b; break;
    }
    lines.push_back(os.str());
  }
  return lines;
}

std::optional<std::uint32_t> CategoryClosure::replay() const {
  for (std::uint32_t id = 0; id < size(); ++id) {
    const Derivation& d = derivation(id);
    const Word w = word(id);
    const bool needs_b = d.op == DerivationOp::tensor || d.op == DerivationOp::compose || d.op == DerivationOp::connect;
    const bool needs_a = needs_b || d.op == DerivationOp::rotate || d.op == DerivationOp::reverse ||
                         d.op == DerivationOp::erase_pair;
    if ((needs_a && d.a >= id) || (needs_b && d.b >= id)) return id;
    Word expect;
    try {
      switch (d.op) {
        case DerivationOp::axiom:
          if (!(w.empty() || w == Word({0, 0}))) return id;
          continue;
        case DerivationOp::generator:
          if (d.param >= generators_.size()) return id;
          expect = to_word(to_one_row(generators_[d.param]));
          break;
        case DerivationOp::rotate: expect = word(d.a).rotated(d.param); break;
        case DerivationOp::reverse: expect = to_word(to_one_row(involute(from_word(word(d.a))))); break;
        case DerivationOp::tensor: expect = to_word(tensor(from_word(word(d.a)), from_word(word(d.b)))); break;
        case DerivationOp::compose: expect = compose_words(word(d.a), word(d.b), d.param); break;
        case DerivationOp::erase_pair: expect = to_word(erase_pair(from_word(word(d.a)), d.param)); break;
        case DerivationOp::connect:
          if (!(word(d.b) == Word({0, 0, 0, 0}))) return id;
          expect = to_word(connect_neighbouring_blocks(from_word(word(d.a)), d.param));
          break;
      }
    } catch (const std::exception&) {
      return id;
    }
    if (!(expect == w)) return id;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// certificates and membership

std::string to_string(Invariant inv) {
  switch (inv) {
    case Invariant::blocks_at_most_two: return "all-blocks-at-most-two";
    case Invariant::blocks_even: return "all-blocks-even";
    case Invariant::length_even: return "even-length";
    case Invariant::noncrossing: return "noncrossing";
  }
  return "?";
}

bool holds(Invariant inv, const Partition& p) {
  const auto sizes = p.block_sizes();
  switch (inv) {
    case Invariant::blocks_at_most_two:
      return std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s <= 2; });
    case Invariant::blocks_even:
      return std::all_of(sizes.begin(), sizes.end(), [](auto s) { return s % 2 == 0; });
    case Invariant::length_even: return p.size() % 2 == 0;
    case Invariant::noncrossing: return is_noncrossing(p);
  }
  return false;
}

std::optional<Certificate> CategoryClosure::certificate_against(const Partition& p) const {
  for (Invariant inv : {Invariant::blocks_even, Invariant::length_even, Invariant::blocks_at_most_two,
                        Invariant::noncrossing}) {
    if (holds(inv, p)) continue;
    if (std::all_of(generators_.begin(), generators_.end(), [&](const Partition& g) { return holds(inv, g); }))
      return Certificate{to_string(inv), "every generator is " + to_string(inv) + ", the query " + format(p) +
                                             " is not"};
  }
  return std::nullopt;
}

std::string verdict_name(const MembershipAnswer& a) {
  if (std::holds_alternative<InClosure>(a)) return "InClosure";
  if (std::holds_alternative<ExcludedByCertificate>(a)) return "ExcludedByCertificate";
  return "NotFoundUpToBound";
}

MembershipAnswer member(const CategoryClosure& c, const Partition& p) {
  if (auto id = c.find(p)) {
    InClosure hit{*id, c.trace(*id)};
    if (p.upper_arity() != 0)
      hit.trace.push_back("split into " + std::to_string(p.upper_arity()) + " upper points: " + format(p));
    return hit;
  }
  if (auto cert = c.certificate_against(p)) return ExcludedByCertificate{*cert};
  return NotFoundUpToBound{c.bound()};
}

// ---------------------------------------------------------------------------
// moves

Partition erase_pair(const Partition& p, std::size_t position) {
  if (p.upper_arity() != 0) throw std::invalid_argument("erase_pair: partition has upper points");
  const std::size_t n = p.size();
  if (n < 2 || position >= n) throw std::out_of_range("erase_pair: position out of range");
  if (position == n - 1) return erase_pair(cyclic_shift(p, n - 1), 0);
  // compose with identity ⊗ cap ⊗ identity
  auto through = [position](std::size_t i) { return i != position && i != position + 1; };
  std::vector<BlockId> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(through(i) ? static_cast<BlockId>(i + 1) : 0);
  for (std::size_t i = 0; i < n; ++i)
    if (through(i)) labels.push_back(static_cast<BlockId>(i + 1));
  const Partition eraser(n, n - 2, std::move(labels));
  return compose(eraser, p).result;
}

Partition connect_neighbouring_blocks(const Partition& p, std::size_t position) {
  if (p.upper_arity() != 0) throw std::invalid_argument("connect_neighbouring_blocks: partition has upper points");
  const std::size_t n = p.size();
  if (position + 1 >= n) throw std::out_of_range("connect_neighbouring_blocks: position out of range");
  // compose with identity ⊗ (four block on two upper and two lower points) ⊗ identity
  std::vector<BlockId> labels;
  for (std::size_t i = 0; i < position; ++i) labels.push_back(static_cast<BlockId>(i + 1));
  labels.push_back(0);
  labels.push_back(0);
  for (std::size_t i = position + 2; i < n; ++i) labels.push_back(static_cast<BlockId>(i + 1));
  std::vector<BlockId> both = labels;
  both.insert(both.end(), labels.begin(), labels.end());
  const Partition connector(n, n, std::move(both));
  return compose(connector, p).result;
}

Word compose_words(const Word& a, const Word& b, std::size_t k) {
  if (k > a.size() || k > b.size()) throw std::invalid_argument("compose_words: window larger than a word");
  const Partition top = split_one_row(from_word(a), a.size() - k);
  const Partition bottom = split_one_row(from_word(b), k);
  return to_word(to_one_row(compose(bottom, top).result));
}

Partition normalize_generators(const std::vector<Partition>& gens) {
  if (gens.empty()) throw std::invalid_argument("normalize_generators: empty generator list");
  Partition p = gens.front();
  bool odd = gens.front().size() % 2 == 1;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    p = tensor(p, gens[i]);
    odd = odd || gens[i].size() % 2 == 1;
  }
  if (odd && p.size() % 2 == 0) p = tensor(p, named(NamedTag::singleton));
  return p;
}

CategoryClosure closure(const std::vector<Partition>& generators, std::size_t bound, ClosureMode mode,
                        unsigned workers) {
  ClosureOptions o;
  o.bound = bound;
  o.mode = mode;
  o.workers = workers;
  return CategoryClosure(generators, o);
}

// ---------------------------------------------------------------------------
// document

std::string CategoryClosure::export_document(bool with_derivations) const {
  nlohmann::ordered_json doc;
  doc["format"] = "pcat-closure";
  doc["version"] = 1;
  doc["bound"] = options_.bound;
  doc["mode"] = to_string(options_.mode);
  doc["complete"] = complete_;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : generators_) gens.push_back(format(g));
  doc["generators"] = gens;
  auto members = nlohmann::ordered_json::array();
  for (std::uint32_t id = 0; id < size(); ++id) {
    nlohmann::ordered_json m;
    m["word"] = format(word(id));
    if (with_derivations) {
      const Derivation& d = derivation(id);
      m["op"] = to_string(d.op);
      m["a"] = d.a;
      m["b"] = d.b;
      m["param"] = d.param;
    }
    members.push_back(std::move(m));
  }
  doc["members"] = members;
  return doc.dump(1) + "\n";
}

CategoryClosure CategoryClosure::import_document(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("format") != "pcat-closure") throw std::runtime_error("not a closure document");
  if (doc.at("version") != 1) throw std::runtime_error("unsupported closure document version");
  CategoryClosure c;
  c.options_.bound = doc.at("bound").get<std::size_t>();
  const auto mode = parse_mode(doc.at("mode").get<std::string>());
  if (!mode) throw std::runtime_error("unknown closure mode");
  c.options_.mode = *mode;
  c.complete_ = doc.at("complete").get<bool>();
  for (const auto& g : doc.at("generators")) c.generators_.push_back(parse(g.get<std::string>()));
  c.store_ = std::make_unique<Store>();
  bool derivations = true;
  for (const auto& m : doc.at("members")) {
    const Word w = parse_word(m.at("word").get<std::string>());
    Derivation d;
    if (m.contains("op")) {
      const auto op = parse_op(m.at("op").get<std::string>());
      if (!op) throw std::runtime_error("unknown derivation op");
      d = {*op, m.at("a").get<std::uint32_t>(), m.at("b").get<std::uint32_t>(), m.at("param").get<std::uint32_t>()};
    } else {
      derivations = false;
    }
    if (!c.store_->insert(pack(w), d).second) throw std::runtime_error("duplicate member in document");
  }
  if (derivations)
    if (auto bad = c.replay()) throw std::runtime_error("derivation of member #" + std::to_string(*bad) + " fails");
  c.stats_.members_by_length.assign(c.options_.bound + 1, 0);
  for (const auto& w : c.store_->words) ++c.stats_.members_by_length.at(w.n);
  return c;
}

// ---------------------------------------------------------------------------
// catalog

namespace {

Partition gen(std::string_view s) { return parse_partition_arg(s); }

struct CatalogEntry {
  const char* name;
  const char* notation;
  std::vector<const char*> generators;
  std::vector<const char*> aliases;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"free-orthogonal", "<> = NC2", {}, {"NC2"}},
      {"free-bistochastic-sharp", "<singleton (x) singleton>", {"doublesingleton"}, {}},
      {"free-bistochastic-prime", "<leg>", {"leg"}, {}},
      {"free-bistochastic", "<singleton>", {"singleton"}, {}},
      {"free-symmetric", "<singleton, fourblock> = NC", {"singleton", "fourblock"}, {"NC"}},
      {"free-symmetric-prime", "<singleton (x) singleton, fourblock>", {"doublesingleton", "fourblock"}, {}},
      {"free-hyperoctahedral", "<fourblock>", {"fourblock"}, {}},
      {"group-orthogonal", "<crossing> = P2", {"crossing"}, {"group-P2", "P2"}},
      {"group-bistochastic-prime", "<crossing, singleton (x) singleton>", {"crossing", "doublesingleton"}, {}},
      {"group-bistochastic", "<crossing, singleton>", {"crossing", "singleton"}, {}},
      {"group-symmetric", "<crossing, singleton, fourblock> = P", {"crossing", "singleton", "fourblock"},
       {"group-P", "P"}},
      {"group-symmetric-prime", "<crossing, singleton (x) singleton, fourblock>",
       {"crossing", "doublesingleton", "fourblock"}, {}},
      {"group-hyperoctahedral", "<crossing, fourblock>", {"crossing", "fourblock"}, {}},
      {"half-liberated-orthogonal", "<halflib>", {"halflib"}, {}},
      {"half-liberated-bistochastic-sharp", "<halflib, singleton (x) singleton>", {"halflib", "doublesingleton"}, {}},
      {"half-liberated-hyperoctahedral", "<halflib, fourblock>", {"halflib", "fourblock"}, {}},
      {"pair-positioner", "<pairpositioner>", {"pairpositioner"}, {}},
  };
  return entries;
}

NamedCategory build(const CatalogEntry& e) {
  NamedCategory c{e.name, e.notation, {}};
  for (const char* g : e.generators) c.generators.push_back(gen(g));
  return c;
}

std::optional<std::size_t> parameter(std::string_view tag, std::string_view prefix) {
  if (!tag.starts_with(prefix)) return std::nullopt;
  auto rest = tag.substr(prefix.size());
  if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
  else if (rest.starts_with("-")) rest.remove_prefix(1);
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    return std::nullopt;
  return std::stoul(std::string(rest));
}

}  // namespace

std::optional<NamedCategory> named_category(std::string_view tag) {
  for (const auto& e : catalog()) {
    if (tag == e.name) return build(e);
    for (const char* a : e.aliases)
      if (tag == a) return build(e);
  }
  if (auto s = parameter(tag, "half-liberated-series"); s && *s >= 3)
    return NamedCategory{"half-liberated-series(" + std::to_string(*s) + ")",
                         "<halflib, fourblock, h" + std::to_string(*s) + ">",
                         {gen("halflib"), gen("fourblock"), named(NamedTag::h, *s)}};
  if (auto k = parameter(tag, "pi-series"); k && *k >= 1)
    return NamedCategory{"pi-series(" + std::to_string(*k) + ")", "<pi" + std::to_string(*k) + ">",
                         {named(NamedTag::pi, *k)}};
  return std::nullopt;
}

std::vector<NamedCategory> free_and_group_categories() {
  std::vector<NamedCategory> out;
  for (std::size_t i = 0; i < 13; ++i) out.push_back(build(catalog()[i]));
  return out;
}

std::vector<std::string> category_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.emplace_back(e.name);
  out.emplace_back("half-liberated-series(s)");
  out.emplace_back("pi-series(k)");
  return out;
}

}  // namespace pcat
