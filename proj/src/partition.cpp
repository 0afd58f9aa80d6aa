#include "pcat/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>

namespace pcat {

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<BlockId> canonical_labels(std::span<const BlockId> labels) {
  std::vector<BlockId> out;
  out.reserve(labels.size());
  std::vector<std::pair<BlockId, BlockId>> seen;  // small; linear scan beats hashing here
  for (BlockId x : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [x](const auto& e) { return e.first == x; });
    if (it == seen.end()) {
      seen.emplace_back(x, static_cast<BlockId>(seen.size()));
      out.push_back(seen.back().second);
    } else {
      out.push_back(it->second);
    }
  }
  return out;
}

Partition::Partition(std::size_t upper_arity, std::size_t lower_arity, std::vector<BlockId> labels)
    : upper_(upper_arity) {
  if (labels.size() != upper_arity + lower_arity)
    throw std::invalid_argument("partition: label count does not match arities");
  blocks_ = canonical_labels(labels);
  num_blocks_ = blocks_.empty() ? 0 : *std::max_element(blocks_.begin(), blocks_.end()) + 1;
}

Partition Partition::from_lower(std::vector<BlockId> labels) {
  const std::size_t n = labels.size();
  return Partition(0, n, std::move(labels));
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(num_blocks_, 0);
  for (BlockId b : blocks_) ++sizes[b];
  return sizes;
}

std::size_t hash_value(const Partition& p) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ p.upper_arity();
  for (BlockId b : p.labels()) h = (h ^ b) * 0x100000001b3ull;
  return h ^ (p.size() << 48);
}

// ---------------------------------------------------------------------------
// text form

std::string block_letter(BlockId id) {
  if (id < 26) return std::string(1, static_cast<char>('a' + id));
  return "{b" + std::to_string(id + 1) + "}";
}

Partition parse(std::string_view text) {
  std::map<std::string, BlockId, std::less<>> ids;
  std::vector<BlockId> labels;
  std::size_t upper = 0;
  bool seen_separator = false;

  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == ';') {
      if (seen_separator) throw ParseError(i, "second ';'");
      seen_separator = true;
      upper = labels.size();
      ++i;
      continue;
    }
    std::string token;
    if (c == '{') {
      const auto close = text.find('}', i + 1);
      if (close == std::string_view::npos) throw ParseError(i, "unterminated '{'");
      token = std::string(text.substr(i + 1, close - i - 1));
      if (token.empty()) throw ParseError(i, "empty block label");
      for (std::size_t j = 0; j < token.size(); ++j) {
        const unsigned char t = static_cast<unsigned char>(token[j]);
        if (!(std::isalnum(t) || t == '_')) throw ParseError(i + 1 + j, "invalid character in label");
      }
      token.insert(token.begin(), '{');
      i = close + 1;
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      token.assign(1, c);
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    auto [it, inserted] = ids.try_emplace(token, static_cast<BlockId>(ids.size()));
    labels.push_back(it->second);
  }
  if (!seen_separator) throw ParseError(text.size(), "missing ';'");
  const std::size_t n = labels.size();
  return Partition(upper, n - upper, std::move(labels));
}

std::string format(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == p.upper_arity()) out += ';';
    out += block_letter(p.block_of(i));
  }
  if (p.upper_arity() == p.size()) out += ';';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << format(p); }

// ---------------------------------------------------------------------------
// operations

Partition tensor(const Partition& p, const Partition& q) {
  const BlockId shift = static_cast<BlockId>(p.num_blocks());
  std::vector<BlockId> labels;
  labels.reserve(p.size() + q.size());
  for (std::size_t i = 0; i < p.upper_arity(); ++i) labels.push_back(p.upper(i));
  for (std::size_t i = 0; i < q.upper_arity(); ++i) labels.push_back(q.upper(i) + shift);
  for (std::size_t j = 0; j < p.lower_arity(); ++j) labels.push_back(p.lower(j));
  for (std::size_t j = 0; j < q.lower_arity(); ++j) labels.push_back(q.lower(j) + shift);
  return Partition(p.upper_arity() + q.upper_arity(), p.lower_arity() + q.lower_arity(),
                   std::move(labels));
}

Composition compose(const Partition& q, const Partition& p) {
  if (p.lower_arity() != q.upper_arity())
    throw std::invalid_argument("compose: lower arity " + std::to_string(p.lower_arity()) +
                                " does not match upper arity " + std::to_string(q.upper_arity()));
  // nodes: blocks of p, then blocks of q
  const auto np = static_cast<std::uint32_t>(p.num_blocks());
  DisjointSets ds(p.num_blocks() + q.num_blocks());
  for (std::size_t j = 0; j < p.lower_arity(); ++j) ds.unite(p.lower(j), np + q.upper(j));

  std::vector<BlockId> labels;
  labels.reserve(p.upper_arity() + q.lower_arity());
  std::vector<bool> outer(p.num_blocks() + q.num_blocks(), false);
  for (std::size_t i = 0; i < p.upper_arity(); ++i) {
    labels.push_back(ds.find(p.upper(i)));
    outer[labels.back()] = true;
  }
  for (std::size_t j = 0; j < q.lower_arity(); ++j) {
    labels.push_back(ds.find(np + q.lower(j)));
    outer[labels.back()] = true;
  }

  std::size_t loops = 0;
  std::vector<bool> counted(outer.size(), false);
  auto visit = [&](std::uint32_t node) {
    const auto r = ds.find(node);
    if (!outer[r] && !counted[r]) {
      counted[r] = true;
      ++loops;
    }
  };
  for (std::size_t j = 0; j < p.lower_arity(); ++j) visit(p.lower(j));

  return {Partition(p.upper_arity(), q.lower_arity(), std::move(labels)), loops};
}

Partition involute(const Partition& p) {
  std::vector<BlockId> labels;
  labels.reserve(p.size());
  for (std::size_t j = 0; j < p.lower_arity(); ++j) labels.push_back(p.lower(j));
  for (std::size_t i = 0; i < p.upper_arity(); ++i) labels.push_back(p.upper(i));
  return Partition(p.lower_arity(), p.upper_arity(), std::move(labels));
}

Corner inverse(Corner c) noexcept {
  switch (c) {
    case Corner::top_left: return Corner::bottom_left;
    case Corner::bottom_left: return Corner::top_left;
    case Corner::top_right: return Corner::bottom_right;
    case Corner::bottom_right: return Corner::top_right;
  }
  return c;
}

Partition rotate(const Partition& p, Corner corner) {
  const auto& v = p.labels();
  const std::size_t k = p.upper_arity();
  std::vector<BlockId> upper(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<BlockId> lower(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  const bool from_upper = corner == Corner::top_left || corner == Corner::top_right;
  if (from_upper ? upper.empty() : lower.empty())
    throw std::invalid_argument("rotate: source row is empty");

  auto& src = from_upper ? upper : lower;
  auto& dst = from_upper ? lower : upper;
  if (corner == Corner::top_left || corner == Corner::bottom_left) {
    dst.insert(dst.begin(), src.front());
    src.erase(src.begin());
  } else {
    dst.push_back(src.back());
    src.pop_back();
  }
  const std::size_t new_k = upper.size(), new_l = lower.size();
  upper.insert(upper.end(), lower.begin(), lower.end());
  return Partition(new_k, new_l, std::move(upper));
}

Partition to_one_row(const Partition& p) {
  std::vector<BlockId> labels;
  labels.reserve(p.size());
  for (std::size_t i = p.upper_arity(); i-- > 0;) labels.push_back(p.upper(i));
  for (std::size_t j = 0; j < p.lower_arity(); ++j) labels.push_back(p.lower(j));
  return Partition::from_lower(std::move(labels));
}

Partition cyclic_shift(const Partition& p, std::size_t shift) {
  if (p.upper_arity() != 0) throw std::invalid_argument("cyclic_shift: partition has upper points");
  if (p.empty()) return p;
  std::vector<BlockId> labels = p.labels();
  std::rotate(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(shift % labels.size()),
              labels.end());
  return Partition::from_lower(std::move(labels));
}

Partition split_one_row(const Partition& w, std::size_t upper) {
  if (w.upper_arity() != 0) throw std::invalid_argument("split_one_row: partition has upper points");
  if (upper > w.size()) throw std::out_of_range("split_one_row: split point beyond length");
  std::vector<BlockId> labels;
  labels.reserve(w.size());
  for (std::size_t i = upper; i-- > 0;) labels.push_back(w.block_of(i));
  for (std::size_t j = upper; j < w.size(); ++j) labels.push_back(w.block_of(j));
  return Partition(upper, w.size() - upper, std::move(labels));
}

Partition vertical_reflect(const Partition& p) {
  const auto& v = p.labels();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(p.upper_arity());
  std::vector<BlockId> labels(v.rbegin() + static_cast<std::ptrdiff_t>(p.lower_arity()), v.rend());
  labels.insert(labels.end(), v.rbegin(), std::make_reverse_iterator(mid));
  return Partition(p.upper_arity(), p.lower_arity(), std::move(labels));
}

bool is_noncrossing(const Partition& p) {
  // Two blocks cross iff, read around the circle, their points alternate
  // a..b..a..b. Track first/last occurrences and test each pair of blocks.
  const Partition w = to_one_row(p);
  const std::size_t nb = w.num_blocks();
  const auto& v = w.labels();
  std::vector<BlockId> filtered;
  for (BlockId x = 0; x < nb; ++x) {
    for (BlockId y = x + 1; y < nb; ++y) {
      filtered.clear();
      for (BlockId b : v) {
        if (b != x && b != y) continue;
        if (filtered.empty() || filtered.back() != b) filtered.push_back(b);
      }
      if (filtered.size() > 1 && filtered.front() == filtered.back()) filtered.pop_back();
      if (filtered.size() >= 4) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// named partitions

Partition named(NamedPartition n) {
  switch (n.tag) {
    case NamedTag::empty: return parse(";");
    case NamedTag::singleton: return parse(";a");
    case NamedTag::double_singleton: return parse(";ab");
    case NamedTag::pair: return parse(";aa");
    case NamedTag::identity: return parse("a;a");
    case NamedTag::four_block: return parse(";aaaa");
    case NamedTag::crossing: return parse("ab;ba");
    case NamedTag::fat_crossing: return parse("aabb;bbaa");
    case NamedTag::half_liberator: return parse("abc;cba");
    case NamedTag::pair_positioner: return parse("aab;baa");
    case NamedTag::leg: return parse(";abcb");
    case NamedTag::h: {
      if (n.parameter < 2) throw std::out_of_range("h(s) needs s >= 2");
      std::vector<BlockId> labels;
      for (std::size_t i = 0; i < 2 * n.parameter; ++i) labels.push_back(i % 2);
      return Partition::from_lower(std::move(labels));
    }
    case NamedTag::pi: {
      if (n.parameter < 1) throw std::out_of_range("pi(k) needs k >= 1");
      const auto k = static_cast<BlockId>(n.parameter);
      std::vector<BlockId> labels;
      for (int rep = 0; rep < 2; ++rep) {
        for (BlockId i = 0; i < k; ++i) labels.push_back(i);
        for (BlockId i = k; i-- > 0;) labels.push_back(i);
      }
      return Partition::from_lower(std::move(labels));
    }
  }
  throw std::invalid_argument("named: unknown tag");
}

namespace {

struct NameEntry {
  std::string_view name;
  NamedTag tag;
};

constexpr NameEntry kNames[] = {
    {"empty", NamedTag::empty},
    {"singleton", NamedTag::singleton},
    {"doublesingleton", NamedTag::double_singleton},
    {"pair", NamedTag::pair},
    {"identity", NamedTag::identity},
    {"fourblock", NamedTag::four_block},
    {"crossing", NamedTag::crossing},
    {"fatcross", NamedTag::fat_crossing},
    {"halflib", NamedTag::half_liberator},
    {"pairpositioner", NamedTag::pair_positioner},
    {"leg", NamedTag::leg},
};

constexpr std::pair<std::string_view, std::string_view> kAliases[] = {
    {"double_singleton", "doublesingleton"}, {"four_block", "fourblock"},
    {"vier", "fourblock"},                   {"fat_crossing", "fatcross"},
    {"fatcrossing", "fatcross"},             {"half_liberator", "halflib"},
    {"halfliberator", "halflib"},            {"pair_positioner", "pairpositioner"},
    {"pp", "pairpositioner"},                {"cross", "crossing"},
    {"legpart", "leg"},
};

std::optional<std::size_t> parse_suffix(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<NamedPartition> parse_named(std::string_view name) {
  for (const auto& [alias, target] : kAliases)
    if (name == alias) name = target;
  for (const auto& e : kNames)
    if (name == e.name) return NamedPartition{e.tag, 0};
  if (name.starts_with("pi"))
    if (auto k = parse_suffix(name.substr(2)); k && *k >= 1) return NamedPartition{NamedTag::pi, *k};
  if (name.starts_with("h"))
    if (auto s = parse_suffix(name.substr(1)); s && *s >= 2) return NamedPartition{NamedTag::h, *s};
  return std::nullopt;
}

std::string to_string(NamedPartition n) {
  if (n.tag == NamedTag::pi) return "pi" + std::to_string(n.parameter);
  if (n.tag == NamedTag::h) return "h" + std::to_string(n.parameter);
  for (const auto& e : kNames)
    if (e.tag == n.tag) return std::string(e.name);
  return "?";
}

Partition parse_partition_arg(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return parse(text);
  if (auto n = parse_named(text)) return named(*n);
  throw ParseError(0, "not a partition literal or catalog name: '" + std::string(text) + "'");
}

}  // namespace pcat
