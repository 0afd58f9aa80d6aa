#include "pcat/word.hpp"

#include <algorithm>
#include <sstream>

namespace pcat {

Word::Word(std::vector<BlockId> letters) : letters_(canonical_labels(letters)) {}

std::size_t Word::num_letters() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end()) + 1;
}

Word Word::rotated(std::size_t offset) const {
  if (letters_.empty()) return *this;
  std::vector<BlockId> v = letters_;
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(offset % v.size()), v.end());
  return Word(std::move(v));
}

Word to_word(const Partition& p) {
  if (p.upper_arity() != 0)
    throw std::invalid_argument("to_word: partition has " + std::to_string(p.upper_arity()) +
                                " upper points");
  return Word(p.labels());
}

Partition from_word(const Word& w) { return Partition::from_lower(w.letters()); }

Word parse_word(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return to_word(parse(text));
  return to_word(parse(";" + std::string(text)));
}

std::string format(const Word& w) {
  std::string out;
  for (BlockId b : w.letters()) out += block_letter(b);
  return out;
}

Word single_double_form(const Word& w) {
  std::vector<BlockId> out;
  const auto& v = w.letters();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    out.push_back(v[i]);
    if ((j - i) % 2 == 0) out.push_back(v[i]);
    i = j;
  }
  return Word(std::move(out));
}

std::string DyckPath::to_string() const {
  std::string s;
  for (int step : steps) s += step < 0 ? 'D' : 'U';
  return s;
}

DyckPath dyck_path(const Word& w) {
  DyckPath path;
  path.levels.push_back(0);
  std::vector<std::size_t> seen(w.num_letters(), 0);
  for (BlockId b : w.letters()) {
    const int step = (++seen[b] % 2 == 1) ? -1 : 1;
    path.steps.push_back(step);
    path.levels.push_back(path.levels.back() + step);
  }
  return path;
}

std::string describe(const DoublingViolation& v) {
  std::ostringstream os;
  os << "letter " << block_letter(v.letter) << " at " << v.first << ".." << v.second << ": ";
  switch (v.kind) {
    case DoublingKind::odd_letter_between:
      os << "(a) " << block_letter(*v.other) << " occurs an odd number of times in between";
      break;
    case DoublingKind::odd_gap: os << "(b) odd gap without the letter"; break;
    case DoublingKind::gap_without_pair: os << "(c) even gap without a consecutive pair"; break;
  }
  return os.str();
}

std::vector<DoublingViolation> doubling_check(const Word& w) {
  std::vector<DoublingViolation> out;
  const auto& v = w.letters();
  const std::size_t n = v.size();
  std::vector<std::vector<std::size_t>> occ(w.num_letters());
  for (std::size_t i = 0; i < n; ++i) occ[v[i]].push_back(i);

  std::vector<std::size_t> count(w.num_letters());
  for (BlockId a = 0; a < occ.size(); ++a) {
    const auto& pos = occ[a];
    if (pos.size() < 2) continue;
    for (std::size_t t = 0; t < pos.size(); ++t) {
      const std::size_t first = pos[t];
      const std::size_t second = pos[(t + 1) % pos.size()];
      const std::size_t gap = (second + n - first) % n - 1;  // letters strictly between, cyclically

      std::fill(count.begin(), count.end(), 0);
      bool has_pair = false;
      for (std::size_t d = 1; d <= gap; ++d) {
        const BlockId b = v[(first + d) % n];
        ++count[b];
        if (d >= 2 && v[(first + d - 1) % n] == b) has_pair = true;
      }
      for (BlockId b = 0; b < count.size(); ++b)
        if (b != a && count[b] % 2 == 1)
          out.push_back({DoublingKind::odd_letter_between, a, first, second, b});
      if (gap % 2 == 1)
        out.push_back({DoublingKind::odd_gap, a, first, second, std::nullopt});
      else if (gap >= 2 && !has_pair)
        out.push_back({DoublingKind::gap_without_pair, a, first, second, std::nullopt});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// W-depth

namespace {

std::vector<BlockId> rotate_raw(const std::vector<BlockId>& v, std::size_t r) {
  std::vector<BlockId> out(v);
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
  return out;
}

// Searches one rotation for legs on a fixed ordered tuple of letters.
class LegFinder {
 public:
  LegFinder(const std::vector<BlockId>& word, std::size_t num_letters)
      : w_(word), prefix_(num_letters, std::vector<std::uint16_t>(word.size() + 1, 0)) {
    for (BlockId b = 0; b < num_letters; ++b)
      for (std::size_t i = 0; i < w_.size(); ++i) prefix_[b][i + 1] = prefix_[b][i] + (w_[i] == b);
  }

  std::optional<std::array<WLeg, 4>> find(const std::vector<BlockId>& letters) const {
    std::vector<BlockId> desc(letters.rbegin(), letters.rend());
    std::array<WLeg, 4> legs;
    std::size_t next = 0;
    for (int leg = 0; leg < 4; ++leg) {
      const auto& order = (leg % 2 == 0) ? letters : desc;
      auto found = earliest_leg(order, next, leg == 0);
      if (!found) return std::nullopt;
      legs[leg] = std::move(*found);
      next = legs[leg].end + 1;
    }
    return legs;
  }

 private:
  bool odd_counts(const std::vector<BlockId>& letters, std::size_t s, std::size_t e) const {
    for (BlockId b : letters)
      if ((prefix_[b][e + 1] - prefix_[b][s]) % 2 == 0) return false;
    return true;
  }

  // Among legs starting at or after `from`, the one with the smallest end.
  // Later legs only need to start after this one ends, so the earliest end
  // never loses a solution.
  std::optional<WLeg> earliest_leg(const std::vector<BlockId>& order, std::size_t from,
                                   bool anchored) const {
    const std::size_t n = w_.size();
    const BlockId first = order.front(), last = order.back();
    std::optional<WLeg> best;
    for (std::size_t s = from; s < n; ++s) {
      if (w_[s] != first) continue;
      if (anchored && s != from) break;
      if (best && s >= best->end) break;
      // greedy placement of the inner letters
      std::vector<std::size_t> marks{s};
      std::size_t pos = s;
      bool ok = true;
      for (std::size_t t = 1; t + 1 < order.size(); ++t) {
        ++pos;
        while (pos < n && w_[pos] != order[t]) ++pos;
        if (pos >= n) {
          ok = false;
          break;
        }
        marks.push_back(pos);
      }
      if (!ok) break;  // later starts cannot do better
      const std::size_t min_end = order.size() == 1 ? s : pos + 1;
      const std::size_t limit = best ? best->end : n;
      for (std::size_t e = min_end; e < limit; ++e) {
        if (w_[e] != last || !odd_counts(order, s, e)) continue;
        WLeg leg{s, e, marks};
        if (order.size() > 1) leg.marks.push_back(e);
        best = std::move(leg);
        break;
      }
    }
    return best;
  }

  const std::vector<BlockId>& w_;
  std::vector<std::vector<std::uint16_t>> prefix_;
};

void check_cap(const Word& w, const WSearchOptions& opt) {
  if (!opt.override_cap && w.size() > opt.length_cap)
    throw LengthCapError("word of length " + std::to_string(w.size()) + " exceeds the W-search cap of " +
                         std::to_string(opt.length_cap) + " (use the override flag)");
}

std::optional<WWitness> search(const Word& w, std::size_t k) {
  const auto& v = w.letters();
  const std::size_t n = v.size();
  if (k == 0 || 4 * k > n) return std::nullopt;

  std::vector<std::size_t> counts(w.num_letters(), 0);
  for (BlockId b : v) ++counts[b];
  std::vector<BlockId> candidates;
  for (BlockId b = 0; b < counts.size(); ++b)
    if (counts[b] >= 4) candidates.push_back(b);
  if (candidates.size() < k) return std::nullopt;

  for (std::size_t r = 0; r < n; ++r) {
    if (counts[v[r]] < 4) continue;
    const auto rw = rotate_raw(v, r);
    LegFinder finder(rw, w.num_letters());
    std::vector<BlockId> tuple{rw[0]};
    std::vector<bool> used(w.num_letters(), false);
    used[rw[0]] = true;

    std::optional<WWitness> result;
    auto dfs = [&](auto&& self) -> bool {
      if (tuple.size() == k) {
        if (auto legs = finder.find(tuple)) {
          result = WWitness{r, tuple, std::move(*legs)};
          return true;
        }
        return false;
      }
      for (BlockId c : candidates) {
        if (used[c]) continue;
        used[c] = true;
        tuple.push_back(c);
        const bool hit = self(self);
        tuple.pop_back();
        used[c] = false;
        if (hit) return true;
      }
      return false;
    };
    if (dfs(dfs)) return result;
  }
  return std::nullopt;
}

}  // namespace

bool validate_witness(const Word& w, const WWitness& wit, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t n = w.size();
  const std::size_t k = wit.letters.size();
  if (k == 0) return fail("no letters");
  if (wit.rotation >= std::max<std::size_t>(n, 1)) return fail("rotation out of range");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (wit.letters[i] == wit.letters[j]) return fail("letters not distinct");
  const auto rw = rotate_raw(w.letters(), wit.rotation);

  std::size_t prev_end = 0;
  for (int leg = 0; leg < 4; ++leg) {
    const WLeg& L = wit.legs[leg];
    if (L.begin > L.end || L.end >= n) return fail("leg interval out of range");
    if (leg > 0 && L.begin <= prev_end) return fail("legs overlap or are out of order");
    prev_end = L.end;
    if (L.marks.size() != k) return fail("leg has wrong number of marks");
    if (L.marks.front() != L.begin || L.marks.back() != L.end) return fail("leg does not start and end on marks");
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t idx = (leg % 2 == 0) ? t : k - 1 - t;
      if (t > 0 && L.marks[t] <= L.marks[t - 1]) return fail("marks not increasing");
      if (rw[L.marks[t]] != wit.letters[idx]) return fail("mark on wrong letter");
    }
    for (BlockId a : wit.letters) {
      std::size_t c = 0;
      for (std::size_t i = L.begin; i <= L.end; ++i) c += rw[i] == a;
      if (c % 2 == 0) return fail("letter " + block_letter(a) + " occurs evenly in leg " + std::to_string(leg));
    }
  }
  return true;
}

std::string describe(const Word& w, const WWitness& wit) {
  const auto rw = rotate_raw(w.letters(), wit.rotation);
  auto span = [&](std::size_t b, std::size_t e) {
    std::string s;
    for (std::size_t i = b; i < e; ++i) s += block_letter(rw[i]);
    return s.empty() ? std::string("-") : s;
  };
  const auto& L = wit.legs;
  std::ostringstream os;
  os << "rotation " << wit.rotation << ", letters ";
  for (BlockId a : wit.letters) os << block_letter(a);
  os << "\n  Y1=" << span(0, L[0].begin) << " Sa=" << span(L[0].begin, L[0].end + 1)
     << " Xa=" << span(L[0].end + 1, L[1].begin) << " Sb=" << span(L[1].begin, L[1].end + 1)
     << " Y2=" << span(L[1].end + 1, L[2].begin) << " Sg=" << span(L[2].begin, L[2].end + 1)
     << " Xg=" << span(L[2].end + 1, L[3].begin) << " Sd=" << span(L[3].begin, L[3].end + 1)
     << " Y3=" << span(L[3].end + 1, rw.size());
  return os.str();
}

std::optional<WWitness> contains_w(const Word& w, std::size_t k, const WSearchOptions& opt) {
  if (k == 0) throw std::invalid_argument("contains_w: depth must be at least 1");
  check_cap(w, opt);
  return search(w, k);
}

WDepth wdepth(const Word& w, const WSearchOptions& opt) {
  check_cap(w, opt);
  std::vector<std::size_t> counts(w.num_letters(), 0);
  for (BlockId b : w.letters()) ++counts[b];
  const auto big = static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c >= 4; }));
  for (std::size_t k = std::min(big, w.size() / 4); k >= 1; --k)
    if (auto wit = search(w, k)) return {k, std::move(wit)};
  return {};
}

}  // namespace pcat
