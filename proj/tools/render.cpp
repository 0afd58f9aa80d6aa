#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace pcat::render {

namespace {

constexpr int kStep = 30;
constexpr int kMargin = 20;

const char* colour(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[i % 8];
}

}  // namespace

std::string partition_svg(const Partition& p) {
  const std::size_t k = p.upper_arity(), l = p.lower_arity(), nb = p.num_blocks();
  const int columns = static_cast<int>(std::max<std::size_t>({k, l, 1}));
  const int tiers = static_cast<int>(nb) + 1;
  const int height = 2 * kMargin + 2 * tiers * 8 + 40;
  const int width = 2 * kMargin + (columns - 1) * kStep;
  const int top = kMargin, bottom = height - kMargin;
  auto x = [](std::size_t i) { return kMargin + static_cast<int>(i) * kStep; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<std::size_t> up, lo;
    for (std::size_t i = 0; i < k; ++i)
      if (p.upper(i) == b) up.push_back(i);
    for (std::size_t j = 0; j < l; ++j)
      if (p.lower(j) == b) lo.push_back(j);
    const int yu = top + 8 * static_cast<int>(b + 1);
    const int yl = bottom - 8 * static_cast<int>(b + 1);
    os << " <g stroke=\"" << colour(b) << "\" stroke-width=\"2\" fill=\"none\">\n";
    for (std::size_t i : up) os << "  <line x1=\"" << x(i) << "\" y1=\"" << top << "\" x2=\"" << x(i) << "\" y2=\"" << yu << "\"/>\n";
    for (std::size_t j : lo) os << "  <line x1=\"" << x(j) << "\" y1=\"" << bottom << "\" x2=\"" << x(j) << "\" y2=\"" << yl << "\"/>\n";
    if (up.size() > 1)
      os << "  <line x1=\"" << x(up.front()) << "\" y1=\"" << yu << "\" x2=\"" << x(up.back()) << "\" y2=\"" << yu << "\"/>\n";
    if (lo.size() > 1)
      os << "  <line x1=\"" << x(lo.front()) << "\" y1=\"" << yl << "\" x2=\"" << x(lo.back()) << "\" y2=\"" << yl << "\"/>\n";
    if (!up.empty() && !lo.empty())
      os << "  <line x1=\"" << x(up.front()) << "\" y1=\"" << yu << "\" x2=\"" << x(lo.front()) << "\" y2=\"" << yl << "\"/>\n";
    os << " </g>\n";
  }
  for (std::size_t i = 0; i < k; ++i) os << " <circle cx=\"" << x(i) << "\" cy=\"" << top << "\" r=\"3\"/>\n";
  for (std::size_t j = 0; j < l; ++j) os << " <circle cx=\"" << x(j) << "\" cy=\"" << bottom << "\" r=\"3\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string dyck_svg(const DyckPath& path) {
  const auto [lo, hi] = std::minmax_element(path.levels.begin(), path.levels.end());
  const int unit = 12;
  const int width = 2 * kMargin + static_cast<int>(path.steps.size()) * unit;
  const int height = 2 * kMargin + (*hi - *lo) * unit;
  auto y = [&](int level) { return kMargin + (*hi - level) * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << " <line x1=\"" << kMargin << "\" y1=\"" << y(0) << "\" x2=\"" << width - kMargin << "\" y2=\"" << y(0)
     << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  os << " <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < path.levels.size(); ++i)
    os << (i ? " " : "") << kMargin + static_cast<int>(i) * unit << "," << y(path.levels[i]);
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace pcat::render
