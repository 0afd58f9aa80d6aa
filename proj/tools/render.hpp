#pragma once

#include <string>

#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat::render {

/// Points on two rows, each block drawn as a comb of vertical strokes.
std::string partition_svg(const Partition& p);

/// The path as a polyline, level 0 dashed.
std::string dyck_svg(const DyckPath& path);

}  // namespace pcat::render
