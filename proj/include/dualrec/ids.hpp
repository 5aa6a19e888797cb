#pragma once

#include <cstdint>

namespace dualrec {

using UserId = std::int64_t;
using ItemId = std::int64_t;
using CreatorId = std::int64_t;

// Discrete simulation tick; one day per tick.
using Day = std::int32_t;

}  // namespace dualrec
