#pragma once

#include <cstdint>

#include "opetope/network.hpp"

namespace opetope {

// A pseudo-random opetope (a sequence of reduced opetopic networks) of
// dimension at most `max_dim` whose levels hold at most `size_budget` edges
// in total. Uses std::mt19937_64 seeded with `seed` and rejection-sampled
// bounded integers, so output is identical across platforms.
OpetopicSequence random_opetope(std::uint64_t seed, int max_dim, int size_budget);

}  // namespace opetope
