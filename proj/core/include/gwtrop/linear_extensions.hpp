#pragma once

#include "gwtrop/bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gwtrop {

// Poset made of a chain of `whites` elements plus labeled extra elements,
// each comparable only to the chain: element b must sit in a slot s with
// lo <= s <= hi, where slot s lies between chain elements s and s + 1
// (slot 0 before the first, slot `whites` after the last). Returns the
// number of linear extensions.
BigInt count_chain_extensions(std::int64_t whites, const std::vector<std::pair<std::int64_t, std::int64_t>>& slots);

} // namespace gwtrop
