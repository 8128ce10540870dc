#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gg/oracle.hpp"
#include "gg/slg1.hpp"
#include "gg/slg2.hpp"

namespace gg::gen {

using Rng = std::mt19937_64;

// Exactly `rules` rules; the start is the last id.
Slg1 random_slp1(Rng& rng, std::size_t rules, Code sigma, std::uint64_t max_len);
// Mixed arity in [0, max_arity]; some rules may derive the empty string.
Slg1 random_slg1(Rng& rng, std::size_t rules, std::size_t max_arity, Code sigma, std::uint64_t max_len);
Slg2 random_slp2(Rng& rng, std::size_t rules, Code sigma, std::uint64_t max_cells);
Slg2 random_slg2(Rng& rng, std::size_t rules, std::size_t max_arity, Code sigma, std::uint64_t max_cells);

// leaves >= 1; right-nested when right is set.
Slg1 comb1(std::size_t leaves, Code sigma, bool right);
Slg1 fibonacci1(std::size_t k);
Slg1 balanced1(std::size_t depth, Code sigma);
Slg2 comb2(std::size_t leaves, Code sigma, Kind2 kind, bool right);
// Alternating H/V doubling: 2^ceil(depth/2) x 2^floor(depth/2).
Slg2 balanced2(std::size_t depth, Code sigma);
Slg2 fibonacci2(std::size_t k);

std::vector<Slg1> corpus1(std::uint64_t seed, std::size_t count);
std::vector<Slg2> corpus2(std::uint64_t seed, std::size_t count);

std::vector<Code> random_string(Rng& rng, std::size_t n, Code sigma);
std::vector<BitVector> random_ov(Rng& rng, std::size_t n, std::size_t d, double density = 0.5);

}  // namespace gg::gen
