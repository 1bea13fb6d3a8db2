#pragma once

#include "gwtrop/multiplicities.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gwtrop::cli {

enum class Format { Plain, Json, Csv };

struct RunConfig {
    std::string command;
    std::string method = "ch";
    std::optional<std::int64_t> d;
    std::optional<std::int64_t> g;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> a;
    std::vector<std::int64_t> w_left;
    std::vector<std::int64_t> w_right;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::int64_t d_min = 1;
    std::int64_t d_max = 4;
    bool d_max_given = false;
    std::uint64_t seed = 1;
    std::int64_t trials = 1000;
    Format format = Format::Plain;
    std::string cache_path; // empty: no cache
};

// Balanced 4-valent star with pairwise non-parallel edges, coordinates in [-bound, bound].
VertexStar random_star(std::mt19937_64& rng, std::int64_t bound);

int cmd_count(const RunConfig& cfg, std::ostream& out);
int cmd_crosscheck(const RunConfig& cfg, std::ostream& out);
int cmd_nodepoly(const RunConfig& cfg, std::ostream& out);
int cmd_wall(const RunConfig& cfg, std::ostream& out);

// Full command line including the program name. Errors go to err with exit code 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gwtrop::cli
