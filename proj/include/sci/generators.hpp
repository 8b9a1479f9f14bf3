#pragma once

#include <cstdint>

#include "sci/dh.hpp"
#include "sci/graph.hpp"
#include "sci/halin.hpp"

namespace sci {

enum class Family {
    cycle,
    wheel,
    double_wheel,
    necklace,
    halin,
    cubic_halin,
    tree,
    dh,
    cograph,
    mop,
};

struct GenSpec {
    Family family = Family::cycle;
    int n = 0;             // main size parameter (rim size, vertex count, ...)
    int dx = 3, dy = 3;    // double wheel degrees
    int max_degree = 6;    // cap for random halin trees
    std::uint64_t seed = 0;
    // dh step mix; must sum to ~1
    double p_pendant = 1.0 / 3, p_false = 1.0 / 3, p_true = 1.0 / 3;
};

struct Generated {
    Graph graph;
    std::optional<HalinAnnotation> halin;
    std::optional<PruningSequence> dh_sequence;
};

// Deterministic in the spec: identical spec gives byte-identical output.
Generated generate(const GenSpec& spec);

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

}  // namespace sci
