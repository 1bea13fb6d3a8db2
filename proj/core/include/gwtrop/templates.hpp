#pragma once

#include "gwtrop/floor_diagrams.hpp"
#include "gwtrop/gw_ring.hpp"
#include "gwtrop/polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gwtrop {

struct Template {
    std::int64_t length = 1; // vertices 0..length
    std::vector<FloorEdge> edges; // sorted; source/target are template vertices

    bool valid() const;
    friend bool operator==(const Template&, const Template&) = default;
    friend auto operator<=>(const Template&, const Template&) = default;
};

std::int64_t template_cogenus(const Template& t);
std::vector<Template> enumerate_templates(std::int64_t delta);
GWElement template_mult(const Template& t);

struct PlacementData {
    std::int64_t k_min = 0;
    std::int64_t k_max = -1; // no valid start when k_max < k_min
    std::map<std::int64_t, BigInt> nu; // k -> markings of the spanned subgraph
};

PlacementData template_placement_data(const Template& t, std::int64_t d);
BigInt template_nu(const Template& t, std::int64_t d, std::int64_t k);

GWElement severi_by_templates(std::int64_t d, std::int64_t delta);
BigInt severi_by_templates_complex(std::int64_t d, std::int64_t delta);

struct NodePolynomialFit {
    Polynomial P;       // coefficient of H
    Polynomial Q;       // coefficient of <1>
    std::int64_t d_threshold = 1;
    std::int64_t d_start = 1;
    std::vector<std::int64_t> held_out;
};

NodePolynomialFit fit_node_polynomial(std::int64_t delta, std::int64_t max_delta = 4);

// Splits pH + q<1> into (p, q); throws if other classes occur.
std::pair<BigInt, BigInt> hyperbolic_and_unit_parts(const GWElement& x);

} // namespace gwtrop
