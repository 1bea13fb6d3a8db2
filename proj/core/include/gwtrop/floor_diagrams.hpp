#pragma once

#include "gwtrop/gw_ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace gwtrop {

struct FloorEdge {
    std::int64_t source = 1; // source < target
    std::int64_t target = 2;
    std::int64_t weight = 1;

    friend bool operator==(const FloorEdge&, const FloorEdge&) = default;
    friend auto operator<=>(const FloorEdge&, const FloorEdge&) = default;
};

struct FloorDiagram {
    std::int64_t k = 1;
    std::int64_t a = 1; // floors 1..a
    std::vector<FloorEdge> edges; // sorted

    std::int64_t divergence(std::int64_t v) const;
    std::int64_t components() const;
    bool connected() const { return components() == 1; }
    // first Betti number minus (components - 1), i.e. sum of genera - r + 1
    std::int64_t genus() const { return static_cast<std::int64_t>(edges.size()) - a + 1; }

    friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

// End edges attached to each floor: left[v - 1] lists the weights of left
// ends ending at floor v, right[v - 1] those of right ends starting there.
struct EndAttachment {
    std::vector<std::vector<std::int64_t>> left;
    std::vector<std::vector<std::int64_t>> right;

    friend bool operator==(const EndAttachment&, const EndAttachment&) = default;
};

// A floor diagram with its end edges attached, i.e. the graph of a marking
// without the total order.
struct AttachedDiagram {
    FloorDiagram diagram;
    EndAttachment ends;

    std::int64_t white_count() const { return diagram.a; }
    std::int64_t black_count() const;
    // Number of linear extensions divided by the automorphisms fixing the
    // white vertices; the number of inequivalent markings with these ends.
    BigInt markings() const;
};

// Diagrams on floors 1..a with div(v) <= k everywhere and the given genus.
std::vector<FloorDiagram> enumerate_diagrams(std::int64_t k, std::int64_t a, std::int64_t g, bool connected);

// All (diagram, end attachment) pairs of genus g for the degree
// Delta_k(w_right, w_left, a), i.e. every white vertex of divergence k.
std::vector<AttachedDiagram> enumerate_attached(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                                                const std::vector<std::int64_t>& w_right, std::int64_t g,
                                                bool connected = false);

BigInt count_markings(const FloorDiagram& d, const std::vector<std::int64_t>& w_left,
                      const std::vector<std::int64_t>& w_right);

// Product of the edge factors over the edges of d.
GWElement diagram_mult(const FloorDiagram& d);
// Product over the edges of the marked graph: bounded edges twice, ends once.
GWElement marked_mult(const AttachedDiagram& m);
BigInt marked_complex_mult(const AttachedDiagram& m);
BigInt marked_real_mult(const AttachedDiagram& m);

GWElement floor_count(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                      const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected = false);
BigInt floor_count_complex(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                           const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected = false);
BigInt floor_count_real(std::int64_t k, std::int64_t a, const std::vector<std::int64_t>& w_left,
                        const std::vector<std::int64_t>& w_right, std::int64_t g, bool connected = false);

// Count of possibly reducible degree-d curves with delta nodes.
GWElement severi_count(std::int64_t d, std::int64_t delta);
BigInt severi_count_complex(std::int64_t d, std::int64_t delta);

// floor_count restricted to odd weights.
GWElement hirzebruch_function(std::int64_t k, std::int64_t a, std::int64_t g, const std::vector<std::int64_t>& w_left,
                              const std::vector<std::int64_t>& w_right);

nlohmann::json diagram_to_json(const FloorDiagram& d);
nlohmann::json attached_to_json(const AttachedDiagram& m);

} // namespace gwtrop
