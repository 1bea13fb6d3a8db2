#pragma once

#include "gwtrop/gw_ring.hpp"
#include "gwtrop/lattice_geometry.hpp"
#include "gwtrop/multiplicities.hpp"

namespace gwtrop {

inline bool value_is_zero(const GWElement& v) { return v.is_zero(); }
inline bool value_is_zero(const BigInt& v) { return v == 0; }

// Weight policies shared by the counting engines. Each maps the local pieces
// of a count (triangles, edges of weight w) into a commutative ring.

struct ArithmeticWeights {
    using value_type = GWElement;
    static constexpr const char* name = "arithmetic";
    static value_type zero() { return GWElement::zero(); }
    static value_type one() { return GWElement::one(); }
    static value_type from_int(const BigInt& n) { return GWElement::one() * n; }
    static value_type triangle(const LatticeTriangle& t) { return triangle_mult(t); }
    static value_type edge(std::int64_t w) { return edge_factor(w); }
};

struct ComplexWeights {
    using value_type = BigInt;
    static constexpr const char* name = "complex";
    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type from_int(const BigInt& n) { return n; }
    static value_type triangle(const LatticeTriangle& t) { return big(t.normalized_area()); }
    static value_type edge(std::int64_t w) { return big(w); }
};

struct RealWeights {
    using value_type = BigInt;
    static constexpr const char* name = "real";
    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type from_int(const BigInt& n) { return n; }
    static value_type triangle(const LatticeTriangle& t)
    {
        if (t.normalized_area() % 2 == 0)
            return 0;
        return t.interior_points() % 2 == 0 ? 1 : -1;
    }
    static value_type edge(std::int64_t w) { return w % 2 == 0 ? 0 : 1; }
};

} // namespace gwtrop
