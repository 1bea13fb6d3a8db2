#pragma once

#include "gwtrop/bigint.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gwtrop {

// Square-free integers are ordered by absolute value, negative before positive.
struct ClassOrder {
    bool operator()(std::int64_t a, std::int64_t b) const
    {
        std::int64_t ua = a < 0 ? -a : a;
        std::int64_t ub = b < 0 ? -b : b;
        if (ua != ub)
            return ua < ub;
        return a < b;
    }
};

struct SquareClass {
    std::int64_t rep = 1;

    friend bool operator==(SquareClass, SquareClass) = default;
};

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

SquareClass square_free_reduce(std::int64_t n);
SquareClass square_class_product(SquareClass a, SquareClass b);

// Element of GW(Q), stored as a finite Z-combination of square classes.
class GWElement {
public:
    using Terms = std::map<std::int64_t, BigInt, ClassOrder>;

    GWElement() = default;

    static GWElement zero() { return {}; }
    static GWElement one() { return form(1); }
    static GWElement form(std::int64_t a, const BigInt& mult = 1);
    static GWElement hyperbolic(const BigInt& n);

    // Keeps the given multiplicities verbatim (after square-free reduction of
    // the keys and pruning of zeros).
    static GWElement from_association(const std::vector<std::pair<std::int64_t, BigInt>>& terms);

    const Terms& terms() const { return terms_; }
    BigInt mult(std::int64_t rep) const;
    bool is_zero() const { return terms_.empty(); }

    BigInt rank() const;
    BigInt signature() const;

    // Number of hyperbolic pairs extracted by render(), and what remains.
    std::pair<BigInt, Terms> hyperbolic_split() const;

    GWElement operator-() const;
    GWElement& operator+=(const GWElement& o);
    GWElement& operator-=(const GWElement& o);
    GWElement& operator*=(const GWElement& o);
    GWElement& operator*=(const BigInt& s);

    friend GWElement operator+(GWElement a, const GWElement& b) { return a += b; }
    friend GWElement operator-(GWElement a, const GWElement& b) { return a -= b; }
    friend GWElement operator*(GWElement a, const GWElement& b) { return a *= b; }
    friend GWElement operator*(GWElement a, const BigInt& s) { return a *= s; }
    friend GWElement operator*(const BigInt& s, GWElement a) { return a *= s; }

    friend bool operator==(const GWElement& a, const GWElement& b);
    friend bool operator!=(const GWElement& a, const GWElement& b) { return !(a == b); }

    bool same_terms(const GWElement& o) const;

private:
    void add_term(std::int64_t rep, const BigInt& m);
    void normalize();

    Terms terms_;
};

GWElement gw_add(const GWElement& x, const GWElement& y);
GWElement gw_mul(const GWElement& x, const GWElement& y);
GWElement hyperbolic(const BigInt& n);
BigInt rank(const GWElement& x);
BigInt signature(const GWElement& x);

// Place of Q: the real place or a prime.
class Place {
public:
    static Place real() { return Place(0); }
    static Place prime(std::int64_t p);

    bool is_real() const { return p_ == 0; }
    std::int64_t p() const { return p_; }

    friend bool operator==(Place, Place) = default;

private:
    explicit Place(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

int hilbert_symbol(std::int64_t a, std::int64_t b, Place place);

bool gw_equal(const GWElement& x, const GWElement& y);

std::string render(const GWElement& x);

// ((w-1)/2)H + <w> for odd w, (w/2)H for even w.
GWElement edge_factor(std::int64_t w);

} // namespace gwtrop
