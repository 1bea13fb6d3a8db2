#pragma once

#include "gwtrop/bigint.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gwtrop {

// Polynomial in one variable with rational coefficients, constant term first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return c_; }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational operator()(const Rational& x) const;

    std::string str(const std::string& var = "d") const;
    nlohmann::json to_json() const; // array of rational strings

    // Unique polynomial of degree < xs.size() through the points.
    static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace gwtrop
