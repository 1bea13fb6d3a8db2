#include "gwtrop/polynomial.hpp"

namespace gwtrop {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::string Polynomial::str(const std::string& var) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        bool unit = a == 1;
        if (!unit || i == 0) {
            if (a.get_den() == 1)
                s += a.get_num().get_str();
            else
                s += "(" + a.get_str() + ")";
        }
        if (i >= 1)
            s += var;
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

nlohmann::json Polynomial::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : c_)
        j.push_back(c.get_str());
    return j;
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw InvalidArgument("interpolate needs equally many, nonzero, x and y values");
    const std::size_t n = xs.size();
    // Newton divided differences
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            Rational den = xs[i] - xs[i - j];
            if (den == 0)
                throw InvalidArgument("interpolate: repeated x value");
            coef[i] = (coef[i] - coef[i - 1]) / den;
        }
    }
    // expand the Newton form into monomials
    std::vector<Rational> result(n, 0);
    std::vector<Rational> basis{1}; // product of (x - xs[m]) for m < i
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < basis.size(); ++m)
            result[m] += coef[i] * basis[m];
        std::vector<Rational> next(basis.size() + 1, 0);
        for (std::size_t m = 0; m < basis.size(); ++m) {
            next[m + 1] += basis[m];
            next[m] -= basis[m] * xs[i];
        }
        basis = std::move(next);
    }
    return Polynomial(result);
}

} // namespace gwtrop
