#include "gwtrop/templates.hpp"

#include "gwtrop/linear_extensions.hpp"
#include "gwtrop/weights.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace gwtrop {

namespace {

std::int64_t edge_cogenus(const FloorEdge& e) { return (e.target - e.source) * e.weight - 1; }

// weight of template edges passing over the gap between vertices p and p + 1
std::vector<std::int64_t> gap_weights(const Template& t)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(t.length), 0);
    for (const auto& e : t.edges) {
        for (std::int64_t p = e.source; p < e.target; ++p)
            c[static_cast<std::size_t>(p)] += e.weight;
    }
    return c;
}

struct NuCache {
    std::mutex mu;
    std::map<std::tuple<Template, std::int64_t, std::int64_t>, BigInt> values;
};

NuCache& nu_cache()
{
    static NuCache c;
    return c;
}

BigInt compute_nu(const Template& t, std::int64_t d, std::int64_t k)
{
    const auto c = gap_weights(t);
    std::vector<std::pair<std::int64_t, std::int64_t>> slots;
    std::map<FloorEdge, std::int64_t> multiplicity;
    for (const auto& e : t.edges) {
        slots.emplace_back(e.source + 1, e.target);
        ++multiplicity[e];
    }
    BigInt aut = 1;
    for (const auto& [e, m] : multiplicity)
        aut *= factorial(m);
    for (std::int64_t p = 0; p < t.length; ++p) {
        const std::int64_t s = d - k - p - c[static_cast<std::size_t>(p)];
        if (s < 0)
            return 0;
        for (std::int64_t i = 0; i < s; ++i)
            slots.emplace_back(p + 1, p + 1);
        aut *= factorial(s);
    }
    BigInt ext = count_chain_extensions(t.length + 1, slots);
    if (ext % aut != 0)
        throw std::logic_error("template markings: automorphisms do not divide extensions");
    return ext / aut;
}

template <class W>
typename W::value_type squared_mult(const Template& t)
{
    typename W::value_type m = W::one();
    for (const auto& e : t.edges) {
        auto f = W::edge(e.weight);
        m = m * f * f;
    }
    return m;
}

template <class W>
typename W::value_type severi_templates_with(std::int64_t d, std::int64_t delta)
{
    if (d < 1 || delta < 0)
        throw InvalidArgument("severi_by_templates needs d >= 1 and delta >= 0");
    if (delta == 0)
        return W::one();
    const auto templates = enumerate_templates(delta);
    std::vector<PlacementData> placement;
    std::vector<typename W::value_type> mults;
    for (const auto& t : templates) {
        placement.push_back(template_placement_data(t, d));
        mults.push_back(squared_mult<W>(t));
    }
    typename W::value_type total = W::zero();
    std::vector<std::size_t> seq;
    // sum over start indices of prod nu, for the current sequence
    auto starts = [&](auto&& self, std::size_t j, std::int64_t min_k) -> BigInt {
        if (j == seq.size())
            return 1;
        const auto& pd = placement[seq[j]];
        BigInt s = 0;
        for (std::int64_t k = std::max(min_k, pd.k_min); k <= pd.k_max; ++k) {
            const BigInt& nu = pd.nu.at(k);
            if (nu == 0)
                continue;
            s += nu * self(self, j + 1, k + templates[seq[j]].length);
        }
        return s;
    };
    auto sequences = [&](auto&& self, std::int64_t left) -> void {
        if (left == 0) {
            BigInt n = starts(starts, 0, 0);
            if (n == 0)
                return;
            typename W::value_type m = W::from_int(n);
            for (auto i : seq)
                m = m * mults[i];
            total += m;
            return;
        }
        for (std::size_t i = 0; i < templates.size(); ++i) {
            const std::int64_t c = template_cogenus(templates[i]);
            if (c > left)
                continue;
            seq.push_back(i);
            self(self, left - c);
            seq.pop_back();
        }
    };
    sequences(sequences, delta);
    return total;
}

} // namespace

bool Template::valid() const
{
    if (length < 1 || edges.empty())
        return false;
    for (const auto& e : edges) {
        if (e.source < 0 || e.target > length || e.source >= e.target || e.weight < 1)
            return false;
        if (e.target == e.source + 1 && e.weight == 1)
            return false;
    }
    for (std::int64_t i = 1; i < length; ++i) {
        bool covered = std::any_of(edges.begin(), edges.end(),
                                   [&](const FloorEdge& e) { return e.source < i && i < e.target; });
        if (!covered)
            return false;
    }
    return true;
}

std::int64_t template_cogenus(const Template& t)
{
    std::int64_t c = 0;
    for (const auto& e : t.edges)
        c += edge_cogenus(e);
    return c;
}

std::vector<Template> enumerate_templates(std::int64_t delta)
{
    if (delta < 1)
        throw InvalidArgument("enumerate_templates needs delta >= 1");
    std::vector<Template> out;
    for (std::int64_t l = 1; l <= delta + 1; ++l) {
        std::vector<FloorEdge> types;
        for (std::int64_t i = 0; i < l; ++i) {
            for (std::int64_t j = i + 1; j <= l; ++j) {
                for (std::int64_t w = 1; (j - i) * w - 1 <= delta; ++w) {
                    if ((j - i) * w - 1 >= 1)
                        types.push_back({i, j, w});
                }
            }
        }
        std::vector<FloorEdge> cur;
        auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
            if (i == types.size()) {
                Template t{l, cur};
                if (t.valid())
                    out.push_back(std::move(t));
                return;
            }
            const std::int64_t c = edge_cogenus(types[i]);
            std::size_t pushed = 0;
            for (std::int64_t n = 0;; ++n) {
                self(self, i + 1, left - n * c);
                if ((n + 1) * c > left)
                    break;
                cur.push_back(types[i]);
                ++pushed;
            }
            cur.resize(cur.size() - pushed);
        };
        rec(rec, 0, delta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GWElement template_mult(const Template& t)
{
    GWElement m = GWElement::one();
    for (const auto& e : t.edges)
        m *= edge_factor(e.weight);
    return m;
}

BigInt template_nu(const Template& t, std::int64_t d, std::int64_t k)
{
    auto key = std::make_tuple(t, d, k);
    auto& cache = nu_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find(key);
        if (it != cache.values.end())
            return it->second;
    }
    BigInt v = compute_nu(t, d, k);
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.values.emplace(std::move(key), v);
    return v;
}

PlacementData template_placement_data(const Template& t, std::int64_t d)
{
    if (!t.valid())
        throw InvalidArgument("template_placement_data: invalid template");
    PlacementData pd;
    pd.k_min = 0;
    for (const auto& e : t.edges) {
        if (e.source == 0 && e.weight > 1)
            pd.k_min = 1;
    }
    const auto c = gap_weights(t);
    pd.k_max = d - t.length;
    for (std::int64_t p = 0; p < t.length; ++p)
        pd.k_max = std::min(pd.k_max, d - p - c[static_cast<std::size_t>(p)]);
    for (std::int64_t k = pd.k_min; k <= pd.k_max; ++k)
        pd.nu[k] = template_nu(t, d, k);
    return pd;
}

std::pair<BigInt, BigInt> hyperbolic_and_unit_parts(const GWElement& x)
{
    for (const auto& [rep, m] : x.terms()) {
        if (rep != 1 && rep != -1)
            throw std::logic_error("expected a form pH + q<1>, got " + render(x));
    }
    BigInt p = x.mult(-1);
    return {p, x.mult(1) - p};
}

GWElement severi_by_templates(std::int64_t d, std::int64_t delta)
{
    GWElement r = severi_templates_with<ArithmeticWeights>(d, delta);
    hyperbolic_and_unit_parts(r);
    return r;
}

BigInt severi_by_templates_complex(std::int64_t d, std::int64_t delta)
{
    return severi_templates_with<ComplexWeights>(d, delta);
}

NodePolynomialFit fit_node_polynomial(std::int64_t delta, std::int64_t max_delta)
{
    if (delta < 0)
        throw InvalidArgument("fit_node_polynomial needs delta >= 0");
    if (delta > max_delta)
        throw InvalidArgument("fit_node_polynomial: delta " + std::to_string(delta) + " exceeds the configured maximum " +
                              std::to_string(max_delta));
    const std::int64_t samples = 2 * delta + 1;
    const std::int64_t held = 3;
    std::map<std::int64_t, std::pair<BigInt, BigInt>> values;
    auto value = [&](std::int64_t d) {
        auto it = values.find(d);
        if (it == values.end())
            it = values.emplace(d, hyperbolic_and_unit_parts(severi_by_templates(d, delta))).first;
        return it->second;
    };
    std::ostringstream diag;
    for (std::int64_t shift = 0; shift <= 3; ++shift) {
        const std::int64_t start = delta + 1 + shift;
        std::vector<Rational> xs, ps, qs;
        for (std::int64_t d = start; d < start + samples; ++d) {
            auto [p, q] = value(d);
            xs.emplace_back(big(d));
            ps.emplace_back(p);
            qs.emplace_back(q);
        }
        NodePolynomialFit fit;
        fit.P = Polynomial::interpolate(xs, ps);
        fit.Q = Polynomial::interpolate(xs, qs);
        fit.d_start = start;
        bool ok = true;
        for (std::int64_t d = start + samples; d < start + samples + held; ++d) {
            auto [p, q] = value(d);
            fit.held_out.push_back(d);
            if (fit.P(Rational(big(d))) != Rational(p) || fit.Q(Rational(big(d))) != Rational(q)) {
                diag << "start " << start << ": held-out mismatch at d=" << d << "; ";
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        const int want = static_cast<int>(2 * delta);
        const bool p_ok = fit.P.degree() == want || (delta == 0 && fit.P.degree() == -1);
        if (!p_ok || fit.Q.degree() != want) {
            diag << "start " << start << ": degrees (" << fit.P.degree() << ", " << fit.Q.degree() << ") != " << want
                 << "; ";
            continue;
        }
        fit.d_threshold = start;
        for (std::int64_t d = start - 1; d >= 1; --d) {
            auto [p, q] = value(d);
            if (fit.P(Rational(big(d))) != Rational(p) || fit.Q(Rational(big(d))) != Rational(q))
                break;
            fit.d_threshold = d;
        }
        return fit;
    }
    throw FittingFailure("fit_node_polynomial(" + std::to_string(delta) + ") failed: " + diag.str());
}

} // namespace gwtrop
