#include "gwtrop/floor_diagrams.hpp"
#include "gwtrop/templates.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace gwtrop;

namespace {

GWElement f(std::int64_t a, long m = 1) { return GWElement::form(a, m); }

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

// Every edge multiset on 0..l with total cogenus at most delta, no unit edge
// of length one, and every interior vertex strictly covered.
std::set<Template> brute_templates(std::int64_t delta)
{
    std::set<Template> out;
    for (std::int64_t l = 1; l <= delta + 1; ++l) {
        std::vector<FloorEdge> types;
        for (std::int64_t i = 0; i <= l; ++i)
            for (std::int64_t j = i + 1; j <= l; ++j)
                for (std::int64_t w = 1; w <= delta + 1; ++w)
                    if ((j - i) * w - 1 >= 1)
                        types.push_back({i, j, w});
        std::vector<FloorEdge> cur;
        auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
            if (!cur.empty()) {
                bool gap_free = true;
                for (std::int64_t v = 1; v < l; ++v) {
                    bool covered = false;
                    for (const auto& e : cur)
                        covered = covered || (e.source < v && v < e.target);
                    gap_free = gap_free && covered;
                }
                if (gap_free)
                    out.insert(Template{l, cur});
            }
            if (i == types.size())
                return;
            const std::int64_t c = (types[i].target - types[i].source) * types[i].weight - 1;
            if (c <= left) {
                cur.push_back(types[i]);
                self(self, i, left - c);
                cur.pop_back();
            }
            self(self, i + 1, left);
        };
        rec(rec, 0, delta);
    }
    return out;
}

// Markings of the template inside a degree-d diagram starting at floor k + 1.
std::size_t oracle_nu(const Template& t, std::int64_t d, std::int64_t k)
{
    std::vector<oracle::Black> blacks;
    std::vector<std::int64_t> gap(static_cast<std::size_t>(t.length), 0);
    int type = 0;
    std::set<FloorEdge> seen;
    for (const auto& e : t.edges) {
        if (seen.insert(e).second)
            ++type;
        blacks.push_back({type, e.source + 1, e.target});
        for (std::int64_t p = e.source; p < e.target; ++p)
            gap[static_cast<std::size_t>(p)] += e.weight;
    }
    for (std::int64_t p = 0; p < t.length; ++p) {
        const std::int64_t s = d - k - p - gap[static_cast<std::size_t>(p)];
        if (s < 0)
            return 0;
        for (std::int64_t i = 0; i < s; ++i)
            blacks.push_back({1000 + static_cast<int>(p), p + 1, p + 1});
    }
    return oracle::distinct_markings(t.length + 1, blacks);
}

} // namespace

TEST(Template, Validity)
{
    EXPECT_TRUE((Template{1, {{0, 1, 2}}}).valid());
    EXPECT_TRUE((Template{2, {{0, 2, 1}}}).valid());
    EXPECT_FALSE((Template{1, {{0, 1, 1}}}).valid());
    EXPECT_FALSE((Template{2, {{0, 1, 2}, {1, 2, 2}}}).valid());
    EXPECT_FALSE((Template{1, {}}).valid());
    EXPECT_EQ(template_cogenus(Template{3, {{0, 3, 1}, {1, 2, 2}}}), 3);
    EXPECT_THROW(template_placement_data(Template{1, {{0, 1, 1}}}, 4), InvalidArgument);
}

TEST(Template, EnumerationMatchesBruteForce)
{
    const std::vector<std::size_t> sizes{0, 2, 9, 35};
    for (std::int64_t delta = 1; delta <= 4; ++delta) {
        const auto got = enumerate_templates(delta);
        const std::set<Template> as_set(got.begin(), got.end());
        EXPECT_EQ(as_set.size(), got.size());
        EXPECT_EQ(as_set, brute_templates(delta)) << delta;
        if (delta <= 3) {
            EXPECT_EQ(got.size(), sizes[static_cast<std::size_t>(delta)]);
        }
        for (const auto& t : got) {
            EXPECT_TRUE(t.valid());
            EXPECT_LE(template_cogenus(t), delta);
            EXPECT_GE(template_cogenus(t), 1);
        }
    }
}

TEST(Template, Multiplicity)
{
    EXPECT_TRUE(gw_equal(template_mult(Template{1, {{0, 1, 2}}}), hyperbolic(1)));
    EXPECT_TRUE(gw_equal(template_mult(Template{2, {{0, 2, 1}}}), f(1)));
    EXPECT_TRUE(gw_equal(template_mult(Template{1, {{0, 1, 3}}}), hyperbolic(1) + f(3)));
    for (const auto& t : enumerate_templates(3)) {
        BigInt m = 1;
        for (const auto& e : t.edges)
            m *= e.weight;
        EXPECT_EQ(rank(template_mult(t)), m);
    }
}

TEST(Template, PlacementMatchesOracle)
{
    const PlacementData w2 = template_placement_data(Template{1, {{0, 1, 2}}}, 6);
    EXPECT_EQ(w2.k_min, 1);
    EXPECT_EQ(w2.k_max, 4);
    const PlacementData span = template_placement_data(Template{2, {{0, 2, 1}}}, 6);
    EXPECT_EQ(span.k_min, 0);
    EXPECT_EQ(span.k_max, 4);
    for (std::int64_t delta = 1; delta <= 3; ++delta) {
        for (const auto& t : enumerate_templates(delta)) {
            for (std::int64_t d = 2; d <= 6; ++d) {
                const PlacementData pd = template_placement_data(t, d);
                for (const auto& [k, nu] : pd.nu) {
                    ASSERT_EQ(nu, oracle_nu(t, d, k)) << "d=" << d << " k=" << k;
                    ASSERT_EQ(template_nu(t, d, k), nu);
                }
            }
        }
    }
}

TEST(Template, SeveriAgreesWithFloorDiagrams)
{
    for (std::int64_t d = 1; d <= 7; ++d) {
        for (std::int64_t delta = 0; delta <= 2; ++delta) {
            const GWElement x = severi_by_templates(d, delta);
            EXPECT_TRUE(gw_equal(x, severi_count(d, delta))) << d << "," << delta;
            EXPECT_EQ(severi_by_templates_complex(d, delta), rank(x));
        }
    }
    for (std::int64_t d = 3; d <= 10; ++d)
        EXPECT_EQ(rank(severi_by_templates(d, 1)), 3 * (d - 1) * (d - 1));
}

TEST(NodePolynomial, Fits)
{
    auto f0 = fit_node_polynomial(0);
    EXPECT_EQ(f0.P, Polynomial{});
    EXPECT_EQ(f0.Q, poly({1}));

    auto f1 = fit_node_polynomial(1);
    EXPECT_EQ(f1.P, poly({2, -3, 1}));
    EXPECT_EQ(f1.Q, poly({-1, 0, 1}));
    EXPECT_EQ(f1.held_out.size(), 3u);

    auto f2 = fit_node_polynomial(2);
    EXPECT_EQ(f2.P, poly({-18, 21, 4, -9, 2}));
    EXPECT_EQ(f2.Q, poly({3, Rational(-3, 2), -2, 0, Rational(1, 2)}));
    EXPECT_EQ(f2.d_threshold, 1);

    auto f3 = fit_node_polynomial(3);
    EXPECT_EQ(f3.P, poly({270, -214, Rational(-697, 6), Rational(213, 2), 3, Rational(-27, 2), Rational(13, 6)}));
    EXPECT_EQ(f3.Q, poly({-15, Rational(27, 2), Rational(10, 3), Rational(-3, 2), Rational(-3, 2), 0, Rational(1, 6)}));
    EXPECT_EQ(f3.d_threshold, 3);
    for (std::int64_t d = f3.d_threshold; d <= 9; ++d) {
        const auto [p, q] = hyperbolic_and_unit_parts(severi_count(d, 3));
        EXPECT_EQ(f3.P(Rational(d)), Rational(p)) << d;
        EXPECT_EQ(f3.Q(Rational(d)), Rational(q)) << d;
    }

    EXPECT_THROW(fit_node_polynomial(-1), InvalidArgument);
    EXPECT_THROW(fit_node_polynomial(5), InvalidArgument);
}

TEST(NodePolynomial, Parts)
{
    EXPECT_EQ(hyperbolic_and_unit_parts(hyperbolic(3) + f(1, 4)), std::make_pair(BigInt(3), BigInt(4)));
    EXPECT_EQ(hyperbolic_and_unit_parts(f(-1, 2)), std::make_pair(BigInt(2), BigInt(-2)));
    EXPECT_THROW(hyperbolic_and_unit_parts(f(3)), std::logic_error);
}
