#include "commands.hpp"

#include "gwtrop/caporaso_harris.hpp"
#include "gwtrop/floor_diagrams.hpp"
#include "gwtrop/json_io.hpp"
#include "gwtrop/lattice_path.hpp"
#include "gwtrop/templates.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

namespace gwtrop::cli {

namespace {

using nlohmann::json;

constexpr std::int64_t kMaxCrosscheckDegree = 6;
constexpr std::int64_t kMaxNodeDelta = 4;
const char* const kCsvHeader = "d,g_or_delta,method,rank,signature,display";

std::string plain_line(const GWElement& x)
{
    return render(x) + " (rank " + rank(x).get_str() + ", signature " + signature(x).get_str() + ")";
}

std::string csv_row(const std::string& d, const std::string& g_or_delta, const std::string& method, const GWElement& x)
{
    return d + "," + g_or_delta + "," + method + "," + rank(x).get_str() + "," + signature(x).get_str() + "," +
           render(x);
}

std::vector<std::int64_t> parse_weights(const std::string& s, const std::string& flag)
{
    std::vector<std::int64_t> out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long w = 0;
        try {
            w = std::stoll(item, &pos);
        } catch (const std::logic_error&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty() || w < 1)
            throw InvalidArgument(flag + ": expected comma-separated positive integers, got '" + s + "'");
        out.push_back(w);
    }
    return out;
}

std::int64_t required(const std::optional<std::int64_t>& v, const std::string& flag, const std::string& context)
{
    if (!v)
        throw InvalidArgument(context + " needs " + flag);
    return *v;
}

// Degree data shared by the lattice path and floor methods.
struct DegreeSpec {
    std::int64_t k = 1;
    std::int64_t a = 1;
    std::vector<std::int64_t> w_left;
    std::vector<std::int64_t> w_right;
    bool plane = false;
};

DegreeSpec degree_spec(const RunConfig& cfg)
{
    DegreeSpec s;
    const bool hirzebruch = cfg.k || cfg.a || !cfg.w_left.empty() || !cfg.w_right.empty();
    if (cfg.d && hirzebruch)
        throw InvalidArgument("give either --d or --k/--a/--wl/--wr, not both");
    if (cfg.d) {
        if (*cfg.d < 1)
            throw InvalidArgument("--d must be positive");
        s.a = *cfg.d;
        s.w_left.assign(static_cast<std::size_t>(*cfg.d), 1);
        s.plane = true;
        return s;
    }
    s.k = required(cfg.k, "--k", "count");
    s.a = required(cfg.a, "--a", "count");
    if (s.k < 0 || s.a < 1)
        throw InvalidArgument("need --k >= 0 and --a >= 1");
    s.w_left = cfg.w_left;
    s.w_right = cfg.w_right;
    return s;
}

LatticePolygon spec_polygon(const DegreeSpec& s)
{
    return dual_polygon(build_hirzebruch_fan(s.k, s.a, s.w_left, s.w_right));
}

std::int64_t resolve_genus(const RunConfig& cfg, std::int64_t g_max)
{
    if (cfg.g && cfg.delta)
        throw InvalidArgument("give either --g or --delta, not both");
    if (cfg.g)
        return *cfg.g;
    if (cfg.delta) {
        if (*cfg.delta < 0)
            throw InvalidArgument("--delta must be nonnegative");
        return g_max - *cfg.delta;
    }
    throw InvalidArgument("count needs --g or --delta");
}

json weights_json(const std::vector<std::int64_t>& w) { return json(w); }

void load_cache(const std::string& path, std::ostream& err)
{
    if (path.empty() || !std::filesystem::exists(path))
        return;
    try {
        std::ifstream in(path);
        ch_cache_merge_json(json::parse(in));
    } catch (const std::exception& e) {
        err << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    }
}

void save_cache(const std::string& path, std::ostream& err)
{
    if (path.empty())
        return;
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << ch_cache_to_json().dump() << "\n";
        if (!out) {
            err << "warning: could not write cache " << tmp << "\n";
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        err << "warning: could not replace cache " << path << ": " << ec.message() << "\n";
        std::filesystem::remove(tmp, ec);
    }
}

json star_json(const VertexStar& v)
{
    json j = json::array();
    for (const auto& e : v.edges)
        j.push_back({e.direction.x * e.weight, e.direction.y * e.weight});
    return j;
}

} // namespace

VertexStar random_star(std::mt19937_64& rng, std::int64_t bound)
{
    std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
    for (;;) {
        std::vector<LatticePoint> v(4);
        LatticePoint sum{0, 0};
        for (int i = 0; i < 3; ++i) {
            v[static_cast<std::size_t>(i)] = {coord(rng), coord(rng)};
            sum = sum + v[static_cast<std::size_t>(i)];
        }
        v[3] = LatticePoint{0, 0} - sum;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            if (v[i].x == 0 && v[i].y == 0)
                ok = false;
            for (std::size_t j = i + 1; j < 4 && ok; ++j) {
                if (cross(v[i], v[j]) == 0)
                    ok = false;
            }
        }
        if (ok)
            return VertexStar::from_vectors(v);
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& out)
{
    GWElement result;
    std::int64_t g = 0;
    std::string d_col;
    json spec;
    if (cfg.method == "ch") {
        if (cfg.k || cfg.a || !cfg.w_left.empty() || !cfg.w_right.empty())
            throw InvalidArgument("unsupported: --method ch works on plane degrees only (use --d, --alpha, --beta)");
        const std::int64_t d = required(cfg.d, "--d", "count --method ch");
        if (d < 1)
            throw InvalidArgument("--d must be positive");
        g = resolve_genus(cfg, (d - 1) * (d - 2) / 2);
        Sequence alpha, beta;
        if (!cfg.alpha && !cfg.beta) {
            beta = Sequence{d};
        } else {
            alpha = Sequence::parse(cfg.alpha.value_or(""));
            beta = Sequence::parse(cfg.beta.value_or(""));
        }
        result = ch_count({d, g, alpha, beta});
        d_col = std::to_string(d);
        spec = {{"d", d}, {"alpha", alpha.entries()}, {"beta", beta.entries()}};
    } else if (cfg.method == "latticepath" || cfg.method == "floor") {
        if (cfg.alpha || cfg.beta)
            throw InvalidArgument("unsupported: --alpha/--beta only apply to --method ch");
        const DegreeSpec s = degree_spec(cfg);
        const bool unit = std::all_of(s.w_left.begin(), s.w_left.end(), [](auto w) { return w == 1; }) &&
                          std::all_of(s.w_right.begin(), s.w_right.end(), [](auto w) { return w == 1; });
        if (cfg.method == "latticepath" && !unit)
            throw InvalidArgument("unsupported: --method latticepath handles unit end weights only; use --method floor");
        const LatticePolygon polygon = spec_polygon(s);
        g = resolve_genus(cfg, polygon.interior_count());
        if (cfg.method == "latticepath")
            result = count_lattice_path(polygon, g);
        else
            result = floor_count(s.k, s.a, s.w_left, s.w_right, g);
        if (s.plane) {
            d_col = std::to_string(s.a);
            spec = {{"d", s.a}};
        } else {
            spec = {{"k", s.k}, {"a", s.a}, {"wl", weights_json(s.w_left)}, {"wr", weights_json(s.w_right)}};
        }
    } else {
        throw InvalidArgument("unknown method '" + cfg.method + "' (expected latticepath, ch or floor)");
    }

    switch (cfg.format) {
    case Format::Plain:
        out << plain_line(result) << "\n";
        break;
    case Format::Json: {
        json j = {{"command", "count"},
                  {"method", cfg.method},
                  {"degree", spec},
                  {"g", g},
                  {"result", gw_to_json(result)},
                  {"rank", bigint_to_json(rank(result))},
                  {"signature", bigint_to_json(signature(result))}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << kCsvHeader << "\n" << csv_row(d_col, std::to_string(g), cfg.method, result) << "\n";
        break;
    }
    return 0;
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.d_min < 1 || cfg.d_max < cfg.d_min)
        throw InvalidArgument("crosscheck needs 1 <= --d-min <= --d-max");
    if (cfg.d_max > kMaxCrosscheckDegree)
        throw InvalidArgument("crosscheck: --d-max is limited to " + std::to_string(kMaxCrosscheckDegree));
    json cases = json::array();
    std::int64_t failures = 0, total = 0;
    if (cfg.format == Format::Plain)
        out << "d\tg\tlatticepath\tch\tfloor\tflip\tstatus\n";
    if (cfg.format == Format::Csv)
        out << kCsvHeader << ",agree\n";
    for (std::int64_t d = cfg.d_min; d <= cfg.d_max; ++d) {
        const LatticePolygon polygon = degree_polygon(d);
        const std::vector<std::int64_t> ones(static_cast<std::size_t>(d), 1);
        for (std::int64_t g = min_path_genus(polygon); g <= max_path_genus(polygon); ++g) {
            const GWElement lp = count_lattice_path(polygon, g, LambdaOrder::Standard);
            const GWElement flip = count_lattice_path(polygon, g, LambdaOrder::Flipped);
            const GWElement ch = ch_count({d, g, {}, Sequence{d}});
            const GWElement fl = floor_count(1, d, ones, {}, g);
            const bool flip_ok = gw_equal(lp, flip);
            const bool ok = flip_ok && gw_equal(lp, ch) && gw_equal(lp, fl);
            ++total;
            if (!ok)
                ++failures;
            const char* status = ok ? "PASS" : "FAIL";
            switch (cfg.format) {
            case Format::Plain:
                out << d << "\t" << g << "\t" << render(lp) << "\t" << render(ch) << "\t" << render(fl) << "\t"
                    << (flip_ok ? "invariant" : "differs") << "\t" << status << "\n";
                break;
            case Format::Csv: {
                const std::string ds = std::to_string(d), gs = std::to_string(g);
                out << csv_row(ds, gs, "latticepath", lp) << "," << status << "\n"
                    << csv_row(ds, gs, "latticepath-flipped", flip) << "," << status << "\n"
                    << csv_row(ds, gs, "ch", ch) << "," << status << "\n"
                    << csv_row(ds, gs, "floor", fl) << "," << status << "\n";
                break;
            }
            case Format::Json:
                cases.push_back({{"d", d},
                                 {"g", g},
                                 {"latticepath", gw_to_json(lp)},
                                 {"latticepath_flipped", gw_to_json(flip)},
                                 {"ch", gw_to_json(ch)},
                                 {"floor", gw_to_json(fl)},
                                 {"flip_invariant", flip_ok},
                                 {"status", status}});
                break;
            }
        }
    }
    if (cfg.format == Format::Plain)
        out << "crosscheck: " << total << " cases, " << failures << " failures\n";
    if (cfg.format == Format::Json)
        out << json{{"command", "crosscheck"}, {"cases", cases}, {"failures", failures}}.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_nodepoly(const RunConfig& cfg, std::ostream& out)
{
    const std::int64_t delta = required(cfg.delta, "--delta", "nodepoly");
    const NodePolynomialFit fit = fit_node_polynomial(delta, kMaxNodeDelta);
    const std::int64_t d_lo = cfg.d_min;
    const std::int64_t d_hi = cfg.d_max_given ? cfg.d_max : fit.held_out.back();
    if (d_lo < 1 || d_hi < d_lo)
        throw InvalidArgument("nodepoly needs 1 <= --d-min <= --d-max");

    json table = json::array();
    std::ostringstream rows;
    for (std::int64_t d = d_lo; d <= d_hi; ++d) {
        const GWElement r = severi_by_templates(d, delta);
        const auto [p, q] = hyperbolic_and_unit_parts(r);
        const Rational x(big(d));
        const bool on = fit.P(x) == Rational(p) && fit.Q(x) == Rational(q);
        switch (cfg.format) {
        case Format::Plain:
            rows << d << "\t" << render(r) << "\t" << (on ? "on polynomial" : "off polynomial") << "\n";
            break;
        case Format::Csv:
            rows << csv_row(std::to_string(d), std::to_string(delta), "templates", r) << "\n";
            break;
        case Format::Json:
            table.push_back({{"d", d}, {"result", gw_to_json(r)}, {"on_polynomial", on}});
            break;
        }
    }
    switch (cfg.format) {
    case Format::Plain:
        out << "P(d) = " << fit.P.str() << "\n"
            << "Q(d) = " << fit.Q.str() << "\n"
            << "fitted on d = " << fit.d_start << ".." << fit.d_start + 2 * delta << ", held out d = "
            << fit.held_out.front() << ".." << fit.held_out.back() << ", valid for d >= " << fit.d_threshold << "\n"
            << rows.str();
        break;
    case Format::Csv:
        out << kCsvHeader << "\n" << rows.str();
        break;
    case Format::Json:
        out << json{{"command", "nodepoly"},
                    {"delta", delta},
                    {"P", fit.P.to_json()},
                    {"Q", fit.Q.to_json()},
                    {"threshold", fit.d_threshold},
                    {"d_start", fit.d_start},
                    {"held_out", fit.held_out},
                    {"table", table}}
                   .dump(2)
            << "\n";
        break;
    }
    return 0;
}

int cmd_wall(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.trials < 1)
        throw InvalidArgument("--trials must be positive");
    std::mt19937_64 rng(cfg.seed);
    std::int64_t failures = 0;
    json failed = json::array();
    if (cfg.format == Format::Csv)
        out << "trial,star,left,right_sum,agree\n";
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        const VertexStar star = random_star(rng, 6);
        const WallResolution w = resolve_wall(star);
        const bool ok = gw_equal(w.left, w.right_sum);
        if (!ok) {
            ++failures;
            failed.push_back(star_json(star));
        }
        if (cfg.format == Format::Csv) {
            std::string s = star_json(star).dump();
            for (auto& c : s) {
                if (c == ',')
                    c = ' ';
            }
            out << t << "," << s << "," << render(w.left) << "," << render(w.right_sum) << ","
                << (ok ? "yes" : "no") << "\n";
        }
    }
    if (cfg.format == Format::Plain)
        out << "wall: " << cfg.trials << " trials, " << failures << " failures (seed " << cfg.seed << ")\n";
    if (cfg.format == Format::Json)
        out << json{{"command", "wall"}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"failures", failures},
                    {"failed_stars", failed}}
                   .dump(2)
            << "\n";
    return failures == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Arithmetic counts of plane tropical curves", args.empty() ? "gwtrop" : args.front()};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "plain", wl, wr, alpha, beta;
    std::int64_t d = 0, g = 0, delta = 0, k = 0, a = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
    };
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache", cfg.cache_path, "JSON memo cache for the recursion (default: $GWTROP_CACHE)");
    };

    auto* count = app.add_subcommand("count", "Count curves by one method");
    count->add_option("--method", cfg.method, "latticepath, ch or floor")
        ->check(CLI::IsMember({"latticepath", "ch", "floor"}));
    auto* o_d = count->add_option("--d", d, "plane degree");
    auto* o_g = count->add_option("--g", g, "genus");
    auto* o_delta = count->add_option("--delta", delta, "number of nodes, instead of --g");
    auto* o_k = count->add_option("--k", k, "Hirzebruch twist");
    auto* o_a = count->add_option("--a", a, "number of floors");
    count->add_option("--wl", wl, "left end weights, comma-separated");
    count->add_option("--wr", wr, "right end weights, comma-separated");
    auto* o_alpha = count->add_option("--alpha", alpha, "fixed left ends by weight, comma-separated");
    auto* o_beta = count->add_option("--beta", beta, "free left ends by weight, comma-separated");
    add_format(count);
    add_cache(count);

    auto* cross = app.add_subcommand("crosscheck", "Compare all methods on plane degrees");
    cross->add_option("--d-min", cfg.d_min, "smallest degree");
    auto* o_dmax_cross = cross->add_option("--d-max", cfg.d_max, "largest degree");
    add_format(cross);
    add_cache(cross);

    auto* nodepoly = app.add_subcommand("nodepoly", "Fit the node polynomials P, Q for a number of nodes");
    auto* o_delta_np = nodepoly->add_option("--delta", delta, "number of nodes")->required();
    nodepoly->add_option("--d-min", cfg.d_min, "first degree of the table");
    auto* o_dmax_np = nodepoly->add_option("--d-max", cfg.d_max, "last degree of the table");
    add_format(nodepoly);

    auto* wall = app.add_subcommand("wall", "Check the wall-crossing identity on random 4-valent stars");
    wall->add_option("--seed", cfg.seed, "random seed");
    wall->add_option("--trials", cfg.trials, "number of stars");
    add_format(wall);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty())
        rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Plain;
        if (o_d->count())
            cfg.d = d;
        if (o_g->count())
            cfg.g = g;
        if (o_delta->count() || o_delta_np->count())
            cfg.delta = delta;
        if (o_k->count())
            cfg.k = k;
        if (o_a->count())
            cfg.a = a;
        if (o_alpha->count())
            cfg.alpha = alpha;
        if (o_beta->count())
            cfg.beta = beta;
        cfg.w_left = parse_weights(wl, "--wl");
        cfg.w_right = parse_weights(wr, "--wr");
        cfg.d_max_given = o_dmax_cross->count() > 0 || o_dmax_np->count() > 0;
        if (cfg.cache_path.empty()) {
            if (const char* env = std::getenv("GWTROP_CACHE"))
                cfg.cache_path = env;
        }

        if (count->parsed()) {
            cfg.command = "count";
            const bool uses_cache = cfg.method == "ch";
            if (uses_cache)
                load_cache(cfg.cache_path, err);
            int rc = cmd_count(cfg, out);
            if (uses_cache)
                save_cache(cfg.cache_path, err);
            return rc;
        }
        if (cross->parsed()) {
            cfg.command = "crosscheck";
            load_cache(cfg.cache_path, err);
            int rc = cmd_crosscheck(cfg, out);
            save_cache(cfg.cache_path, err);
            return rc;
        }
        if (nodepoly->parsed()) {
            cfg.command = "nodepoly";
            return cmd_nodepoly(cfg, out);
        }
        cfg.command = "wall";
        return cmd_wall(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace gwtrop::cli
