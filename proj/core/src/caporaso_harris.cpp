#include "gwtrop/caporaso_harris.hpp"

#include "gwtrop/json_io.hpp"
#include "gwtrop/weights.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gwtrop {

Sequence::Sequence(std::initializer_list<std::int64_t> entries) : e_(entries)
{
    trim();
}

Sequence::Sequence(std::vector<std::int64_t> entries) : e_(std::move(entries))
{
    trim();
}

void Sequence::trim()
{
    for (auto v : e_) {
        if (v < 0)
            throw InvalidArgument("sequence entries must be nonnegative");
    }
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

void Sequence::set(std::size_t i, std::int64_t v)
{
    if (i < 1)
        throw InvalidArgument("sequence index starts at 1");
    if (e_.size() < i)
        e_.resize(i, 0);
    e_[i - 1] = v;
    trim();
}

std::string Sequence::str() const
{
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(e_[i]);
    }
    return s;
}

Sequence Sequence::parse(const std::string& s)
{
    std::vector<std::int64_t> v;
    if (s.empty())
        return {};
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long x = std::stoll(item, &pos);
            if (pos != item.size())
                throw InvalidArgument("bad sequence entry '" + item + "'");
            v.push_back(x);
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad sequence entry '" + item + "'");
        }
    }
    return Sequence(v);
}

Sequence operator+(const Sequence& a, const Sequence& b)
{
    std::vector<std::int64_t> v(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a[i + 1] + b[i + 1];
    return Sequence(v);
}

Sequence operator-(const Sequence& a, const Sequence& b)
{
    std::vector<std::int64_t> v(std::max(a.length(), b.length()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a[i + 1] - b[i + 1];
        if (v[i] < 0)
            throw InvalidArgument("sequence difference would be negative");
    }
    return Sequence(v);
}

Sequence unit_sequence(std::size_t k)
{
    Sequence s;
    s.set(k, 1);
    return s;
}

bool dominates(const Sequence& a, const Sequence& b)
{
    for (std::size_t i = 1; i <= std::max(a.length(), b.length()); ++i) {
        if (a[i] < b[i])
            return false;
    }
    return true;
}

SeqStats seq_stats(const Sequence& a)
{
    SeqStats s;
    for (std::size_t i = 1; i <= a.length(); ++i) {
        s.size += a[i];
        s.weighted += static_cast<std::int64_t>(i) * a[i];
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(a[i]));
        s.power *= p;
    }
    return s;
}

BigInt seq_binom(const Sequence& a, const Sequence& b)
{
    BigInt r = 1;
    for (std::size_t i = 1; i <= std::max(a.length(), b.length()); ++i)
        r *= binomial(a[i], b[i]);
    return r;
}

std::string CHKey::str() const
{
    return std::to_string(d) + ":" + std::to_string(g) + ":" + alpha.str() + ":" + beta.str();
}

CHKey CHKey::parse(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw InvalidArgument("CH key must have the form d:g:alpha:beta, got '" + s + "'");
    try {
        return {std::stoll(parts[0]), std::stoll(parts[1]), Sequence::parse(parts[2]), Sequence::parse(parts[3])};
    } catch (const std::logic_error&) {
        throw InvalidArgument("malformed CH key '" + s + "'");
    }
}

namespace {

// All sequences s with I s = n, parts bounded by max_part.
void partitions(std::int64_t n, std::int64_t max_part, std::vector<std::int64_t>& cur,
                std::vector<Sequence>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t part = std::min(n, max_part); part >= 1; --part) {
        if (cur.size() < static_cast<std::size_t>(part))
            cur.resize(static_cast<std::size_t>(part), 0);
        ++cur[static_cast<std::size_t>(part) - 1];
        partitions(n - part, part, cur, out);
        --cur[static_cast<std::size_t>(part) - 1];
    }
}

void sub_sequences(const Sequence& a, std::size_t i, std::vector<std::int64_t>& cur, std::vector<Sequence>& out)
{
    if (i > a.length()) {
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t v = 0; v <= a[i]; ++v) {
        cur[i - 1] = v;
        sub_sequences(a, i + 1, cur, out);
    }
}

template <class W>
class ChSolver {
public:
    using V = typename W::value_type;

    V count(const CHKey& key)
    {
        if (key.d < 1)
            throw InvalidArgument("ch_count: degree must be positive");
        if (seq_stats(key.alpha).weighted + seq_stats(key.beta).weighted != key.d)
            throw InvalidArgument("ch_count: I(alpha) + I(beta) must equal d for key " + key.str());
        return eval(key);
    }

    std::map<std::string, V> snapshot()
    {
        std::lock_guard<std::mutex> lock(mu_);
        return memo_;
    }

    std::size_t merge(const std::map<std::string, V>& entries)
    {
        std::lock_guard<std::mutex> lock(mu_);
        std::size_t n = 0;
        for (const auto& [k, v] : entries)
            n += memo_.emplace(k, v).second ? 1 : 0;
        return n;
    }

    std::size_t size()
    {
        std::lock_guard<std::mutex> lock(mu_);
        return memo_.size();
    }

    void clear()
    {
        std::lock_guard<std::mutex> lock(mu_);
        memo_.clear();
    }

private:
    V eval(const CHKey& key)
    {
        const std::string s = key.str();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = memo_.find(s);
            if (it != memo_.end())
                return it->second;
        }
        V v = compute(key);
        std::lock_guard<std::mutex> lock(mu_);
        memo_.emplace(s, v);
        return v;
    }

    V compute(const CHKey& key)
    {
        const std::int64_t d = key.d, g = key.g;
        const SeqStats sa = seq_stats(key.alpha), sb = seq_stats(key.beta);
        if (2 * d + g + sb.size - 1 < 0)
            return W::zero();
        if (g > (d - 1) * (d - 2) / 2)
            return W::zero();
        if (d == 1)
            return g == 0 ? W::one() : W::zero();

        V total = W::zero();
        // a non-fixed end of weight k becomes fixed
        for (std::size_t k = 1; k <= key.beta.length(); ++k) {
            if (key.beta[k] == 0)
                continue;
            CHKey next{d, g, key.alpha + unit_sequence(k), key.beta - unit_sequence(k)};
            V sub = eval(next);
            total += W::edge(static_cast<std::int64_t>(k)) * sub;
        }
        // a floor splits off on the left
        std::vector<Sequence> alphas;
        {
            std::vector<std::int64_t> cur(key.alpha.length(), 0);
            sub_sequences(key.alpha, 1, cur, alphas);
        }
        for (const auto& ap : alphas) {
            const std::int64_t n = sa.weighted - seq_stats(ap).weighted - 1;
            if (n < 0)
                continue;
            std::vector<Sequence> deltas;
            std::vector<std::int64_t> cur;
            partitions(n, n, cur, deltas);
            for (const auto& db : deltas) {
                const SeqStats sd = seq_stats(db);
                if (sd.size - 1 > d - 2)
                    continue;
                const std::int64_t gp = g - sd.size + 1;
                const Sequence bp = key.beta + db;
                BigInt coeff = seq_binom(key.alpha, ap) * seq_binom(bp, key.beta);
                if (coeff == 0)
                    continue;
                V sub = eval({d - 1, gp, ap, bp});
                if (value_is_zero(sub))
                    continue;
                total += W::edge(to_int64(sd.power)) * W::from_int(coeff) * sub;
            }
        }
        return total;
    }

    std::mutex mu_;
    std::map<std::string, V> memo_;
};

ChSolver<ArithmeticWeights>& arithmetic_solver()
{
    static ChSolver<ArithmeticWeights> s;
    return s;
}

ChSolver<ComplexWeights>& complex_solver()
{
    static ChSolver<ComplexWeights> s;
    return s;
}

ChSolver<RealWeights>& real_solver()
{
    static ChSolver<RealWeights> s;
    return s;
}

} // namespace

GWElement ch_count(const CHKey& key) { return arithmetic_solver().count(key); }
BigInt ch_count_complex(const CHKey& key) { return complex_solver().count(key); }
BigInt ch_count_real(const CHKey& key) { return real_solver().count(key); }

nlohmann::json ch_cache_to_json()
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : arithmetic_solver().snapshot())
        j[k] = gw_to_json(v);
    return j;
}

std::size_t ch_cache_merge_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw InvalidArgument("CH cache must be a JSON object");
    std::map<std::string, GWElement> entries;
    for (const auto& [k, v] : j.items()) {
        CHKey key = CHKey::parse(k);
        entries.emplace(key.str(), gw_from_json(v));
    }
    return arithmetic_solver().merge(entries);
}

std::size_t ch_cache_size() { return arithmetic_solver().size(); }

void ch_cache_clear()
{
    arithmetic_solver().clear();
    complex_solver().clear();
    real_solver().clear();
}

} // namespace gwtrop
