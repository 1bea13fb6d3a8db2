#include "gwtrop/gw_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gwtrop {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        const u64 m = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out)
{
    if (n == 1)
        return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

u64 uabs(std::int64_t n) { return n < 0 ? static_cast<u64>(0) - static_cast<u64>(n) : static_cast<u64>(n); }

int legendre(std::int64_t a, std::int64_t p)
{
    std::int64_t r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    u64 v = powmod(static_cast<u64>(r), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
    return v == 1 ? 1 : -1;
}

// Splits n = p^v * u with p not dividing u.
std::pair<int, std::int64_t> split_valuation(std::int64_t n, std::int64_t p)
{
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return {v, n};
}

int eps2(std::int64_t u)
{
    std::int64_t r = ((u % 8) + 8) % 8;
    return ((r - 1) / 2) & 1;
}

int omega2(std::int64_t u)
{
    std::int64_t r = ((u % 8) + 8) % 8;
    return ((r * r - 1) / 8) & 1;
}

int mod2(const BigInt& c) { return mpz_odd_p(c.get_mpz_t()) ? 1 : 0; }

int mod4(const BigInt& c) { return static_cast<int>(mpz_fdiv_ui(c.get_mpz_t(), 4)); }

struct FormInvariants {
    BigInt rank = 0;
    BigInt signature = 0;
    std::int64_t det = 1;
};

// Diagonal form with the given nonnegative multiplicities.
using Multiset = std::map<std::int64_t, BigInt, ClassOrder>;

FormInvariants invariants(const Multiset& m)
{
    FormInvariants inv;
    for (const auto& [rep, c] : m) {
        inv.rank += c;
        inv.signature += rep > 0 ? c : BigInt(-c);
        if (mod2(c))
            inv.det = square_class_product({inv.det}, {rep}).rep;
    }
    return inv;
}

int hasse(const Multiset& m, Place place)
{
    std::vector<std::pair<std::int64_t, BigInt>> items(m.begin(), m.end());
    int s = 1;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [a, ca] = items[i];
        int self = mod4(ca);
        // c(c-1)/2 is odd iff c = 2, 3 mod 4
        if (self == 2 || self == 3)
            s *= hilbert_symbol(a, a, place);
        if (!mod2(ca))
            continue;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (mod2(items[j].second))
                s *= hilbert_symbol(a, items[j].first, place);
        }
    }
    return s;
}

} // namespace

bool is_prime(std::int64_t n) { return n > 1 && miller_rabin(static_cast<u64>(n)); }

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n == 0)
        throw InvalidArgument("cannot factor zero");
    std::map<u64, int> f;
    u64 m = uabs(n);
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (m % p == 0) {
            m /= p;
            ++f[p];
        }
    }
    factor_rec(m, f);
    std::vector<std::pair<std::int64_t, int>> out;
    for (auto [p, e] : f)
        out.emplace_back(static_cast<std::int64_t>(p), e);
    return out;
}

SquareClass square_free_reduce(std::int64_t n)
{
    if (n == 0)
        throw InvalidArgument("square_free_reduce: zero has no square class");
    std::int64_t s = n < 0 ? -1 : 1;
    for (auto [p, e] : factorize(n)) {
        if (e % 2)
            s *= p;
    }
    return {s};
}

SquareClass square_class_product(SquareClass a, SquareClass b)
{
    std::int64_t g = std::gcd(a.rep, b.rep);
    std::int64_t x = a.rep / g, y = b.rep / g;
    i128 prod = static_cast<i128>(x) * y;
    if (prod > INT64_MAX || prod < -INT64_MAX)
        throw InvalidArgument("square class product exceeds 64 bits");
    return {static_cast<std::int64_t>(prod)};
}

GWElement GWElement::form(std::int64_t a, const BigInt& mult)
{
    GWElement e;
    e.add_term(square_free_reduce(a).rep, mult);
    return e;
}

GWElement GWElement::hyperbolic(const BigInt& n)
{
    GWElement e;
    e.add_term(1, n);
    e.add_term(-1, n);
    return e;
}

GWElement GWElement::from_association(const std::vector<std::pair<std::int64_t, BigInt>>& terms)
{
    GWElement e;
    for (const auto& [rep, m] : terms)
        e.add_term(square_free_reduce(rep).rep, m);
    return e;
}

void GWElement::add_term(std::int64_t rep, const BigInt& m)
{
    if (m == 0)
        return;
    auto it = terms_.find(rep);
    if (it == terms_.end()) {
        terms_.emplace(rep, m);
        return;
    }
    it->second += m;
    if (it->second == 0)
        terms_.erase(it);
}

void GWElement::normalize()
{
    std::vector<std::int64_t> reps;
    for (const auto& [rep, m] : terms_) {
        if (rep > 1)
            reps.push_back(rep);
    }
    for (std::int64_t c : reps) {
        BigInt m = mult(c), n = mult(-c);
        BigInt t = 0;
        if (m > 0 && n > 0)
            t = m < n ? m : n;
        else if (m < 0 && n < 0)
            t = m > n ? m : n;
        if (t == 0)
            continue;
        add_term(c, -t);
        add_term(-c, -t);
        add_term(1, t);
        add_term(-1, t);
    }
}

BigInt GWElement::mult(std::int64_t rep) const
{
    auto it = terms_.find(rep);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt GWElement::rank() const
{
    BigInt r = 0;
    for (const auto& [rep, m] : terms_)
        r += m;
    return r;
}

BigInt GWElement::signature() const
{
    BigInt s = 0;
    for (const auto& [rep, m] : terms_) {
        if (rep > 0)
            s += m;
        else
            s -= m;
    }
    return s;
}

std::pair<BigInt, GWElement::Terms> GWElement::hyperbolic_split() const
{
    Terms rest = terms_;
    BigInt pairs = 0;
    auto take = [&](std::int64_t c) {
        auto ip = rest.find(c), in = rest.find(-c);
        if (ip == rest.end() || in == rest.end())
            return;
        BigInt t = 0;
        if (ip->second > 0 && in->second > 0)
            t = ip->second < in->second ? ip->second : in->second;
        else if (ip->second < 0 && in->second < 0)
            t = ip->second > in->second ? ip->second : in->second;
        if (t == 0)
            return;
        pairs += t;
        ip->second -= t;
        in->second -= t;
        if (ip->second == 0)
            rest.erase(ip);
        if (in->second == 0)
            rest.erase(in);
    };
    take(1);
    std::vector<std::int64_t> reps;
    for (const auto& [rep, m] : rest) {
        if (rep > 1)
            reps.push_back(rep);
    }
    for (std::int64_t c : reps)
        take(c);
    return {pairs, rest};
}

GWElement GWElement::operator-() const
{
    GWElement r = *this;
    for (auto& [rep, m] : r.terms_)
        m = -m;
    return r;
}

GWElement& GWElement::operator+=(const GWElement& o)
{
    for (const auto& [rep, m] : o.terms_)
        add_term(rep, m);
    normalize();
    return *this;
}

GWElement& GWElement::operator-=(const GWElement& o)
{
    for (const auto& [rep, m] : o.terms_)
        add_term(rep, -m);
    normalize();
    return *this;
}

GWElement& GWElement::operator*=(const GWElement& o)
{
    GWElement r;
    for (const auto& [a, ma] : terms_) {
        for (const auto& [b, mb] : o.terms_)
            r.add_term(square_class_product({a}, {b}).rep, ma * mb);
    }
    r.normalize();
    *this = std::move(r);
    return *this;
}

GWElement& GWElement::operator*=(const BigInt& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rep, m] : terms_)
        m *= s;
    return *this;
}

bool GWElement::same_terms(const GWElement& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    return std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                      [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; });
}

bool operator==(const GWElement& a, const GWElement& b) { return gw_equal(a, b); }

GWElement gw_add(const GWElement& x, const GWElement& y) { return x + y; }
GWElement gw_mul(const GWElement& x, const GWElement& y) { return x * y; }
GWElement hyperbolic(const BigInt& n) { return GWElement::hyperbolic(n); }
BigInt rank(const GWElement& x) { return x.rank(); }
BigInt signature(const GWElement& x) { return x.signature(); }

Place Place::prime(std::int64_t p)
{
    if (!is_prime(p))
        throw InvalidArgument("place must be a prime or the real place, got " + std::to_string(p));
    return Place(p);
}

int hilbert_symbol(std::int64_t a, std::int64_t b, Place place)
{
    if (a == 0 || b == 0)
        throw InvalidArgument("hilbert_symbol: arguments must be nonzero");
    if (place.is_real())
        return (a < 0 && b < 0) ? -1 : 1;
    const std::int64_t p = place.p();
    auto [alpha, u] = split_valuation(a, p);
    auto [beta, v] = split_valuation(b, p);
    if (p == 2) {
        int e = eps2(u) * eps2(v) + (alpha & 1) * omega2(v) + (beta & 1) * omega2(u);
        return (e & 1) ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && (((p - 1) / 2) & 1))
        s = -s;
    if (beta & 1)
        s *= legendre(u, p);
    if (alpha & 1)
        s *= legendre(v, p);
    return s;
}

bool gw_equal(const GWElement& x, const GWElement& y)
{
    Multiset pos, neg;
    {
        GWElement::Terms diff = x.terms();
        for (const auto& [rep, m] : y.terms()) {
            diff[rep] -= m;
        }
        for (const auto& [rep, m] : diff) {
            if (m > 0)
                pos[rep] = m;
            else if (m < 0)
                neg[rep] = -m;
        }
    }
    if (pos.empty() && neg.empty())
        return true;
    FormInvariants ip = invariants(pos), in = invariants(neg);
    if (ip.rank != in.rank || ip.signature != in.signature || ip.det != in.det)
        return false;
    std::set<std::int64_t> primes{2};
    for (const auto* m : {&pos, &neg}) {
        for (const auto& [rep, c] : *m) {
            for (auto [p, e] : factorize(rep))
                primes.insert(p);
        }
    }
    for (std::int64_t p : primes) {
        Place pl = Place::prime(p);
        if (hasse(pos, pl) != hasse(neg, pl))
            return false;
    }
    return true;
}

std::string render(const GWElement& x)
{
    auto [pairs, rest] = x.hyperbolic_split();
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const BigInt& c, const std::string& sym) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1)
            os << a.get_str();
        os << sym;
        first = false;
    };
    if (pairs != 0)
        emit(pairs, "ℍ");
    for (const auto& [rep, m] : rest)
        emit(m, "⟨" + std::to_string(rep) + "⟩");
    if (first)
        return "0";
    return os.str();
}

GWElement edge_factor(std::int64_t w)
{
    if (w < 1)
        throw InvalidArgument("edge weight must be positive");
    if (w % 2 == 0)
        return GWElement::hyperbolic(w / 2);
    return GWElement::hyperbolic((w - 1) / 2) + GWElement::form(w);
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::int64_t n)
{
    if (n < 0)
        throw InvalidArgument("factorial of negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace gwtrop
