#pragma once

#include "gwtrop/gw_ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gwtrop {

// Almost-zero sequence; entries[i] is the multiplicity of weight i + 1.
class Sequence {
public:
    Sequence() = default;
    Sequence(std::initializer_list<std::int64_t> entries);
    explicit Sequence(std::vector<std::int64_t> entries);

    const std::vector<std::int64_t>& entries() const { return e_; }
    // 1-based access, zero beyond the support
    std::int64_t operator[](std::size_t i) const { return i >= 1 && i <= e_.size() ? e_[i - 1] : 0; }
    std::size_t length() const { return e_.size(); }
    void set(std::size_t i, std::int64_t v);
    std::string str() const; // comma-joined entries

    static Sequence parse(const std::string& s);

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    void trim();
    std::vector<std::int64_t> e_;
};

Sequence operator+(const Sequence& a, const Sequence& b);
Sequence operator-(const Sequence& a, const Sequence& b);
Sequence unit_sequence(std::size_t k);
bool dominates(const Sequence& a, const Sequence& b); // a >= b entrywise

struct SeqStats {
    std::int64_t size = 0;     // |a|
    std::int64_t weighted = 0; // Ia
    BigInt power = 1;          // I^a
};

SeqStats seq_stats(const Sequence& a);
BigInt seq_binom(const Sequence& a, const Sequence& b);

struct CHKey {
    std::int64_t d = 1;
    std::int64_t g = 0;
    Sequence alpha;
    Sequence beta;

    std::string str() const; // "d:g:alpha:beta"
    static CHKey parse(const std::string& s);
    friend bool operator==(const CHKey&, const CHKey&) = default;
};

// Relative counts with alpha fixed and beta free left ends; the plain count
// of degree d is ch_count({d, g, {}, {d}}).
GWElement ch_count(const CHKey& key);
BigInt ch_count_complex(const CHKey& key);
BigInt ch_count_real(const CHKey& key);

// Shared memo of ch_count.
nlohmann::json ch_cache_to_json();
// Returns the number of entries merged.
std::size_t ch_cache_merge_json(const nlohmann::json& j);
std::size_t ch_cache_size();
void ch_cache_clear();

} // namespace gwtrop
