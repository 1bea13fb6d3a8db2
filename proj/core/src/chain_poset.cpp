#include "gwtrop/linear_extensions.hpp"

#include <map>

namespace gwtrop {

namespace {

class ExtensionCounter {
public:
    ExtensionCounter(std::int64_t whites, const std::vector<std::pair<std::int64_t, std::int64_t>>& slots)
        : whites_(whites), opening_(static_cast<std::size_t>(whites) + 1)
    {
        for (const auto& [lo, hi] : slots) {
            if (lo < 0 || hi > whites || lo > hi)
                throw InvalidArgument("count_chain_extensions: slot interval out of range");
            opening_[static_cast<std::size_t>(lo)].push_back(hi);
        }
    }

    BigInt run()
    {
        std::vector<std::int64_t> avail(static_cast<std::size_t>(whites_) + 1, 0);
        open(0, avail);
        return count(0, avail);
    }

private:
    void open(std::int64_t s, std::vector<std::int64_t>& avail) const
    {
        for (auto hi : opening_[static_cast<std::size_t>(s)])
            ++avail[static_cast<std::size_t>(hi)];
    }

    BigInt count(std::int64_t s, std::vector<std::int64_t>& avail)
    {
        auto key = std::make_pair(s, avail);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        BigInt total = 0;
        bool any = false;
        for (std::size_t t = static_cast<std::size_t>(s); t < avail.size(); ++t) {
            if (avail[t] == 0)
                continue;
            any = true;
            std::int64_t c = avail[t];
            --avail[t];
            total += big(c) * count(s, avail);
            ++avail[t];
        }
        if (avail[static_cast<std::size_t>(s)] == 0) {
            if (s < whites_) {
                std::vector<std::int64_t> next = avail;
                open(s + 1, next);
                total += count(s + 1, next);
            } else if (!any) {
                total = 1;
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::int64_t whites_;
    std::vector<std::vector<std::int64_t>> opening_;
    std::map<std::pair<std::int64_t, std::vector<std::int64_t>>, BigInt> memo_;
};

} // namespace

BigInt count_chain_extensions(std::int64_t whites, const std::vector<std::pair<std::int64_t, std::int64_t>>& slots)
{
    if (whites < 0)
        throw InvalidArgument("count_chain_extensions: negative chain length");
    return ExtensionCounter(whites, slots).run();
}

} // namespace gwtrop
