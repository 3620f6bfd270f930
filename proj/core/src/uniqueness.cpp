#include "msp/uniqueness.hpp"

#include <atomic>
#include <future>

#include "msp/error.hpp"

namespace msp {

std::vector<Score> score_pairs_excluding_perfect(std::size_t length)
{
    if (length < 1)
        throw InvalidInput("code length must be at least 1");
    std::vector<Score> pairs;
    pairs.reserve(length * (length + 3) / 2);
    for (std::uint32_t b = 0; b < length; ++b)
        for (std::uint32_t white = 0; b + white <= length; ++white)
            pairs.push_back(Score{b, white});
    return pairs;
}

namespace {

// Index of the first satisfiable extension, or pairs.size() if none.
std::size_t first_satisfiable(const MspInstance& instance, const Code& witness,
                              const std::vector<Score>& pairs, const SolveOptions& options)
{
    SolveOptions inner = options;
    inner.threads = 1;
    auto sat = [&](std::size_t i) {
        return solve(instance.with_guess({witness, pairs[i]}), inner).satisfiable;
    };

    if (options.threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (sat(i))
                return i;
        return pairs.size();
    }

    // Workers take indices in increasing order and stop once a smaller
    // satisfiable index is known, so the minimum is exact.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{pairs.size()};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < options.threads; ++t) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < pairs.size() && i < best.load(); i = next++) {
                if (!sat(i))
                    continue;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }));
    }
    for (auto& f : pool)
        f.get();
    return best.load();
}

} // namespace

UniquenessReport is_unique(const MspInstance& instance, const SolveOptions& options)
{
    UniquenessReport report;
    SolveOutcome base = solve(instance, options);
    if (!base.satisfiable)
        return report;

    report.satisfiable = true;
    report.witness = base.witness;
    const auto pairs = score_pairs_excluding_perfect(instance.length());
    const std::size_t hit = first_satisfiable(instance, *base.witness, pairs, options);
    report.unique = hit == pairs.size();
    report.followups_tried = report.unique ? pairs.size() : hit + 1;
    return report;
}

} // namespace msp
