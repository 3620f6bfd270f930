#include "msp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <thread>
#include <unordered_set>

#include "msp/error.hpp"

namespace msp {

MspInstance::MspInstance(Palette palette, std::size_t length, std::vector<ScoredGuess> guesses)
  : _palette(palette), _length(length), _guesses(std::move(guesses))
{
    if (length < 1)
        throw InvalidInput("code length must be at least 1");
    for (std::size_t i = 0; i < _guesses.size(); ++i) {
        const auto& g = _guesses[i];
        if (g.guess.length() != length)
            throw InvalidInput("guess " + std::to_string(i + 1) + " has " +
                               std::to_string(g.guess.length()) + " pegs, expected " +
                               std::to_string(length));
        if (!g.guess.fits(palette))
            throw InvalidInput("guess " + std::to_string(i + 1) + " has a peg outside 1.." +
                               std::to_string(palette.kappa()));
        if (std::size_t{g.declared.black} + g.declared.white > length)
            throw InvalidInput("guess " + std::to_string(i + 1) +
                               " declares more pegs than the code length");
    }
}

MspInstance MspInstance::with_guess(ScoredGuess extra) const
{
    auto guesses = _guesses;
    guesses.push_back(std::move(extra));
    return MspInstance(_palette, _length, std::move(guesses));
}

std::uint64_t code_space_size(Color kappa, std::size_t length) noexcept
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (kappa != 0 && n > max / kappa)
            return max;
        n *= kappa;
    }
    return n;
}

bool verify(const MspInstance& instance, const Code& candidate)
{
    if (candidate.length() != instance.length())
        throw InvalidInput("candidate has " + std::to_string(candidate.length()) +
                           " pegs, expected " + std::to_string(instance.length()));
    if (!candidate.fits(instance.palette()))
        throw InvalidInput("candidate has a peg outside the palette");

    // Candidate counts are shared by every guess; only the guess side is rebuilt.
    const std::size_t kappa = instance.kappa();
    std::vector<std::uint32_t> cand(kappa + 1, 0);
    for (Color c : candidate.pegs())
        ++cand[c];

    std::vector<std::uint32_t> seen(kappa + 1, 0);
    for (const auto& [guess, declared] : instance.guesses()) {
        std::uint32_t black = 0;
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < guess.length(); ++i) {
            const Color c = guess[i];
            if (c == candidate[i])
                ++black;
            if (seen[c]++ < cand[c])
                ++w;
        }
        for (Color c : guess.pegs())
            seen[c] = 0;
        if (black != declared.black || w != declared.total())
            return false;
    }
    return true;
}

namespace {

// Immutable per-instance tables used by both search engines.
struct Model
{
    std::size_t length = 0;
    Color kappa = 0;
    std::size_t guess_count = 0;

    std::vector<std::vector<Color>> pegs;      // [guess][position]
    std::vector<std::uint32_t> black_target;   // [guess]
    std::vector<std::uint32_t> total_target;   // [guess], w = black + white

    struct Occurrence
    {
        std::uint32_t guess;
        std::uint32_t count;
    };
    std::vector<std::vector<Occurrence>> occurrences; // [color] -> guesses containing it
    std::vector<std::uint32_t> cap;                   // [color] max count in any guess
    std::vector<char> banned;                         // [color] in a guess with w = 0
    std::vector<std::uint32_t> allowed_total;         // [guess] pegs of non-banned colors
    std::vector<std::vector<std::uint32_t>> matchable; // [guess][p] non-banned pegs at >= p
    std::vector<std::vector<char>> forbidden;         // [position][color] some guess has it

    explicit Model(const MspInstance& instance)
      : length(instance.length()),
        kappa(instance.kappa()),
        guess_count(instance.guesses().size()),
        occurrences(std::size_t{kappa} + 1),
        cap(std::size_t{kappa} + 1, 0),
        banned(std::size_t{kappa} + 1, 0)
    {
        for (const auto& [guess, declared] : instance.guesses()) {
            pegs.emplace_back(guess.pegs().begin(), guess.pegs().end());
            black_target.push_back(declared.black);
            total_target.push_back(declared.total());
        }

        std::vector<std::uint32_t> counts(std::size_t{kappa} + 1, 0);
        for (std::uint32_t g = 0; g < guess_count; ++g) {
            for (Color c : pegs[g])
                ++counts[c];
            for (Color c : pegs[g]) {
                if (counts[c] == 0)
                    continue;
                occurrences[c].push_back({g, counts[c]});
                cap[c] = std::max(cap[c], counts[c]);
                if (total_target[g] == 0)
                    banned[c] = 1;
                counts[c] = 0;
            }
        }

        allowed_total.assign(guess_count, 0);
        matchable.assign(guess_count, std::vector<std::uint32_t>(length + 1, 0));
        for (std::size_t g = 0; g < guess_count; ++g) {
            for (std::size_t p = length; p-- > 0;) {
                const bool ok = !banned[pegs[g][p]];
                matchable[g][p] = matchable[g][p + 1] + (ok ? 1 : 0);
                if (ok)
                    ++allowed_total[g];
            }
        }

        forbidden.assign(length, std::vector<char>(std::size_t{kappa} + 1, 0));
        for (std::size_t g = 0; g < guess_count; ++g)
            for (std::size_t p = 0; p < length; ++p)
                forbidden[p][pegs[g][p]] = 1;
    }
};

// Mutable search state: a prefix of placed pegs and the running tallies it
// induces on every guess.
struct Tally
{
    const Model* model;
    std::vector<Color> prefix;
    std::vector<std::uint32_t> count;   // [color]
    std::vector<std::uint32_t> black;   // [guess]
    std::vector<std::uint32_t> matched; // [guess] sum of min(count, guess count)

    explicit Tally(const Model& m)
      : model(&m),
        count(std::size_t{m.kappa} + 1, 0),
        black(m.guess_count, 0),
        matched(m.guess_count, 0)
    {
        prefix.reserve(m.length);
    }

    std::size_t position() const noexcept { return prefix.size(); }
    std::size_t remaining() const noexcept { return model->length - prefix.size(); }

    void place(Color c)
    {
        const std::size_t p = prefix.size();
        for (std::size_t g = 0; g < model->guess_count; ++g)
            if (model->pegs[g][p] == c)
                ++black[g];
        for (const auto& occ : model->occurrences[c])
            if (count[c] < occ.count)
                ++matched[occ.guess];
        ++count[c];
        prefix.push_back(c);
    }

    void undo()
    {
        const Color c = prefix.back();
        prefix.pop_back();
        const std::size_t p = prefix.size();
        --count[c];
        for (const auto& occ : model->occurrences[c])
            if (count[c] < occ.count)
                --matched[occ.guess];
        for (std::size_t g = 0; g < model->guess_count; ++g)
            if (model->pegs[g][p] == c)
                --black[g];
    }

    // Black and color-match targets are still within reach of the suffix.
    bool consistent() const
    {
        const std::size_t p = prefix.size();
        const std::size_t rest = remaining();
        for (std::size_t g = 0; g < model->guess_count; ++g) {
            const std::uint32_t bt = model->black_target[g];
            if (black[g] > bt || black[g] + model->matchable[g][p] < bt)
                return false;
            const std::uint32_t tt = model->total_target[g];
            if (matched[g] > tt)
                return false;
            const std::size_t room = std::min<std::size_t>(rest, model->allowed_total[g] - matched[g]);
            if (matched[g] + room < tt)
                return false;
        }
        return true;
    }

    bool blacks_settled() const { return black == model->black_target; }
};

// Once every guess has its full black count, a suffix position only forbids
// the colors the guesses show there. What is left is a question about color
// counts: pick how many of each color to add, colors in ascending order, then
// check the copies can be laid out on the free positions.
class CountSearch
{
public:
    explicit CountSearch(const Tally& tally)
      : _m(*tally.model),
        _from(tally.position()),
        _count(tally.count),
        _matched(tally.matched),
        _slack(_m.guess_count, 0),
        _extra(std::size_t{_m.kappa} + 1, 0)
    {
    }

    bool feasible()
    {
        const std::size_t rest = _m.length - _from;
        for (std::size_t g = 0; g < _m.guess_count; ++g) {
            _slack[g] = std::int64_t{_m.allowed_total[g]} - _matched[g];
            const std::int64_t need = std::int64_t{_m.total_target[g]} - _matched[g];
            if (need < 0 || need > _slack[g] || need > static_cast<std::int64_t>(rest))
                return false;
        }
        _extra_total = 0;
        return decide(1);
    }

private:
    bool decide(Color c)
    {
        if (c > _m.kappa)
            return layout_fits();
        if (_m.banned[c])
            return decide(c + 1);

        const auto& occs = _m.occurrences[c];
        const std::uint32_t have = _count[c];
        for (const auto& occ : occs)
            _slack[occ.guess] -= occ.count - std::min(have, occ.count);

        bool found = false;
        const std::uint32_t top = std::max(have, _m.cap[c]);
        const std::size_t rest = _m.length - _from;
        const std::size_t slots = have < top ? open_slots(c) : 0;
        for (std::uint32_t level = have; level <= top && !found; ++level) {
            const std::uint32_t add = level - have;
            if (add > slots && add > 0)
                break;
            if (_extra_total + add > rest)
                break;

            bool ok = true;
            for (const auto& occ : occs) {
                const std::uint32_t gain = std::min(level, occ.count) - std::min(have, occ.count);
                _matched[occ.guess] += gain;
                const std::int64_t m = _matched[occ.guess];
                const std::int64_t t = _m.total_target[occ.guess];
                if (m > t || m + _slack[occ.guess] < t)
                    ok = false;
            }
            _extra[c] = add;
            _extra_total += add;
            if (ok && add > 0)
                ok = needs_fit();
            if (ok)
                found = decide(c + 1);
            _extra_total -= add;
            _extra[c] = 0;
            for (const auto& occ : occs)
                _matched[occ.guess] -= std::min(level, occ.count) - std::min(have, occ.count);
        }

        for (const auto& occ : occs)
            _slack[occ.guess] += occ.count - std::min(have, occ.count);
        return found;
    }

    // Each new copy raises a guess's match count by at most one.
    bool needs_fit() const
    {
        const std::int64_t free = static_cast<std::int64_t>(_m.length - _from - _extra_total);
        for (std::size_t g = 0; g < _m.guess_count; ++g)
            if (std::int64_t{_m.total_target[g]} - _matched[g] > free)
                return false;
        return true;
    }

    std::size_t open_slots(Color c) const
    {
        std::size_t n = 0;
        for (std::size_t p = _from; p < _m.length; ++p)
            if (!_m.forbidden[p][c])
                ++n;
        return n;
    }

    bool usable(std::size_t p, Color c) const { return !_m.forbidden[p][c] && !_m.banned[c]; }

    bool augment(Color c, std::vector<Color>& owner, std::vector<char>& visited)
    {
        for (std::size_t p = _from; p < _m.length; ++p) {
            if (visited[p] || !usable(p, c))
                continue;
            visited[p] = 1;
            if (owner[p] == 0 || augment(owner[p], owner, visited)) {
                owner[p] = c;
                return true;
            }
        }
        return false;
    }

    // Bipartite b-matching of color copies onto suffix positions. Required
    // copies go first; colors already at their cap then pad the rest.
    bool layout_fits()
    {
        const std::size_t rest = _m.length - _from;
        std::vector<Color> owner(_m.length, 0);
        std::vector<char> visited(_m.length, 0);
        std::size_t placed = 0;
        for (Color c = 1; c <= _m.kappa; ++c) {
            for (std::uint32_t k = 0; k < _extra[c]; ++k) {
                std::fill(visited.begin(), visited.end(), 0);
                if (!augment(c, owner, visited))
                    return false;
                ++placed;
            }
        }
        for (Color c = 1; c <= _m.kappa && placed < rest; ++c) {
            if (_m.banned[c] || _count[c] + _extra[c] < _m.cap[c])
                continue;
            for (;;) {
                std::fill(visited.begin(), visited.end(), 0);
                if (!augment(c, owner, visited))
                    break;
                if (++placed == rest)
                    break;
            }
        }
        return placed == rest;
    }

    const Model& _m;
    std::size_t _from;
    std::vector<std::uint32_t> _count;
    std::vector<std::uint32_t> _matched;
    std::vector<std::int64_t> _slack;
    std::vector<std::uint32_t> _extra;
    std::size_t _extra_total = 0;
};

// Extends a settled prefix to the lexicographically smallest solution, fixing
// one position at a time and keeping only colors whose suffix stays feasible.
bool complete_greedily(Tally& tally)
{
    const Model& m = *tally.model;
    if (!CountSearch(tally).feasible())
        return false;
    while (tally.remaining() > 0) {
        const std::size_t p = tally.position();
        bool extended = false;
        for (Color c = 1; c <= m.kappa && !extended; ++c) {
            if (m.banned[c] || m.forbidden[p][c])
                continue;
            tally.place(c);
            if (tally.consistent() && CountSearch(tally).feasible())
                extended = true;
            else
                tally.undo();
        }
        if (!extended)
            return false;
    }
    return true;
}

struct KeyHash
{
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t v : key) {
            h ^= v;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

// Depth-first search over positions in order and colors in ascending order,
// remembering (position, capped color counts, black counts) states that are
// known to have no completion.
class Backtracker
{
public:
    explicit Backtracker(const Model& m)
      : _m(m), _tally(m)
    {
    }

    // First solution in lexicographic order, optionally with the first peg fixed.
    std::optional<Code> first(std::optional<Color> lead = std::nullopt)
    {
        if (lead) {
            if (_m.banned[*lead])
                return std::nullopt;
            _tally.place(*lead);
        }
        if (!_tally.consistent())
            return std::nullopt;
        if (!find_first())
            return std::nullopt;
        return Code(_tally.prefix);
    }

    Enumeration all(std::size_t cap)
    {
        Enumeration out;
        _limit = cap + 1;
        if (_tally.consistent())
            collect(out.solutions);
        if (out.solutions.size() > cap) {
            out.solutions.erase(out.solutions.begin() + static_cast<std::ptrdiff_t>(cap), out.solutions.end());
            out.truncated = true;
        }
        return out;
    }

private:
    std::vector<std::uint32_t> key() const
    {
        std::vector<std::uint32_t> k;
        k.reserve(1 + _m.kappa + _m.guess_count);
        k.push_back(static_cast<std::uint32_t>(_tally.position()));
        for (Color c = 1; c <= _m.kappa; ++c)
            k.push_back(std::min(_tally.count[c], _m.cap[c]));
        k.insert(k.end(), _tally.black.begin(), _tally.black.end());
        return k;
    }

    void remember(std::vector<std::uint32_t> k)
    {
        if (_dead.size() >= kMemoLimit)
            _dead.clear();
        _dead.insert(std::move(k));
    }

    bool find_first()
    {
        if (_tally.remaining() == 0)
            return true;
        auto k = key();
        if (_dead.contains(k))
            return false;
        if (_tally.blacks_settled()) {
            const std::size_t mark = _tally.position();
            if (complete_greedily(_tally))
                return true;
            while (_tally.position() > mark)
                _tally.undo();
            remember(std::move(k));
            return false;
        }
        for (Color c = 1; c <= _m.kappa; ++c) {
            if (_m.banned[c])
                continue;
            _tally.place(c);
            if (_tally.consistent() && find_first())
                return true;
            _tally.undo();
        }
        remember(std::move(k));
        return false;
    }

    void collect(std::vector<Code>& out)
    {
        if (_tally.remaining() == 0) {
            out.emplace_back(_tally.prefix);
            return;
        }
        auto k = key();
        if (_dead.contains(k))
            return;
        if (_tally.blacks_settled() && !CountSearch(_tally).feasible()) {
            remember(std::move(k));
            return;
        }
        const std::size_t before = out.size();
        for (Color c = 1; c <= _m.kappa && out.size() < _limit; ++c) {
            if (_m.banned[c])
                continue;
            _tally.place(c);
            if (_tally.consistent())
                collect(out);
            _tally.undo();
        }
        if (out.size() == before)
            remember(std::move(k));
    }

    static constexpr std::size_t kMemoLimit = 4'000'000;

    const Model& _m;
    Tally _tally;
    std::unordered_set<std::vector<std::uint32_t>, KeyHash> _dead;
    std::size_t _limit = 0;
};

// Odometer over all kappa^length codes in lexicographic order.
template <typename Visit>
void walk_codes(const MspInstance& instance, std::uint64_t cap, Visit&& visit)
{
    if (code_space_size(instance.kappa(), instance.length()) > cap)
        throw ResourceLimit("exhaustive search over " + std::to_string(instance.kappa()) + "^" +
                            std::to_string(instance.length()) +
                            " codes exceeds the cap of " + std::to_string(cap));
    std::vector<Color> pegs(instance.length(), 1);
    for (;;) {
        Code code(pegs);
        if (verify(instance, code) && !visit(code))
            return;
        std::size_t i = pegs.size();
        while (i > 0 && pegs[i - 1] == instance.kappa()) {
            pegs[i - 1] = 1;
            --i;
        }
        if (i == 0)
            return;
        ++pegs[i - 1];
    }
}

std::optional<Code> first_parallel(const Model& model, unsigned threads)
{
    std::vector<std::optional<Code>> by_lead(std::size_t{model.kappa} + 1);
    std::atomic<Color> next{1};
    auto worker = [&] {
        for (Color c = next++; c <= model.kappa; c = next++)
            by_lead[c] = Backtracker(model).first(c);
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
        f.get();
    for (Color c = 1; c <= model.kappa; ++c)
        if (by_lead[c])
            return by_lead[c];
    return std::nullopt;
}

} // namespace

SolveOutcome solve(const MspInstance& instance, const SolveOptions& options)
{
    SolveOutcome out;
    if (options.mode == SolveMode::Exhaustive) {
        walk_codes(instance, options.exhaustive_cap, [&](const Code& code) {
            out.witness = code;
            return false;
        });
    } else {
        const Model model(instance);
        if (options.threads > 1 && instance.kappa() > 1)
            out.witness = first_parallel(model, std::min<unsigned>(options.threads, instance.kappa()));
        else
            out.witness = Backtracker(model).first();
    }
    out.satisfiable = out.witness.has_value();
    return out;
}

Enumeration enumerate_all(const MspInstance& instance, std::size_t cap, const SolveOptions& options)
{
    if (cap == 0)
        throw InvalidInput("enumeration cap must be positive");

    const bool small = code_space_size(instance.kappa(), instance.length()) <= options.exhaustive_cap;
    if (options.mode == SolveMode::Exhaustive || small) {
        Enumeration out;
        walk_codes(instance, options.exhaustive_cap, [&](const Code& code) {
            if (out.solutions.size() == cap) {
                out.truncated = true;
                return false;
            }
            out.solutions.push_back(code);
            return true;
        });
        return out;
    }
    const Model model(instance);
    return Backtracker(model).all(cap);
}

} // namespace msp
