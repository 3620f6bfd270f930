// oracles.hpp -- test-only reference implementations and generators
//
// Nothing here calls into the search engines. The scorer sorts and merges
// multisets instead of counting, and the vertex-cover check branches on
// uncovered edges instead of walking subsets.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "msp/core.hpp"
#include "msp/reduction.hpp"
#include "msp/solver.hpp"

namespace msp::testing {

inline Score oracle_score(const std::vector<Color>& x, const std::vector<Color>& y)
{
    std::uint32_t black = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        black += x[i] == y[i] ? 1 : 0;
    auto xs = x;
    auto ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<Color> common;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
    return Score{black, static_cast<std::uint32_t>(common.size()) - black};
}

inline Score oracle_score(const Code& x, const Code& y)
{
    return oracle_score(std::vector<Color>(x.pegs().begin(), x.pegs().end()),
                        std::vector<Color>(y.pegs().begin(), y.pegs().end()));
}

/// Calls f(pegs) for every code of the given shape, in lexicographic order.
template <typename F>
void for_each_code(Color kappa, std::size_t length, F&& f)
{
    std::vector<Color> pegs(length, 1);
    for (;;) {
        f(pegs);
        std::size_t i = length;
        while (i > 0 && pegs[i - 1] == kappa) {
            pegs[i - 1] = 1;
            --i;
        }
        if (i == 0)
            return;
        ++pegs[i - 1];
    }
}

inline std::vector<Code> oracle_solutions(const MspInstance& instance)
{
    std::vector<Code> out;
    for_each_code(instance.kappa(), instance.length(), [&](const std::vector<Color>& pegs) {
        for (const auto& [guess, declared] : instance.guesses()) {
            std::vector<Color> g(guess.pegs().begin(), guess.pegs().end());
            if (oracle_score(g, pegs) != declared)
                return;
        }
        out.emplace_back(pegs);
    });
    return out;
}

namespace detail {

inline bool cover_within(const std::vector<Graph::Edge>& edges, std::vector<char>& taken,
                         std::size_t budget)
{
    for (const auto& [a, b] : edges) {
        if (taken[a] || taken[b])
            continue;
        if (budget == 0)
            return false;
        for (Vertex pick : {a, b}) {
            taken[pick] = 1;
            const bool ok = cover_within(edges, taken, budget - 1);
            taken[pick] = 0;
            if (ok)
                return true;
        }
        return false;
    }
    return true;
}

} // namespace detail

/// A cover of exactly n vertices exists iff a cover of at most n exists,
/// since any vertex can be added to a cover.
inline bool oracle_has_cover(const Graph& graph, std::size_t n)
{
    std::vector<char> taken(graph.vertex_count() + 1, 0);
    return n <= graph.vertex_count() && detail::cover_within(graph.edges(), taken, n);
}

/// Every labeled simple graph on v vertices, edge subsets in binary order.
inline std::vector<Graph> all_labeled_graphs(std::size_t v)
{
    std::vector<Graph::Edge> pairs;
    for (Vertex a = 1; a <= v; ++a)
        for (Vertex b = a + 1; b <= v; ++b)
            pairs.emplace_back(a, b);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        out.emplace_back(v, std::move(edges));
    }
    return out;
}

inline Graph random_graph(std::size_t vertices, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    std::vector<Graph::Edge> edges;
    for (Vertex a = 1; a <= vertices; ++a)
        for (Vertex b = a + 1; b <= vertices; ++b)
            if (coin(rng))
                edges.emplace_back(a, b);
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
        if (coin(rng))
            std::swap(e.first, e.second);
    return Graph(vertices, std::move(edges));
}

inline Code random_code(Color kappa, std::size_t length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<Color> color(1, kappa);
    std::vector<Color> pegs(length);
    for (auto& p : pegs)
        p = color(rng);
    return Code(std::move(pegs));
}

/// A random score of valid shape (black + white <= length).
inline Score random_score(std::size_t length, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> b(0, static_cast<std::uint32_t>(length));
    const auto black = b(rng);
    std::uniform_int_distribution<std::uint32_t> w(0, static_cast<std::uint32_t>(length) - black);
    return Score{black, w(rng)};
}

/// Small random instance. Each declared score is, with equal odds, the true
/// score against a hidden random code or a random score of valid shape.
inline MspInstance random_instance(Color kappa, std::size_t length, std::size_t guesses,
                                   std::mt19937_64& rng)
{
    std::bernoulli_distribution honest(0.5);
    const Code secret = random_code(kappa, length, rng);
    std::vector<ScoredGuess> list;
    for (std::size_t i = 0; i < guesses; ++i) {
        Code g = random_code(kappa, length, rng);
        Score s = honest(rng) ? oracle_score(g, secret) : random_score(length, rng);
        list.push_back({std::move(g), s});
    }
    return MspInstance(Palette(kappa), length, std::move(list));
}

} // namespace msp::testing
