#include "msp/reduction.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "msp/error.hpp"

namespace msp {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
  : _vertex_count(vertex_count), _edges(std::move(edges))
{
    if (vertex_count == 0)
        throw InvalidInput("graph needs at least one vertex");
    std::set<Edge> seen;
    for (const auto& [u, v] : _edges) {
        if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside 1.." + std::to_string(vertex_count));
        if (u == v)
            throw InvalidInput("self-loop on vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InvalidInput("duplicate edge (" + std::to_string(u) + ", " +
                               std::to_string(v) + ")");
    }
}

bool Graph::is_cover(const std::set<Vertex>& cover) const
{
    return std::all_of(_edges.begin(), _edges.end(), [&](const Edge& e) {
        return cover.contains(e.first) || cover.contains(e.second);
    });
}

ReductionArtifact reduce(const Graph& graph, std::size_t cover_size, ReductionVariant variant)
{
    const std::size_t nv = graph.vertex_count();
    const std::size_t ne = graph.edge_count();
    if (cover_size < 1 || cover_size > nv)
        throw InvalidInput("cover size " + std::to_string(cover_size) + " outside 1.." +
                           std::to_string(nv));
    if (variant == ReductionVariant::Compact && cover_size == nv && cover_size == 1)
        throw PreconditionFailed(
            "compact reduction needs cover size != vertex count or cover size > 1, "
            "otherwise no vertex permutation keeps every cover vertex off its own slot");

    const ColorMap colors{nv, ne};
    const std::size_t length =
        variant == ReductionVariant::Standard ? 3 + 2 * nv + ne : 3 + nv + ne;
    const Color Y = colors.yes();
    const Color N = colors.no();

    std::vector<ScoredGuess> guesses;
    guesses.reserve(ne + 3);

    std::vector<Color> pegs(length, N);
    guesses.push_back({Code(pegs), Score{0, 0}});

    std::fill_n(pegs.begin(), 3, Y);
    guesses.push_back({Code(pegs), Score{3, 0}});

    for (std::size_t i = 0; i < ne; ++i) {
        const auto& [a, b] = graph.edges()[i];
        std::fill(pegs.begin(), pegs.end(), N);
        pegs[0] = colors.edge(i);
        pegs[1] = colors.vertex(a);
        pegs[2] = colors.vertex(b);
        guesses.push_back({Code(pegs), Score{0, 2}});
    }

    std::fill(pegs.begin(), pegs.end(), N);
    std::fill_n(pegs.begin(), 3, Y);
    for (std::size_t v = 1; v <= nv; ++v)
        pegs[2 + v] = colors.vertex(static_cast<Vertex>(v));
    guesses.push_back({Code(pegs), Score{3, static_cast<std::uint32_t>(cover_size)}});

    return ReductionArtifact{
        MspInstance(Palette(colors.kappa()), length, std::move(guesses)),
        colors,
        graph,
        cover_size,
        variant,
    };
}

std::set<Vertex> extract_cover(const ReductionArtifact& artifact, const Code& witness)
{
    if (!verify(artifact.instance, witness))
        throw InvalidInput("witness does not satisfy the reduced instance");
    std::set<Vertex> cover;
    for (Color c : witness.pegs())
        if (artifact.colors.is_vertex(c))
            cover.insert(static_cast<Vertex>(c));
    return cover;
}

Code construct_witness(const ReductionArtifact& artifact, const std::set<Vertex>& cover)
{
    const Graph& g = artifact.source;
    const std::size_t nv = g.vertex_count();
    for (Vertex v : cover)
        if (v < 1 || v > nv)
            throw InvalidInput("cover names vertex " + std::to_string(v) + " outside 1.." +
                               std::to_string(nv));
    if (cover.size() != artifact.cover_size)
        throw InvalidInput("cover has " + std::to_string(cover.size()) + " vertices, expected " +
                           std::to_string(artifact.cover_size));
    if (!g.is_cover(cover))
        throw InvalidInput("vertex set does not cover every edge");

    const ColorMap& colors = artifact.colors;
    const Color Y = colors.yes();
    std::vector<Color> pegs(artifact.instance.length(), Y);

    // Vertex block starts right after the three leading Y pegs; the standard
    // layout puts an all-Y block of #V pegs in front of it.
    const std::size_t vertex_block =
        artifact.variant == ReductionVariant::Standard ? 3 + nv : 3;
    const std::vector<Vertex> chosen(cover.begin(), cover.end());
    if (artifact.variant == ReductionVariant::Standard) {
        for (std::size_t i = 0; i < chosen.size(); ++i)
            pegs[vertex_block + i] = colors.vertex(chosen[i]);
    } else if (chosen.size() >= 2) {
        // Cyclic shift among the cover's own slots: w_k goes to w_{k+1}'s slot.
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const Vertex slot = chosen[(i + 1) % chosen.size()];
            pegs[vertex_block + slot - 1] = colors.vertex(chosen[i]);
        }
    } else {
        const Vertex only = chosen.front();
        const Vertex slot = only % static_cast<Vertex>(nv) + 1;
        pegs[vertex_block + slot - 1] = colors.vertex(only);
    }

    std::size_t at = vertex_block + nv;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& [a, b] = g.edges()[i];
        if (cover.contains(a) != cover.contains(b))
            pegs[at++] = colors.edge(i);
    }
    return Code(std::move(pegs));
}

bool brute_force_vertex_cover(const Graph& graph, std::size_t cover_size)
{
    const std::size_t nv = graph.vertex_count();
    if (cover_size < 1 || cover_size > nv)
        throw InvalidInput("cover size " + std::to_string(cover_size) + " outside 1.." +
                           std::to_string(nv));
    if (nv > kBruteForceVertexLimit)
        throw ResourceLimit("brute-force vertex cover is limited to " +
                            std::to_string(kBruteForceVertexLimit) + " vertices, graph has " +
                            std::to_string(nv));

    std::vector<std::uint32_t> edge_masks;
    edge_masks.reserve(graph.edge_count());
    for (const auto& [a, b] : graph.edges())
        edge_masks.push_back((1u << (a - 1)) | (1u << (b - 1)));

    const std::uint32_t end = 1u << nv;
    for (std::uint32_t subset = 0; subset < end; ++subset) {
        if (static_cast<std::size_t>(std::popcount(subset)) != cover_size)
            continue;
        const bool covers = std::all_of(edge_masks.begin(), edge_masks.end(),
                                        [&](std::uint32_t e) { return (e & subset) != 0; });
        if (covers)
            return true;
    }
    return false;
}

} // namespace msp
