// reduction.hpp -- Vertex Cover to Mastermind satisfiability, and back

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "msp/solver.hpp"

namespace msp {

using Vertex = std::uint32_t;

/// A simple undirected graph on vertices 1..vertex_count.
///
/// Edges keep the orientation and order they were given in; (u, v) and (v, u)
/// count as the same edge.
class Graph
{
public:
    using Edge = std::pair<Vertex, Vertex>;

    /// Throws InvalidInput on vertex_count == 0, endpoints outside
    /// 1..vertex_count, self-loops or duplicate edges.
    explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {});

    std::size_t vertex_count() const noexcept { return _vertex_count; }
    std::size_t edge_count() const noexcept { return _edges.size(); }
    const std::vector<Edge>& edges() const noexcept { return _edges; }

    /// True iff every edge has at least one endpoint in `cover`.
    bool is_cover(const std::set<Vertex>& cover) const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t _vertex_count;
    std::vector<Edge> _edges;
};

/// Color ids used by a reduced instance. Vertex i has color i, edge i (1-based,
/// input order) has color #V + i, then Y and N.
struct ColorMap
{
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;

    Color vertex(Vertex v) const noexcept { return static_cast<Color>(v); }
    Color edge(std::size_t index) const noexcept
    {
        return static_cast<Color>(vertex_count + index + 1);
    }
    Color yes() const noexcept { return static_cast<Color>(vertex_count + edge_count + 1); }
    Color no() const noexcept { return static_cast<Color>(vertex_count + edge_count + 2); }
    Color kappa() const noexcept { return no(); }

    bool is_vertex(Color c) const noexcept { return c >= 1 && c <= vertex_count; }

    bool operator==(const ColorMap&) const = default;
};

enum class ReductionVariant {
    /// length 3 + 2#V + #E
    Standard,
    /// length 3 + #V + #E; vertices are permuted off their own slots
    Compact,
};

struct ReductionArtifact
{
    MspInstance instance;
    ColorMap colors;
    Graph source;
    std::size_t cover_size;
    ReductionVariant variant;
};

/// Builds the Mastermind instance that is satisfiable iff `graph` has a vertex
/// cover of exactly `cover_size` vertices.
///
/// Guesses, in order:
///   1. all N, scored (0, 0)
///   2. Y Y Y then N, scored (3, 0)
///   3. per edge i = (a, b): e_i a b then N, scored (0, 2)
///   4. Y Y Y v_1 .. v_#V then N, scored (3, cover_size)
///
/// Throws InvalidInput unless 1 <= cover_size <= #V. The compact variant
/// additionally throws PreconditionFailed when cover_size == #V == 1, where no
/// vertex can be moved off its own slot.
ReductionArtifact reduce(const Graph& graph, std::size_t cover_size,
                         ReductionVariant variant = ReductionVariant::Standard);

/// The vertices whose colors appear in a verified witness.
///
/// Throws InvalidInput if the witness does not satisfy the reduced instance.
std::set<Vertex> extract_cover(const ReductionArtifact& artifact, const Code& witness);

/// Builds a satisfying code from a vertex cover of the artifact's size.
///
/// Layout (standard): Y x3 | Y x#V | cover colors ascending, Y padding |
/// colors of edges with exactly one endpoint in the cover, Y padding.
/// The compact variant drops the all-Y block and rotates cover colors so none
/// sits in the slot that guess 4 gives it.
///
/// Throws InvalidInput if `cover` is not a cover, has the wrong size, or names
/// a vertex outside the graph.
Code construct_witness(const ReductionArtifact& artifact, const std::set<Vertex>& cover);

/// Largest vertex count brute_force_vertex_cover accepts.
inline constexpr std::size_t kBruteForceVertexLimit = 20;

/// Exhaustive check over all cover_size-subsets of vertices.
///
/// Throws InvalidInput unless 1 <= cover_size <= #V, and ResourceLimit above
/// kBruteForceVertexLimit vertices.
bool brute_force_vertex_cover(const Graph& graph, std::size_t cover_size);

} // namespace msp
