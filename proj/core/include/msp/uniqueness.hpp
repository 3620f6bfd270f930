// uniqueness.hpp -- deciding whether an instance has exactly one solution

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "msp/solver.hpp"

namespace msp {

struct UniquenessReport
{
    bool satisfiable = false;
    bool unique = false;
    std::optional<Code> witness;
    /// Number of extended instances that were solved.
    std::size_t followups_tried = 0;
};

/// Every score pair (b, w - b) with b < length, in lexicographic order.
/// Includes pairs no code can produce, e.g. (length - 1, 1). The result has
/// length * (length + 3) / 2 entries. Throws InvalidInput if length < 1.
std::vector<Score> score_pairs_excluding_perfect(std::size_t length);

/// Finds a witness s, then solves the instance extended by (s -> p) for every
/// p from score_pairs_excluding_perfect. Any satisfiable extension is a
/// second solution, so the witness is unique iff all of them are NO. Stops at
/// the first satisfiable extension.
///
/// With options.threads > 1 the extensions are solved concurrently; the report
/// matches the sequential one.
UniquenessReport is_unique(const MspInstance& instance, const SolveOptions& options = {});

} // namespace msp
