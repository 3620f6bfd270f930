// solver.hpp -- Mastermind satisfiability instances, witness checking and search

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "msp/core.hpp"

namespace msp {

struct ScoredGuess
{
    Code guess;
    Score declared;

    bool operator==(const ScoredGuess&) const = default;
};

/// A set of scored guesses over a fixed palette and code length.
///
/// Duplicate guesses are allowed, and so are declared scores that no code can
/// produce; such instances are simply unsatisfiable.
class MspInstance
{
public:
    /// Throws InvalidInput if a guess has the wrong length, a peg outside the
    /// palette, or a declared score with black + white > length.
    MspInstance(Palette palette, std::size_t length, std::vector<ScoredGuess> guesses = {});

    const Palette& palette() const noexcept { return _palette; }
    Color kappa() const noexcept { return _palette.kappa(); }
    std::size_t length() const noexcept { return _length; }
    const std::vector<ScoredGuess>& guesses() const noexcept { return _guesses; }

    /// Returns a copy with one more guess appended.
    MspInstance with_guess(ScoredGuess extra) const;

    bool operator==(const MspInstance&) const = default;

private:
    Palette _palette;
    std::size_t _length;
    std::vector<ScoredGuess> _guesses;
};

struct SolveOutcome
{
    bool satisfiable = false;
    std::optional<Code> witness;
};

enum class SolveMode {
    Exhaustive,
    Backtrack,
};

struct SolveOptions
{
    SolveMode mode = SolveMode::Backtrack;
    /// Largest kappa^length the exhaustive engine will walk.
    std::uint64_t exhaustive_cap = 100'000'000;
    /// Worker count for the backtracking engine; the first peg's colors are
    /// split across workers. 1 keeps the search on the calling thread.
    unsigned threads = 1;
};

/// Checks a candidate against every guess in O(#guesses * (length + kappa)).
///
/// Throws InvalidInput if the candidate has the wrong length or a peg outside
/// the palette.
bool verify(const MspInstance& instance, const Code& candidate);

/// Decides the instance. Both modes return the lexicographically smallest
/// solution as the witness.
///
/// Throws ResourceLimit in exhaustive mode when kappa^length exceeds the cap.
SolveOutcome solve(const MspInstance& instance, const SolveOptions& options = {});

struct Enumeration
{
    std::vector<Code> solutions;
    /// Set when more than `cap` solutions exist.
    bool truncated = false;
};

/// All solutions in lexicographic order, at most `cap` of them.
///
/// Walks every code when kappa^length fits under options.exhaustive_cap and
/// falls back to backtracking enumeration otherwise. Throws InvalidInput if
/// cap is 0.
Enumeration enumerate_all(const MspInstance& instance, std::size_t cap,
                          const SolveOptions& options = {});

/// kappa^length, saturating at UINT64_MAX.
std::uint64_t code_space_size(Color kappa, std::size_t length) noexcept;

} // namespace msp
