// core.hpp -- colors, codes, the Mastermind score and its two residual distances

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace msp {

/// A color identifier. Valid colors are 1..kappa; 0 is never a valid color.
using Color = std::uint32_t;

/// The set of colors 1..kappa available to a game.
class Palette
{
public:
    /// Throws InvalidInput unless kappa >= 1.
    explicit Palette(Color kappa);

    Color kappa() const noexcept { return _kappa; }
    bool contains(Color c) const noexcept { return c >= 1 && c <= _kappa; }

    bool operator==(const Palette&) const = default;

private:
    Color _kappa;
};

/// An ordered tuple of pegs. Used for both guesses and candidate solutions.
///
/// A Code knows nothing about the palette it belongs to; it only guarantees
/// that it is non-empty and that no peg is the reserved color 0. Callers check
/// palette membership with `fits(palette)`.
class Code
{
public:
    /// Throws InvalidInput if `pegs` is empty or contains color 0.
    explicit Code(std::vector<Color> pegs);
    Code(std::initializer_list<Color> pegs);

    std::size_t length() const noexcept { return _pegs.size(); }
    std::span<const Color> pegs() const noexcept { return _pegs; }
    Color operator[](std::size_t i) const noexcept { return _pegs[i]; }

    /// True iff every peg lies in 1..palette.kappa().
    bool fits(const Palette& palette) const noexcept;

    /// Space-separated text form, e.g. "1 2 3 4".
    std::string to_string() const;

    bool operator==(const Code&) const = default;
    auto operator<=>(const Code&) const = default;

private:
    std::vector<Color> _pegs;
};

/// Black and white peg counts. `white` is w - b, never w.
struct Score
{
    std::uint32_t black = 0;
    std::uint32_t white = 0;

    /// Number of color matches regardless of position (the w of the score).
    std::uint32_t total() const noexcept { return black + white; }

    /// Text form "b w".
    std::string to_string() const;

    bool operator==(const Score&) const = default;
    auto operator<=>(const Score&) const = default;
};

/// The multiset projection of a code: per-color occurrence counts.
class ColorMultiset
{
public:
    ColorMultiset() = default;
    explicit ColorMultiset(const Code& code);

    std::size_t count(Color c) const noexcept;
    std::size_t total() const noexcept { return _total; }
    const std::map<Color, std::size_t>& counts() const noexcept { return _counts; }

    bool operator==(const ColorMultiset&) const = default;

private:
    std::map<Color, std::size_t> _counts;
    std::size_t _total = 0;
};

/// Mastermind score of x against y, using per-color counting arrays.
///
/// Throws InvalidInput if the lengths differ or a peg is outside the palette.
Score score(const Code& x, const Code& y, const Palette& palette);

/// Reference scorer: a literal nested-loop reading of the score definition.
/// Same contract as `score`; exists for differential testing.
Score naive_score(const Code& x, const Code& y, const Palette& palette);

/// Position-mismatch distance: length minus the black count.
std::size_t rho1(const Code& x, const Code& y);

/// Multiset distance: length minus the color-match count w.
///
/// This is half the size of the multiset symmetric difference; both are
/// metrics. Throws InvalidInput if the totals differ.
std::size_t rho2(const ColorMultiset& x, const ColorMultiset& y);

} // namespace msp
