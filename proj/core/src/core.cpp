#include "msp/core.hpp"

#include <algorithm>
#include <sstream>

#include "msp/error.hpp"

namespace msp {

Palette::Palette(Color kappa)
  : _kappa(kappa)
{
    if (kappa < 1)
        throw InvalidInput("palette needs at least one color");
}

Code::Code(std::vector<Color> pegs)
  : _pegs(std::move(pegs))
{
    if (_pegs.empty())
        throw InvalidInput("code must have at least one peg");
    if (std::find(_pegs.begin(), _pegs.end(), Color{0}) != _pegs.end())
        throw InvalidInput("color 0 is reserved and cannot appear in a code");
}

Code::Code(std::initializer_list<Color> pegs)
  : Code(std::vector<Color>(pegs))
{
}

bool Code::fits(const Palette& palette) const noexcept
{
    return std::all_of(_pegs.begin(), _pegs.end(),
                       [&](Color c) { return palette.contains(c); });
}

std::string Code::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < _pegs.size(); ++i) {
        if (i > 0)
            out << ' ';
        out << _pegs[i];
    }
    return out.str();
}

std::string Score::to_string() const
{
    return std::to_string(black) + " " + std::to_string(white);
}

ColorMultiset::ColorMultiset(const Code& code)
  : _total(code.length())
{
    for (Color c : code.pegs())
        ++_counts[c];
}

std::size_t ColorMultiset::count(Color c) const noexcept
{
    auto it = _counts.find(c);
    return it == _counts.end() ? 0 : it->second;
}

namespace {

void check_pair(const Code& x, const Code& y, const Palette& palette)
{
    if (x.length() != y.length())
        throw InvalidInput("codes have different lengths (" + std::to_string(x.length()) +
                           " vs " + std::to_string(y.length()) + ")");
    if (!x.fits(palette) || !y.fits(palette))
        throw InvalidInput("peg outside palette 1.." + std::to_string(palette.kappa()));
}

} // namespace

Score score(const Code& x, const Code& y, const Palette& palette)
{
    check_pair(x, y, palette);

    std::vector<std::uint32_t> xs(std::size_t{palette.kappa()} + 1, 0);
    std::vector<std::uint32_t> ys(std::size_t{palette.kappa()} + 1, 0);
    std::uint32_t black = 0;
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (x[i] == y[i])
            ++black;
        ++xs[x[i]];
        ++ys[y[i]];
    }
    std::uint32_t w = 0;
    for (Color c = 1; c <= palette.kappa(); ++c)
        w += std::min(xs[c], ys[c]);
    return Score{black, w - black};
}

Score naive_score(const Code& x, const Code& y, const Palette& palette)
{
    check_pair(x, y, palette);

    const std::size_t len = x.length();
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (x[i] == y[i])
            ++b;

    std::uint32_t w = 0;
    for (Color j = 1; j <= palette.kappa(); ++j) {
        std::uint32_t in_x = 0;
        std::uint32_t in_y = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (x[i] == j)
                ++in_x;
            if (y[i] == j)
                ++in_y;
        }
        w += in_x < in_y ? in_x : in_y;
    }
    return Score{b, w - b};
}

std::size_t rho1(const Code& x, const Code& y)
{
    if (x.length() != y.length())
        throw InvalidInput("rho1: codes have different lengths");
    std::size_t black = 0;
    for (std::size_t i = 0; i < x.length(); ++i)
        if (x[i] == y[i])
            ++black;
    return x.length() - black;
}

std::size_t rho2(const ColorMultiset& x, const ColorMultiset& y)
{
    if (x.total() != y.total())
        throw InvalidInput("rho2: multisets have different sizes");
    std::size_t w = 0;
    for (const auto& [color, n] : x.counts())
        w += std::min(n, y.count(color));
    return x.total() - w;
}

} // namespace msp
