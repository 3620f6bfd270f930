#include "msp/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "msp/error.hpp"

namespace msp::io {

namespace {

// Colors and vertex ids stay well inside 32 bits.
constexpr std::uint64_t kMaxId = std::uint64_t{1} << 31;

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && blank(line[i]))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !blank(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t to_uint(std::string_view token, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(ParseErrorKind::BadInteger, line,
                         std::string(what) + " '" + std::string(token) + "' is not a decimal integer");
    return value;
}

// Splits text into lines, dropping a trailing '\r' from each.
class Lines
{
public:
    explicit Lines(std::string_view text)
      : _text(text)
    {
    }

    bool next(std::string_view& line)
    {
        if (_pos >= _text.size())
            return false;
        const std::size_t end = std::min(_text.find('\n', _pos), _text.size());
        line = _text.substr(_pos, end - _pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        _pos = end + 1;
        ++_number;
        return true;
    }

    std::size_t number() const noexcept { return _number; }
    std::size_t last_line() const noexcept { return _number == 0 ? 1 : _number; }

private:
    std::string_view _text;
    std::size_t _pos = 0;
    std::size_t _number = 0;
};

} // namespace

MspInstance parse_instance(std::string_view text)
{
    Lines lines(text);
    std::string_view line;
    bool have_header = false;
    Color kappa = 0;
    std::size_t length = 0;
    std::vector<ScoredGuess> guesses;

    while (lines.next(line)) {
        const std::size_t ln = lines.number();
        const auto tokens = split(line);
        if (tokens.empty() || tokens[0].front() == '#')
            continue;

        if (!have_header) {
            if (tokens[0] != "msp")
                throw ParseError(ParseErrorKind::MissingHeader, ln,
                                 "expected 'msp <kappa> <length>' before any other line");
            if (tokens.size() != 3)
                throw ParseError(ParseErrorKind::MalformedHeader, ln,
                                 "header must be 'msp <kappa> <length>'");
            const auto k = to_uint(tokens[1], ln, "kappa");
            const auto l = to_uint(tokens[2], ln, "length");
            if (k < 1 || k > kMaxId || l < 1 || l > kMaxId)
                throw ParseError(ParseErrorKind::MalformedHeader, ln,
                                 "kappa and length must be between 1 and 2^31");
            kappa = static_cast<Color>(k);
            length = static_cast<std::size_t>(l);
            have_header = true;
            continue;
        }

        if (tokens[0] == "msp")
            throw ParseError(ParseErrorKind::DuplicateHeader, ln, "second 'msp' header");
        if (tokens[0] != "g")
            throw ParseError(ParseErrorKind::UnknownDirective, ln,
                             "unknown line type '" + std::string(tokens[0]) + "'");

        std::size_t sep = 0;
        for (std::size_t i = 1; i < tokens.size(); ++i)
            if (tokens[i] == ":") {
                sep = i;
                break;
            }
        if (sep == 0)
            throw ParseError(ParseErrorKind::MissingSeparator, ln, "guess line needs ' : '");

        std::vector<Color> pegs;
        for (std::size_t i = 1; i < sep; ++i) {
            const auto c = to_uint(tokens[i], ln, "color");
            if (c < 1 || c > kappa)
                throw ParseError(ParseErrorKind::ColorOutOfRange, ln,
                                 "color " + std::string(tokens[i]) + " outside 1.." +
                                     std::to_string(kappa));
            pegs.push_back(static_cast<Color>(c));
        }
        if (pegs.size() != length)
            throw ParseError(ParseErrorKind::WrongPegCount, ln,
                             "guess has " + std::to_string(pegs.size()) + " pegs, expected " +
                                 std::to_string(length));
        if (tokens.size() != sep + 3)
            throw ParseError(ParseErrorKind::MissingSeparator, ln,
                             "expected exactly two score values after ':'");
        const auto b = to_uint(tokens[sep + 1], ln, "black count");
        const auto w = to_uint(tokens[sep + 2], ln, "white count");
        if (b > length || w > length || b + w > length)
            throw ParseError(ParseErrorKind::ScoreOutOfRange, ln,
                             "black + white exceeds length " + std::to_string(length));
        guesses.push_back({Code(std::move(pegs)),
                           Score{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(w)}});
    }

    if (!have_header)
        throw ParseError(ParseErrorKind::MissingHeader, lines.last_line(),
                         "no 'msp <kappa> <length>' header found");
    return MspInstance(Palette(kappa), length, std::move(guesses));
}

std::string serialize_instance(const MspInstance& instance)
{
    std::ostringstream out;
    out << "msp " << instance.kappa() << ' ' << instance.length() << '\n';
    for (const auto& [guess, declared] : instance.guesses())
        out << "g " << guess.to_string() << " : " << declared.black << ' ' << declared.white
            << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    Lines lines(text);
    std::string_view line;
    bool have_header = false;
    std::size_t vertices = 0;
    std::size_t declared_edges = 0;
    std::vector<Graph::Edge> edges;
    std::set<Graph::Edge> seen;

    while (lines.next(line)) {
        const std::size_t ln = lines.number();
        const auto tokens = split(line);
        if (tokens.empty() || tokens[0] == "c")
            continue;

        if (tokens[0] == "p") {
            if (have_header)
                throw ParseError(ParseErrorKind::DuplicateHeader, ln, "second 'p' header");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(ParseErrorKind::MalformedHeader, ln,
                                 "header must be 'p edge <vertices> <edges>'");
            const auto v = to_uint(tokens[2], ln, "vertex count");
            const auto e = to_uint(tokens[3], ln, "edge count");
            if (v < 1 || v > kMaxId || e > kMaxId)
                throw ParseError(ParseErrorKind::MalformedHeader, ln,
                                 "vertex count must be between 1 and 2^31");
            vertices = static_cast<std::size_t>(v);
            declared_edges = static_cast<std::size_t>(e);
            have_header = true;
            continue;
        }
        if (tokens[0] != "e")
            throw ParseError(ParseErrorKind::UnknownDirective, ln,
                             "unknown line type '" + std::string(tokens[0]) + "'");
        if (!have_header)
            throw ParseError(ParseErrorKind::MissingHeader, ln, "edge before 'p edge' header");
        if (tokens.size() != 3)
            throw ParseError(ParseErrorKind::MalformedHeader, ln, "edge line must be 'e <u> <v>'");

        const auto u = to_uint(tokens[1], ln, "vertex");
        const auto v = to_uint(tokens[2], ln, "vertex");
        if (u < 1 || v < 1 || u > vertices || v > vertices)
            throw ParseError(ParseErrorKind::VertexOutOfRange, ln,
                             "endpoint outside 1.." + std::to_string(vertices));
        if (u == v)
            throw ParseError(ParseErrorKind::SelfLoop, ln,
                             "self-loop on vertex " + std::to_string(u));
        const auto a = static_cast<Vertex>(u);
        const auto b = static_cast<Vertex>(v);
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw ParseError(ParseErrorKind::DuplicateEdge, ln,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " already listed");
        if (edges.size() == declared_edges)
            throw ParseError(ParseErrorKind::EdgeCountMismatch, ln,
                             "more edges than the " + std::to_string(declared_edges) + " declared");
        edges.emplace_back(a, b);
    }

    if (!have_header)
        throw ParseError(ParseErrorKind::MissingHeader, lines.last_line(),
                         "no 'p edge' header found");
    if (edges.size() != declared_edges)
        throw ParseError(ParseErrorKind::EdgeCountMismatch, lines.last_line(),
                         "header declares " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(edges.size()));
    return Graph(vertices, std::move(edges));
}

std::string serialize_graph(const Graph& graph)
{
    std::ostringstream out;
    out << "p edge " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& [u, v] : graph.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Code parse_code(std::string_view text)
{
    std::vector<Color> pegs;
    for (auto token : split(text)) {
        if (token == "\n" || token == "\r")
            continue;
        const auto c = to_uint(token, 1, "color");
        if (c < 1 || c > kMaxId)
            throw ParseError(ParseErrorKind::ColorOutOfRange, 1,
                             "color " + std::string(token) + " is not a valid color");
        pegs.push_back(static_cast<Color>(c));
    }
    if (pegs.empty())
        throw ParseError(ParseErrorKind::WrongPegCount, 1, "code has no pegs");
    return Code(std::move(pegs));
}

Score parse_score(std::string_view text)
{
    const auto tokens = split(text);
    if (tokens.size() != 2)
        throw ParseError(ParseErrorKind::MissingSeparator, 1, "score must be 'black white'");
    const auto b = to_uint(tokens[0], 1, "black count");
    const auto w = to_uint(tokens[1], 1, "white count");
    if (b > kMaxId || w > kMaxId)
        throw ParseError(ParseErrorKind::ScoreOutOfRange, 1, "score value too large");
    return Score{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(w)};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace msp::io
