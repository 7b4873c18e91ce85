#include "io.hpp"

#include <charconv>
#include <sstream>

#include "errors.hpp"

namespace swapsmith {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& tok, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw usage_error(std::string("invalid ") + what + ": '" + tok + "'");
    return value;
}

} // namespace

std::string write_graph(const LoopyMultigraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [p, m] : g.entries())
        out << p.a << " " << p.b << " " << m << "\n";
    return out.str();
}

LoopyMultigraph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty())
        throw usage_error("graph file: empty input");
    auto header = split_fields(lines[0]);
    if (header.size() != 2 || header[0] != "n")
        throw usage_error("graph file: first line must be 'n <count>'");
    std::size_t n = static_cast<std::size_t>(parse_u64(header[1], "vertex count"));
    LoopyMultigraph g(n);

    std::optional<VertexPair> prev;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_fields(lines[i]);
        if (fields.empty())
            continue;
        if (fields.size() != 3)
            throw usage_error("graph file: line " + std::to_string(i + 1) + " must be 'u v m'");
        std::uint64_t u = parse_u64(fields[0], "vertex");
        std::uint64_t v = parse_u64(fields[1], "vertex");
        std::uint64_t m = parse_u64(fields[2], "multiplicity");
        if (u >= n || v >= n)
            throw usage_error("graph file: vertex out of range on line " + std::to_string(i + 1));
        if (u > v)
            throw usage_error("graph file: pairs must satisfy u <= v (line " + std::to_string(i + 1) + ")");
        if (m == 0)
            throw usage_error("graph file: zero multiplicity on line " + std::to_string(i + 1));
        VertexPair p(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (prev && !(*prev < p))
            throw usage_error("graph file: pairs out of order or duplicated (line " + std::to_string(i + 1) + ")");
        prev = p;
        g.add_edges(p, static_cast<std::int64_t>(m));
    }
    return g;
}

std::string write_trace(const SwapTrace& t) {
    return write_trace_annotated(t, {});
}

std::string write_trace_annotated(const SwapTrace& t, const std::vector<VertexPair>& devil_picks) {
    std::ostringstream out;
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    std::uint64_t h = t.fingerprint;
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    out << "fingerprint " << hex << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        if (i < devil_picks.size())
            out << "devil " << devil_picks[i].a << " " << devil_picks[i].b << "\n";
        const Swap& s = t.steps[i].swap;
        out << "swap " << s.v1 << " " << s.v2 << " " << s.v3 << " " << s.v4 << "\n";
    }
    return out.str();
}

SwapTrace parse_trace(const std::string& text, std::vector<std::optional<VertexPair>>* picks) {
    auto lines = split_lines(text);
    if (lines.empty())
        throw usage_error("trace file: empty input");
    auto header = split_fields(lines[0]);
    if (header.size() != 2 || header[0] != "fingerprint" || header[1].size() != 16)
        throw usage_error("trace file: first line must be 'fingerprint <16 hex digits>'");
    std::uint64_t fp = 0;
    for (char c : header[1]) {
        fp <<= 4;
        if (c >= '0' && c <= '9')
            fp |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            fp |= static_cast<std::uint64_t>(c - 'a' + 10);
        else
            throw usage_error("trace file: bad fingerprint digit");
    }

    SwapTrace t;
    t.fingerprint = fp;
    std::optional<VertexPair> pending_pick;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto fields = split_fields(lines[i]);
        if (fields.empty())
            continue;
        if (fields[0] == "devil") {
            if (fields.size() != 3)
                throw usage_error("trace file: devil line must be 'devil u v' (line " + std::to_string(i + 1) + ")");
            pending_pick = VertexPair(static_cast<Vertex>(parse_u64(fields[1], "vertex")),
                                      static_cast<Vertex>(parse_u64(fields[2], "vertex")));
            continue;
        }
        if (fields[0] != "swap" || fields.size() != 5)
            throw usage_error("trace file: line " + std::to_string(i + 1) + " must be 'swap v1 v2 v3 v4'");
        Swap s;
        s.v1 = static_cast<Vertex>(parse_u64(fields[1], "vertex"));
        s.v2 = static_cast<Vertex>(parse_u64(fields[2], "vertex"));
        s.v3 = static_cast<Vertex>(parse_u64(fields[3], "vertex"));
        s.v4 = static_cast<Vertex>(parse_u64(fields[4], "vertex"));
        t.steps.push_back(TraceStep{s, false});
        if (picks)
            picks->push_back(pending_pick);
        pending_pick.reset();
    }
    return t;
}

std::vector<std::uint64_t> parse_degree_list(const std::string& text) {
    std::vector<std::uint64_t> d;
    std::string cur;
    auto flush = [&] {
        if (cur.empty())
            throw usage_error("degree list: empty entry");
        d.push_back(parse_u64(cur, "degree"));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur += c;
    }
    if (!cur.empty() || d.empty())
        flush();
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] > d[i - 1])
            throw usage_error("degree list must be weakly decreasing");
    return d;
}

std::string format_degree_list(const std::vector<std::uint64_t>& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i)
            out << ",";
        out << d[i];
    }
    return out.str();
}

} // namespace swapsmith
