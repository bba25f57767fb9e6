#include "vecon/io.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace vecon {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank && line[line.find_first_not_of(" \t")] != 'c')
            out.push_back({number, line});
        pos = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> out;
    std::string tok;
    while (stream >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        parse_fail(line, std::string("expected an integer for ") + what);
    }
}

} // namespace

Instance parse_instance(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw input_error("empty document: missing 'p vc' header");

    auto header = tokens_of(lines.front().text);
    int hline = lines.front().number;
    if (header.size() != 6 || header[0] != "p" || header[1] != "vc")
        parse_fail(hline, "malformed header, expected 'p vc <n> <m> <k> <d>'");
    int n = parse_int(header[2], hline, "vertex count");
    int m = parse_int(header[3], hline, "edge count");
    int k = parse_int(header[4], hline, "budget");
    int d = parse_int(header[5], hline, "demand bound");
    if (n < 0 || m < 0 || k < 0 || d < 0) parse_fail(hline, "header values must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    std::vector<int> demand(static_cast<std::size_t>(n), 0);
    std::vector<char> demand_seen(static_cast<std::size_t>(n), 0);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i].text);
        int ln = lines[i].number;
        if (toks.empty()) continue;
        if (toks[0] == "p") parse_fail(ln, "duplicate header");
        if (toks[0] == "e") {
            if (toks.size() != 3) parse_fail(ln, "edge line needs two endpoints");
            int u = parse_int(toks[1], ln, "edge endpoint");
            int v = parse_int(toks[2], ln, "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(ln, "vertex id out of range");
            if (u == v) parse_fail(ln, "self-loop");
            edges.emplace_back(u, v);
        } else if (toks[0] == "d") {
            if (toks.size() != 3) parse_fail(ln, "demand line needs a vertex and a value");
            int v = parse_int(toks[1], ln, "vertex id");
            int phi = parse_int(toks[2], ln, "demand");
            if (v < 0 || v >= n) parse_fail(ln, "vertex id out of range");
            if (phi < 1) parse_fail(ln, "demand lines must carry a positive demand");
            if (phi > d) parse_fail(ln, "demand exceeds the declared bound");
            if (demand_seen[v]) parse_fail(ln, "demand redefined for a vertex");
            demand_seen[v] = 1;
            demand[v] = phi;
        } else {
            parse_fail(ln, "unknown line type '" + toks[0] + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m)
        throw input_error("header declares " + std::to_string(m) + " edges but " +
                          std::to_string(edges.size()) + " were given");

    Graph g;
    try {
        g = Graph(n, edges);
    } catch (const input_error& e) {
        throw input_error(std::string("edge list: ") + e.what());
    }
    return make_instance(std::move(g), DemandMap(std::move(demand), d), k);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p vc " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' '
        << inst.budget << ' ' << inst.bound() << '\n';
    for (auto [u, v] : inst.graph.edges()) out << "e " << u << ' ' << v << '\n';
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (inst.demands[v] > 0) out << "d " << v << ' ' << inst.demands[v] << '\n';
    return out.str();
}

HittingSetInstance parse_hs(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw input_error("empty document: missing 'p hs' header");

    auto header = tokens_of(lines.front().text);
    int hline = lines.front().number;
    if (header.size() != 5 || header[0] != "p" || header[1] != "hs")
        parse_fail(hline, "malformed header, expected 'p hs <n> <m> <k>'");
    int n = parse_int(header[2], hline, "universe size");
    int m = parse_int(header[3], hline, "set count");
    int k = parse_int(header[4], hline, "budget");
    if (n < 0 || m < 0 || k < 0) parse_fail(hline, "header values must be nonnegative");

    std::vector<vertex_set> sets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i].text);
        int ln = lines[i].number;
        if (toks.empty()) continue;
        if (toks[0] != "s") parse_fail(ln, "unknown line type '" + toks[0] + "'");
        vertex_set set;
        for (std::size_t j = 1; j < toks.size(); ++j) {
            int e = parse_int(toks[j], ln, "element");
            if (e < 0 || e >= n) parse_fail(ln, "element out of range");
            set.push_back(e);
        }
        sets.push_back(normalized(std::move(set)));
    }
    if (static_cast<int>(sets.size()) != m)
        throw input_error("header declares " + std::to_string(m) + " sets but " +
                          std::to_string(sets.size()) + " were given");
    return make_hs_instance(n, std::move(sets), k);
}

std::string serialize_hs(const HittingSetInstance& hs) {
    std::ostringstream out;
    out << "p hs " << hs.universe << ' ' << hs.sets.size() << ' ' << hs.budget << '\n';
    for (const vertex_set& s : hs.sets) {
        out << 's';
        for (int e : s) out << ' ' << e;
        out << '\n';
    }
    return out.str();
}

vertex_set parse_solution(std::string_view text, const Graph& g) {
    std::vector<Line> lines = content_lines(text);
    vertex_set out;
    for (const Line& line : lines) {
        for (const std::string& tok : tokens_of(line.text)) {
            int v = parse_int(tok, line.number, "vertex id");
            if (!g.has_vertex(v)) parse_fail(line.number, "vertex id out of range");
            out.push_back(v);
        }
    }
    return normalized(std::move(out));
}

namespace {

// Uniform draw in [0, m) from raw engine output; std distributions are not
// portable across standard libraries, this is.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t m) {
    if (m == 0) throw input_error("bounded draw from an empty range");
    std::uint64_t reject_above = std::numeric_limits<std::uint64_t>::max() -
                                 (std::numeric_limits<std::uint64_t>::max() % m + 1) % m;
    for (;;) {
        std::uint64_t r = rng();
        if (r <= reject_above || reject_above == std::numeric_limits<std::uint64_t>::max())
            return r % m;
    }
}

bool coin(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    constexpr double two64 = 18446744073709551616.0;
    return static_cast<double>(rng()) < p * two64;
}

} // namespace

Instance gen_random(const GenParams& params) {
    if (params.n < 0) throw input_error("vertex count must be nonnegative");
    if (params.edge_prob < 0.0 || params.edge_prob > 1.0)
        throw input_error("edge probability must lie in [0, 1]");
    if (params.d < 0 || params.k < 0) throw input_error("bounds must be nonnegative");

    double sparse_p = 0.0;
    enum class Dist { uniform, zero, sparse } dist;
    if (params.demand_dist == "uniform") {
        dist = Dist::uniform;
    } else if (params.demand_dist == "zero") {
        dist = Dist::zero;
    } else if (params.demand_dist.rfind("sparse:", 0) == 0) {
        dist = Dist::sparse;
        try {
            sparse_p = std::stod(params.demand_dist.substr(7));
        } catch (const std::exception&) {
            throw input_error("malformed sparse:<p> demand distribution");
        }
        if (sparse_p < 0.0 || sparse_p > 1.0)
            throw input_error("sparse demand probability must lie in [0, 1]");
    } else {
        throw input_error("unknown demand distribution '" + params.demand_dist + "'");
    }

    std::mt19937_64 rng(params.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (coin(rng, params.edge_prob)) edges.emplace_back(u, v);

    std::vector<int> demand(static_cast<std::size_t>(params.n), 0);
    for (int v = 0; v < params.n; ++v) {
        switch (dist) {
            case Dist::zero:
                break;
            case Dist::uniform:
                demand[v] = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(params.d) + 1));
                break;
            case Dist::sparse:
                if (params.d > 0 && coin(rng, sparse_p))
                    demand[v] = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(params.d)));
                break;
        }
    }
    return make_instance(Graph(params.n, edges), DemandMap(std::move(demand), params.d),
                         params.k);
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4)
        out.push_back(hex[(hash >> shift) & 0xF]);
    return out;
}

} // namespace vecon
