#include "lforce/graph.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "lforce/errors.hpp"

namespace lforce {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label)
    : n_(n), label_(std::move(label)) {
    if (n < 1) throw ParamError("graph needs at least one vertex");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParamError("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v) throw ParamError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
    for (int v = 0; v < n; ++v) edge_count_ += degree(v);
    edge_count_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::grid: return "grid";
    case FamilyKind::star: return "star";
    }
    throw ParamError("unknown family kind");
}

Graph build_family(const FamilySpec& spec) {
    std::vector<std::pair<int, int>> e;
    switch (spec.kind) {
    case FamilyKind::path: {
        if (spec.n < 1) throw ParamError("path needs n >= 1");
        for (int i = 0; i + 1 < spec.n; ++i) e.emplace_back(i, i + 1);
        return Graph(spec.n, e, "path(" + std::to_string(spec.n) + ")");
    }
    case FamilyKind::cycle: {
        if (spec.n < 3) throw ParamError("cycle needs n >= 3");
        for (int i = 0; i < spec.n; ++i) e.emplace_back(i, (i + 1) % spec.n);
        return Graph(spec.n, e, "cycle(" + std::to_string(spec.n) + ")");
    }
    case FamilyKind::complete: {
        if (spec.n < 1) throw ParamError("complete graph needs n >= 1");
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j) e.emplace_back(i, j);
        return Graph(spec.n, e, "complete(" + std::to_string(spec.n) + ")");
    }
    case FamilyKind::wheel: {
        if (spec.n < 3) throw ParamError("wheel needs outer cycle n >= 3");
        for (int i = 0; i < spec.n; ++i) {
            e.emplace_back(i, (i + 1) % spec.n);
            e.emplace_back(i, spec.n);
        }
        return Graph(spec.n + 1, e, "wheel(" + std::to_string(spec.n) + ")");
    }
    case FamilyKind::hypercube: {
        if (spec.n < 1 || spec.n > 24) throw ParamError("hypercube dimension must be in 1..24");
        int size = 1 << spec.n;
        for (int i = 0; i < size; ++i)
            for (int b = 0; b < spec.n; ++b)
                if (!(i & (1 << b))) e.emplace_back(i, i | (1 << b));
        return Graph(size, e, "hypercube(" + std::to_string(spec.n) + ")");
    }
    case FamilyKind::grid: {
        if (spec.n < 1 || spec.m < 1) throw ParamError("grid needs n, m >= 1");
        auto id = [&](int r, int c) { return (r - 1) * spec.m + (c - 1); };
        for (int r = 1; r <= spec.n; ++r)
            for (int c = 1; c <= spec.m; ++c) {
                if (c < spec.m) e.emplace_back(id(r, c), id(r, c + 1));
                if (r < spec.n) e.emplace_back(id(r, c), id(r + 1, c));
            }
        return Graph(spec.n * spec.m,
                     e,
                     "grid(" + std::to_string(spec.n) + "x" + std::to_string(spec.m) + ")");
    }
    case FamilyKind::star: {
        if (spec.n < 1) throw ParamError("star needs at least one leaf");
        for (int i = 0; i < spec.n; ++i) e.emplace_back(i, spec.n);
        return Graph(spec.n + 1, e, "star(" + std::to_string(spec.n) + ")");
    }
    }
    throw ParamError("unknown family kind");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    auto id = [&](int x, int y) { return x * nh + y; };
    for (int x = 0; x < ng; ++x)
        for (const auto& [y, y2] : h.edges()) e.emplace_back(id(x, y), id(x, y2));
    for (const auto& [x, x2] : g.edges())
        for (int y = 0; y < nh; ++y) e.emplace_back(id(x, y), id(x2, y));
    return Graph(ng * nh, e, g.label() + " x " + h.label());
}

Graph parse_edge_list(std::string_view text, std::string label) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_vertex = -1;
    int line_no = 0;
    bool saw_content = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!saw_content && a == "n") {
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("header must be exactly 'n <count>'", line_no);
            try {
                declared_n = std::stoi(b);
            } catch (const std::exception&) {
                throw ParseError("bad vertex count '" + b + "'", line_no);
            }
            if (declared_n < 1) throw ParseError("vertex count must be >= 1", line_no);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("expected 'u v', got '" + line + "'", line_no);
        int u, v;
        try {
            u = std::stoi(a);
            v = std::stoi(b);
        } catch (const std::exception&) {
            throw ParseError("bad vertex token in '" + line + "'", line_no);
        }
        if (u < 0 || v < 0) throw ParseError("vertices must be non-negative", line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (n < 1) throw ParseError("edge list defines no vertices");
    if (max_vertex >= n)
        throw ParseError("edge endpoint " + std::to_string(max_vertex) +
                         " exceeds declared vertex count " + std::to_string(n));
    return Graph(n, edges, std::move(label));
}

namespace {

// graph6 packs the upper triangle column by column: for column j = 1..n-1,
// bits x(0,j)..x(j-1,j), then splits the stream into 6-bit groups (MSB
// first), each stored as one printable byte value+63.
constexpr int kG6Offset = 63;

int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw ParseError("graph6 text truncated");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of printable range at position " + std::to_string(i));
    return c - kG6Offset;
}

} // namespace

Graph parse_graph6(std::string_view text, std::string label) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 text");

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw ParseError("graph6 eight-byte vertex counts are not supported");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | g6_byte(text, pos);
    } else {
        n = g6_byte(text, pos++);
    }
    if (n < 1) throw ParseError("graph6 graph must have at least one vertex");
    if (n > 100000) throw ParseError("graph6 vertex count implausibly large");

    long long bits = n * (n - 1) / 2;
    std::size_t need = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < need) throw ParseError("graph6 text shorter than its vertex count implies");
    if (text.size() > need) throw ParseError("trailing bytes after graph6 data");

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = g6_byte(text, pos + static_cast<std::size_t>(bit / 6));
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), edges, std::move(label));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kG6Offset);
    } else {
        if (n >= (1 << 18)) throw ParamError("graph too large for three-byte graph6 form");
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + kG6Offset);
        out += static_cast<char>(((n >> 6) & 63) + kG6Offset);
        out += static_cast<char>((n & 63) + kG6Offset);
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(group + kG6Offset);
                group = 0;
                filled = 0;
            }
        }
    if (filled) out += static_cast<char>((group << (6 - filled)) + kG6Offset);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet seen(n);
    seen.insert(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(n);
        for (int v : frontier) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen.size() == n;
}

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw ParamError("cubic graph needs even n >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(3 * n));
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> edges;
        bool simple = true;
        std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || adj[static_cast<std::size_t>(u)].contains(v)) {
                simple = false;
                break;
            }
            adj[static_cast<std::size_t>(u)].insert(v);
            adj[static_cast<std::size_t>(v)].insert(u);
            edges.emplace_back(u, v);
        }
        if (!simple) continue;
        Graph g(n, edges, "cubic(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
        if (is_connected(g)) return g;
    }
    throw ResourceError("failed to sample a connected cubic graph");
}

} // namespace lforce
