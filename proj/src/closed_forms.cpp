#include "lforce/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "lforce/errors.hpp"

namespace lforce {

int ClosedForm::value() const {
    if (kind != ValueKind::exact)
        throw std::logic_error("closed form holds no exact value here");
    return lower;
}

namespace {

ClosedForm exact_form(const FamilySpec& f, int ell, int v, std::string why) {
    return {f, ell, ValueKind::exact, v, v, std::move(why)};
}

ClosedForm bounds_form(const FamilySpec& f, int ell, int lo, int hi, std::string why) {
    return {f, ell, ValueKind::bounds, lo, hi, std::move(why)};
}

ClosedForm path_form(const FamilySpec& f, int n, int ell) {
    if (n == 1) return exact_form(f, ell, 1, "exact: single vertex");
    if (ell == 0) return exact_form(f, ell, 1, "exact: one end forces a path");
    if (ell == 1) return exact_form(f, ell, 2, "exact: both ends beat one leak");
    return exact_form(f, ell, n, "exact: every degree within the leak budget");
}

// Exact off-diagonal one-leak grid values with no single formula behind them.
struct GridEntry {
    int n, m, z;
};
constexpr GridEntry kGridTable[] = {
    {2, 3, 3}, {2, 4, 4}, {2, 5, 4}, {2, 6, 4}, {2, 7, 4},
    {3, 4, 4}, {3, 5, 5}, {3, 6, 6}, {3, 7, 6},
    {4, 5, 5}, {4, 6, 6}, {4, 7, 7}, {4, 8, 8},
    {5, 6, 6}, {5, 7, 7},
    {6, 7, 7},
};

ClosedForm grid_one_leak(const FamilySpec& f, int n, int m) {
    if (n == m) return exact_form(f, 1, n, "exact: square grid needs one side");
    for (const GridEntry& e : kGridTable)
        if (e.n == n && e.m == m) return exact_form(f, 1, e.z, "exact: grid table");
    int upper = std::min(2 * n, 2 * m - n);
    std::string which = 2 * n <= 2 * m - n ? "doubled short side" : "array pattern";
    if (m / 2 + 2 >= n && m < upper) {
        upper = m;
        which = "bar pattern";
    }
    if (m >= 7 && m <= n + 5 && m < upper) {
        upper = m;
        which = "wing pattern";
    }
    return bounds_form(f, 1, n, upper, "bounds: one side; upper from " + which);
}

ClosedForm grid_form(const FamilySpec& f, int rows, int cols, int ell) {
    int n = std::min(rows, cols), m = std::max(rows, cols);
    if (n == 1) {
        ClosedForm p = path_form(f, m, ell);
        p.family = f;
        return p;
    }
    if (ell == 0) return exact_form(f, 0, n, "exact: one short side of the grid");
    if (ell == 1) return grid_one_leak(f, n, m);
    // Larger budgets: no grid formulas; never below the one-leak value.
    ClosedForm one = grid_one_leak(f, n, m);
    int lo = one.exact() ? one.value() : one.lower;
    return bounds_form(f, ell, lo, n * m,
                       "bounds: at least the one-leak value; at most every vertex");
}

ClosedForm hypercube_form(const FamilySpec& f, int d, int ell) {
    int size = 1 << d;
    if (ell >= d)
        return exact_form(f, ell, size, "exact: every degree within the leak budget");
    if (ell == 0) return exact_form(f, ell, size / 2, "exact: half the cube");
    if (ell == 1) return exact_form(f, ell, size / 2, "exact: half the cube beats one leak");
    if (ell == 2) {
        if (d == 3) return exact_form(f, ell, 6, "exact: computed small cube value");
        return exact_form(f, ell, size / 2, "exact: half the cube beats two leaks");
    }
    if (ell == 3) {
        if (d == 4) return exact_form(f, ell, 10, "exact: computed small cube value");
        return exact_form(f, ell, size / 2, "exact: half the cube beats three leaks");
    }
    return {f, ell, ValueKind::unknown, 0, 0, "unknown: no established value for this budget"};
}

} // namespace

ClosedForm closed_form_z(const FamilySpec& spec, int ell) {
    if (ell < 0) throw ParamError("leak budget must be non-negative");
    switch (spec.kind) {
    case FamilyKind::path: {
        if (spec.n < 1) throw ParamError("path needs n >= 1");
        return path_form(spec, spec.n, ell);
    }
    case FamilyKind::cycle: {
        if (spec.n < 3) throw ParamError("cycle needs n >= 3");
        if (ell == 0) return exact_form(spec, ell, 2, "exact: two adjacent vertices force a cycle");
        if (ell == 1) return exact_form(spec, ell, 2, "exact: two adjacent vertices beat one leak");
        return exact_form(spec, ell, spec.n, "exact: every degree within the leak budget");
    }
    case FamilyKind::complete: {
        if (spec.n < 1) throw ParamError("complete graph needs n >= 1");
        if (spec.n == 1) return exact_form(spec, ell, 1, "exact: single vertex");
        if (ell <= spec.n - 2)
            return exact_form(spec, ell, spec.n - 1, "exact: all but one vertex");
        return exact_form(spec, ell, spec.n, "exact: every degree within the leak budget");
    }
    case FamilyKind::wheel: {
        if (spec.n < 3) throw ParamError("wheel needs outer cycle n >= 3");
        if (ell <= 1)
            return exact_form(spec, ell, 3, "exact: three consecutive outer vertices");
        if (ell == 2)
            return exact_form(spec, ell, (2 * spec.n + 2) / 3 + 1,
                              "exact: two-leak wheel pattern");
        if (ell < spec.n)
            return exact_form(spec, ell, spec.n, "exact: outer cycle under heavy leaking");
        return exact_form(spec, ell, spec.n + 1, "exact: every degree within the leak budget");
    }
    case FamilyKind::hypercube: {
        if (spec.n < 1 || spec.n > 24) throw ParamError("hypercube dimension must be in 1..24");
        return hypercube_form(spec, spec.n, ell);
    }
    case FamilyKind::grid: {
        if (spec.n < 1 || spec.m < 1) throw ParamError("grid needs n, m >= 1");
        return grid_form(spec, spec.n, spec.m, ell);
    }
    case FamilyKind::star: {
        if (spec.n < 1) throw ParamError("star needs at least one leaf");
        if (spec.n == 1) {
            if (ell == 0) return exact_form(spec, ell, 1, "exact: one end forces a path");
            return exact_form(spec, ell, 2, "exact: every degree within the leak budget");
        }
        if (ell == 0) return exact_form(spec, ell, spec.n - 1, "exact: all but one leaf");
        if (ell <= spec.n - 1)
            return exact_form(spec, ell, spec.n, "exact: the leaves, each unavoidable");
        return exact_form(spec, ell, spec.n + 1, "exact: every degree within the leak budget");
    }
    }
    throw ParamError("unknown family kind");
}

TreeLeafResult tree_z1(const Graph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1 || !is_connected(g))
        throw ParamError("tree leaf rule needs a connected acyclic graph");
    if (n == 1) return {1, VertexSet::of(1, {0})};
    if (n == 2) throw ParamError("the two-vertex tree falls outside the leaf rule");
    TreeLeafResult out;
    out.leaves = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) out.leaves.insert(v);
    out.value = out.leaves.size();
    return out;
}

int product_upper_bound(int z_g, int z_h, int size_g, int size_h) {
    if (z_g < 1 || z_h < 1 || size_g < 1 || size_h < 1)
        throw ParamError("product bound needs positive sizes and values");
    return std::min(size_g * z_h, size_h * z_g);
}

std::string pattern_kind_name(PatternKind kind) {
    switch (kind) {
    case PatternKind::array: return "array";
    case PatternKind::bar: return "bar";
    case PatternKind::wing: return "wing";
    }
    throw ParamError("unknown pattern kind");
}

VertexSet GridPattern::to_vertex_set() const {
    VertexSet s(rows * cols);
    for (const auto& [r, c] : cells) s.insert((r - 1) * cols + (c - 1));
    return s;
}

GridPattern grid_pattern(PatternKind kind, int n, int m) {
    if (n < 1 || m < 1) throw ParamError("grid needs n, m >= 1");
    std::vector<std::pair<int, int>> cells;
    auto add = [&](int r, int c) {
        if (r < 1 || r > n || c < 1 || c > m)
            throw std::logic_error("pattern cell lands off the grid");
        cells.emplace_back(r, c);
    };
    switch (kind) {
    case PatternKind::array: {
        if (n > m) throw ParamError("array pattern needs n <= m");
        if (n == 1 && m > 1)
            throw ParamError("array pattern needs two rows unless the grid is 1x1");
        if (n == 1) {
            add(1, 1);
            break;
        }
        // Staircase block across the middle rows, then both ends of every
        // column past the square part.
        if (n % 2 == 1) {
            int mid = (n + 1) / 2;
            for (int c = 1; c <= mid; ++c) add(mid, c);
            for (int c = 1; c < mid; ++c) add(mid - 1, c);
        } else {
            for (int c = 1; c <= n / 2; ++c) {
                add(n / 2, c);
                add(n / 2 + 1, c);
            }
        }
        for (int c = n + 1; c <= m; ++c) {
            add(1, c);
            add(n, c);
        }
        break;
    }
    case PatternKind::bar: {
        if (m < 2) throw ParamError("bar pattern needs m >= 2");
        if (n > m) throw ParamError("bar pattern needs n <= m");
        if (n > m / 2 + 2) throw ParamError("bar pattern needs floor(m/2) + 2 >= n");
        if (n == 1 && m > 2) throw ParamError("bar pattern needs a second row once m > 2");
        // With only two rows a leak beside the row-1 pair stalls half the
        // row-2 cascade for good; a third row lets the colored half route
        // underneath the stall. Two-row bars force only up to m = 4.
        if (n == 2 && m > 4) throw ParamError("bar pattern on two rows needs m <= 4");
        int c0 = m % 2 == 0 ? m / 2 : (m + 1) / 2;
        add(1, c0);
        add(1, c0 + 1);
        for (int c = 2; c <= m - 1; ++c) add(2, c);
        break;
    }
    case PatternKind::wing: {
        if (m < 7) throw ParamError("wing pattern needs m >= 7");
        if (n >= m || m > n + 5)
            throw ParamError("wing pattern needs n < m <= n + 5");
        int diff = m - n;
        int len_left, len_right;
        if (m % 2 == 0) {
            if (diff <= 2) {
                len_left = 1;
                len_right = 1;
            } else if (diff <= 4) {
                len_left = 2;
                len_right = 2;
            } else {
                len_left = 3;
                len_right = 3;
            }
        } else {
            if (diff <= 2) {
                len_left = 0;
                len_right = 1;
            } else if (diff == 3) {
                len_left = 1;
                len_right = 2;
            } else if (diff == 4) {
                len_left = 2;
                len_right = 3;
            } else {
                len_left = 3;
                len_right = 4;
            }
        }
        // Wings sit in row 2 leaving the corners free: left wing in columns
        // 2..L+1, right wing in columns m-R..m-1. They collide once
        // L + R > m - 2, which happens only on the 2x7 grid.
        if (len_left + len_right > m - 2)
            throw ParamError("wing pattern needs L + R <= m - 2");
        int height = (m - len_left - len_right) / 2;
        for (int c = 2; c <= len_left + 1; ++c) add(2, c);
        for (int c = m - len_right; c <= m - 1; ++c) add(2, c);
        for (int r = 1; r <= height; ++r) {
            add(r, m / 2);
            add(r, m / 2 + 1);
        }
        break;
    }
    }
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::logic_error("pattern produced a duplicate cell");
    return GridPattern{kind, n, m, std::move(cells)};
}

Verdict verify_pattern(PatternKind kind, int n, int m) {
    GridPattern p = grid_pattern(kind, n, m);
    Graph g = build_family(FamilySpec::grid(n, m));
    return verify_l_forcing(g, p.to_vertex_set(), 1);
}

} // namespace lforce
