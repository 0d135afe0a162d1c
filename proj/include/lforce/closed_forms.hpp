#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lforce/forcing.hpp"
#include "lforce/graph.hpp"

namespace lforce {

enum class ValueKind { exact, bounds, unknown };

// What is known in closed form about one family member at one leak budget:
// an exact value, a bracketing interval, or nothing. The provenance string
// names the argument behind the number.
struct ClosedForm {
    FamilySpec family;
    int ell = 0;
    ValueKind kind = ValueKind::unknown;
    int lower = 0;
    int upper = 0;
    std::string provenance;

    bool exact() const { return kind == ValueKind::exact; }
    int value() const;  // throws std::logic_error unless exact
};

// Known formulas and table values for every built-in family, at any budget
// >= 0 (budgets beyond what a family distinguishes clamp to the all-degrees
// case). Grid parameters are normalized to rows <= columns internally.
ClosedForm closed_form_z(const FamilySpec& spec, int ell);

struct TreeLeafResult {
    int value = 0;
    VertexSet leaves;
};

// One-leak forcing number of a tree: the leaf count, optimal set exactly the
// leaves. The single vertex works for K_1; the two-vertex tree falls outside
// the rule and is rejected, as are non-trees.
TreeLeafResult tree_z1(const Graph& g);

// min(|G| * zh, |H| * zg): copies of an H-solution across G, or vice versa.
int product_upper_bound(int z_g, int z_h, int size_g, int size_h);

enum class PatternKind { array, bar, wing };

std::string pattern_kind_name(PatternKind kind);

// A named family of one-leak forcing sets for the n x m grid (rows x
// columns, 1-based cells, n <= m):
//   array  staircase block in the middle rows plus both ends of the extra
//          columns; 2m - n cells; needs m >= n >= 2 (or the 1x1 grid)
//   bar    centered pair in row 1 plus the interior of row 2; m cells;
//          needs floor(m/2) + 2 >= n, and three rows once m > 4 (on two
//          rows the cascade cannot route around a leak beside the pair)
//   wing   row-2 wings (corners left free) plus a double column hanging
//          from the top edge; m cells; needs m >= 7, n < m <= n + 5, and
//          wings short enough not to collide (L + R <= m - 2)
struct GridPattern {
    PatternKind kind = PatternKind::array;
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> cells;  // (row, col), 1-based, sorted

    VertexSet to_vertex_set() const;  // row-major indices on grid(rows, cols)
};

GridPattern grid_pattern(PatternKind kind, int n, int m);

// Build the grid and check the pattern against every single-leak placement.
Verdict verify_pattern(PatternKind kind, int n, int m);

} // namespace lforce
