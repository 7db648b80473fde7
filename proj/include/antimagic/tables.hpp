#pragma once

// The three embedded labeling tables: C3 union tP3 (t=0..6), C_n union tP3
// for 3<=n<=9 in each n's t-window, and 2C3 union tP3 (t=9..15). Host edge
// labels are listed in canonical edge order (cycle edges e1..en; for 2C3
// the first triangle then the second); each P3 gets one label pair.

#include "graph.hpp"
#include "labeling.hpp"

#include <optional>

namespace antimagic {

enum class TableFamily { C3, CYCLE, TWO_C3 };

struct TableRow {
    int table_id;    // 1, 2, or 3
    int host_n;      // cycle length; 6 for the two-triangle rows
    int t;
    std::vector<int> host_labels;
    std::vector<std::pair<int, int>> pairs;  // one per P3
    long long threshold_column;              // the stated t+s-l value (tables 2 and 3)
    std::pair<int, int> underlined;          // the two annotated labels
};

inline const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = {
        // table 1: C3 union tP3; annotated labels are always 2t+2, 2t+3
        {1, 3, 0, {1, 2, 3}, {}, 0, {2, 3}},
        {1, 3, 1, {3, 4, 5}, {{1, 2}}, 0, {4, 5}},
        {1, 3, 2, {4, 6, 7}, {{1, 3}, {2, 5}}, 0, {6, 7}},
        {1, 3, 3, {5, 8, 9}, {{1, 4}, {2, 6}, {3, 7}}, 0, {8, 9}},
        {1, 3, 4, {6, 10, 11}, {{1, 5}, {2, 8}, {4, 7}, {3, 9}}, 0, {10, 11}},
        {1, 3, 5, {6, 12, 13}, {{1, 5}, {2, 10}, {4, 9}, {3, 11}, {7, 8}}, 0, {12, 13}},
        {1, 3, 6, {3, 14, 15}, {{1, 2}, {4, 10}, {6, 9}, {5, 11}, {7, 12}, {8, 13}}, 0, {14, 15}},

        // table 2: C_n union tP3, 3 <= n <= 9
        {2, 3, 7, {6, 13, 17},
         {{2, 4}, {1, 12}, {7, 10}, {3, 15}, {9, 11}, {5, 16}, {8, 14}}, 13, {13, 17}},
        {2, 3, 8, {11, 14, 15},
         {{1, 10}, {2, 12}, {6, 9}, {7, 13}, {3, 18}, {5, 17}, {4, 19}, {8, 16}}, 10, {14, 15}},
        {2, 4, 9, {12, 7, 19, 20},
         {{3, 4}, {2, 10}, {5, 15}, {1, 22}, {6, 18}, {9, 16}, {13, 14}, {11, 17}, {8, 21}},
         19, {19, 20}},
        {2, 4, 10, {8, 24, 15, 16},
         {{2, 6}, {1, 14}, {3, 13}, {4, 21}, {7, 19}, {5, 22}, {11, 17}, {9, 20}, {12, 18},
          {10, 23}},
         15, {15, 16}},
        {2, 5, 11, {3, 23, 11, 26, 27},
         {{1, 2}, {5, 6}, {10, 13}, {9, 18}, {8, 20}, {4, 25}, {7, 24}, {15, 17}, {12, 21},
          {16, 19}, {14, 22}},
         26, {26, 27}},
        {2, 5, 12, {7, 29, 13, 21, 23},
         {{2, 5}, {4, 9}, {1, 20}, {6, 17}, {3, 26}, {15, 16}, {8, 24}, {11, 22}, {10, 25},
          {18, 19}, {12, 28}, {14, 27}},
         21, {21, 23}},
        {2, 5, 13, {9, 5, 14, 19, 23},
         {{1, 4}, {2, 7}, {3, 20}, {6, 28}, {8, 27}, {10, 26}, {12, 25}, {16, 22}, {18, 21},
          {11, 29}, {17, 24}, {13, 30}, {15, 31}},
         15, {19, 23}},
        {2, 6, 14, {12, 32, 8, 20, 28, 30},
         {{1, 7}, {3, 9}, {2, 18}, {4, 26}, {5, 27}, {6, 29}, {13, 23}, {15, 22}, {17, 21},
          {14, 25}, {10, 31}, {19, 24}, {11, 34}, {16, 33}},
         28, {28, 30}},
        {2, 6, 15, {9, 29, 8, 13, 21, 34},
         {{1, 7}, {3, 6}, {2, 11}, {4, 25}, {12, 27}, {5, 35}, {10, 31}, {18, 24}, {14, 30},
          {22, 23}, {20, 26}, {19, 28}, {15, 33}, {17, 32}, {16, 36}},
         21, {21, 34}},
        {2, 7, 16, {6, 7, 13, 24, 20, 36, 37},
         {{1, 5}, {3, 4}, {2, 22}, {8, 28}, {15, 25}, {14, 27}, {9, 33}, {19, 26}, {12, 34},
          {18, 29}, {10, 38}, {17, 32}, {11, 39}, {16, 35}, {21, 31}, {23, 30}},
         36, {36, 37}},
        {2, 7, 17, {6, 7, 13, 16, 20, 29, 36},
         {{1, 5}, {3, 4}, {2, 14}, {8, 35}, {19, 25}, {11, 34}, {9, 37}, {17, 30}, {10, 38},
          {22, 28}, {24, 27}, {21, 31}, {12, 41}, {15, 39}, {23, 32}, {18, 40}, {26, 33}},
         28, {29, 36}},
        {2, 7, 18, {13, 39, 6, 7, 12, 19, 31},
         {{1, 5}, {3, 4}, {2, 10}, {9, 30}, {8, 38}, {20, 27}, {11, 37}, {15, 34}, {23, 28},
          {18, 35}, {25, 29}, {22, 33}, {14, 42}, {17, 40}, {26, 32}, {16, 43}, {24, 36},
          {21, 41}},
         19, {19, 31}},
        {2, 8, 19, {15, 16, 17, 19, 31, 33, 36, 37},
         {{1, 14}, {3, 13}, {5, 12}, {8, 11}, {2, 35}, {4, 43}, {10, 38}, {7, 42}, {6, 45},
          {26, 27}, {25, 29}, {9, 46}, {24, 32}, {23, 34}, {28, 30}, {18, 41}, {20, 40},
          {22, 39}, {21, 44}},
         36, {36, 37}},
        {2, 8, 20, {15, 16, 17, 18, 31, 23, 33, 35},
         {{2, 13}, {4, 12}, {3, 14}, {8, 10}, {1, 22}, {5, 46}, {7, 45}, {6, 47}, {11, 44},
          {9, 48}, {20, 38}, {27, 32}, {26, 34}, {25, 36}, {19, 43}, {21, 42}, {24, 40},
          {29, 37}, {28, 39}, {30, 41}},
         26, {33, 35}},
        {2, 9, 21, {18, 3, 21, 24, 22, 30, 23, 45, 46},
         {{1, 2}, {6, 12}, {5, 17}, {7, 16}, {4, 26}, {10, 44}, {8, 47}, {14, 42}, {9, 48},
          {15, 43}, {19, 40}, {11, 49}, {20, 41}, {27, 35}, {13, 50}, {28, 37}, {32, 34},
          {29, 38}, {33, 36}, {31, 39}, {25, 51}},
         45, {45, 46}},
        {2, 9, 22, {19, 16, 3, 13, 18, 31, 34, 35, 49},
         {{1, 2}, {5, 8}, {6, 12}, {4, 30}, {7, 47}, {9, 46}, {11, 45}, {14, 43}, {10, 48},
          {15, 44}, {20, 40}, {24, 37}, {29, 33}, {27, 36}, {26, 38}, {25, 41}, {17, 50},
          {28, 42}, {32, 39}, {21, 51}, {22, 52}, {23, 53}},
         34, {35, 49}},

        // table 3: 2C3 union tP3, t = 9..15
        {3, 6, 9, {20, 23, 24, 12, 7, 19},
         {{3, 4}, {2, 10}, {5, 15}, {1, 22}, {6, 18}, {9, 16}, {13, 14}, {11, 17}, {8, 21}},
         48, {23, 24}},
        {3, 6, 10, {8, 25, 26, 15, 16, 24},
         {{1, 7}, {2, 23}, {3, 12}, {4, 22}, {5, 11}, {6, 18}, {9, 19}, {10, 20}, {13, 14},
          {17, 21}},
         46, {25, 26}},
        {3, 6, 11, {3, 27, 28, 11, 23, 26},
         {{1, 2}, {4, 24}, {5, 6}, {7, 20}, {8, 15}, {9, 17}, {10, 19}, {12, 21}, {13, 22},
          {14, 18}, {16, 25}},
         43, {27, 28}},
        {3, 6, 12, {3, 29, 30, 11, 23, 26},
         {{1, 2}, {4, 25}, {5, 6}, {7, 19}, {8, 22}, {9, 14}, {10, 28}, {12, 24}, {13, 27},
          {15, 16}, {17, 18}, {20, 21}},
         39, {29, 30}},
        {3, 6, 13, {3, 31, 32, 15, 16, 17},
         {{1, 2}, {4, 11}, {5, 12}, {6, 10}, {7, 29}, {8, 30}, {9, 28}, {13, 26}, {14, 27},
          {18, 22}, {19, 23}, {20, 24}, {21, 25}},
         34, {31, 32}},
        {3, 6, 14, {10, 18, 34, 6, 28, 29},
         {{2, 4}, {1, 9}, {3, 15}, {7, 22}, {5, 31}, {16, 21}, {11, 27}, {13, 26}, {17, 23},
          {8, 33}, {12, 30}, {19, 24}, {20, 25}, {14, 32}},
         28, {28, 29}},
        {3, 6, 15, {5, 9, 35, 14, 21, 36},
         {{1, 4}, {2, 7}, {3, 18}, {6, 30}, {8, 29}, {10, 28}, {11, 31}, {12, 27}, {13, 33},
          {15, 34}, {16, 32}, {17, 24}, {19, 26}, {20, 23}, {22, 25}},
         21, {21, 36}},
    };
    return rows;
}

inline const TableRow* find_table_row(TableFamily family, int n, int t) {
    for (const auto& row : table_rows()) {
        if (family == TableFamily::C3 && row.table_id == 1 && row.t == t) return &row;
        if (family == TableFamily::CYCLE && row.table_id == 2 && row.host_n == n && row.t == t)
            return &row;
        if (family == TableFamily::TWO_C3 && row.table_id == 3 && row.t == t) return &row;
    }
    return nullptr;
}

inline EdgeLabeling labeling_from_row(const TableRow& row) {
    Graph host = row.table_id == 3 ? disjoint_union(cycle(3), cycle(3)) : cycle(row.host_n);
    EdgeLabeling L;
    L.graph = with_paths(host, row.t);
    L.labels.assign(L.graph.edge_count(), 0);
    for (size_t i = 0; i < row.host_labels.size(); ++i) L.labels[i] = row.host_labels[i];
    const int base = static_cast<int>(row.host_labels.size());
    for (size_t i = 0; i < row.pairs.size(); ++i) {
        L.labels[base + 2 * i] = row.pairs[i].first;
        L.labels[base + 2 * i + 1] = row.pairs[i].second;
    }
    validate_bijection(L);
    return L;
}

inline EdgeLabeling embedded_table(TableFamily family, int n, int t) {
    const TableRow* row = find_table_row(family, n, t);
    if (!row) throw std::domain_error("embedded_table: no such row");
    return labeling_from_row(*row);
}

}  // namespace antimagic
