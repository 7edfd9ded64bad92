#pragma once

#include <vector>

#include "chromata/graph.hpp"

namespace fixtures {

inline chromata::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return chromata::Graph(n, std::move(e));
}

inline chromata::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return chromata::Graph(n, std::move(e));
}

inline chromata::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return chromata::Graph(n, std::move(e));
}

inline chromata::Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return chromata::Graph(leaves + 1, std::move(e));
}

inline chromata::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return chromata::Graph(a + b, std::move(e));
}

inline chromata::Graph cube_q3() {
    return chromata::Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                               {4, 5}, {5, 6}, {6, 7}, {7, 4},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline chromata::Graph petersen() {
    return chromata::Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline chromata::Graph icosahedron() {
    return chromata::Graph(12, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},
                                {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
                                {1, 6},  {1, 7},  {2, 7},  {2, 8},  {3, 8},
                                {3, 9},  {4, 9},  {4, 10}, {5, 10}, {5, 6},
                                {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},
                                {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}});
}

inline chromata::Graph dodecahedron() {
    return chromata::Graph(20, {{0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},
                                {0, 5},   {1, 6},   {2, 7},   {3, 8},   {4, 9},
                                {5, 10},  {10, 6},  {6, 11},  {11, 7},  {7, 12},
                                {12, 8},  {8, 13},  {13, 9},  {9, 14},  {14, 5},
                                {10, 15}, {11, 16}, {12, 17}, {13, 18}, {14, 19},
                                {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 15}});
}

}  // namespace fixtures
