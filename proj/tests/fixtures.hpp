#ifndef CENTRANK_TESTS_FIXTURES_HPP_
#define CENTRANK_TESTS_FIXTURES_HPP_

#include <array>
#include <vector>

namespace fixtures {

// 7-node worked example: adjacency matrix, dominant eigenpair to 4 decimals.
inline constexpr int kSevenNodeOrder = 7;
inline constexpr double kSevenNodeMatrix[7][7] = {
    {0, 1, 1, 0, 1, 1, 1},
    {1, 0, 0, 1, 0, 1, 1},
    {0, 1, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 0, 1, 0},
    {1, 1, 1, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 1},
    {0, 0, 1, 0, 0, 0, 0},
};
inline constexpr double kSevenNodeEigenvalue = 3.3911;
inline constexpr double kSevenNodeEigenvector[7] = {0.4924, 0.3853, 0.3564, 0.3548,
                                                    0.4686, 0.3544, 0.1051};

// Reference comparison tables: per-vertex (label, pagerank score, pagerank
// rank, eigenvector score, eigenvector rank). RankRow.vertex is the 1-based
// printed label.
struct RankRow {
    int vertex;
    double pagerank;
    double pr_rank;
    double eigenvector;
    double ev_rank;
};

// tie-free, 21 nodes, sum d^2 = 18
inline const std::vector<RankRow> kComparison21A = {
    {19, 1.4466, 1, 0.3168, 1},
    {16, 1.2509, 2, 0.273, 3},
    {2, 1.2364, 3, 0.2818, 2},
    {15, 1.1694, 4, 0.2517, 5},
    {17, 1.1688, 5, 0.254, 4},
    {20, 1.1065, 6, 0.2391, 6},
    {12, 1.0696, 7, 0.2262, 7},
    {8, 1.0356, 8, 0.2224, 8},
    {3, 1.0296, 9, 0.2139, 10},
    {13, 0.9872, 10, 0.2145, 9},
    {10, 0.9800, 11, 0.2112, 11},
    {6, 0.9744, 12, 0.2064, 13},
    {7, 0.9407, 13, 0.2085, 12},
    {5, 0.8944, 14, 0.1852, 16},
    {4, 0.8915, 15, 0.1884, 14},
    {9, 0.8843, 16, 0.1799, 17},
    {18, 0.8658, 17, 0.1882, 15},
    {21, 0.8261, 18, 0.175, 18},
    {14, 0.8227, 19, 0.1674, 19},
    {1, 0.7954, 20, 0.1612, 20},
    {11, 0.6242, 21, 0.1239, 21},
};

// tie-free, 21 nodes, sum d^2 = 20
inline const std::vector<RankRow> kComparison21B = {
    {13, 1.3884, 1, 0.3011, 1},
    {9, 1.2609, 2, 0.2837, 2},
    {17, 1.2511, 3, 0.2622, 4},
    {3, 1.2085, 4, 0.2755, 3},
    {19, 1.1892, 5, 0.2574, 5},
    {8, 1.1586, 6, 0.2452, 7},
    {6, 1.1387, 7, 0.2467, 6},
    {20, 1.0904, 8, 0.2265, 10},
    {11, 1.0795, 9, 0.2343, 8},
    {18, 1.0750, 10, 0.2294, 9},
    {12, 0.9454, 11, 0.1951, 11},
    {21, 0.9312, 12, 0.1935, 13},
    {7, 0.9183, 13, 0.1912, 14},
    {10, 0.9053, 14, 0.194, 12},
    {14, 0.9037, 15, 0.1858, 16},
    {2, 0.9028, 16, 0.1893, 15},
    {5, 0.8496, 17, 0.1838, 17},
    {4, 0.7528, 18, 0.1558, 18},
    {16, 0.7365, 19, 0.1519, 20},
    {15, 0.7179, 20, 0.1531, 19},
    {1, 0.5964, 21, 0.1161, 21},
};

// 100 nodes, competition ties; one printed row is unavailable, 99 remain
inline const std::vector<RankRow> kComparison100 = {
    {8, 1.254, 1, 0.1294, 1},
    {24, 1.1787, 2, 0.1196, 2},
    {55, 1.1681, 3, 0.1185, 3},
    {28, 1.1599, 4, 0.1165, 4},
    {61, 1.1446, 5, 0.1164, 5},
    {62, 1.1398, 6, 0.1148, 7},
    {91, 1.1364, 7, 0.1138, 8},
    {1, 1.1207, 8, 0.1133, 9},
    {6, 1.117, 9, 0.1151, 6},
    {76, 1.1141, 10, 0.113, 10},
    {48, 1.112, 11, 0.1112, 12},
    {52, 1.1044, 12, 0.1099, 16},
    {9, 1.1004, 13, 0.1117, 11},
    {85, 1.0982, 14, 0.1098, 17},
    {56, 1.0928, 15, 0.1101, 14},
    {94, 1.0899, 16, 0.1106, 13},
    {100, 1.0845, 17, 0.1101, 14},
    {2, 1.082, 18, 0.1088, 19},
    {83, 1.0805, 19, 0.1096, 18},
    {84, 1.0691, 20, 0.1073, 22},
    {87, 1.0672, 21, 0.1088, 19},
    {26, 1.0669, 22, 0.1069, 24},
    {34, 1.0667, 23, 0.1064, 25},
    {11, 1.0658, 24, 0.1074, 21},
    {4, 1.0642, 25, 0.1057, 28},
    {95, 1.0578, 26, 0.107, 23},
    {53, 1.0558, 27, 0.1056, 29},
    {68, 1.0544, 28, 0.1047, 33},
    {71, 1.054, 29, 0.1063, 26},
    {75, 1.0536, 30, 0.1051, 30},
    {81, 1.0498, 31, 0.105, 32},
    {86, 1.0479, 32, 0.104, 38},
    {35, 1.0473, 33, 0.1045, 35},
    {12, 1.0454, 34, 0.1059, 27},
    {27, 1.0452, 35, 0.1047, 33},
    {54, 1.0442, 36, 0.1051, 30},
    {21, 1.041, 37, 0.1043, 36},
    {89, 1.0405, 38, 0.1021, 42},
    {15, 1.0393, 39, 0.104, 38},
    {80, 1.0309, 40, 0.1043, 36},
    {30, 1.0294, 41, 0.102, 43},
    {22, 1.0274, 42, 0.1023, 41},
    {57, 1.0176, 44, 0.1006, 45},
    {82, 1.0165, 45, 0.1024, 40},
    {44, 1.0159, 46, 0.1006, 45},
    {25, 1.0137, 47, 0.1004, 47},
    {77, 1.0088, 48, 0.1004, 47},
    {41, 1.0007, 49, 0.099, 52},
    {32, 0.9993, 50, 0.0983, 57},
    {5, 0.9989, 51, 0.1004, 47},
    {78, 0.9925, 52, 0.0986, 55},
    {98, 0.9912, 53, 0.0987, 53},
    {14, 0.9908, 54, 0.0972, 60},
    {66, 0.9906, 55, 0.0986, 55},
    {63, 0.9905, 56, 0.098, 58},
    {39, 0.9879, 57, 0.0994, 50},
    {20, 0.9878, 58, 0.0991, 51},
    {74, 0.9827, 59, 0.0973, 59},
    {92, 0.9825, 60, 0.0971, 62},
    {58, 0.9816, 61, 0.0987, 53},
    {33, 0.9789, 62, 0.096, 65},
    {59, 0.9778, 63, 0.0967, 63},
    {64, 0.9744, 64, 0.0972, 60},
    {73, 0.9707, 65, 0.0967, 63},
    {97, 0.9676, 66, 0.0955, 67},
    {36, 0.9601, 67, 0.0958, 66},
    {37, 0.9562, 68, 0.0934, 73},
    {88, 0.9562, 68, 0.0947, 69},
    {51, 0.955, 70, 0.0941, 72},
    {19, 0.9548, 71, 0.0953, 68},
    {60, 0.9475, 72, 0.0942, 71},
    {45, 0.9474, 73, 0.0943, 70},
    {43, 0.9463, 74, 0.0928, 74},
    {50, 0.9455, 75, 0.0917, 76},
    {42, 0.9451, 76, 0.0918, 75},
    {47, 0.9403, 77, 0.0915, 77},
    {18, 0.9269, 78, 0.0901, 83},
    {3, 0.9234, 79, 0.0915, 77},
    {72, 0.9232, 80, 0.0909, 79},
    {90, 0.9186, 81, 0.0907, 80},
    {13, 0.9176, 82, 0.0907, 80},
    {67, 0.9171, 83, 0.0901, 83},
    {29, 0.9012, 84, 0.0881, 86},
    {31, 0.9012, 84, 0.0903, 82},
    {99, 0.8988, 86, 0.0873, 87},
    {65, 0.8973, 87, 0.0897, 85},
    {79, 0.8888, 88, 0.0872, 88},
    {70, 0.8824, 89, 0.0847, 91},
    {7, 0.8774, 90, 0.0849, 90},
    {16, 0.8729, 91, 0.084, 92},
    {10, 0.8585, 92, 0.0833, 95},
    {49, 0.856, 93, 0.0835, 94},
    {46, 0.855, 94, 0.085, 89},
    {38, 0.8536, 95, 0.0838, 93},
    {69, 0.8368, 96, 0.0796, 97},
    {40, 0.8301, 97, 0.0805, 96},
    {17, 0.8224, 98, 0.0789, 98},
    {23, 0.8188, 99, 0.0781, 99},
    {96, 0.7894, 100, 0.0743, 100},
};

template <typename Getter>
std::vector<double> column(const std::vector<RankRow> &rows, Getter get) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const RankRow &row : rows)
        out.push_back(get(row));
    return out;
}

inline std::vector<double> pr_ranks(const std::vector<RankRow> &rows) {
    return column(rows, [](const RankRow &r) { return r.pr_rank; });
}
inline std::vector<double> ev_ranks(const std::vector<RankRow> &rows) {
    return column(rows, [](const RankRow &r) { return r.ev_rank; });
}
inline std::vector<double> pr_scores(const std::vector<RankRow> &rows) {
    return column(rows, [](const RankRow &r) { return r.pagerank; });
}
inline std::vector<double> ev_scores(const std::vector<RankRow> &rows) {
    return column(rows, [](const RankRow &r) { return r.eigenvector; });
}

} // namespace fixtures

#endif // CENTRANK_TESTS_FIXTURES_HPP_
