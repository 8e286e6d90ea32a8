// reference_tables.hpp -- embedded expected data for the eight affine
// classification tables and the solution-count summary, plus the regression
// check that regenerates each table from the enumerator and diffs it
// field by field. This dataset is the primary acceptance artifact.

#pragma once

#include "starmat/enumerate.hpp"
#include "starmat/table_report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace starmat {

struct ReferenceRow {
    std::vector<long> arms;
    long dim, s, h;
    std::vector<long> x;
    const char* alias;  // classical name, or ""
};

struct ReferenceTable {
    const char* name;              // "m4p1" = 4 arms, p = 1
    std::size_t m;
    long p;
    std::optional<long> d_cap;     // table truncated to D <= d_cap
    long total;                    // untruncated solution count
    std::vector<ReferenceRow> rows;
};

struct ReferenceCount {
    std::size_t m;
    long p;
    long count;
};

// m, p, number of unordered affine stars
inline const std::vector<ReferenceCount>& reference_counts() {
    static const std::vector<ReferenceCount> counts = {
        {2, 1, 1}, {3, 1, 3}, {4, 1, 14}, {5, 1, 147},
        {6, 1, 3462}, {4, 2, 1}, {5, 2, 3}, {6, 2, 17},
    };
    return counts;
}

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {"m2p1", 2, 1, std::nullopt, 1, {
            {{1, 1}, 3, 2, 4, {1, 1}, ""},                                   // row 1
        }},
        {"m3p1", 3, 1, std::nullopt, 3, {
            {{2, 2, 2}, 7, 3, 12, {1, 1, 1}, "E6(1)"},                       // row 1
            {{1, 3, 3}, 8, 4, 18, {2, 1, 1}, "E7(1)"},                       // row 2
            {{1, 2, 5}, 9, 6, 30, {3, 2, 1}, "E8(1)"},                       // row 3
        }},
        {"m4p1", 4, 1, std::nullopt, 14, {
            {{3, 3, 3, 3}, 13, 4, 28, {1, 1, 1, 1}, ""},                     // row 1
            {{2, 3, 3, 5}, 14, 12, 90, {4, 3, 3, 2}, ""},                    // row 2
            {{2, 2, 5, 5}, 15, 6, 48, {2, 2, 1, 1}, ""},                     // row 3
            {{1, 5, 5, 5}, 17, 6, 54, {3, 1, 1, 1}, ""},                     // row 4
            {{1, 3, 7, 7}, 19, 8, 80, {4, 2, 1, 1}, ""},                     // row 5
            {{1, 4, 4, 9}, 19, 10, 100, {5, 2, 2, 1}, ""},                   // row 6
            {{2, 2, 3, 11}, 19, 12, 120, {4, 4, 3, 1}, ""},                  // row 7
            {{1, 3, 5, 11}, 21, 12, 132, {6, 3, 2, 1}, ""},                  // row 8
            {{1, 2, 11, 11}, 26, 12, 162, {6, 4, 1, 1}, ""},                 // row 9
            {{1, 2, 9, 14}, 27, 30, 420, {15, 10, 3, 2}, ""},                // row 10
            {{1, 3, 4, 19}, 28, 20, 290, {10, 5, 4, 1}, ""},                 // row 11
            {{1, 2, 8, 17}, 29, 18, 270, {9, 6, 2, 1}, ""},                  // row 12
            {{1, 2, 7, 23}, 34, 24, 420, {12, 8, 3, 1}, ""},                 // row 13
            {{1, 2, 6, 41}, 51, 42, 1092, {21, 14, 6, 1}, ""},               // row 14
        }},
        {"m5p1", 5, 1, 40, 147, {
            {{4, 4, 4, 4, 4}, 21, 5, 55, {1, 1, 1, 1, 1}, ""},               // row 1
            {{3, 3, 5, 5, 5}, 22, 12, 138, {3, 3, 2, 2, 2}, ""},             // row 2
            {{2, 5, 5, 5, 5}, 23, 6, 72, {2, 1, 1, 1, 1}, ""},               // row 3
            {{3, 3, 3, 7, 7}, 24, 8, 100, {2, 2, 2, 1, 1}, ""},              // row 4
            {{3, 3, 4, 4, 9}, 24, 20, 250, {5, 5, 4, 4, 2}, ""},             // row 5
            {{2, 3, 5, 7, 7}, 25, 24, 312, {8, 6, 4, 3, 3}, ""},             // row 6
            {{2, 4, 4, 5, 9}, 25, 30, 390, {10, 6, 6, 5, 3}, ""},            // row 7
            {{3, 3, 3, 5, 11}, 26, 12, 162, {3, 3, 3, 2, 1}, ""},            // row 8
            {{2, 3, 5, 5, 11}, 27, 12, 168, {4, 3, 2, 2, 1}, ""},            // row 9
            {{2, 2, 8, 8, 8}, 29, 9, 135, {3, 3, 1, 1, 1}, ""},              // row 10
            {{2, 4, 4, 4, 14}, 29, 15, 225, {5, 3, 3, 3, 1}, ""},            // row 11
            {{1, 7, 7, 7, 7}, 30, 8, 124, {4, 1, 1, 1, 1}, ""},              // row 12
            {{2, 2, 7, 7, 11}, 30, 24, 372, {8, 8, 3, 3, 2}, ""},            // row 13
            {{2, 3, 3, 11, 11}, 31, 12, 192, {4, 3, 3, 1, 1}, ""},           // row 14
            {{1, 5, 8, 8, 8}, 31, 18, 288, {9, 3, 2, 2, 2}, ""},             // row 15
            {{2, 2, 5, 11, 11}, 32, 12, 198, {4, 4, 2, 1, 1}, ""},           // row 16
            {{1, 5, 7, 7, 11}, 32, 24, 396, {12, 4, 3, 3, 2}, ""},           // row 17
            {{2, 3, 3, 9, 14}, 32, 60, 990, {20, 15, 15, 6, 4}, ""},         // row 18
            {{1, 4, 9, 9, 9}, 33, 10, 170, {5, 2, 1, 1, 1}, ""},             // row 19
            {{1, 6, 6, 6, 13}, 33, 14, 238, {7, 2, 2, 2, 1}, ""},            // row 20
            {{3, 3, 3, 4, 19}, 33, 20, 340, {5, 5, 5, 4, 1}, ""},            // row 21
            {{2, 2, 5, 9, 14}, 33, 30, 510, {10, 10, 5, 3, 2}, ""},          // row 22
            {{1, 5, 5, 11, 11}, 34, 12, 210, {6, 2, 2, 1, 1}, ""},           // row 23
            {{2, 3, 3, 8, 17}, 34, 36, 630, {12, 9, 9, 4, 2}, ""},           // row 24
            {{2, 3, 4, 5, 19}, 34, 60, 1050, {20, 15, 12, 10, 3}, ""},       // row 25
            {{2, 2, 5, 8, 17}, 35, 18, 324, {6, 6, 3, 2, 1}, ""},            // row 26
            {{1, 5, 5, 9, 14}, 35, 30, 540, {15, 5, 5, 3, 2}, ""},           // row 27
            {{2, 2, 4, 14, 14}, 37, 15, 285, {5, 5, 3, 1, 1}, ""},           // row 28
            {{1, 5, 5, 8, 17}, 37, 18, 342, {9, 3, 3, 2, 1}, ""},            // row 29
            {{2, 2, 6, 6, 20}, 37, 21, 399, {7, 7, 3, 3, 1}, ""},            // row 30
            {{1, 3, 11, 11, 11}, 38, 12, 234, {6, 3, 1, 1, 1}, ""},          // row 31
            {{2, 3, 3, 7, 23}, 39, 24, 480, {8, 6, 6, 3, 1}, ""},            // row 32
            {{1, 4, 5, 14, 14}, 39, 30, 600, {15, 6, 5, 2, 2}, ""},          // row 33
            {{1, 4, 7, 7, 19}, 39, 40, 800, {20, 8, 5, 5, 2}, ""},           // row 34
            {{1, 5, 6, 6, 20}, 39, 42, 840, {21, 7, 6, 6, 2}, ""},           // row 35
            {{1, 3, 9, 11, 14}, 39, 60, 1200, {30, 15, 6, 5, 4}, ""},        // row 36
            {{2, 2, 4, 11, 19}, 39, 60, 1200, {20, 20, 12, 5, 3}, ""},       // row 37
            {{2, 2, 5, 7, 23}, 40, 24, 492, {8, 8, 4, 3, 1}, ""},            // row 38
        }},
        {"m6p1", 6, 1, 40, 3462, {
            {{5, 5, 5, 5, 5, 5}, 31, 6, 96, {1, 1, 1, 1, 1, 1}, ""},         // row 1
            {{3, 5, 5, 5, 7, 7}, 33, 24, 408, {6, 4, 4, 4, 3, 3}, ""},       // row 2
            {{4, 4, 5, 5, 5, 9}, 33, 30, 510, {6, 6, 5, 5, 5, 3}, ""},       // row 3
            {{3, 3, 7, 7, 7, 7}, 35, 8, 144, {2, 2, 1, 1, 1, 1}, ""},        // row 4
            {{4, 4, 4, 4, 9, 9}, 35, 10, 180, {2, 2, 2, 2, 1, 1}, ""},       // row 5
            {{3, 5, 5, 5, 5, 11}, 35, 12, 216, {3, 2, 2, 2, 2, 1}, ""},      // row 6
            {{3, 4, 4, 7, 7, 9}, 35, 40, 720, {10, 8, 8, 5, 5, 4}, ""},      // row 7
            {{2, 5, 7, 7, 7, 7}, 36, 24, 444, {8, 4, 3, 3, 3, 3}, ""},       // row 8
            {{3, 3, 5, 8, 8, 8}, 36, 36, 666, {9, 9, 6, 4, 4, 4}, ""},       // row 9
            {{2, 5, 5, 8, 8, 8}, 37, 18, 342, {6, 3, 3, 2, 2, 2}, ""},       // row 10
            {{3, 3, 5, 7, 7, 11}, 37, 24, 456, {6, 6, 4, 3, 3, 2}, ""},      // row 11
            {{4, 4, 4, 5, 5, 14}, 37, 30, 570, {6, 6, 6, 5, 5, 2}, ""},      // row 12
            {{3, 4, 4, 5, 9, 11}, 37, 60, 1140, {15, 12, 12, 10, 6, 5}, ""}, // row 13
            {{3, 3, 4, 9, 9, 9}, 38, 20, 390, {5, 5, 4, 2, 2, 2}, ""},       // row 14
            {{2, 5, 5, 7, 7, 11}, 38, 24, 468, {8, 4, 4, 3, 3, 2}, ""},      // row 15
            {{3, 3, 6, 6, 6, 13}, 38, 28, 546, {7, 7, 4, 4, 4, 2}, ""},      // row 16
            {{3, 3, 5, 5, 11, 11}, 39, 12, 240, {3, 3, 2, 2, 1, 1}, ""},     // row 17
            {{2, 4, 5, 9, 9, 9}, 39, 30, 600, {10, 6, 5, 3, 3, 3}, ""},      // row 18
            {{2, 5, 6, 6, 6, 13}, 39, 42, 840, {14, 7, 6, 6, 6, 3}, ""},     // row 19
            {{2, 5, 5, 5, 11, 11}, 40, 12, 246, {4, 2, 2, 2, 1, 1}, ""},     // row 20
            {{3, 3, 5, 5, 9, 14}, 40, 60, 1230, {15, 15, 10, 10, 6, 4}, ""}, // row 21
        }},
        {"m4p2", 4, 2, std::nullopt, 1, {
            {{1, 1, 1, 1}, 5, 2, 6, {1, 1, 1, 1}, "D4(1)"},                  // row 1
        }},
        {"m5p2", 5, 2, std::nullopt, 3, {
            {{1, 1, 2, 2, 2}, 9, 6, 30, {3, 3, 2, 2, 2}, ""},                // row 1
            {{1, 1, 1, 3, 3}, 10, 4, 22, {2, 2, 2, 1, 1}, ""},               // row 2
            {{1, 1, 1, 2, 5}, 11, 6, 36, {3, 3, 3, 2, 1}, ""},               // row 3
        }},
        {"m6p2", 6, 2, std::nullopt, 17, {
            {{2, 2, 2, 2, 2, 2}, 13, 3, 21, {1, 1, 1, 1, 1, 1}, ""},         // row 1
            {{1, 2, 2, 2, 3, 3}, 14, 12, 90, {6, 4, 4, 4, 3, 3}, ""},        // row 2
            {{1, 1, 3, 3, 3, 3}, 15, 4, 32, {2, 2, 1, 1, 1, 1}, ""},         // row 3
            {{1, 2, 2, 2, 2, 5}, 15, 6, 48, {3, 2, 2, 2, 2, 1}, ""},         // row 4
            {{1, 1, 2, 3, 3, 5}, 16, 12, 102, {6, 6, 4, 3, 3, 2}, ""},       // row 5
            {{1, 1, 2, 2, 5, 5}, 17, 6, 54, {3, 3, 2, 2, 1, 1}, ""},         // row 6
            {{1, 1, 1, 5, 5, 5}, 19, 6, 60, {3, 3, 3, 1, 1, 1}, ""},         // row 7
            {{1, 1, 1, 3, 7, 7}, 21, 8, 88, {4, 4, 4, 2, 1, 1}, ""},         // row 8
            {{1, 1, 1, 4, 4, 9}, 21, 10, 110, {5, 5, 5, 2, 2, 1}, ""},       // row 9
            {{1, 1, 2, 2, 3, 11}, 21, 12, 132, {6, 6, 4, 4, 3, 1}, ""},      // row 10
            {{1, 1, 1, 3, 5, 11}, 23, 12, 144, {6, 6, 6, 3, 2, 1}, ""},      // row 11
            {{1, 1, 1, 2, 11, 11}, 28, 12, 174, {6, 6, 6, 4, 1, 1}, ""},     // row 12
            {{1, 1, 1, 2, 9, 14}, 29, 30, 450, {15, 15, 15, 10, 3, 2}, ""},  // row 13
            {{1, 1, 1, 3, 4, 19}, 30, 20, 310, {10, 10, 10, 5, 4, 1}, ""},   // row 14
            {{1, 1, 1, 2, 8, 17}, 31, 18, 288, {9, 9, 9, 6, 2, 1}, ""},      // row 15
            {{1, 1, 1, 2, 7, 23}, 36, 24, 444, {12, 12, 12, 8, 3, 1}, ""},   // row 16
            {{1, 1, 1, 2, 6, 41}, 53, 42, 1134, {21, 21, 21, 14, 6, 1}, ""}, // row 17
        }},
    };
    return tables;
}

struct TableCheck {
    std::string table;
    bool pass;
    std::string detail;  // first mismatch, or empty
};

struct VerifyReport {
    std::vector<TableCheck> checks;  // one per table, plus one for the counts

    bool all_pass() const {
        for (const TableCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::vector<BigInt> to_bigints(const std::vector<long>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

// First field mismatch between a regenerated solution and the expected row.
inline std::string diff_row(std::size_t no, const AffineSolution& got, const ReferenceRow& want) {
    if (got.shape.arms() != to_bigints(want.arms)) {
        std::string expected;
        for (long r : want.arms) expected += (expected.empty() ? "" : ",") + std::to_string(r);
        return "row " + std::to_string(no) + ": arms " + type_string(got) + ", expected (" +
               expected + ")";
    }
    if (got.dim != want.dim)
        return "row " + std::to_string(no) + ": D = " + to_string(got.dim) + ", expected " +
               std::to_string(want.dim);
    if (got.s != want.s)
        return "row " + std::to_string(no) + ": s = " + to_string(got.s) + ", expected " +
               std::to_string(want.s);
    if (got.h != want.h)
        return "row " + std::to_string(no) + ": h = " + to_string(got.h) + ", expected " +
               std::to_string(want.h);
    if (got.x != to_bigints(want.x))
        return "row " + std::to_string(no) + ": labels " + label_string(got) + ", expected other";
    const std::string alias = classical_alias(got).value_or("");
    if (alias != want.alias)
        return "row " + std::to_string(no) + ": alias '" + alias + "', expected '" + want.alias + "'";
    return "";
}

}  // namespace detail

// Regenerate every reference table from the enumerator and diff it field by
// field (arms, D, s, h, x, alias, row order, truncated/untruncated counts).
// Mismatches are report content, not errors.
inline VerifyReport verify_reference_tables() {
    VerifyReport report;
    for (const ReferenceTable& table : reference_tables()) {
        TableCheck check{table.name, true, ""};
        EnumQuery q(table.m, BigInt(table.p));
        if (table.d_cap) q.d_max = BigInt(*table.d_cap);
        const EnumResult got = enumerate_affine(q);

        if (got.total != table.total) {
            check.detail = "total = " + to_string(got.total) + ", expected " + std::to_string(table.total);
        } else if (got.solutions.size() != table.rows.size()) {
            check.detail = "row count = " + std::to_string(got.solutions.size()) + ", expected " +
                           std::to_string(table.rows.size());
        } else {
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                check.detail = detail::diff_row(i + 1, got.solutions[i], table.rows[i]);
                if (!check.detail.empty()) break;
            }
        }
        check.pass = check.detail.empty();
        report.checks.push_back(std::move(check));
    }

    TableCheck counts{"counts", true, ""};
    for (const ReferenceCount& c : reference_counts()) {
        const BigInt got = count_affine(c.m, BigInt(c.p));
        if (got != c.count) {
            counts.pass = false;
            counts.detail = "count(" + std::to_string(c.m) + "," + std::to_string(c.p) + ") = " +
                            to_string(got) + ", expected " + std::to_string(c.count);
            break;
        }
    }
    report.checks.push_back(std::move(counts));
    return report;
}

inline std::string to_string(const VerifyReport& report) {
    std::string out;
    for (const TableCheck& c : report.checks) {
        out += c.table + ": " + (c.pass ? "pass" : "FAIL -- " + c.detail) + "\n";
    }
    return out;
}

}  // namespace starmat
