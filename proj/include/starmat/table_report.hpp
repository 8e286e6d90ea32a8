// table_report.hpp -- render affine solution sets in the classification
// table schema (No., Type, D, s, h, (x_i)[s]) as text, CSV, JSON or TeX,
// and emit star graphs as Graphviz DOT.

#pragma once

#include "starmat/affine_solution.hpp"
#include "starmat/coxeter.hpp"
#include "starmat/star_shape.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace starmat {

enum class TableFormat { Text, Csv, Json, Tex };

inline TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::Text;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "tex") return TableFormat::Tex;
    throw std::invalid_argument("unknown table format: '" + name + "'");
}

// The four classical affine stars that appear inside this family; every
// other row is a weighted-star extension with no classical name.
inline std::optional<std::string> classical_alias(const AffineSolution& sol) {
    const std::vector<BigInt>& arms = sol.shape.arms();
    if (sol.p() == 2 && arms == std::vector<BigInt>{1, 1, 1, 1}) return "D4(1)";
    if (sol.p() == 1 && arms == std::vector<BigInt>{2, 2, 2}) return "E6(1)";
    if (sol.p() == 1 && arms == std::vector<BigInt>{1, 3, 3}) return "E7(1)";
    if (sol.p() == 1 && arms == std::vector<BigInt>{1, 2, 5}) return "E8(1)";
    return std::nullopt;
}

// ASCII type string "B^(p)(r1,...,rm)".
inline std::string type_string(const AffineSolution& sol) {
    std::string s = "B^(" + to_string(sol.p()) + ")(";
    for (std::size_t i = 0; i < sol.shape.arms().size(); ++i) {
        if (i) s += ",";
        s += to_string(sol.shape.arms()[i]);
    }
    return s + ")";
}

// Label column "(x1,...,xm)[s]" with the x_i descending.
inline std::string label_string(const AffineSolution& sol) {
    std::string s = "(";
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        if (i) s += ",";
        s += to_string(sol.x[i]);
    }
    return s + ")[" + to_string(sol.s) + "]";
}

struct TableRow {
    std::size_t no;
    std::string type;       // ASCII type string
    std::string alias;      // classical alias or empty
    BigInt dim, s, h;
    std::vector<BigInt> x;
    std::string labels;     // "(x1,...,xm)[s]"
};

inline TableRow make_table_row(std::size_t no, const AffineSolution& sol) {
    TableRow row{no, type_string(sol), "", sol.dim, sol.s, sol.h, sol.x, label_string(sol)};
    if (auto alias = classical_alias(sol)) row.alias = *alias;
    return row;
}

namespace detail {

inline std::string csv_quote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string display_type(const TableRow& row) {
    return row.alias.empty() ? row.type : row.alias + " ~ " + row.type;
}

inline std::string render_text(const std::vector<TableRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"No.", "Type", "D", "s", "h", "(x_i)[s]"});
    for (const TableRow& r : rows)
        cells.push_back({std::to_string(r.no), display_type(r), to_string(r.dim), to_string(r.s),
                         to_string(r.h), r.labels});
    std::vector<std::size_t> width(6, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 6; ++c) {
            out << row[c];
            if (c + 1 < 6) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

inline std::string render_csv(const std::vector<TableRow>& rows) {
    std::string out = "no,type,D,s,h,labels,alias\n";
    for (const TableRow& r : rows) {
        out += std::to_string(r.no) + "," + csv_quote(r.type) + "," + to_string(r.dim) + "," +
               to_string(r.s) + "," + to_string(r.h) + "," + csv_quote(r.labels) + "," +
               csv_quote(r.alias) + "\n";
    }
    return out;
}

// numeric values as decimal strings: D, s, h and the x_i have no 64-bit bound
inline std::string render_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& r : rows) {
        nlohmann::json row;
        row["no"] = r.no;
        row["type"] = r.type;
        if (!r.alias.empty()) row["alias"] = r.alias;
        row["D"] = to_string(r.dim);
        row["s"] = to_string(r.s);
        row["h"] = to_string(r.h);
        nlohmann::json xs = nlohmann::json::array();
        for (const BigInt& x : r.x) xs.push_back(to_string(x));
        row["x"] = xs;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

inline std::string tex_type(const TableRow& row) {
    // "B^(2)(1,1,1,1)" -> "$\mathcal B^{(2)}(1,1,1,1)$", alias prefixed when present
    std::string inner = row.type;
    inner.replace(0, 3, "\\mathcal B^{(");
    const std::size_t close = inner.find(')');
    inner.replace(close, 1, ")}");
    std::string out = "$";
    if (!row.alias.empty()) {
        // alias "D4(1)" -> "D_4^{(1)} \simeq"
        out += row.alias.substr(0, 1) + "_" + row.alias.substr(1, 1) + "^{(1)} \\simeq ";
    }
    return out + inner + "$";
}

inline std::string render_tex(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "\\begin{longtable}{@{}r l r r r l@{}}\n"
        << "\\toprule\nNo. & Type & $D$ & $s$ & $h$ & $(x_i)[s]$\\\\\n\\midrule\n";
    for (const TableRow& r : rows)
        out << r.no << " & " << tex_type(r) << " & " << to_string(r.dim) << " & " << to_string(r.s)
            << " & " << to_string(r.h) << " & $" << r.labels << "$ \\\\\n";
    out << "\\bottomrule\n\\end{longtable}\n";
    return out.str();
}

}  // namespace detail

inline std::vector<TableRow> make_table_rows(const std::vector<AffineSolution>& solutions) {
    std::vector<TableRow> rows;
    rows.reserve(solutions.size());
    for (std::size_t i = 0; i < solutions.size(); ++i)
        rows.push_back(make_table_row(i + 1, solutions[i]));
    return rows;
}

inline std::string render_table(const std::vector<AffineSolution>& solutions, TableFormat format) {
    const std::vector<TableRow> rows = make_table_rows(solutions);
    switch (format) {
        case TableFormat::Text: return detail::render_text(rows);
        case TableFormat::Csv: return detail::render_csv(rows);
        case TableFormat::Json: return detail::render_json(rows);
        case TableFormat::Tex: return detail::render_tex(rows);
    }
    throw std::invalid_argument("render_table: unknown format");
}

// Undirected DOT graph of the star; never materializes the matrix. Nodes
// are named arm{i}_{j} (arm i, position j counted from the free end) and
// "center". with_labels requires an affine shape and annotates every node
// with its Coxeter label.
inline std::string emit_dot(const StarShape& shape, bool with_labels = false) {
    std::optional<CoxeterLabels> labels;
    if (with_labels) labels = coxeter_labels(shape);  // throws unless affine

    std::ostringstream out;
    out << "graph star {\n";
    out << "  center [label=\"k=" << to_string(shape.k());
    if (labels) out << " c=" << to_string(labels->center);
    out << "\"];\n";
    for (std::size_t i = 0; i < shape.m(); ++i) {
        const std::size_t r = to_size(shape.arms()[i]);
        for (std::size_t j = 1; j <= r; ++j) {
            out << "  arm" << (i + 1) << "_" << j << " [label=\"w=2";
            if (labels) out << " c=" << to_string(labels->arms[i][j - 1]);
            out << "\"];\n";
        }
    }
    for (std::size_t i = 0; i < shape.m(); ++i) {
        const std::size_t r = to_size(shape.arms()[i]);
        for (std::size_t j = 1; j < r; ++j)
            out << "  arm" << (i + 1) << "_" << j << " -- arm" << (i + 1) << "_" << (j + 1) << ";\n";
        out << "  arm" << (i + 1) << "_" << r << " -- center;\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace starmat
