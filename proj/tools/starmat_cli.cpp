// starmat_cli.cpp -- command-line surface: classification, enumeration,
// Coxeter labels, tau-operations, DOT emission, and the reference-table
// verification suite.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verify found mismatches.

#include "starmat/starmat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace starmat;

std::vector<BigInt> parse_arm_list(const std::string& text) {
    std::vector<BigInt> arms;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field.empty()) throw CLI::ValidationError("arms", "empty entry in arm list '" + text + "'");
        for (char c : field)
            if (c < '0' || c > '9')
                throw CLI::ValidationError("arms", "arm lengths must be positive integers, got '" + field + "'");
        arms.push_back(parse_bigint(field));
    }
    if (arms.empty()) throw CLI::ValidationError("arms", "empty arm list");
    return arms;
}

StarShape make_shape(long k, const std::string& arm_text) {
    try {
        return StarShape(BigInt(k), parse_arm_list(arm_text));
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("shape", e.what());
    }
}

nlohmann::json solution_json(const AffineSolution& sol) {
    TableRow row = make_table_row(1, sol);
    nlohmann::json j;
    j["type"] = row.type;
    if (!row.alias.empty()) j["alias"] = row.alias;
    j["D"] = to_string(row.dim);
    j["s"] = to_string(row.s);
    j["h"] = to_string(row.h);
    nlohmann::json xs = nlohmann::json::array();
    for (const BigInt& x : row.x) xs.push_back(to_string(x));
    j["x"] = xs;
    return j;
}

int run_classify(const StarShape& shape, const std::string& format) {
    const BigRat s = schur_scalar(shape);
    const MatrixClass cls = classify(shape);
    if (format == "json") {
        nlohmann::json j;
        j["class"] = to_string(cls);
        j["S"] = to_string(s);
        j["D"] = to_string(dimension(shape));
        j["det"] = to_string(determinant_closed(shape));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(cls) << " (S = " << to_string(s) << "), D = "
                  << to_string(dimension(shape)) << "\n";
    }
    return 0;
}

int run_det(const StarShape& shape, const std::string& method, std::size_t threshold) {
    if (method == "bareiss") {
        std::cout << to_string(bareiss_determinant(build_star_matrix(shape, threshold))) << "\n";
    } else {
        std::cout << to_string(determinant_closed(shape)) << "\n";
    }
    return 0;
}

int run_labels(const StarShape& shape, const std::string& format) {
    const AffineSolution sol = make_affine_solution(shape);
    const CoxeterLabels labels = coxeter_labels(shape);
    if (format == "json") {
        nlohmann::json j = solution_json(sol);
        j["center"] = to_string(labels.center);
        nlohmann::json arms = nlohmann::json::array();
        for (const auto& arm : labels.arms) {
            nlohmann::json a = nlohmann::json::array();
            for (const BigInt& c : arm) a.push_back(to_string(c));
            arms.push_back(a);
        }
        j["arms"] = arms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "type: " << type_string(sol) << "\n"
                  << "D: " << to_string(sol.dim) << "\n"
                  << "s: " << to_string(sol.s) << "\n"
                  << "h: " << to_string(sol.h) << "\n"
                  << "labels: " << label_string(sol) << "\n"
                  << "center: " << to_string(labels.center) << "\n";
        for (std::size_t i = 0; i < labels.arms.size(); ++i) {
            std::cout << "arm " << (i + 1) << ":";
            for (const BigInt& c : labels.arms[i]) std::cout << " " << to_string(c);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_enumerate(EnumQuery q, const std::string& format) {
    const EnumResult result = enumerate_affine(q);
    if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";

    if (q.count_only) {
        std::cout << to_string(result.total) << "\n";
        return 0;
    }
    const bool truncated = BigInt(result.solutions.size()) != result.total;
    if (format == "json") {
        nlohmann::json j;
        j["total"] = to_string(result.total);
        j["shown"] = result.solutions.size();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < result.solutions.size(); ++i) {
            nlohmann::json row = solution_json(result.solutions[i]);
            row["no"] = i + 1;
            rows.push_back(row);
        }
        j["rows"] = rows;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << render_table(result.solutions, parse_table_format(format));
    if (truncated) {
        const std::string note = "total: " + to_string(result.total) + " (" +
                                 std::to_string(result.solutions.size()) + " shown)";
        if (format == "text") std::cout << note << "\n";
        else std::cerr << note << "\n";
    }
    return 0;
}

int run_tau(const StarShape& a, const StarShape& b, const std::string& format) {
    const AffineSolution sol = tau_product(make_affine_solution(a), make_affine_solution(b));
    if (format == "json") {
        std::cout << solution_json(sol).dump(2) << "\n";
    } else {
        std::cout << type_string(sol) << "  D=" << to_string(sol.dim) << " s=" << to_string(sol.s)
                  << " h=" << to_string(sol.h) << " labels=" << label_string(sol) << "\n";
    }
    return 0;
}

int run_decompose(const StarShape& shape) {
    const AffineSolution sol = make_affine_solution(shape);
    if (auto parts = tau_decompose(sol)) {
        std::cout << type_string(parts->first) << " tau " << type_string(parts->second) << "\n";
    } else {
        std::cout << "tau-primitive\n";
    }
    return 0;
}

int run_verify() {
    const VerifyReport report = verify_reference_tables();
    std::cout << to_string(report);
    if (report.all_pass()) {
        std::cout << "all tables verified\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted star matrices: classification, affine enumeration, Coxeter labels"};
    app.require_subcommand(1);

    long k = 0;
    long k2 = 0;
    std::string arms_text, arms2_text;
    long m = 0, p = 0;
    std::string format = "text";
    std::string method = "closed";
    std::optional<long> dmax;
    std::optional<std::size_t> limit;
    bool count_only = false;
    bool with_labels = false;
    std::size_t threshold = starmat::kDefaultMaterializeThreshold;

    auto add_shape_options = [&](CLI::App* cmd) {
        cmd->add_option("-k", k, "central weight (>= 1)")->required();
        cmd->add_option("-r", arms_text, "comma-separated arm lengths, e.g. 1,2,5")->required();
    };
    auto add_format_option = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "output format: " + choices)
            ->check(CLI::IsMember(CLI::detail::split(choices, '|')));
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "finite / affine / indefinite trichotomy of B(k;r1,...,rm)");
    add_shape_options(classify_cmd);
    add_format_option(classify_cmd, "text|json");

    CLI::App* det_cmd = app.add_subcommand("det", "exact determinant of B(k;r1,...,rm)");
    add_shape_options(det_cmd);
    det_cmd->add_option("--method", method, "closed (any size) or bareiss (materializes the matrix)")
        ->check(CLI::IsMember({"closed", "bareiss"}));
    det_cmd->add_option("--threshold", threshold, "materialization bound on the dimension D");

    CLI::App* labels_cmd = app.add_subcommand("labels", "Coxeter labels of an affine star");
    add_shape_options(labels_cmd);
    add_format_option(labels_cmd, "text|json");

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "all affine stars with m arms and p = m - k");
    enum_cmd->add_option("-m", m, "number of arms (>= 2)")->required();
    enum_cmd->add_option("-p", p, "target integer p = m - k (>= 1)")->required();
    enum_cmd->add_option("--dmax", dmax, "only list solutions with dimension D <= dmax");
    enum_cmd->add_option("--limit", limit, "cap the number of listed solutions");
    enum_cmd->add_flag("--count-only", count_only, "print only the solution count");
    add_format_option(enum_cmd, "text|csv|json|tex");

    CLI::App* count_cmd = app.add_subcommand("count", "number of affine stars with m arms and p = m - k");
    count_cmd->add_option("-m", m, "number of arms (>= 2)")->required();
    count_cmd->add_option("-p", p, "target integer p = m - k (>= 1)")->required();

    CLI::App* tau_cmd = app.add_subcommand("tau", "tau-product of two affine stars (multiset union of arms)");
    add_shape_options(tau_cmd);
    tau_cmd->add_option("--k2", k2, "central weight of the second star")->required();
    tau_cmd->add_option("--r2", arms2_text, "arm lengths of the second star")->required();
    add_format_option(tau_cmd, "text|json");

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "split an affine star into two affine factors, if possible");
    add_shape_options(decompose_cmd);

    CLI::App* dot_cmd = app.add_subcommand("dot", "emit the star graph as Graphviz DOT");
    add_shape_options(dot_cmd);
    dot_cmd->add_flag("--with-labels", with_labels, "annotate nodes with Coxeter labels (affine only)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "regenerate all reference tables and diff against embedded data");
    (void)verify_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(make_shape(k, arms_text), format);
        if (det_cmd->parsed()) return run_det(make_shape(k, arms_text), method, threshold);
        if (labels_cmd->parsed()) return run_labels(make_shape(k, arms_text), format);
        if (enum_cmd->parsed()) {
            if (m < 2) throw CLI::ValidationError("-m", "need m >= 2");
            if (p < 1) throw CLI::ValidationError("-p", "need p >= 1");
            EnumQuery q(static_cast<std::size_t>(m), BigInt(p));
            if (dmax) q.d_max = BigInt(*dmax);
            q.limit = limit;
            q.count_only = count_only;
            return run_enumerate(std::move(q), format);
        }
        if (count_cmd->parsed()) {
            if (m < 2) throw CLI::ValidationError("-m", "need m >= 2");
            if (p < 1) throw CLI::ValidationError("-p", "need p >= 1");
            std::cout << to_string(count_affine(static_cast<std::size_t>(m), BigInt(p))) << "\n";
            return 0;
        }
        if (tau_cmd->parsed())
            return run_tau(make_shape(k, arms_text), make_shape(k2, arms2_text), format);
        if (decompose_cmd->parsed()) return run_decompose(make_shape(k, arms_text));
        if (dot_cmd->parsed()) {
            std::cout << emit_dot(make_shape(k, arms_text), with_labels);
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
