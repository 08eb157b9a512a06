#include "psdblock/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "psdblock/errors.hpp"
#include "psdblock/linalg.hpp"

namespace psdblock {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j).real(), m(i, j).imag()});
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix: expected object with fields rows, cols, entries");
    const Eigen::Index rows = j.at("rows").get<Eigen::Index>();
    const Eigen::Index cols = j.at("cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw ParseError("matrix: negative dimension");
    const json& entries = j.at("entries");
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw ParseError("matrix: entries length must be rows*cols");
    Matrix m(rows, cols);
    Eigen::Index idx = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("matrix: each entry must be a [re, im] pair");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("matrix: entries must be finite");
        m(idx / cols, idx % cols) = Complex(re, im);
        ++idx;
    }
    return m;
}

json block_to_json(const PsdBlockMatrix& m) {
    return json{{"n", m.n},
                {"m", m.m},
                {"A", matrix_to_json(m.A.mat())},
                {"X", matrix_to_json(m.X)},
                {"B", matrix_to_json(m.B.mat())}};
}

PsdBlockMatrix block_from_json(const json& j) {
    for (const char* field : {"n", "m", "A", "X", "B"})
        if (!j.contains(field))
            throw ParseError(std::string("block: missing field ") + field);
    const Eigen::Index n = j.at("n").get<Eigen::Index>();
    const Eigen::Index m = j.at("m").get<Eigen::Index>();
    const Matrix a = matrix_from_json(j.at("A"));
    const Matrix x = matrix_from_json(j.at("X"));
    const Matrix b = matrix_from_json(j.at("B"));
    if (a.rows() != n || a.cols() != n) throw ParseError("block: A must be n x n");
    if (b.rows() != m || b.cols() != m) throw ParseError("block: B must be m x m");
    if (x.rows() != n || x.cols() != m) throw ParseError("block: X must be n x m");
    return assemble(hermitize(a, 1e-9), x, hermitize(b, 1e-9));
}

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return matrix_from_json(j);
}

PsdBlockMatrix load_block(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return block_from_json(j);
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

namespace {
json vector_to_json(const RealVector& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
}
}  // namespace

json dominance_to_json(const DominanceReport& r) {
    return json{{"k_norms_lhs", vector_to_json(r.k_norms_lhs)},
                {"k_norms_rhs", vector_to_json(r.k_norms_rhs)},
                {"margins", vector_to_json(r.margins)},
                {"verdict", to_string(r.verdict)},
                {"tolerance", r.tolerance}};
}

std::string dominance_to_csv(const DominanceReport& r) {
    std::ostringstream out;
    out << "k,lhs,rhs,margin\n";
    out.precision(17);
    for (Eigen::Index k = 0; k < r.margins.size(); ++k)
        out << (k + 1) << ',' << r.k_norms_lhs(k) << ',' << r.k_norms_rhs(k) << ','
            << r.margins(k) << '\n';
    return out.str();
}

json inequality_report_to_json(const InequalityReport& r) {
    json checks = json::object();
    for (const auto& [name, ok] : r.hypothesis_checks) checks[name] = ok;
    return json{{"hypothesis_checks", checks},
                {"dominance", dominance_to_json(r.dominance)},
                {"theorem_applies", r.theorem_applies},
                {"conclusion_holds", r.conclusion_holds}};
}

json decomposition_to_json(const Decomposition& d) {
    return json{{"U", matrix_to_json(d.U)},
                {"V", matrix_to_json(d.V)},
                {"P", matrix_to_json(d.P.mat())},
                {"Q", matrix_to_json(d.Q.mat())},
                {"residual", d.residual}};
}

json positivity_to_json(const PositivityVerdict& v) {
    return json{{"verdict", to_string(v.verdict)},
                {"min_eigenvalue", v.min_eigenvalue},
                {"max_eigenvalue", v.max_eigenvalue},
                {"tolerance_used", v.tolerance_used}};
}

}  // namespace psdblock
