#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "summa/ideal.hpp"
#include "summa/seq.hpp"
#include "summa/types.hpp"

namespace summa::io {

using nlohmann::json;

inline Exponent parse_exponent(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity") return Exponent(Exponent::inf);
        return Exponent(std::stod(s));
    }
    return Exponent(j.get<double>());
}

inline json exponent_to_json(const Exponent& p) {
    if (p.is_inf()) return "inf";
    return p.value();
}

/// Matrix file format: {"rows": m, "cols": n, "data": [row-major floats]}.
inline Matrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& data = j.at("data");
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix: rows/cols must be >= 1");
    if (static_cast<int>(data.size()) != rows * cols)
        throw std::invalid_argument("matrix: data length " + std::to_string(data.size()) +
                                    " != rows*cols = " + std::to_string(rows * cols));
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) a(i, k) = data[i * cols + k].get<double>();
    return a;
}

inline json matrix_to_json(const Matrix& a) {
    json data = json::array();
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) data.push_back(a(i, k));
    return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

/// CSV alternative: one matrix row per line, comma-separated.
inline Matrix matrix_from_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::invalid_argument("csv: line " + std::to_string(lineno) +
                                            ", column " + std::to_string(col) +
                                            ": not a number: '" + cell + "'");
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("csv: line " + std::to_string(lineno) +
                                        ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("csv: empty matrix");
    Matrix a(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            a(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    return a;
}

inline Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return matrix_from_csv(in);
    json j;
    in >> j;
    return matrix_from_json(j);
}

/// Families: {"space": {"dim": n, "p": "2"|"inf"|float}, "vectors": [[...],...]}.
inline VectorFamily family_from_json(const json& j) {
    const auto& sp = j.at("space");
    SpaceSpec space(sp.at("dim").get<int>(), parse_exponent(sp.at("p")));
    const auto& vecs = j.at("vectors");
    Matrix m(space.dim, vecs.size());
    Eigen::Index col = 0;
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != space.dim)
            throw std::invalid_argument("family: vector dimension mismatch");
        for (int i = 0; i < space.dim; ++i) m(i, col) = v[i].get<double>();
        ++col;
    }
    return VectorFamily(space, m);
}

inline json family_to_json(const VectorFamily& fam) {
    json vecs = json::array();
    for (int c = 0; c < fam.count(); ++c) {
        json v = json::array();
        for (int i = 0; i < fam.space.dim; ++i) v.push_back(fam.vectors(i, c));
        vecs.push_back(v);
    }
    return {{"space", {{"dim", fam.space.dim}, {"p", exponent_to_json(fam.space.exp)}}},
            {"vectors", vecs}};
}

inline VectorFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return family_from_json(j);
}

inline json estimate_to_json(const NormEstimate& e) {
    json j{{"value", e.value}, {"kind", kind_name(e.kind)}};
    if (e.kind == EstimateKind::montecarlo) j["stderr"] = e.stderr_;
    if (!e.meta.empty()) j["meta"] = e.meta;
    return j;
}

/// Certificates: {points, weights, constant, extreme_exact}.
inline json certificate_to_json(const PietschCertificate& cert) {
    json pts = json::array();
    for (int k = 0; k < cert.points.cols(); ++k) {
        json col = json::array();
        for (int i = 0; i < cert.points.rows(); ++i) col.push_back(cert.points(i, k));
        pts.push_back(col);
    }
    json w = json::array();
    for (int k = 0; k < cert.weights.size(); ++k) w.push_back(cert.weights[k]);
    return {{"points", pts},
            {"weights", w},
            {"constant", cert.constant},
            {"extreme_exact", cert.extreme_exact}};
}

inline PietschCertificate certificate_from_json(const json& j) {
    const auto& pts = j.at("points");
    if (pts.empty()) throw std::invalid_argument("certificate: no points");
    const int d = static_cast<int>(pts.front().size());
    Matrix points(d, pts.size());
    Eigen::Index col = 0;
    for (const auto& p : pts) {
        for (int i = 0; i < d; ++i) points(i, col) = p[i].get<double>();
        ++col;
    }
    const auto& wj = j.at("weights");
    Vector weights(wj.size());
    for (Eigen::Index k = 0; k < weights.size(); ++k) weights[k] = wj[k].get<double>();
    return {points, weights, j.at("constant").get<double>(),
            j.value("extreme_exact", false)};
}

} // namespace summa::io
