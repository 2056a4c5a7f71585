#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "../camera/camera.hpp"
#include "../tensor/tensor.hpp"

namespace trifocal {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

// Integers stay JSON numbers; other rationals become "p/q" strings.
inline nlohmann::json scalar_to_json(const Rational& x) {
    if (x.is_integer() && x.num().fits_slong_p()) return x.num().get_si();
    return x.to_string();
}

inline Rational scalar_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError("bad scalar \"" + j.get<std::string>() + "\": " + e.what());
        }
    }
    throw InputError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

// Nested array T[i][j][k].
inline nlohmann::json to_json(const Tensor333<Rational>& t) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        nlohmann::json b = nlohmann::json::array();
        for (std::size_t j = 0; j < 3; ++j) {
            nlohmann::json c = nlohmann::json::array();
            for (std::size_t k = 0; k < 3; ++k) c.push_back(scalar_to_json(t(i, j, k)));
            b.push_back(std::move(c));
        }
        a.push_back(std::move(b));
    }
    return {{"schema_version", kSchemaVersion}, {"tensor", a}};
}

inline Tensor333<Rational> tensor_from_json(const nlohmann::json& doc) {
    const nlohmann::json& a = doc.is_object() ? doc.at("tensor") : doc;
    if (!a.is_array() || a.size() != 3) throw InputError("tensor must be a 3x3x3 nested array");
    Tensor333<Rational> t;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!a[i].is_array() || a[i].size() != 3) throw InputError("tensor must be a 3x3x3 nested array");
        for (std::size_t j = 0; j < 3; ++j) {
            if (!a[i][j].is_array() || a[i][j].size() != 3) throw InputError("tensor must be a 3x3x3 nested array");
            for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = scalar_from_json(a[i][j][k]);
        }
    }
    return t;
}

inline nlohmann::json to_json(const DenseMatrix<Rational>& m) {
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
        a.push_back(std::move(row));
    }
    return a;
}

inline DenseMatrix<Rational> matrix_from_json(const nlohmann::json& a, std::size_t rows, std::size_t cols) {
    if (!a.is_array() || a.size() != rows) throw InputError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    DenseMatrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!a[r].is_array() || a[r].size() != cols)
            throw InputError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(a[r][c]);
    }
    return m;
}

inline nlohmann::json to_json(const CameraTriple<Rational>& ct) {
    return {{"schema_version", kSchemaVersion},
            {"cameras", {to_json(ct.A1.matrix()), to_json(ct.A2.matrix()), to_json(ct.A3.matrix())}}};
}

// {"cameras": [A1, A2, A3]} or {"A1": ..., "A2": ..., "A3": ...} with 3x4 matrices.
// Rank-deficient cameras raise DegenerateConfiguration.
inline CameraTriple<Rational> cameras_from_json(const nlohmann::json& doc) {
    if (doc.is_object() && doc.contains("A1")) {
        if (!doc.contains("A2") || !doc.contains("A3")) throw InputError("cameras need keys A1, A2 and A3");
        return cameras_from_json(nlohmann::json::array({doc.at("A1"), doc.at("A2"), doc.at("A3")}));
    }
    const nlohmann::json& a = doc.is_object() ? doc.at("cameras") : doc;
    if (!a.is_array() || a.size() != 3) throw InputError("cameras must be a list of three 3x4 matrices");
    return {Camera<Rational>(matrix_from_json(a[0], 3, 4)), Camera<Rational>(matrix_from_json(a[1], 3, 4)),
            Camera<Rational>(matrix_from_json(a[2], 3, 4))};
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline Tensor333<Rational> load_tensor(const std::string& path) {
    try {
        return tensor_from_json(read_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline CameraTriple<Rational> load_cameras(const std::string& path) {
    try {
        return cameras_from_json(read_json_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace trifocal
