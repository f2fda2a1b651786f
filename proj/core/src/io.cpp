#include "sepcode/io.hpp"

#include <sstream>

namespace sepcode {

std::string matrix_to_csv(const Matrix& m) {
    std::ostringstream os;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ",";
            const auto& coeffs = m.at(r, c).coeffs();
            for (size_t i = 0; i < coeffs.size(); ++i) {
                if (i) os << ":";
                os << coeffs[i];
            }
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).coeffs());
        rows.push_back(std::move(row));
    }
    return nlohmann::ordered_json{{"field",
                                   {{"p", m.field()->p},
                                    {"k", m.field()->k},
                                    {"modulus", m.field()->modulus}}},
                                  {"rows", m.rows()},
                                  {"cols", m.cols()},
                                  {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::ordered_json& j) {
    const auto& jf = j.at("field");
    Field f = make_field(jf.at("p").get<int64_t>(), jf.at("k").get<int>(),
                         jf.at("modulus").get<std::vector<int64_t>>());
    const size_t rows = j.at("rows").get<size_t>();
    const size_t cols = j.at("cols").get<size_t>();
    Matrix m(f, rows, cols);
    const auto& entries = j.at("entries");
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m.set(r, c, element(f, entries.at(r).at(c).get<std::vector<int64_t>>()));
    return m;
}

} // namespace sepcode
