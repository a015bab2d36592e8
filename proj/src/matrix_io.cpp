#include "wcore/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace wcore {

std::string to_text(const Matrix& a) {
    std::string s = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (j) s += " ";
            s += a(i, j).str();
        }
        s += "\n";
    }
    return s;
}

Matrix matrix_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix text: bad header line");
    Matrix a(rows, cols);
    std::string tok;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
            a(i, j) = Rational::parse(tok);
        }
    if (in >> tok) throw std::invalid_argument("matrix text: trailing data");
    return a;
}

nlohmann::json matrix_to_json(const Matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("matrix json: bad shape");
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix json: ragged entries");
        for (int j2 = 0; j2 < cols; ++j2)
            a(i, j2) = Rational::parse(row.at(j2).get<std::string>());
    }
    return a;
}

Matrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty matrix file: " + path);
    if (text[first] == '{') return matrix_from_json(nlohmann::json::parse(text));
    return matrix_from_text(text);
}

}  // namespace wcore
