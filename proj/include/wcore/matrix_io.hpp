#ifndef WCORE_MATRIX_IO_HPP
#define WCORE_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "wcore/matrix.hpp"

namespace wcore {

/// Text format (bit-exact): first line "rows cols", then one line per row,
/// entries "p" or "p/q" in lowest terms, space-separated.
std::string to_text(const Matrix& a);
Matrix matrix_from_text(std::string_view text);

/// JSON format: {"rows":r,"cols":c,"entries":[["p/q",...],...]}.
nlohmann::json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const nlohmann::json& j);

/// Reads a matrix file, auto-detecting JSON (leading '{') vs text.
Matrix load_matrix_file(const std::string& path);

}  // namespace wcore

#endif
