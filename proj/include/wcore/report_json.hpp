#ifndef WCORE_REPORT_JSON_HPP
#define WCORE_REPORT_JSON_HPP

#include <json.hpp>

#include "wcore/inverses.hpp"
#include "wcore/theorems.hpp"

namespace wcore {

nlohmann::json inverse_result_to_json(const InverseResult& r);
nlohmann::json report_to_json(const TheoremReport& r, bool with_matrices);
nlohmann::json instance_to_json(const Instance& inst);
nlohmann::json suite_to_json(const SuiteSummary& s);

}  // namespace wcore

#endif
