#ifndef WCORE_SEARCH_HPP
#define WCORE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wcore/theorems.hpp"

namespace wcore {

enum class SearchProperty { RolConverse, DualRolConverse, RolIffDirection };

std::string_view search_property_name(SearchProperty p);
std::optional<SearchProperty> search_property_from_name(std::string_view s);

/// An instance on which the conclusion holds while the hypotheses fail,
/// together with the theorem report that re-verifies it.
struct Witness {
    std::uint64_t iteration = 0;
    Instance instance;
    TheoremReport report;
};

struct SearchResult {
    SearchProperty property{};
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    int dim = 0;
    std::uint64_t examined = 0;
    std::vector<Witness> witnesses;
};

/// Seeded search for converse-refutation witnesses. The known 2x2 witnesses
/// are planted as the first candidates at dim == 2; every emitted witness has
/// been re-verified through the theorem-suite checker. Deterministic given
/// (property, seed, dim, budget).
SearchResult search_witnesses(SearchProperty property, std::uint64_t budget, int dim,
                              std::uint64_t seed, std::size_t max_witnesses = 25);

}  // namespace wcore

#endif
