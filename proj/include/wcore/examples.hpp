#ifndef WCORE_EXAMPLES_HPP
#define WCORE_EXAMPLES_HPP

#include <string>
#include <vector>

namespace wcore {

/// One worked 2x2 example recomputed from scratch and compared exactly
/// against its published matrices.
struct ExampleResult {
    std::string name;
    bool ok = false;
    std::string detail;  // mismatch description, empty on success
};

/// Runs all five worked examples (weighted core, weighted dual core, the
/// additive counterexample, and both reverse-order-law converse examples).
std::vector<ExampleResult> run_worked_examples();

}  // namespace wcore

#endif
