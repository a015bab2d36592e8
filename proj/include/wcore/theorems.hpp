#ifndef WCORE_THEOREMS_HPP
#define WCORE_THEOREMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcore/generate.hpp"
#include "wcore/inverses.hpp"

namespace wcore {

/// Registry of mechanized checks, one per additive-property / reverse-order-law
/// statement. Each check validates the statement's hypotheses on a concrete
/// instance, evaluates both sides of every conclusion exactly, and reports.
enum class TheoremId {
    AddCore,          // sum formula under a*mb = 0, ab = 0
    AddCoreDisjoint,  // sum splits when additionally ba = 0
    AddDual,          // dual-core sum formula under a n^-1 b* = 0, ab = 0
    AddDualDisjoint,  // dual-core sum splits when additionally ba = 0
    SumAlt,           // sum formula under b a^{#,m} a = a
    Diff,             // difference formula under a = a a^{#,m} b = b a^{#,m} a
    RolSuff,          // reverse order law from a^{#,m} b = b^{#,m} a, a a^{#,m} = b a^{#,m}
    RolDualSuff,      // dual reverse order law
    RolNec,           // necessary conditions extracted from (ab)^{#,m} = b^{#,m} a^{#,m}
    RolA2ba,          // reverse order law from a^2 = ba
    RolDualB2ba,      // dual reverse order law from b^2 = ba
    RolIffRange,      // iff-characterization under a*mbR = mba*R
    RolIffBab,        // iff-characterization via b(ab)^{#,m}
    DedekindEquiv,    // two-sided reverse-order-law equivalence
    DedekindCor,      // its Dedekind-finite corollary (automatic in M_k(Q))
    MixedGroup,       // mixed-type: group inverses of ab, ba from weighted cores
    UnitaryA,         // (ab)^{#,m} = b^{#,m} a* for unitary a
    UnitaryB,         // (ab)^{#,m} = b* a^{#,m} for unitary b
    BabChar,          // aR <= babR iff a^{#,m} = b(ab)^{#,m}
    Cline,            // Cline's formula for the Drazin inverse
    GroupAdd,         // group inverse of a sum under cd = 0
};

inline constexpr std::array<TheoremId, 21> kAllTheorems = {
    TheoremId::AddCore,      TheoremId::AddCoreDisjoint, TheoremId::AddDual,
    TheoremId::AddDualDisjoint, TheoremId::SumAlt,       TheoremId::Diff,
    TheoremId::RolSuff,      TheoremId::RolDualSuff,     TheoremId::RolNec,
    TheoremId::RolA2ba,      TheoremId::RolDualB2ba,     TheoremId::RolIffRange,
    TheoremId::RolIffBab,    TheoremId::DedekindEquiv,   TheoremId::DedekindCor,
    TheoremId::MixedGroup,   TheoremId::UnitaryA,        TheoremId::UnitaryB,
    TheoremId::BabChar,      TheoremId::Cline,           TheoremId::GroupAdd,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/// One concrete instance: the ring elements plus (where the statement is
/// weighted) the weight, which plays the role of m or n depending on the
/// theorem. Cline and the group-sum lemma ignore the weight.
struct Instance {
    Matrix a;
    Matrix b;
    std::optional<Weight> weight;
};

struct ConditionVerdict {
    std::string name;
    bool holds = false;
    std::optional<Matrix> lhs;  // recorded for matrix-equality conditions
    std::optional<Matrix> rhs;
};

enum class Verdict { Pass, Fail, HypothesisNotMet };

std::string_view verdict_name(Verdict v);

/// Conclusions are evaluated and recorded even when hypotheses fail; the
/// converse-refutation examples exist precisely in that regime.
struct TheoremReport {
    TheoremId id{};
    std::vector<ConditionVerdict> hypotheses;
    std::vector<ConditionVerdict> conclusions;
    std::vector<ConditionVerdict> auxiliary;  // reported, never scored
    Verdict overall = Verdict::Pass;
};

/// Runs one check. Throws only on dimension mismatch or a missing weight.
TheoremReport check(TheoremId id, const Instance& inst);

/// Deterministic instance for (id, cfg, counter): hypothesis-targeted where a
/// construction exists, undirected random otherwise (those mostly land in
/// HypothesisNotMet, which is recorded, not an error).
Instance generate_instance(TheoremId id, const GenConfig& cfg, std::uint64_t counter);

struct SuiteFailure {
    int index = 0;
    Instance instance;
};

struct SuiteSummary {
    TheoremId id{};
    std::uint64_t seed = 0;
    int count = 0;
    int dim = 0;
    int pass = 0;
    int fail = 0;
    int hypothesis_not_met = 0;
    std::vector<TheoremReport> reports;   // one per instance, in index order
    std::vector<SuiteFailure> failures;   // full instances for replay
};

/// count seeded instances of one theorem; deterministic given (cfg.seed, id).
/// Instances are independent pure computations, so they may be evaluated on
/// `threads` workers; reports are merged by instance index, making the output
/// byte-identical for every thread count.
SuiteSummary run_suite(TheoremId id, int count, const GenConfig& cfg, int threads = 1);

}  // namespace wcore

#endif
