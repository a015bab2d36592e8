#include "wcore/search.hpp"

#include "wcore/generate.hpp"

namespace wcore {

namespace {

bool condition_holds(const std::vector<ConditionVerdict>& vs, std::string_view name) {
    for (const auto& v : vs)
        if (v.name == name) return v.holds;
    return false;
}

Instance sample_instance(SearchProperty property, int dim, Rng& rng, std::uint64_t iteration) {
    const int bound = 2;
    if (iteration == 0 && dim == 2) {
        if (property == SearchProperty::RolConverse)
            return Instance{Matrix{{1, 0}, {0, 0}}, Matrix{{-1, 1}, {0, 0}},
                            Weight(Matrix{{1, 0}, {0, 2}})};
        if (property == SearchProperty::DualRolConverse)
            return Instance{Matrix{{1, 0}, {-1, 0}}, Matrix{{-1, 0}, {1, 0}},
                            Weight(Matrix{{1, 0}, {0, 2}})};
    }
    Matrix a = random_matrix(rng, dim, dim, bound);
    Matrix b = random_matrix(rng, dim, dim, bound);
    Weight m = Weight::identity(dim);
    if (rng.chance(1, 2)) {
        Matrix p = random_matrix(rng, dim, dim, 1);
        m = Weight(adjoint(p) * p + Matrix::identity(dim));
    }
    if (property == SearchProperty::RolIffDirection && iteration % 4 == 0) {
        // scalar multiples preserve the inner equivalence while usually
        // violating the range premise
        b = Rational(rng.uniform(2, 4)) * a;
    }
    return Instance{std::move(a), std::move(b), std::move(m)};
}

std::optional<TheoremReport> verify_witness(SearchProperty property, const Instance& inst) {
    switch (property) {
        case SearchProperty::RolConverse: {
            TheoremReport rep = check(TheoremId::RolSuff, inst);
            if (rep.overall != Verdict::HypothesisNotMet) return std::nullopt;
            if (!condition_holds(rep.hypotheses, "wc(a) exists") ||
                !condition_holds(rep.hypotheses, "wc(b) exists") ||
                !condition_holds(rep.conclusions, "wc(ab) exists") ||
                !condition_holds(rep.conclusions, "wc(ab) == wc(b) wc(a)"))
                return std::nullopt;
            return rep;
        }
        case SearchProperty::DualRolConverse: {
            TheoremReport rep = check(TheoremId::RolDualSuff, inst);
            if (rep.overall != Verdict::HypothesisNotMet) return std::nullopt;
            if (!condition_holds(rep.hypotheses, "dc(a) exists") ||
                !condition_holds(rep.hypotheses, "dc(b) exists") ||
                !condition_holds(rep.conclusions, "dc(ab) exists") ||
                !condition_holds(rep.conclusions, "dc(ab) == dc(b) dc(a)"))
                return std::nullopt;
            return rep;
        }
        case SearchProperty::RolIffDirection: {
            TheoremReport rep = check(TheoremId::RolIffRange, inst);
            if (rep.overall != Verdict::HypothesisNotMet) return std::nullopt;
            // equivalence genuinely holding (both sides true) while the
            // ambient range premise fails
            if (condition_holds(rep.hypotheses, "col(a* m b) == col(m b a*)")) return std::nullopt;
            if (!condition_holds(rep.hypotheses, "wc(a) exists") ||
                !condition_holds(rep.hypotheses, "wc(b) exists") ||
                !condition_holds(rep.hypotheses, "wc(ab) exists"))
                return std::nullopt;
            if (!condition_holds(rep.auxiliary, "lhs: wc(ab) == wc(b) wc(a)")) return std::nullopt;
            if (!condition_holds(rep.auxiliary,
                                 "rhs ranges: col(wc(b) a) <= col(ab) <= col(ba)") ||
                !condition_holds(rep.auxiliary,
                                 "rhs weighted: m b wc(b) a wc(a) == m a wc(a) b wc(b)"))
                return std::nullopt;
            return rep;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view search_property_name(SearchProperty p) {
    switch (p) {
        case SearchProperty::RolConverse: return "rol_converse";
        case SearchProperty::DualRolConverse: return "dual_rol_converse";
        case SearchProperty::RolIffDirection: return "rol_iff_direction";
    }
    return "?";
}

std::optional<SearchProperty> search_property_from_name(std::string_view s) {
    if (s == "rol_converse") return SearchProperty::RolConverse;
    if (s == "dual_rol_converse") return SearchProperty::DualRolConverse;
    if (s == "rol_iff_direction") return SearchProperty::RolIffDirection;
    return std::nullopt;
}

SearchResult search_witnesses(SearchProperty property, std::uint64_t budget, int dim,
                              std::uint64_t seed, std::size_t max_witnesses) {
    SearchResult res;
    res.property = property;
    res.seed = seed;
    res.budget = budget;
    res.dim = dim;
    for (std::uint64_t i = 0; i < budget; ++i) {
        Rng rng = rng_for(seed, i);
        Instance inst = sample_instance(property, dim, rng, i);
        ++res.examined;
        if (auto rep = verify_witness(property, inst)) {
            res.witnesses.push_back(Witness{i, std::move(inst), std::move(*rep)});
            if (res.witnesses.size() >= max_witnesses) break;
        }
    }
    return res;
}

}  // namespace wcore
