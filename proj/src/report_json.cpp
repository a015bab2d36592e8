#include "wcore/report_json.hpp"

#include "wcore/matrix_io.hpp"

namespace wcore {

namespace {

nlohmann::json verdicts_to_json(const std::vector<ConditionVerdict>& vs, bool with_matrices) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vs) {
        nlohmann::json j{{"name", v.name}, {"holds", v.holds}};
        if (with_matrices && v.lhs) j["lhs"] = matrix_to_json(*v.lhs);
        if (with_matrices && v.rhs) j["rhs"] = matrix_to_json(*v.rhs);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

nlohmann::json inverse_result_to_json(const InverseResult& r) {
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& [tag, ok] : r.certificate)
        cert.push_back({{"equation", std::string(tag_name(tag))}, {"holds", ok}});
    return nlohmann::json{
        {"present", r.present()},
        {"value", r.present() ? matrix_to_json(r.get()) : nlohmann::json(nullptr)},
        {"certificate", std::move(cert)},
        {"method", r.method == Method::ClosedForm ? "closed_form" : "oracle"},
    };
}

nlohmann::json report_to_json(const TheoremReport& r, bool with_matrices) {
    return nlohmann::json{
        {"theorem", std::string(theorem_name(r.id))},
        {"overall", std::string(verdict_name(r.overall))},
        {"hypotheses", verdicts_to_json(r.hypotheses, false)},
        {"conclusions", verdicts_to_json(r.conclusions, with_matrices)},
        {"auxiliary", verdicts_to_json(r.auxiliary, false)},
    };
}

nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j{{"a", matrix_to_json(inst.a)}, {"b", matrix_to_json(inst.b)}};
    j["weight"] = inst.weight ? matrix_to_json(inst.weight->matrix()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json suite_to_json(const SuiteSummary& s) {
    nlohmann::json instances = nlohmann::json::array();
    for (size_t i = 0; i < s.reports.size(); ++i) {
        nlohmann::json j = report_to_json(s.reports[i], false);
        j["index"] = i;
        instances.push_back(std::move(j));
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures) {
        nlohmann::json j = instance_to_json(f.instance);
        j["index"] = f.index;
        j["report"] = report_to_json(s.reports[f.index], true);
        failures.push_back(std::move(j));
    }
    return nlohmann::json{
        {"theorem", std::string(theorem_name(s.id))},
        {"seed", s.seed},
        {"count", s.count},
        {"dim", s.dim},
        {"pass", s.pass},
        {"fail", s.fail},
        {"hypothesis_not_met", s.hypothesis_not_met},
        {"instances", std::move(instances)},
        {"failures", std::move(failures)},
    };
}

}  // namespace wcore
