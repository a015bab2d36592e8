#include "wcore/equations.hpp"

#include <stdexcept>

namespace wcore {

std::string_view tag_name(EquationTag t) {
    switch (t) {
        case EquationTag::E1: return "1";
        case EquationTag::E2: return "2";
        case EquationTag::E3m: return "3m";
        case EquationTag::E4n: return "4n";
        case EquationTag::E5: return "5";
        case EquationTag::E6: return "6";
        case EquationTag::E7: return "7";
        case EquationTag::E8: return "8";
        case EquationTag::E9: return "9";
        case EquationTag::E6k: return "6k";
    }
    return "?";
}

std::optional<EquationTag> tag_from_name(std::string_view s) {
    if (s == "1") return EquationTag::E1;
    if (s == "2") return EquationTag::E2;
    if (s == "3m") return EquationTag::E3m;
    if (s == "4n") return EquationTag::E4n;
    if (s == "5") return EquationTag::E5;
    if (s == "6") return EquationTag::E6;
    if (s == "7") return EquationTag::E7;
    if (s == "8") return EquationTag::E8;
    if (s == "9") return EquationTag::E9;
    if (s == "6k") return EquationTag::E6k;
    return std::nullopt;
}

bool certificate_ok(const Certificate& c) {
    for (const auto& [tag, ok] : c)
        if (!ok) return false;
    return true;
}

bool verify_equation(const Matrix& a, const Matrix& x, EquationTag tag, const RingContext& ctx,
                     std::optional<int> k) {
    switch (tag) {
        case EquationTag::E1: return a * x * a == a;
        case EquationTag::E2: return x * a * x == x;
        case EquationTag::E3m: {
            if (!ctx.m) throw std::invalid_argument("verify_equation: (3^m) needs weight m");
            const Matrix max = ctx.m->matrix() * a * x;
            return max.is_symmetric();
        }
        case EquationTag::E4n: {
            if (!ctx.n) throw std::invalid_argument("verify_equation: (4^n) needs weight n");
            const Matrix nxa = ctx.n->matrix() * x * a;
            return nxa.is_symmetric();
        }
        case EquationTag::E5: return a * x == x * a;
        case EquationTag::E6: return x * a * a == a;
        case EquationTag::E7: return a * x * x == x;
        case EquationTag::E8: return a * a * x == a;
        case EquationTag::E9: return x * x * a == x;
        case EquationTag::E6k: {
            if (!k) throw std::invalid_argument("verify_equation: (6^k) needs the index k");
            return x * matrix_power(a, *k + 1) == matrix_power(a, *k);
        }
    }
    throw std::logic_error("verify_equation: unknown tag");
}

Certificate verify_equations(const Matrix& a, const Matrix& x, std::span<const EquationTag> tags,
                             const RingContext& ctx, std::optional<int> k) {
    Certificate cert;
    cert.reserve(tags.size());
    for (EquationTag t : tags) cert.emplace_back(t, verify_equation(a, x, t, ctx, k));
    return cert;
}

}  // namespace wcore
