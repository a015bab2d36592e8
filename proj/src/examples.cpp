#include "wcore/examples.hpp"

#include "wcore/inverses.hpp"

namespace wcore {

std::vector<ExampleResult> run_worked_examples() {
    std::vector<ExampleResult> out;
    auto push = [&](std::string name, bool ok, std::string detail = "") {
        out.push_back(ExampleResult{std::move(name), ok, std::move(detail)});
    };
    auto expect_eq = [&](std::string name, const InverseResult& got, const Matrix& want) {
        if (!got.present())
            push(std::move(name), false, "expected a value, got ABSENT");
        else if (got.get() != want)
            push(std::move(name), false,
                 "got " + to_pretty(got.get()) + ", want " + to_pretty(want));
        else
            push(std::move(name), true);
    };

    // (1) weighted core of [[1,0],[-1,0]] with m = [[2,1],[1,2]]
    const Matrix a1{{1, 0}, {-1, 0}};
    const Weight m1(Matrix{{2, 1}, {1, 2}});
    const Matrix x1{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}};
    expect_eq("weighted core of [[1,0],[-1,0]] with m=[[2,1],[1,2]]", weighted_core(a1, m1), x1);

    // (2) weighted dual core of the same element with n = diag(1,2)
    const Weight n1(Matrix{{1, 0}, {0, 2}});
    expect_eq("weighted dual core of [[1,0],[-1,0]] with n=diag(1,2)", weighted_dual_core(a1, n1),
              Matrix{{1, 0}, {0, 0}});

    // (3) additive counterexample: a+b = [[0,5],[0,0]] has no group inverse
    {
        const Matrix a{{1, 2}, {0, 0}}, b{{-1, 3}, {0, 0}};
        const Weight m(Matrix{{1, 0}, {0, 5}});
        bool ok = weighted_core(a, m).present() && weighted_core(b, m).present();
        const Matrix sum = a + b;
        ok = ok && sum == Matrix{{0, 5}, {0, 0}};
        ok = ok && !group_inverse(sum).present() && !weighted_core(sum, m).present();
        push("additive counterexample: a+b=[[0,5],[0,0]] not group invertible", ok);
    }

    // (4) reverse-order-law converse example
    {
        const Matrix a{{1, 0}, {0, 0}}, b{{-1, 1}, {0, 0}};
        const Weight m(Matrix{{1, 0}, {0, 2}});
        const Matrix want{{-1, 0}, {0, 0}};
        auto wa = weighted_core(a, m), wb = weighted_core(b, m), wab = weighted_core(a * b, m);
        bool ok = wa.present() && wb.present() && wab.present();
        ok = ok && wab.get() == want && wb.get() * wa.get() == want;
        ok = ok && wa.get() * b != wb.get() * a;  // the converse hypotheses fail
        push("reverse order law holds while its converse hypotheses fail", ok);
    }

    // (5) dual analogue
    {
        const Matrix a{{1, 0}, {-1, 0}}, b{{-1, 0}, {1, 0}};
        const Weight n(Matrix{{1, 0}, {0, 2}});
        const Matrix want{{-1, 0}, {0, 0}};
        auto da = weighted_dual_core(a, n), db = weighted_dual_core(b, n);
        auto dab = weighted_dual_core(a * b, n);
        bool ok = da.present() && db.present() && dab.present();
        ok = ok && dab.get() == want && db.get() * da.get() == want;
        ok = ok && db.get() * b != db.get() * a;
        push("dual reverse order law holds while its converse hypotheses fail", ok);
    }
    return out;
}

}  // namespace wcore
