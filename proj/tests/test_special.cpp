#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "placeval/errors.hpp"
#include "placeval/special.hpp"

using namespace placeval;

namespace {

// Quadrature oracle: adaptive Simpson integral of the t density over
// [t, inf) mapped through the tail, evaluated as 1 - 2*F_tail.
double t_density(double x, double df) {
    const double c = std::exp(std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0)) /
                     std::sqrt(df * M_PI);
    return c * std::pow(1.0 + x * x / df, -(df + 1.0) / 2.0);
}

double simpson(double a, double b, double df, int depth) {
    const double m = 0.5 * (a + b);
    const double coarse = (b - a) / 6.0 * (t_density(a, df) + 4.0 * t_density(m, df) +
                                           t_density(b, df));
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double fine = (b - a) / 12.0 *
                        (t_density(a, df) + 4.0 * t_density(lm, df) + 2.0 * t_density(m, df) +
                         4.0 * t_density(rm, df) + t_density(b, df));
    if (depth <= 0 || std::fabs(fine - coarse) < 1e-13) return fine;
    return simpson(a, m, df, depth - 1) + simpson(m, b, df, depth - 1);
}

double two_sided_p_quadrature(double t, int df) {
    // P(|T| >= t) = 1 - integral of the density over [-t, t]
    const double v = static_cast<double>(df);
    const double central = simpson(-std::fabs(t), std::fabs(t), v, 40);
    return 1.0 - central;
}

}  // namespace

TEST_CASE("closed form for df=1: p = 1 - 2*atan(t)/pi") {
    for (double t : {0.1, 0.5, 1.0, 2.0, 8.0}) {
        const double expect = 1.0 - 2.0 * std::atan(t) / M_PI;
        CHECK(student_t_two_sided_p(t, 1) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("closed form for df=2: p = 1 - t/sqrt(2+t^2)") {
    for (double t : {0.1, 0.5, 1.0, 2.0, 8.0, 17.0}) {
        const double expect = 1.0 - t / std::sqrt(2.0 + t * t);
        CHECK(student_t_two_sided_p(t, 2) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("matches quadrature oracle across df") {
    for (int df : {3, 5, 12, 13, 30}) {
        for (double t : {0.25, 0.75, 1.5, 2.5, 4.0}) {
            const double oracle = two_sided_p_quadrature(t, df);
            CHECK(student_t_two_sided_p(t, df) == doctest::Approx(oracle).epsilon(1e-8));
        }
    }
}

TEST_CASE("symmetry and limits") {
    CHECK(student_t_two_sided_p(0.0, 5) == doctest::Approx(1.0));
    CHECK(student_t_two_sided_p(-2.0, 5) == student_t_two_sided_p(2.0, 5));
    CHECK(student_t_two_sided_p(50.0, 10) < 1e-10);
    CHECK_THROWS_AS(student_t_two_sided_p(1.0, 0), ArgumentError);
}

TEST_CASE("incomplete beta basics") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(1,1) = x
    for (double x : {0.1, 0.37, 0.9})
        CHECK(regularized_incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    // I_x(a,b) + I_{1-x}(b,a) = 1
    CHECK(regularized_incomplete_beta(2.5, 4.5, 0.3) +
              regularized_incomplete_beta(4.5, 2.5, 0.7) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), ArgumentError);
}
