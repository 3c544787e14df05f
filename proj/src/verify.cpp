/*
 * Copyright 2026 The tfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tfc/verify.hpp"

#include <cstdio>
#include <sstream>
#include <utility>

#include "tfc/examples.hpp"
#include "tfc/linalg.hpp"

namespace tfc::verify {

namespace {

using examples::Complex;

double drop_negative_zero(double v) { return v == 0.0 ? 0.0 : v; }

std::string fmt4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", drop_negative_zero(v));
    return buf;
}

std::string fmt4(const Complex& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f%+.4fi", drop_negative_zero(z.real()),
                  drop_negative_zero(z.imag()));
    return buf;
}

std::string fmt_dev(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string render(const Vec2r& v) {
    return "{" + fmt4(v[0]) + ", " + fmt4(v[1]) + "}";
}

std::string render(const Vec2c& v) {
    return "{" + fmt4(v[0]) + ", " + fmt4(v[1]) + "}";
}

std::string render(const Gf4Function& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

nlohmann::json entry_json(double v) { return v; }
nlohmann::json entry_json(const Complex& z) {
    return nlohmann::json{{"im", z.imag()}, {"re", z.real()}};
}
nlohmann::json entry_json(const GF4& x) { return std::string(1, x.symbol()); }

template <Field F>
nlohmann::json alpha_json(const Matrix<F>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string entry_text(const nlohmann::json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_object()) return fmt4(Complex(e["re"].get<double>(), e["im"].get<double>()));
    return fmt4(e.get<double>());
}

// Switching duality for one constraint/support block given its alpha:
// C_j[phi_i] must be 1 when i == j and 0 otherwise.
template <typename X, Field F>
double duality_deviation(const std::vector<std::vector<Term<F, X>>>& constraint_terms,
                         const SwitchingSet<X, F>& switching) {
    double worst = 0.0;
    for (std::size_t i = 0; i < switching.size(); ++i) {
        auto phi = switching.switching_function(i);
        for (std::size_t j = 0; j < constraint_terms.size(); ++j) {
            const F applied = linear_combination(constraint_terms[j], phi);
            const F expected =
                (i == j) ? field_traits<F>::one() : field_traits<F>::zero();
            worst = std::max(worst, deviation(applied, expected));
        }
    }
    return worst;
}

template <typename X, typename V, Field F>
double duality_deviation(const ConstrainedExpression<X, V, F>& expr) {
    std::vector<std::vector<Term<F, X>>> terms;
    for (const auto& c : expr.constraints()) terms.push_back(c.terms());
    return duality_deviation(terms, expr.switching());
}

// ---------------------------------------------------------------------------
// Per-example runners. When samples >= 1, sample 0 uses the zero free
// function and its evaluated value is recorded as the check's `observed`.
// ---------------------------------------------------------------------------

Report make_report(const char* id, std::uint64_t seed, std::size_t samples,
                   double tolerance) {
    Report r;
    r.example_id = id;
    r.seed = seed;
    r.samples = samples;
    r.tolerance = tolerance;
    r.generator = Rng::kAlgorithm;
    return r;
}

Report run_matrix(std::uint64_t seed, std::size_t samples, double tolerance) {
    Report r = make_report("matrix_r2x3", seed, samples, tolerance);
    const auto ex = examples::build_matrix_example();
    const auto& alpha = ex.expression.switching().alpha();

    r.alphas.push_back({"", alpha_json(alpha)});
    r.checks.push_back(Check::from_deviation(
        "alpha matches reference", 0,
        deviation(alpha, examples::matrix_expected_alpha()), 1e-12, false));

    if (samples > 0) {
        Rng rng(seed);
        double dev_value = 0.0, dev_relative = 0.0;
        std::string observed;
        for (std::size_t s = 0; s < samples; ++s) {
            auto g = (s == 0) ? [](const Matrix<double>&) { return Vec2r::zero(); }
                              : examples::random_matrix_free_function(rng);
            auto bound = ex.expression.bind(g);
            const Vec2r at_value = bound(ex.value_point);
            if (s == 0) observed = render(at_value);
            dev_value = std::max(dev_value, deviation(at_value, ex.value_target));
            dev_relative = std::max(
                dev_relative, deviation(bound(ex.relative_left), bound(ex.relative_right)));
        }
        r.checks.push_back(Check::from_deviation("u(P) = {3, 4}", samples, dev_value,
                                                 tolerance, false, observed));
        r.checks.push_back(Check::from_deviation("u(Q1) = u(Q2)", samples, dev_relative,
                                                 tolerance, false));
    }
    return r;
}

Report run_string(std::uint64_t seed, std::size_t samples, double tolerance) {
    Report r = make_report("string_c2", seed, samples, tolerance);
    const auto ex = examples::build_string_example();
    const auto& alpha = ex.expression.switching().alpha();

    r.alphas.push_back({"", alpha_json(alpha)});
    r.checks.push_back(Check::from_deviation(
        "alpha matches reference (4 decimals)", 0,
        deviation(alpha, examples::string_expected_alpha_rounded()), 1e-4, false));
    r.checks.push_back(Check::from_deviation(
        "alpha matches closed-form inverse", 0,
        deviation(alpha, examples::string_expected_alpha_exact()), 1e-12, false));

    // The word codes behind the support matrix are integer-valued sums, so
    // they must come out bit-exact.
    double dev_codes = 0.0;
    dev_codes = std::max(dev_codes,
                         deviation(examples::string_code("tfc"), Complex{29.0, -1.0}));
    dev_codes = std::max(dev_codes,
                         deviation(examples::string_code("dont"), Complex{54.0, -1.0}));
    dev_codes = std::max(dev_codes,
                         deviation(examples::string_code("panic"), Complex{43.0, 1.0}));
    r.checks.push_back(Check::from_deviation(
        "string codes of tfc / dont / panic", 3, dev_codes, 0.0, false));

    if (samples > 0) {
        Rng rng(seed);
        double dev_value = 0.0, dev_relative = 0.0;
        std::string observed;
        for (std::size_t s = 0; s < samples; ++s) {
            auto g = (s == 0) ? [](const std::string&) { return Vec2c::zero(); }
                              : examples::random_string_free_function(rng);
            auto bound = ex.expression.bind(g);
            const Vec2c at_value = bound(ex.value_point);
            if (s == 0) observed = render(at_value);
            dev_value = std::max(dev_value, deviation(at_value, ex.value_target));
            dev_relative = std::max(
                dev_relative, deviation(bound(ex.relative_left), bound(ex.relative_right)));
        }
        r.checks.push_back(Check::from_deviation("u(\"tfc\") = {42i, 19+79i}", samples,
                                                 dev_value, tolerance, false, observed));
        r.checks.push_back(Check::from_deviation("u(\"dont\") = u(\"panic\")", samples,
                                                 dev_relative, tolerance, false));
    }
    return r;
}

Report run_gf4(std::uint64_t seed, std::size_t samples, double tolerance) {
    Report r = make_report("gf4", seed, samples, tolerance);
    const auto ex = examples::build_gf4_example();
    const auto& alpha = ex.expression.switching().alpha();

    r.alphas.push_back({"", alpha_json(alpha)});
    r.checks.push_back(Check::from_deviation(
        "alpha matches reference", 0, deviation(alpha, examples::gf4_expected_alpha()),
        0.0, true));

    if (samples > 0) {
        Rng rng(seed);
        double dev_value = 0.0, dev_difference = 0.0;
        std::string observed;
        for (std::size_t s = 0; s < samples; ++s) {
            auto g = (s == 0) ? [](const GF4&) { return Gf4Function{}; }
                              : examples::random_gf4_free_function(rng);
            auto bound = ex.expression.bind(g);
            const Gf4Function at_value = bound(ex.value_point);
            if (s == 0) observed = render(at_value);
            dev_value = std::max(dev_value, deviation(at_value, ex.value_target));
            const Gf4Function difference =
                bound(ex.difference_left) - bound(ex.difference_right);
            dev_difference =
                std::max(dev_difference, deviation(difference, ex.difference_target));
        }
        r.checks.push_back(Check::from_deviation("u(1) = t + A", samples, dev_value, 0.0,
                                                 true, observed));
        r.checks.push_back(Check::from_deviation("u(A) - u(B) = t", samples,
                                                 dev_difference, 0.0, true));
    }
    return r;
}

Report run_bivariate(std::uint64_t seed, std::size_t samples, double tolerance) {
    Report r = make_report("multivariate", seed, samples, tolerance);
    const auto ex = examples::build_bivariate_example();
    const auto& alphas = ex.expression.alphas();

    r.alphas.push_back({"x", alpha_json(alphas[0])});
    r.alphas.push_back({"y", alpha_json(alphas[1])});
    r.checks.push_back(Check::from_deviation(
        "alpha (dimension x) matches reference", 0,
        deviation(alphas[0], examples::bivariate_expected_alpha_x()), 1e-12, false));
    r.checks.push_back(Check::from_deviation(
        "alpha (dimension y) matches reference", 0,
        deviation(alphas[1], examples::bivariate_expected_alpha_y()), 1e-12, false));

    if (samples > 0) {
        Rng rng(seed);
        const auto sine = examples::sine_function();
        double dev_x0 = 0.0, dev_y1 = 0.0, dev_sum = 0.0, dev_closed = 0.0;
        for (std::size_t s = 0; s < samples; ++s) {
            examples::BivariateFreeFunction g =
                (s == 0) ? [](const examples::BivariateCoords&) { return SampledFunction(); }
                         : examples::random_bivariate_free_function(rng);
            const double y = rng.uniform(-5.0, 5.0);
            const double x = rng.uniform(-5.0, 5.0);
            const double cx = rng.uniform(-5.0, 5.0);
            const double cy = rng.uniform(-5.0, 5.0);
            auto u = ex.expression.embed(g);
            dev_x0 = std::max(dev_x0, deviation(u({0.0, y}), sine));
            dev_y1 = std::max(dev_y1, deviation(u({x, 1.0}), sine));
            const SampledFunction sum =
                u({1.0, y}) + u({2.0, y}) - u({5.0, y}) - u({4.0, y});
            dev_sum = std::max(dev_sum, deviation(sum, SampledFunction()));
            dev_closed = std::max(
                dev_closed, deviation(u({cx, cy}), examples::bivariate_closed_form(cx, cy, g)));
        }
        r.checks.push_back(
            Check::from_deviation("u(0, y) = sin(t)", samples, dev_x0, tolerance, false));
        r.checks.push_back(
            Check::from_deviation("u(x, 1) = sin(t)", samples, dev_y1, tolerance, false));
        r.checks.push_back(Check::from_deviation("u(1,y) + u(2,y) = u(5,y) + u(4,y)",
                                                 samples, dev_sum, tolerance, false));
        r.checks.push_back(Check::from_deviation("composition matches expanded form",
                                                 samples, dev_closed, tolerance, false));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Algebraic suites for verify-all.
// ---------------------------------------------------------------------------

Check gf4_field_laws() {
    std::size_t checked = 0;
    std::size_t failures = 0;
    auto expect = [&](bool ok) {
        ++checked;
        if (!ok) ++failures;
    };
    const auto all = GF4::elements();
    for (GF4 a : all)
        for (GF4 b : all)
            for (GF4 c : all) {
                expect((a + b) + c == a + (b + c));
                expect((a * b) * c == a * (b * c));
                expect(a * (b + c) == a * b + a * c);
            }
    for (GF4 a : all)
        for (GF4 b : all) {
            expect(a + b == b + a);
            expect(a * b == b * a);
        }
    for (GF4 a : all) {
        expect(a + GF4::zero() == a);
        expect(a * GF4::one() == a);
        expect(a + a == GF4::zero());
        if (!(a == GF4::zero()))
            expect(a * field_traits<GF4>::invert(a) == GF4::one());
    }
    return Check::from_deviation("gf4 field laws (exhaustive)", checked,
                                 static_cast<double>(failures), 0.0, true);
}

template <Field F>
Check inverse_round_trips(const char* description, std::uint64_t seed,
                          std::size_t samples) {
    Rng rng(seed);
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t n = 1 + s % 5;
        Matrix<F> m(n, n);
        Matrix<F> inv;
        for (;;) {  // random matrices are invertible almost surely; retry if not
            m = random_like(rng, m);
            try {
                inv = inverse(m);
                break;
            } catch (const SingularSupportError&) {
            }
        }
        worst = std::max(worst, deviation(multiply(m, inv), Matrix<F>::identity(n)));
    }
    return Check::from_deviation(description, samples, worst, 1e-8, false);
}

Check gf4_inverse_enumeration() {
    // Every 2x2 GF(4) matrix, checked against an exhaustive search for a
    // two-sided inverse among all 256 candidates.
    std::size_t failures = 0;
    const auto all = GF4::elements();
    const auto identity = Matrix<GF4>::identity(2);
    std::vector<Matrix<GF4>> candidates;
    candidates.reserve(256);
    for (GF4 a : all)
        for (GF4 b : all)
            for (GF4 c : all)
                for (GF4 d : all)
                    candidates.push_back(Matrix<GF4>::from_rows({{a, b}, {c, d}}));

    for (const auto& m : candidates) {
        const Matrix<GF4>* found = nullptr;
        for (const auto& n : candidates) {
            if (deviation(multiply(m, n), identity) == 0.0 &&
                deviation(multiply(n, m), identity) == 0.0) {
                found = &n;
                break;
            }
        }
        try {
            const Matrix<GF4> inv = inverse(m);
            if (found == nullptr || deviation(inv, *found) != 0.0) ++failures;
        } catch (const SingularSupportError&) {
            if (found != nullptr) ++failures;
        }
    }
    return Check::from_deviation("gf4 matrix inverses (exhaustive 2x2)",
                                 candidates.size(), static_cast<double>(failures), 0.0,
                                 true);
}

std::vector<Check> duality_suite() {
    std::vector<Check> checks;
    checks.push_back(Check::from_deviation(
        "switching duality (matrix_r2x3)", 0,
        duality_deviation(examples::build_matrix_example().expression), 1e-9, false));
    checks.push_back(Check::from_deviation(
        "switching duality (string_c2)", 0,
        duality_deviation(examples::build_string_example().expression), 1e-9, false));
    checks.push_back(Check::from_deviation(
        "switching duality (gf4)", 0,
        duality_deviation(examples::build_gf4_example().expression), 0.0, true));

    const auto ex = examples::build_bivariate_example();
    double worst = 0.0;
    {
        std::vector<std::vector<Term<double, double>>> terms;
        for (const auto& c : ex.dim_x.constraints) terms.push_back(c.terms);
        SwitchingSet<double, double> sw(ex.dim_x.supports, ex.expression.alphas()[0]);
        worst = std::max(worst, duality_deviation(terms, sw));
    }
    {
        std::vector<std::vector<Term<double, double>>> terms;
        for (const auto& c : ex.dim_y.constraints) terms.push_back(c.terms);
        SwitchingSet<double, double> sw(ex.dim_y.supports, ex.expression.alphas()[1]);
        worst = std::max(worst, duality_deviation(terms, sw));
    }
    checks.push_back(
        Check::from_deviation("switching duality (multivariate)", 0, worst, 1e-9, false));
    return checks;
}

}  // namespace

Check Check::from_deviation(std::string description, std::size_t samples,
                            double max_deviation, double tolerance, bool exact,
                            std::string observed) {
    Check c;
    c.description = std::move(description);
    c.samples = samples;
    c.max_deviation = max_deviation;
    c.tolerance = tolerance;
    c.exact = exact;
    c.pass = exact ? (max_deviation == 0.0) : (max_deviation <= tolerance);
    c.observed = std::move(observed);
    return c;
}

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

bool Aggregate::pass() const {
    for (const auto& r : examples)
        if (!r.pass()) return false;
    for (const auto& c : suites)
        if (!c.pass) return false;
    return true;
}

Report run_example(const std::string& example_id, std::uint64_t seed,
                   std::size_t samples, double tolerance) {
    if (example_id == "matrix_r2x3") return run_matrix(seed, samples, tolerance);
    if (example_id == "string_c2") return run_string(seed, samples, tolerance);
    if (example_id == "gf4") return run_gf4(seed, samples, tolerance);
    if (example_id == "multivariate") return run_bivariate(seed, samples, tolerance);
    throw UnknownExampleError("unknown example '" + example_id +
                              "' (expected matrix_r2x3, string_c2, gf4, multivariate)");
}

Aggregate run_all(std::uint64_t seed, std::size_t samples, double tolerance) {
    Aggregate a;
    a.seed = seed;
    a.samples = samples;
    a.tolerance = tolerance;
    a.generator = Rng::kAlgorithm;
    for (const char* id : kExampleIds)
        a.examples.push_back(run_example(id, seed, samples, tolerance));
    a.suites.push_back(gf4_field_laws());
    a.suites.push_back(inverse_round_trips<double>("matrix inverse round-trips (real)",
                                                   seed, samples));
    a.suites.push_back(inverse_round_trips<Complex>(
        "matrix inverse round-trips (complex)", seed, samples));
    a.suites.push_back(gf4_inverse_enumeration());
    for (auto& c : duality_suite()) a.suites.push_back(std::move(c));
    return a;
}

// ---------------------------------------------------------------------------
// Serialization. JSON keys are emitted in nlohmann's sorted order, and all
// content is a pure function of the report, so output is byte-stable.
// ---------------------------------------------------------------------------

namespace {

nlohmann::json check_json(const Check& c) {
    nlohmann::json j{{"description", c.description}, {"samples", c.samples},
                     {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance},
                     {"exact", c.exact}, {"pass", c.pass}};
    if (!c.observed.empty()) j["observed"] = c.observed;
    return j;
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& block : r.alphas)
        alphas.push_back({{"label", block.label}, {"entries", block.entries}});
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    return nlohmann::json{{"example", r.example_id}, {"generator", r.generator},
                          {"seed", r.seed},          {"samples", r.samples},
                          {"tolerance", r.tolerance}, {"alpha", std::move(alphas)},
                          {"checks", std::move(checks)}, {"pass", r.pass()}};
}

void append_alpha_text(std::ostringstream& os, const AlphaBlock& block) {
    os << "alpha" << (block.label.empty() ? "" : " (dimension " + block.label + ")")
       << ":\n";
    for (const auto& row : block.entries) {
        os << "  [";
        for (const auto& e : row) os << ' ' << entry_text(e);
        os << " ]\n";
    }
}

void append_check_text(std::ostringstream& os, const Check& c) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.description
       << " | samples=" << c.samples << " | max_dev=" << fmt_dev(c.max_deviation)
       << " | tol=" << (c.exact ? "exact" : fmt_dev(c.tolerance));
    if (!c.observed.empty()) os << " | first: " << c.observed;
    os << '\n';
}

void append_report_text(std::ostringstream& os, const Report& r) {
    os << "example: " << r.example_id << '\n'
       << "generator: " << r.generator << '\n'
       << "seed: " << r.seed << '\n'
       << "samples: " << r.samples << '\n'
       << "tolerance: " << fmt_dev(r.tolerance) << '\n';
    for (const auto& block : r.alphas) append_alpha_text(os, block);
    os << "checks:\n";
    for (const auto& c : r.checks) append_check_text(os, c);
    os << "result: " << (r.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

std::string to_json(const Report& report) { return report_json(report).dump(2) + "\n"; }

std::string to_text(const Report& report) {
    std::ostringstream os;
    append_report_text(os, report);
    return os.str();
}

std::string to_json(const Aggregate& aggregate) {
    nlohmann::json examples = nlohmann::json::array();
    for (const auto& r : aggregate.examples) examples.push_back(report_json(r));
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& c : aggregate.suites) suites.push_back(check_json(c));
    nlohmann::json j{{"generator", aggregate.generator}, {"seed", aggregate.seed},
                     {"samples", aggregate.samples},     {"tolerance", aggregate.tolerance},
                     {"examples", std::move(examples)},  {"suites", std::move(suites)},
                     {"pass", aggregate.pass()}};
    return j.dump(2) + "\n";
}

std::string to_text(const Aggregate& aggregate) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : aggregate.examples) {
        append_report_text(os, r);
        os << '\n';
        if (r.pass()) ++passed;
    }
    os << "suites:\n";
    for (const auto& c : aggregate.suites) append_check_text(os, c);
    os << "examples passed: " << passed << "/" << aggregate.examples.size() << '\n'
       << "overall: " << (aggregate.pass() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace tfc::verify
