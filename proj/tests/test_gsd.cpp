#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>

#include "entgraph/concurrence.hpp"
#include "entgraph/errors.hpp"
#include "entgraph/gsd.hpp"

using namespace entgraph;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool throws_code(errc expected, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == expected;
    }
    return false;
}

std::set<int> support_of(const PureState& psi) {
    std::set<int> support;
    for (std::size_t i = 0; i < psi.amplitudes.size(); ++i)
        if (std::abs(psi.amplitudes[i]) > 1e-14) support.insert(static_cast<int>(i));
    return support;
}

}  // namespace

TEST_CASE("three-qubit canonical form builder") {
    GSD3Params p;
    p.lambda0 = 1.0;
    CHECK(support_of(build_gsd3(p)) == std::set<int>{0});

    GSD3Params ghz;
    ghz.lambda0 = ghz.lambda4 = kInvSqrt2;
    const PureState state = build_gsd3(ghz);
    CHECK(support_of(state) == std::set<int>{0, 7});
    CHECK(tri_concurrence(state) == doctest::Approx(1.0).epsilon(1e-12));

    GSD3Params phase;
    phase.lambda1 = 1.0;
    phase.phi = std::acos(-1.0);
    const PureState minus = build_gsd3(phase);
    CHECK(support_of(minus) == std::set<int>{4});
    CHECK(minus.amplitudes[4].real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(minus.amplitudes[4].imag()) < 1e-12);

    // support never leaves the canonical index set {0, 4, 5, 6, 7}
    GSD3Params generic;
    generic.lambda0 = 0.5;
    generic.lambda1 = 0.5;
    generic.lambda2 = 0.5;
    generic.lambda3 = 0.3;
    generic.lambda4 = std::sqrt(1.0 - 0.25 * 3 - 0.09);
    generic.phi = 1.0;
    for (const int index : support_of(build_gsd3(generic)))
        CHECK(std::set<int>{0, 4, 5, 6, 7}.count(index) == 1);
}

TEST_CASE("three-qubit builder validates parameters") {
    GSD3Params bad_norm;
    bad_norm.lambda0 = 1.0;
    bad_norm.lambda1 = 0.5;
    CHECK(throws_code(errc::bad_params, [&] { build_gsd3(bad_norm); }));

    GSD3Params negative;
    negative.lambda0 = -1.0;
    CHECK(throws_code(errc::bad_params, [&] { build_gsd3(negative); }));

    GSD3Params bad_phi;
    bad_phi.lambda0 = 1.0;
    bad_phi.phi = 4.0;
    CHECK(throws_code(errc::bad_params, [&] { build_gsd3(bad_phi); }));
}

TEST_CASE("four-qubit canonical form builder") {
    GSD4Params p;
    p.alpha = 1.0;
    CHECK(support_of(build_gsd4(p)) == std::set<int>{0});

    GSD4Params ghz;
    ghz.alpha = ghz.omega = kInvSqrt2;
    const PureState state = build_gsd4(ghz);
    CHECK(support_of(state) == std::set<int>{0, 15});
    CHECK(four_concurrence(state) == doctest::Approx(std::pow(2.0 / 3.0, 3.0 / 14.0)).epsilon(1e-12));

    // the W-type class: alpha = zeta = eta = lambda = 1/2
    GSD4Params w;
    w.alpha = w.zeta = w.eta = w.lambda = 0.5;
    CHECK(support_of(build_gsd4(w)) == std::set<int>{0, 9, 10, 12});

    GSD4Params full;
    full.alpha = full.beta = full.gamma = full.delta = 0.2;
    full.epsilon = full.zeta = full.eta = full.kappa = 0.2;
    full.lambda = full.mu = full.nu = 0.2;
    full.omega = std::sqrt(1.0 - 11 * 0.04);
    const std::set<int> canonical = {0, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15};
    for (const int index : support_of(build_gsd4(full))) CHECK(canonical.count(index) == 1);

    GSD4Params bad;
    bad.alpha = 1.0;
    bad.omega = 0.5;
    CHECK(throws_code(errc::bad_params, [&] { build_gsd4(bad); }));

    // complex coefficients are accepted as long as they normalize
    GSD4Params complex_ok;
    complex_ok.alpha = cdouble(0.6, 0.0);
    complex_ok.omega = cdouble(0.0, 0.8);
    CHECK(support_of(build_gsd4(complex_ok)) == std::set<int>{0, 15});
}

TEST_CASE("representative construction") {
    const RepresentativeSpec chain = RepresentativeSpec::create(
        ClassLabel::c1e,
        {{"alpha", 0.5}, {"beta", 0.5}, {"delta", 0.5}, {"lambda", 0.5}});
    const PureState psi = build_representative(chain);
    CHECK(support_of(psi) == std::set<int>{0, 4, 6, 7});
    CHECK(psi.amplitudes[0].real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(classify(psi).label == ClassLabel::c1e);

    // 2k with constraints satisfied
    const double k = std::sqrt(0.33);
    const RepresentativeSpec triangle = RepresentativeSpec::create(
        ClassLabel::c2k,
        {{"alpha", std::sqrt(1.0 - 3 * 0.33)}, {"kappa", k}, {"mu", k}, {"nu", k}});
    CHECK(classify(build_representative(triangle)).label == ClassLabel::c2k);
}

TEST_CASE("constraint violations are rejected by name") {
    // kappa*mu <= alpha*nu violates the first 2k inequality
    try {
        RepresentativeSpec::create(
            ClassLabel::c2k,
            {{"alpha", 0.9}, {"kappa", 0.1}, {"mu", 0.1}, {"nu", std::sqrt(0.17)}});
        FAIL("expected ConstraintViolation");
    } catch (const Error& e) {
        CHECK(e.code() == errc::constraint_violation);
        CHECK(std::string(e.what()).find("kappa*mu > alpha*nu") != std::string::npos);
    }

    // zeta*eta > alpha*omega required for 2p
    const double rest = std::sqrt(1.0 - 0.01 - 0.01);
    CHECK(throws_code(errc::constraint_violation, [&] {
        RepresentativeSpec::create(ClassLabel::c2p, {{"alpha", rest * kInvSqrt2},
                                                     {"zeta", 0.1},
                                                     {"eta", 0.1},
                                                     {"omega", rest * kInvSqrt2}});
    }));

    CHECK(throws_code(errc::bad_params, [] {
        RepresentativeSpec::create(ClassLabel::c1c, {{"alpha", 0.6}, {"mu", 0.8}});
    }));
    CHECK(throws_code(errc::bad_params, [] {
        RepresentativeSpec::create(ClassLabel::c1c, {{"alpha", 0.6}, {"lambda", 0.9}});
    }));
    CHECK(throws_code(errc::bad_params, [] {
        RepresentativeSpec::create(ClassLabel::c1c, {{"alpha", -0.6}, {"lambda", 0.8}});
    }));
}

TEST_CASE("predictions match the displayed closed forms") {
    const double third = 1.0 / std::sqrt(3.0);
    const Prediction wtype = predict(RepresentativeSpec::create(
        ClassLabel::c1f, {{"alpha", third}, {"gamma", third}, {"delta", third}}));
    CHECK(wtype.pairwise.at({1, 2}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(wtype.pairwise.at({1, 3}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(wtype.pairwise.at({2, 3}) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    REQUIRE(wtype.global_value.has_value());
    CHECK(*wtype.global_value == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));

    const Prediction h = predict(sample(ClassLabel::c2h, 5));
    CHECK(h.pairwise.size() == 1);
    CHECK(h.pairwise.count({2, 3}) == 1);
    CHECK(h.global_nonzero);
    CHECK_FALSE(h.global_value.has_value());

    const Prediction product = predict(RepresentativeSpec::create(ClassLabel::c2a, {}));
    CHECK(product.pairwise.empty());
    CHECK_FALSE(product.global_nonzero);
}

TEST_CASE("sampler is deterministic and honors per-class constraints") {
    for (const ClassLabel label : representative_classes()) {
        const RepresentativeSpec a = sample(label, 7);
        const RepresentativeSpec b = sample(label, 7);
        CHECK(a.params() == b.params());
        if (!a.params().empty()) {
            const RepresentativeSpec c = sample(label, 8);
            CHECK(a.params() != c.params());
        }
    }

    for (uint64_t seed = 0; seed < 40; ++seed) {
        const RepresentativeSpec p = sample(ClassLabel::c2p, seed);
        CHECK(p.param("zeta") * p.param("eta") > p.param("alpha") * p.param("omega") + 1e-3);

        const RepresentativeSpec o = sample(ClassLabel::c2o, seed);
        CHECK(o.param("alpha") * o.param("omega") >= 2.0 * o.param("zeta") * o.param("eta") + 1e-3);

        const RepresentativeSpec q = sample(ClassLabel::c2q, seed);
        double sum = 0.0;
        for (const auto& [name, value] : q.params()) {
            (void)name;
            CHECK(value > 0.0);
            sum += value * value;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("round-trip: sampled representatives classify as their class") {
    for (const ClassLabel label : representative_classes()) {
        for (uint64_t seed = 0; seed < 25; ++seed) {
            const PureState psi = build_representative(sample(label, seed));
            CHECK(to_string(classify(psi).label) == to_string(label));
        }
    }
}

TEST_CASE("pairwise predictions agree with measured concurrences") {
    for (const ClassLabel label : representative_classes()) {
        double worst = 0.0;
        for (uint64_t seed = 0; seed < 25; ++seed) {
            const RepresentativeSpec spec = sample(label, seed);
            const PureState psi = build_representative(spec);
            const Prediction want = predict(spec);
            ReportOptions opts;
            opts.raw = true;
            const ConcurrenceReport got = full_report(psi, opts);
            for (const auto& [pair, value] : got.pairwise) {
                const auto it = want.pairwise.find(pair);
                const double predicted = it == want.pairwise.end() ? 0.0 : it->second;
                worst = std::max(worst, std::abs(value - predicted));
            }
            if (want.global_value)
                worst = std::max(worst, std::abs(*want.global_value - got.global));
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("samplers reject unsupported labels") {
    CHECK(throws_code(errc::bad_params, [] { sample(ClassLabel::ent2, 1); }));
    CHECK(throws_code(errc::bad_params, [] { predict(sample(ClassLabel::sep2, 1)); }));
}
