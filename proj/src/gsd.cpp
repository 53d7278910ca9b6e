#include "entgraph/gsd.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kSampleMargin = 1e-3;
// Sampled amplitudes stay above this so every class-defining product is
// well separated from the working tolerances.
constexpr double kAmplitudeFloor = 0.05;
constexpr int kMaxDraws = 1000000;

struct Term {
    int index;
    const char* p1;            // nullptr means constant amplitude 1
    const char* p2 = nullptr;  // second factor for product amplitudes
};

// sum over (name, weight) of weight * p_name^2 must equal 1
using NormGroup = std::vector<std::pair<const char*, int>>;

struct Constraint {
    std::string text;
    // satisfied with the given margin; margin 0 is the build-time check
    std::function<bool(const ParamMap&, double)> ok;
};

struct ClassInfo {
    int n_qubits;
    std::vector<std::string> param_names;
    std::vector<Term> terms;
    std::vector<NormGroup> norm_groups;
    std::vector<Constraint> constraints;
};

Constraint product_gt(const char* a, const char* b, const char* c, const char* d) {
    Constraint out;
    out.text = std::string(a) + "*" + b + " > " + c + "*" + d;
    out.ok = [=](const ParamMap& p, double margin) {
        return p.at(a) * p.at(b) > p.at(c) * p.at(d) + margin;
    };
    return out;
}

const std::map<ClassLabel, ClassInfo>& class_table() {
    static const std::map<ClassLabel, ClassInfo> table = [] {
        std::map<ClassLabel, ClassInfo> t;

        t[ClassLabel::c1a] = {3, {}, {{0, nullptr}}, {}, {}};
        t[ClassLabel::c1b] = {3,
                              {"alpha", "delta"},
                              {{0, "alpha"}, {6, "delta"}},
                              {{{"alpha", 1}, {"delta", 1}}},
                              {}};
        t[ClassLabel::c1c] = {3,
                              {"alpha", "lambda"},
                              {{0, "alpha"}, {7, "lambda"}},
                              {{{"alpha", 1}, {"lambda", 1}}},
                              {}};
        t[ClassLabel::c1d] = {3,
                              {"alpha", "delta", "lambda"},
                              {{0, "alpha"}, {6, "delta"}, {7, "lambda"}},
                              {{{"alpha", 1}, {"delta", 1}, {"lambda", 1}}},
                              {}};
        t[ClassLabel::c1e] = {3,
                              {"alpha", "beta", "delta", "lambda"},
                              {{0, "alpha"}, {4, "beta"}, {6, "delta"}, {7, "lambda"}},
                              {{{"alpha", 1}, {"beta", 1}, {"delta", 1}, {"lambda", 1}}},
                              {}};
        t[ClassLabel::c1f] = {3,
                              {"alpha", "gamma", "delta"},
                              {{0, "alpha"}, {5, "gamma"}, {6, "delta"}},
                              {{{"alpha", 1}, {"gamma", 1}, {"delta", 1}}},
                              {}};

        t[ClassLabel::c2a] = {4, {}, {{0, nullptr}}, {}, {}};
        t[ClassLabel::c2b] = {4,
                              {"alpha", "lambda"},
                              {{0, "alpha"}, {12, "lambda"}},
                              {{{"alpha", 1}, {"lambda", 1}}},
                              {}};
        t[ClassLabel::c2c] = {4,
                              {"epsilon", "omega"},
                              {{8, "epsilon"}, {15, "omega"}},
                              {{{"epsilon", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2d] = {4,
                              {"epsilon", "nu", "omega"},
                              {{8, "epsilon"}, {14, "nu"}, {15, "omega"}},
                              {{{"epsilon", 1}, {"nu", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2e] = {4,
                              {"epsilon", "lambda", "nu", "omega"},
                              {{8, "epsilon"}, {12, "lambda"}, {14, "nu"}, {15, "omega"}},
                              {{{"epsilon", 1}, {"lambda", 1}, {"nu", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2f] = {4,
                              {"epsilon", "mu", "nu"},
                              {{8, "epsilon"}, {13, "mu"}, {14, "nu"}},
                              {{{"epsilon", 1}, {"mu", 1}, {"nu", 1}}},
                              {}};
        t[ClassLabel::c2g] = {4,
                              {"alpha", "omega"},
                              {{0, "alpha"}, {15, "omega"}},
                              {{{"alpha", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2h] = {4,
                              {"alpha", "kappa", "mu"},
                              {{0, "alpha"}, {11, "kappa"}, {13, "mu"}},
                              {{{"alpha", 1}, {"kappa", 1}, {"mu", 1}}},
                              {}};
        t[ClassLabel::c2i] = {4,
                              {"alpha", "eta", "kappa", "mu"},
                              {{0, "alpha"}, {10, "eta"}, {11, "kappa"}, {13, "mu"}},
                              {{{"alpha", 1}, {"eta", 1}, {"kappa", 1}, {"mu", 1}}},
                              {}};
        t[ClassLabel::c2j] = {4,
                              {"alpha", "eta", "omega"},
                              {{0, "alpha"}, {10, "eta"}, {15, "omega"}},
                              {{{"alpha", 1}, {"eta", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2k] = {4,
                              {"alpha", "kappa", "mu", "nu"},
                              {{0, "alpha"}, {11, "kappa"}, {13, "mu"}, {14, "nu"}},
                              {{{"alpha", 1}, {"kappa", 1}, {"mu", 1}, {"nu", 1}}},
                              {product_gt("kappa", "mu", "alpha", "nu"),
                               product_gt("kappa", "nu", "alpha", "mu"),
                               product_gt("mu", "nu", "alpha", "kappa")}};
        t[ClassLabel::c2l] = {4,
                              {"alpha", "zeta"},
                              {{0, "alpha"}, {9, "zeta"}, {10, "zeta"}, {12, "zeta"}, {15, "zeta"}},
                              {{{"alpha", 1}, {"zeta", 4}}},
                              {}};
        t[ClassLabel::c2m] = {4,
                              {"alpha", "kappa", "lambda", "mu", "omega"},
                              {{0, "alpha"}, {11, "kappa"}, {12, "lambda"}, {13, "mu"}, {15, "omega"}},
                              {{{"alpha", 1}, {"kappa", 1}, {"lambda", 1}, {"mu", 1}, {"omega", 1}}},
                              {}};
        t[ClassLabel::c2n] = {4,
                              {"alpha", "zeta", "kappa", "lambda", "mu"},
                              {{0, "alpha"}, {9, "zeta"}, {11, "kappa"}, {12, "lambda"}, {13, "mu"}},
                              {{{"alpha", 1}, {"zeta", 1}, {"kappa", 1}, {"lambda", 1}, {"mu", 1}}},
                              {}};

        Constraint upper_branch;
        upper_branch.text = "alpha*omega >= 2*zeta*eta or alpha*omega = zeta*eta";
        upper_branch.ok = [](const ParamMap& p, double margin) {
            const double aw = p.at("alpha") * p.at("omega");
            const double ze = p.at("zeta") * p.at("eta");
            if (margin > 0.0) return aw >= 2.0 * ze + margin;  // samplers use the open branch
            return aw >= 2.0 * ze || std::abs(aw - ze) <= 1e-12;
        };
        t[ClassLabel::c2o] = {4,
                              {"alpha", "zeta", "eta", "omega"},
                              {{0, "alpha"}, {9, "zeta"}, {10, "eta"}, {15, "omega"}},
                              {{{"alpha", 1}, {"zeta", 1}, {"eta", 1}, {"omega", 1}}},
                              {upper_branch}};
        t[ClassLabel::c2p] = {4,
                              {"alpha", "zeta", "eta", "omega"},
                              {{0, "alpha"}, {9, "zeta"}, {10, "eta"}, {15, "omega"}},
                              {{{"alpha", 1}, {"zeta", 1}, {"eta", 1}, {"omega", 1}}},
                              {product_gt("zeta", "eta", "alpha", "omega")}};
        t[ClassLabel::c2q] = {4,
                              {"alpha", "zeta", "eta", "lambda"},
                              {{0, "alpha"}, {9, "zeta"}, {10, "eta"}, {12, "lambda"}},
                              {{{"alpha", 1}, {"zeta", 1}, {"eta", 1}, {"lambda", 1}}},
                              {}};
        // Two entangled pairs (12)(34); amplitudes are products, each pair
        // normalized on its own.
        t[ClassLabel::c2x_pairpair] = {4,
                                       {"alpha", "lambda", "epsilon", "omega"},
                                       {{0, "alpha", "epsilon"},
                                        {3, "alpha", "omega"},
                                        {12, "lambda", "epsilon"},
                                        {15, "lambda", "omega"}},
                                       {{{"alpha", 1}, {"lambda", 1}},
                                        {{"epsilon", 1}, {"omega", 1}}},
                                       {}};
        return t;
    }();
    return table;
}

const ClassInfo& class_info(ClassLabel label) {
    const auto& table = class_table();
    const auto it = table.find(label);
    if (it == table.end())
        raise(errc::bad_params, "class " + to_string(label) + " has no representative family");
    return it->second;
}

double term_amplitude(const Term& term, const ParamMap& params) {
    if (term.p1 == nullptr) return 1.0;
    double a = params.at(term.p1);
    if (term.p2 != nullptr) a *= params.at(term.p2);
    return a;
}

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw in (0, 1); avoids distribution portability gaps
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

PureState build_gsd3(const GSD3Params& p) {
    const double lams[5] = {p.lambda0, p.lambda1, p.lambda2, p.lambda3, p.lambda4};
    double norm_sq = 0.0;
    for (const double l : lams) {
        if (!std::isfinite(l) || l < 0.0) raise(errc::bad_params, "lambda coefficients must be nonnegative");
        norm_sq += l * l;
    }
    if (std::abs(norm_sq - 1.0) > kNormTol)
        raise(errc::bad_params, "lambda coefficients must have unit square sum");
    if (!std::isfinite(p.phi) || p.phi < 0.0 || p.phi > std::acos(-1.0))
        raise(errc::bad_params, "phi must lie in [0, pi]");

    std::vector<cdouble> amps(8, cdouble(0.0, 0.0));
    amps[0] = p.lambda0;
    amps[4] = p.lambda1 * std::exp(cdouble(0.0, p.phi));
    amps[5] = p.lambda2;
    amps[6] = p.lambda3;
    amps[7] = p.lambda4;
    return normalize(amps);
}

PureState build_gsd4(const GSD4Params& p) {
    const std::pair<int, cdouble> entries[12] = {
        {0, p.alpha}, {4, p.beta},   {5, p.gamma}, {6, p.delta},
        {8, p.epsilon}, {9, p.zeta}, {10, p.eta},  {11, p.kappa},
        {12, p.lambda}, {13, p.mu},  {14, p.nu},   {15, p.omega},
    };
    double norm_sq = 0.0;
    for (const auto& [index, c] : entries) {
        (void)index;
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            raise(errc::bad_params, "non-finite coefficient");
        norm_sq += std::norm(c);
    }
    if (std::abs(norm_sq - 1.0) > kNormTol)
        raise(errc::bad_params, "coefficients must have unit square sum");

    std::vector<cdouble> amps(16, cdouble(0.0, 0.0));
    for (const auto& [index, c] : entries) amps[index] = c;
    return normalize(amps);
}

RepresentativeSpec RepresentativeSpec::create(ClassLabel label, ParamMap params) {
    const ClassInfo& info = class_info(label);
    if (params.size() != info.param_names.size())
        raise(errc::bad_params, "class " + to_string(label) + " takes " +
                                    std::to_string(info.param_names.size()) + " parameters");
    for (const std::string& name : info.param_names) {
        const auto it = params.find(name);
        if (it == params.end())
            raise(errc::bad_params, "class " + to_string(label) + " needs parameter '" + name + "'");
        if (!std::isfinite(it->second) || it->second < 0.0)
            raise(errc::bad_params, "parameter '" + name + "' must be a nonnegative real");
    }
    for (const NormGroup& group : info.norm_groups) {
        double s = 0.0;
        for (const auto& [name, weight] : group) s += weight * params.at(name) * params.at(name);
        if (std::abs(s - 1.0) > kNormTol)
            raise(errc::bad_params, "parameters of class " + to_string(label) +
                                        " must have unit square sum per normalization group");
    }
    for (const Constraint& constraint : info.constraints) {
        if (!constraint.ok(params, 0.0))
            raise(errc::constraint_violation,
                  "class " + to_string(label) + " requires " + constraint.text);
    }
    return RepresentativeSpec(label, std::move(params));
}

double RepresentativeSpec::param(const std::string& name) const {
    const auto it = params_.find(name);
    if (it == params_.end()) raise(errc::bad_params, "unknown parameter '" + name + "'");
    return it->second;
}

PureState build_representative(const RepresentativeSpec& spec) {
    const ClassInfo& info = class_info(spec.label());
    std::vector<cdouble> amps(std::size_t(1) << info.n_qubits, cdouble(0.0, 0.0));
    for (const Term& term : info.terms) amps[term.index] = term_amplitude(term, spec.params());
    return normalize(amps);
}

namespace {

double tri_closed_form_d(double a, double d, double l) {
    return 2.0 * a * std::cbrt(l * (d * d + l * l));
}

double tri_closed_form_e(double a, double b, double d, double l) {
    const double f1 = std::sqrt(a * a * (d * d + l * l));
    const double f2 = std::sqrt(a * a * (d * d + l * l) + b * b * l * l);
    const double f3 = std::sqrt(l * l * (a * a + b * b));
    return 2.0 * std::cbrt(f1 * f2 * f3);
}

double tri_closed_form_f(double a, double g, double d) {
    const double f1 = std::sqrt(a * a * (g * g + d * d));
    const double f2 = std::sqrt(d * d * (a * a + g * g));
    const double f3 = std::sqrt(g * g * (a * a + d * d));
    return 2.0 * std::cbrt(f1 * f2 * f3);
}

}  // namespace

Prediction predict(const RepresentativeSpec& spec) {
    const ParamMap& p = spec.params();
    auto at = [&](const char* name) { return p.at(name); };
    Prediction out;

    switch (spec.label()) {
        case ClassLabel::c1a:
            break;
        case ClassLabel::c1b:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("delta");
            break;
        case ClassLabel::c1c:
            out.global_nonzero = true;
            out.global_value = 2.0 * at("alpha") * at("lambda");
            break;
        case ClassLabel::c1d:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("delta");
            out.global_nonzero = true;
            out.global_value = tri_closed_form_d(at("alpha"), at("delta"), at("lambda"));
            break;
        case ClassLabel::c1e:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("delta");
            out.pairwise[{2, 3}] = 2.0 * at("beta") * at("lambda");
            out.global_nonzero = true;
            out.global_value = tri_closed_form_e(at("alpha"), at("beta"), at("delta"), at("lambda"));
            break;
        case ClassLabel::c1f:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("delta");
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("gamma");
            out.pairwise[{2, 3}] = 2.0 * at("gamma") * at("delta");
            out.global_nonzero = true;
            out.global_value = tri_closed_form_f(at("alpha"), at("gamma"), at("delta"));
            break;

        case ClassLabel::c2a:
            break;
        case ClassLabel::c2b:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("lambda");
            break;
        case ClassLabel::c2c:
            out.triple = {{2, 3, 4}, 2.0 * at("epsilon") * at("omega")};
            break;
        case ClassLabel::c2d:
            out.pairwise[{2, 3}] = 2.0 * at("epsilon") * at("nu");
            out.triple = {{2, 3, 4}, tri_closed_form_d(at("epsilon"), at("nu"), at("omega"))};
            break;
        case ClassLabel::c2e:
            out.pairwise[{2, 3}] = 2.0 * at("epsilon") * at("nu");
            out.pairwise[{3, 4}] = 2.0 * at("lambda") * at("omega");
            out.triple = {{2, 3, 4},
                          tri_closed_form_e(at("epsilon"), at("lambda"), at("nu"), at("omega"))};
            break;
        case ClassLabel::c2f:
            out.pairwise[{2, 3}] = 2.0 * at("epsilon") * at("nu");
            out.pairwise[{2, 4}] = 2.0 * at("epsilon") * at("mu");
            out.pairwise[{3, 4}] = 2.0 * at("mu") * at("nu");
            out.triple = {{2, 3, 4}, tri_closed_form_f(at("epsilon"), at("mu"), at("nu"))};
            break;
        case ClassLabel::c2x_pairpair:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("lambda");
            out.pairwise[{3, 4}] = 2.0 * at("epsilon") * at("omega");
            break;

        case ClassLabel::c2g:
            out.global_nonzero = true;
            break;
        case ClassLabel::c2h:
            out.pairwise[{2, 3}] = 2.0 * at("kappa") * at("mu");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2i:
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("eta");
            out.pairwise[{2, 3}] = 2.0 * at("kappa") * at("mu");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2j:
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("eta");
            out.pairwise[{2, 4}] = 2.0 * at("eta") * at("omega");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2k:
            out.pairwise[{2, 3}] = 2.0 * (at("kappa") * at("mu") - at("alpha") * at("nu"));
            out.pairwise[{2, 4}] = 2.0 * (at("kappa") * at("nu") - at("alpha") * at("mu"));
            out.pairwise[{3, 4}] = 2.0 * (at("mu") * at("nu") - at("alpha") * at("kappa"));
            out.global_nonzero = true;
            break;
        case ClassLabel::c2l:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{1, 4}] = 2.0 * at("alpha") * at("zeta");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2m:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("lambda");
            out.pairwise[{2, 3}] = 2.0 * at("kappa") * at("mu");
            out.pairwise[{3, 4}] = 2.0 * at("lambda") * at("omega");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2n:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("lambda");
            out.pairwise[{1, 4}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{2, 3}] = 2.0 * at("kappa") * at("mu");
            out.pairwise[{2, 4}] = 2.0 * at("zeta") * at("lambda");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2o:
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("eta");
            out.pairwise[{1, 4}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{2, 3}] = 2.0 * at("zeta") * at("omega");
            out.pairwise[{2, 4}] = 2.0 * at("eta") * at("omega");
            out.global_nonzero = true;
            break;
        case ClassLabel::c2p:
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("eta");
            out.pairwise[{1, 4}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{2, 3}] = 2.0 * at("zeta") * at("omega");
            out.pairwise[{2, 4}] = 2.0 * at("eta") * at("omega");
            out.pairwise[{3, 4}] = 2.0 * (at("zeta") * at("eta") - at("alpha") * at("omega"));
            out.global_nonzero = true;
            break;
        case ClassLabel::c2q:
            out.pairwise[{1, 2}] = 2.0 * at("alpha") * at("lambda");
            out.pairwise[{1, 3}] = 2.0 * at("alpha") * at("eta");
            out.pairwise[{1, 4}] = 2.0 * at("alpha") * at("zeta");
            out.pairwise[{2, 3}] = 2.0 * at("eta") * at("lambda");
            out.pairwise[{2, 4}] = 2.0 * at("zeta") * at("lambda");
            out.pairwise[{3, 4}] = 2.0 * at("zeta") * at("eta");
            out.global_nonzero = true;
            break;

        case ClassLabel::sep2:
        case ClassLabel::ent2:
            raise(errc::bad_params, "two-qubit labels have no representative family");
    }
    return out;
}

RepresentativeSpec sample(ClassLabel label, std::uint64_t seed) {
    const ClassInfo& info = class_info(label);
    uint64_t mix = seed;
    std::mt19937_64 rng(splitmix64(mix));

    if (info.param_names.empty()) return RepresentativeSpec::create(label, {});

    for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
        ParamMap params;
        for (const std::string& name : info.param_names) params[name] = uniform01(rng);
        for (const NormGroup& group : info.norm_groups) {
            double s = 0.0;
            for (const auto& [name, weight] : group) s += weight * params[name] * params[name];
            const double scale = 1.0 / std::sqrt(s);
            for (const auto& [name, weight] : group) {
                (void)weight;
                params[name] *= scale;
            }
        }

        bool ok = true;
        for (const auto& [name, value] : params) {
            (void)name;
            if (value < kAmplitudeFloor) ok = false;
        }
        for (const Constraint& constraint : info.constraints)
            ok = ok && constraint.ok(params, kSampleMargin);
        if (ok) return RepresentativeSpec::create(label, std::move(params));
    }
    raise(errc::never_satisfiable,
          "no draw satisfied the constraints of class " + to_string(label));
}

const std::vector<std::string>& class_param_names(ClassLabel label) {
    return class_info(label).param_names;
}

const std::vector<ClassLabel>& representative_classes() {
    static const std::vector<ClassLabel> classes = {
        ClassLabel::c1a, ClassLabel::c1b, ClassLabel::c1c, ClassLabel::c1d, ClassLabel::c1e,
        ClassLabel::c1f, ClassLabel::c2a, ClassLabel::c2b, ClassLabel::c2c, ClassLabel::c2d,
        ClassLabel::c2e, ClassLabel::c2f, ClassLabel::c2g, ClassLabel::c2h, ClassLabel::c2i,
        ClassLabel::c2j, ClassLabel::c2k, ClassLabel::c2l, ClassLabel::c2m, ClassLabel::c2n,
        ClassLabel::c2o, ClassLabel::c2p, ClassLabel::c2q, ClassLabel::c2x_pairpair,
    };
    return classes;
}

}  // namespace entgraph
