#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entgraph/qcore.hpp"
#include "entgraph/taxonomy.hpp"

namespace entgraph {

// Coefficients of the three-qubit canonical form
// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct GSD3Params {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double phi = 0.0;  // in [0, pi]
};

// Coefficients of the four-qubit canonical form, spanning the twelve
// basis kets |0000>, |0100>, |0101>, |0110>, |1000>, |1001>, |1010>,
// |1011>, |1100>, |1101>, |1110>, |1111>.
struct GSD4Params {
    cdouble alpha{}, beta{}, gamma{}, delta{}, epsilon{}, zeta{};
    cdouble eta{}, kappa{}, lambda{}, mu{}, nu{}, omega{};
};

PureState build_gsd3(const GSD3Params& p);
PureState build_gsd4(const GSD4Params& p);

using ParamMap = std::map<std::string, double>;

// A class label together with the free nonnegative amplitudes of its
// representative state. Construction validates parameter names,
// normalization and every class constraint.
class RepresentativeSpec {
  public:
    static RepresentativeSpec create(ClassLabel label, ParamMap params);

    ClassLabel label() const noexcept { return label_; }
    const ParamMap& params() const noexcept { return params_; }
    double param(const std::string& name) const;

  private:
    RepresentativeSpec(ClassLabel label, ParamMap params)
        : label_(label), params_(std::move(params)) {}
    ClassLabel label_;
    ParamMap params_;
};

// Closed-form measure predictions for a representative. Absent pairwise
// entries mean a predicted zero. global_value is populated for the
// three-qubit classes only; for four qubits just the nonzero-ness of the
// global measure is predicted. triple covers the pure three-qubit factor
// of the biseparable four-qubit classes.
struct Prediction {
    std::map<std::pair<int, int>, double> pairwise;
    bool global_nonzero = false;
    std::optional<double> global_value;
    std::optional<std::pair<std::vector<int>, double>> triple;
};

PureState build_representative(const RepresentativeSpec& spec);
Prediction predict(const RepresentativeSpec& spec);

// Deterministic rejection sampler over a class's free amplitudes:
// normalized positive uniforms, redrawn until every constraint holds with
// margin >= 1e-3 and every amplitude clears a small floor.
RepresentativeSpec sample(ClassLabel label, std::uint64_t seed);

const std::vector<std::string>& class_param_names(ClassLabel label);
// All representative-bearing classes: 1a-1f, 2a-2q and 2x-pairpair.
const std::vector<ClassLabel>& representative_classes();

}  // namespace entgraph
