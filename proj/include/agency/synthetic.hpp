#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "agency/decision_fn.hpp"

namespace agency {

enum class SyntheticKind { bimodal1d, curved2d_monotone, linear, logistic, radial };

std::string to_string(SyntheticKind kind);
SyntheticKind synthetic_kind_from_string(const std::string& s);

// Analytic benchmark decision function on an axis-aligned box.  The shape
// contract per kind (two maxima, coordinate-wise monotonicity, straight
// gradient rays, ...) is validated at construction.
class SyntheticFunction : public DecisionFunction {
public:
    virtual SyntheticKind kind() const = 0;
    // Canonical benchmark start point (the gold diamond of the figures).
    virtual const std::vector<double>& start() const = 0;
    std::size_t dim() const { return schema().size(); }

    FeatureVector point(std::vector<double> coords) const;
    double value_at(const std::vector<double>& coords) const;
};

using SyntheticPtr = std::shared_ptr<const SyntheticFunction>;

// Builds a synthetic function from kind-specific parameters; throws
// ContractError when the parameters violate the kind's shape contract.
SyntheticPtr make_synthetic(SyntheticKind kind, const nlohmann::json& params);

// Named presets shipped with the repo so scenario tests stay stable:
// fig1_default, fig2_default, linear_default, logistic_default, radial_default.
SyntheticPtr synthetic_preset(const std::string& name);
std::vector<std::string> synthetic_preset_names();
nlohmann::json synthetic_preset_params(const std::string& name);

}  // namespace agency
