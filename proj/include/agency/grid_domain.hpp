#pragma once

#include "agency/mdp.hpp"
#include "agency/synthetic.hpp"

namespace agency {

// Unit-step benchmark MDP over a numeric decision function: per axis one
// decrement and one increment action (moves leaving the schema box are
// illegal), plus a final "stay" action.  Each action costs one resource and
// the episode ends when resources hit zero.
class GridMdp : public AgencyMdp {
public:
    GridMdp(DecisionFnPtr df, std::vector<double> start, int default_resources,
            double step = 1.0, std::string name = "grid",
            std::vector<double> sample_lo = {}, std::vector<double> sample_hi = {});

    static std::shared_ptr<GridMdp> for_preset(const std::string& preset_name,
                                               int default_resources);

    const DecisionFunction& decision_fn() const override { return *df_; }
    const std::vector<std::string>& action_labels() const override { return labels_; }
    std::vector<ActionId> legal_actions_impl(const AgencyState& s) const override;
    std::vector<TransitionOutcome> outcomes_impl(const AgencyState& s,
                                                 const ActionId& a) const override;
    AgencyState sample_initial_state(Rng& rng) const override;
    std::string name() const override { return name_; }

    AgencyState make_state(std::vector<double> coords, int resources) const;
    AgencyState start_state(int resources) const;
    int stay_index() const { return int(labels_.size()) - 1; }
    int dec_index(int axis) const { return 2 * axis; }
    int inc_index(int axis) const { return 2 * axis + 1; }

private:
    DecisionFnPtr df_;
    SchemaPtr schema_;
    std::vector<double> start_;
    int default_resources_;
    double step_;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<double> sample_lo_, sample_hi_;
};

}  // namespace agency
