#include "agency/policy.hpp"

#include "agency/errors.hpp"

namespace agency {

ActionId greedy_action(const AgencyMdp& mdp, const AgencyState& s) {
    ActionId best;
    double best_v = 0.0;
    for (const ActionId& a : legal_actions(mdp, s)) {
        double v = one_step_value(mdp, s, a);
        if (best.index < 0 || v > best_v) {
            best = a;
            best_v = v;
        }
    }
    return best;
}

ActionId random_action(const AgencyMdp& mdp, const AgencyState& s, Rng& rng) {
    std::vector<ActionId> acts = legal_actions(mdp, s);
    return acts[rng.below(acts.size())];
}

ActionId FixedPolicy::act(const AgencyMdp& mdp, const AgencyState& s, Rng&) const {
    for (int idx : preference_) {
        ActionId a = mdp.action(idx);
        if (is_legal(mdp, s, a)) return a;
    }
    throw ContractError("fixed policy '" + name_ +
                        "': no preferred action is legal at the current state");
}

}  // namespace agency
