#include "agency/rollout.hpp"

#include <cmath>

#include "agency/errors.hpp"

namespace agency {

Trajectory rollout(const AgencyMdp& mdp, const AdvicePolicy& policy, const AgencyState& s0,
                   std::uint64_t seed) {
    Rng rng(seed);
    Trajectory traj;
    traj.states.push_back(s0);
    int step = 0;
    while (!mdp.is_terminal(traj.states.back())) {
        const AgencyState& s = traj.states.back();
        ActionId a = policy.act(mdp, s, rng);
        if (!is_legal(mdp, s, a))
            throw ContractError("policy '" + policy.name() + "' returned illegal action '" +
                                a.label + "' at step " + std::to_string(step));
        std::vector<TransitionOutcome> outs = enumerate_outcomes(mdp, s, a);
        std::size_t pick = 0;
        if (outs.size() > 1) {
            double u = rng.real01();
            double acc = 0.0;
            for (std::size_t i = 0; i < outs.size(); ++i) {
                acc += outs[i].probability;
                if (u < acc) {
                    pick = i;
                    break;
                }
                pick = i;  // numerical slack: the last outcome absorbs the tail
            }
        }
        traj.actions.push_back(a);
        traj.states.push_back(outs[pick].state);
        ++step;
    }
    traj.final_decision = evaluate(mdp.decision_fn(), traj.states.back().features);
    return traj;
}

PolicyValueEstimate estimate_policy_value(const AgencyMdp& mdp, const AdvicePolicy& policy,
                                          const AgencyState& s0, int n_samples,
                                          std::uint64_t seed, bool keep_trajectories) {
    if (n_samples < 1) throw ContractError("estimate_policy_value: n_samples must be >= 1");
    PolicyValueEstimate est;
    est.n_requested = n_samples;
    int n_run = (mdp.deterministic() && policy.deterministic()) ? 1 : n_samples;
    est.n_evaluated = n_run;
    for (int i = 0; i < n_run; ++i) {
        Trajectory t = rollout(mdp, policy, s0, derive_seed(seed, "rollout", std::uint64_t(i)));
        est.finals.push_back(t.final_decision);
        if (keep_trajectories) est.trajectories.push_back(std::move(t));
    }
    double sum = 0.0;
    for (double v : est.finals) sum += v;
    est.mean = sum / double(n_run);
    if (n_run > 1) {
        double ss = 0.0;
        for (double v : est.finals) ss += (v - est.mean) * (v - est.mean);
        est.stderr_ = std::sqrt(ss / double(n_run - 1) / double(n_run));
    }
    return est;
}

}  // namespace agency
