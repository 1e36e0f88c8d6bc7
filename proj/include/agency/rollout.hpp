#pragma once

#include "agency/policy.hpp"

namespace agency {

// Rolls the policy out to a terminal state; stochastic outcomes are sampled
// from the seeded stream, so equal seeds reproduce the trajectory bitwise.
Trajectory rollout(const AgencyMdp& mdp, const AdvicePolicy& policy, const AgencyState& s0,
                   std::uint64_t seed);

struct PolicyValueEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    int n_requested = 0;
    int n_evaluated = 0;
    std::vector<double> finals;
    std::vector<Trajectory> trajectories;  // filled only when requested
};

// Monte-Carlo estimate of E[D(I_x(s_f))] under the policy's rollout
// distribution.  When both the MDP and the policy are deterministic the
// estimate collapses to a single rollout with standard error 0.
PolicyValueEstimate estimate_policy_value(const AgencyMdp& mdp, const AdvicePolicy& policy,
                                          const AgencyState& s0, int n_samples,
                                          std::uint64_t seed, bool keep_trajectories = false);

}  // namespace agency
