#pragma once

#include <functional>
#include <memory>
#include <string>

#include "agency/mdp.hpp"

namespace agency {

// Deterministic-or-seeded map from nonterminal states to actions.  `rng` is
// the rollout's stream; policies that never draw from it must report
// deterministic() = true so value estimation can collapse to one rollout.
class AdvicePolicy {
public:
    virtual ~AdvicePolicy() = default;
    virtual ActionId act(const AgencyMdp& mdp, const AgencyState& s, Rng& rng) const = 0;
    virtual std::string name() const = 0;
    virtual bool deterministic() const = 0;
};

using PolicyPtr = std::shared_ptr<const AdvicePolicy>;

// One-step argmax of the expected decision (ties to the lowest action index).
ActionId greedy_action(const AgencyMdp& mdp, const AgencyState& s);

// Uniform draw over the legal actions.
ActionId random_action(const AgencyMdp& mdp, const AgencyState& s, Rng& rng);

class GreedyPolicy : public AdvicePolicy {
public:
    ActionId act(const AgencyMdp& mdp, const AgencyState& s, Rng&) const override {
        return greedy_action(mdp, s);
    }
    std::string name() const override { return "greedy"; }
    bool deterministic() const override { return true; }
};

class RandomPolicy : public AdvicePolicy {
public:
    ActionId act(const AgencyMdp& mdp, const AgencyState& s, Rng& rng) const override {
        return random_action(mdp, s, rng);
    }
    std::string name() const override { return "random"; }
    bool deterministic() const override { return false; }
};

// Wraps a domain rule as a policy: walks a fixed preference list of action
// indices and takes the first legal one.  A rollout-time error is raised if
// no preferred action (nor fallback) is legal.
class FixedPolicy : public AdvicePolicy {
public:
    FixedPolicy(std::string name, std::vector<int> preference_order)
        : name_(std::move(name)), preference_(std::move(preference_order)) {}

    ActionId act(const AgencyMdp& mdp, const AgencyState& s, Rng&) const override;
    std::string name() const override { return name_; }
    bool deterministic() const override { return true; }

private:
    std::string name_;
    std::vector<int> preference_;
};

}  // namespace agency
