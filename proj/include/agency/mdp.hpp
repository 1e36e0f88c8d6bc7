#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agency/decision_fn.hpp"
#include "agency/rng.hpp"
#include "agency/schema.hpp"

namespace agency {

// Full subject state: decision features I_x(s), the remaining action budget,
// and a per-domain vector of named extras (cash, flags, card slots...).
struct AgencyState {
    FeatureVector features;
    int resources = 0;
    std::vector<double> extras;
};

struct ActionId {
    int index = -1;
    std::string label;
    bool operator==(const ActionId& o) const { return index == o.index; }
};

struct TransitionOutcome {
    AgencyState state;
    double probability = 1.0;
};

struct Trajectory {
    std::vector<AgencyState> states;   // s0..sf
    std::vector<ActionId> actions;     // a0..a{f-1}
    double final_decision = 0.0;       // D(I_x(sf))
};

// Immutable MDP definition.  Every nonterminal state has at least one legal
// action, and trajectories are finite because resources strictly decrease
// (or a terminal flag is set by the domain).
class AgencyMdp {
public:
    virtual ~AgencyMdp() = default;

    virtual const DecisionFunction& decision_fn() const = 0;
    virtual const std::vector<std::string>& action_labels() const = 0;

    // Default terminal predicate: the resource budget ran out.
    virtual bool is_terminal(const AgencyState& s) const { return s.resources == 0; }

    // Raw per-domain hooks; use the checked free functions below.
    virtual std::vector<ActionId> legal_actions_impl(const AgencyState& s) const = 0;
    virtual std::vector<TransitionOutcome> outcomes_impl(const AgencyState& s,
                                                         const ActionId& a) const = 0;

    virtual AgencyState sample_initial_state(Rng& rng) const = 0;

    // Names for the extras slots, in canonical serialization order.
    virtual const std::vector<std::string>& extras_layout() const {
        static const std::vector<std::string> none;
        return none;
    }

    // True when every transition has exactly one outcome.
    virtual bool deterministic() const { return true; }

    virtual std::string name() const = 0;

    ActionId action(int index) const { return {index, action_labels().at(std::size_t(index))}; }
};

// Eq.-style sparse reward: the decision at terminal states, exactly 0 before.
double reward(const AgencyMdp& mdp, const AgencyState& s);

// Checked: throws ContractError on terminal states, guarantees a nonempty
// index-ordered result.
std::vector<ActionId> legal_actions(const AgencyMdp& mdp, const AgencyState& s);

// Checked: validates legality and that outcome probabilities sum to 1+-1e-9.
std::vector<TransitionOutcome> enumerate_outcomes(const AgencyMdp& mdp, const AgencyState& s,
                                                  const ActionId& a);

bool is_legal(const AgencyMdp& mdp, const AgencyState& s, const ActionId& a);

// Expected decision one transition ahead: sum_outcomes p * D(I_x(s')).
double one_step_value(const AgencyMdp& mdp, const AgencyState& s, const ActionId& a);

// Canonical state key for memoization: features rounded to 1e-9, then
// resources, then extras in layout order.
std::vector<std::int64_t> canonical_key(const AgencyMdp& mdp, const AgencyState& s);

struct StateKeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& k) const;
};

}  // namespace agency
