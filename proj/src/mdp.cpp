#include "agency/mdp.hpp"

#include <cmath>

#include "agency/errors.hpp"

namespace agency {

double reward(const AgencyMdp& mdp, const AgencyState& s) {
    if (!mdp.is_terminal(s)) return 0.0;
    return evaluate(mdp.decision_fn(), s.features);
}

std::vector<ActionId> legal_actions(const AgencyMdp& mdp, const AgencyState& s) {
    if (mdp.is_terminal(s))
        throw ContractError("legal_actions called on a terminal state of " + mdp.name());
    std::vector<ActionId> acts = mdp.legal_actions_impl(s);
    if (acts.empty())
        throw ContractError("domain " + mdp.name() + " produced a nonterminal state with no "
                            "legal actions");
    for (std::size_t i = 1; i < acts.size(); ++i)
        if (acts[i - 1].index >= acts[i].index)
            throw ContractError("domain " + mdp.name() + " returned actions out of index order");
    return acts;
}

bool is_legal(const AgencyMdp& mdp, const AgencyState& s, const ActionId& a) {
    for (const ActionId& b : mdp.legal_actions_impl(s))
        if (b.index == a.index) return true;
    return false;
}

std::vector<TransitionOutcome> enumerate_outcomes(const AgencyMdp& mdp, const AgencyState& s,
                                                  const ActionId& a) {
    if (!is_legal(mdp, s, a))
        throw ContractError("illegal action '" + a.label + "' (index " +
                            std::to_string(a.index) + ") at a state of " + mdp.name() +
                            " with resources=" + std::to_string(s.resources));
    std::vector<TransitionOutcome> outs = mdp.outcomes_impl(s, a);
    if (outs.empty()) throw ContractError("transition produced no outcomes");
    double total = 0.0;
    for (const auto& o : outs) {
        if (!(o.probability > 0.0) || o.probability > 1.0)
            throw ContractError("transition outcome probability out of (0,1]");
        if (o.state.resources > s.resources)
            throw ContractError("transition increased resources");
        total += o.probability;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ContractError("transition outcome probabilities sum to " + std::to_string(total));
    return outs;
}

double one_step_value(const AgencyMdp& mdp, const AgencyState& s, const ActionId& a) {
    double v = 0.0;
    for (const auto& o : enumerate_outcomes(mdp, s, a))
        v += o.probability * evaluate(mdp.decision_fn(), o.state.features);
    return v;
}

std::vector<std::int64_t> canonical_key(const AgencyMdp& mdp, const AgencyState& s) {
    std::vector<std::int64_t> key;
    key.reserve(s.features.size() + 1 + s.extras.size());
    for (double v : s.features.values())
        key.push_back(static_cast<std::int64_t>(std::llround(v * 1e9)));
    key.push_back(s.resources);
    for (double v : s.extras)
        key.push_back(static_cast<std::int64_t>(std::llround(v * 1e9)));
    (void)mdp;
    return key;
}

std::size_t StateKeyHash::operator()(const std::vector<std::int64_t>& k) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t v : k) {
        std::uint64_t u = static_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return static_cast<std::size_t>(h);
}

}  // namespace agency
