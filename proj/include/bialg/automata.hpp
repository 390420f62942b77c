#pragma once

#include "bialg/magma.hpp"

namespace bialg {

/// Finite semi-automaton: a total next-state table delta over states x inputs.
struct SemiAutomaton {
    std::string name;
    std::vector<std::string> states;
    std::vector<std::string> inputs;
    std::vector<int> delta; // |states| x |inputs|, row-major

    int nstates() const { return static_cast<int>(states.size()); }
    int ninputs() const { return static_cast<int>(inputs.size()); }
    int next(int z, int a) const { return delta[static_cast<size_t>(z) * inputs.size() + a]; }
    int state_index(const std::string& s) const;
    int input_index(const std::string& s) const;
};

SemiAutomaton make_semiautomaton(std::string name, std::vector<std::string> states,
                                 std::vector<std::string> inputs, std::vector<int> delta);

/// Semi-automaton plus an output table lambda of the same shape.
struct Automaton {
    SemiAutomaton base;
    std::vector<std::string> outputs;
    std::vector<int> lambda; // |states| x |inputs|

    int out(int z, int a) const {
        return lambda[static_cast<size_t>(z) * base.inputs.size() + a];
    }
};

Automaton make_automaton(SemiAutomaton base, std::vector<std::string> outputs,
                         std::vector<int> lambda);

/// Two input channels over a shared state set; the alphabets must form a
/// biset (neither contained in the other).  A shared symbol may act
/// differently per channel.
struct BiSemiAutomaton {
    std::string name;
    std::vector<std::string> states;
    std::vector<SemiAutomaton> channels; // channel inputs/delta; states shared
};

BiSemiAutomaton make_bisemiautomaton(std::string name, std::vector<std::string> states,
                                     std::vector<std::string> inputs1, std::vector<int> delta1,
                                     std::vector<std::string> inputs2, std::vector<int> delta2);

/// One letter of a tagged word: which channel, which symbol.
struct TaggedSymbol {
    int channel;
    std::string symbol;
};

/// trace[0] = z0, trace[i+1] = delta(trace[i], word[i]); the empty word gives [z0].
std::vector<int> run(const SemiAutomaton& sa, int z0, const std::vector<std::string>& word);

struct RunOutput {
    std::vector<int> trace;
    std::vector<int> outputs;
};

RunOutput run_auto(const Automaton& a, int z0, const std::vector<std::string>& word);

std::vector<int> run_bi(const BiSemiAutomaton& bsa, int z0,
                        const std::vector<TaggedSymbol>& word);

/// A sub-machine: a state subset together with the maximal input subset that
/// keeps it closed.
struct SubMachine {
    std::vector<int> states;
    std::vector<int> inputs;
    bool closed_under_all_inputs = false;
};

/// All proper nonempty state subsets admitting a nonempty closed input set.
std::vector<SubMachine> sub_semiautomata(const SemiAutomaton& sa);

/// Restriction to the given subsets; errors if delta leaks outside.
SemiAutomaton restrict_machine(const SemiAutomaton& sa, const std::vector<int>& states,
                               const std::vector<int>& inputs);

/// Closed state subsets that also form a group (or contain one) inside the
/// state magma; the semigroup-machine variant of sub-machine discovery.
struct SSubMachine {
    std::vector<int> states;
    bool group = false;          // the subset itself is a group under the state op
    bool s_subsemigroup = false; // the subset properly contains a group
};

std::vector<SSubMachine> s_semigroup_subautomata(const Magma& state_semigroup,
                                                 const SemiAutomaton& sa);

/// Closure of the per-input transition maps inside the self-maps of the
/// state group, under pointwise addition and composition.
struct SyntacticReport {
    std::vector<std::vector<int>> maps; // each of length |G|
    bool right_distributive = false;
    int x0 = -1; // the input witnessing additivity
};

SyntacticReport syntactic_nearring(const Magma& state_group, const SemiAutomaton& sa,
                                   int cap = 5000);

/// Direct product on state and input pairs; the composition machinery beyond
/// this is out of scope.
SemiAutomaton direct_product(const SemiAutomaton& a, const SemiAutomaton& b);

std::string to_dot(const SemiAutomaton& sa);
std::string to_dot(const Automaton& a);

SemiAutomaton semiautomaton_from_json(const nlohmann::json& doc);
nlohmann::json semiautomaton_to_json(const SemiAutomaton& sa);
Automaton automaton_from_json(const nlohmann::json& doc);
nlohmann::json automaton_to_json(const Automaton& a);
BiSemiAutomaton bisemiautomaton_from_json(const nlohmann::json& doc);

} // namespace bialg
