#include "bialg/automata.hpp"

#include <algorithm>
#include <sstream>

namespace bialg {

namespace {

int find_label(const std::vector<std::string>& v, const std::string& s, const char* what) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == s) return static_cast<int>(i);
    fail("UnknownLabel", std::string("no ") + what + " labeled '" + s + "'");
}

void check_table(size_t rows, size_t cols, const std::vector<int>& t, int range,
                 const char* what) {
    if (t.size() != rows * cols) fail("SchemaError", std::string(what) + " has wrong shape");
    for (int v : t)
        if (v < 0 || v >= range) fail("IndexOutOfRange", std::string(what) + " entry");
}

} // namespace

int SemiAutomaton::state_index(const std::string& s) const {
    return find_label(states, s, "state");
}
int SemiAutomaton::input_index(const std::string& s) const {
    return find_label(inputs, s, "input");
}

SemiAutomaton make_semiautomaton(std::string name, std::vector<std::string> states,
                                 std::vector<std::string> inputs, std::vector<int> delta) {
    if (states.empty() || inputs.empty()) fail("SchemaError", "empty state or input set");
    check_table(states.size(), inputs.size(), delta, static_cast<int>(states.size()),
                "delta");
    return {std::move(name), std::move(states), std::move(inputs), std::move(delta)};
}

Automaton make_automaton(SemiAutomaton base, std::vector<std::string> outputs,
                         std::vector<int> lambda) {
    check_table(base.states.size(), base.inputs.size(), lambda,
                static_cast<int>(outputs.size()), "lambda");
    return {std::move(base), std::move(outputs), std::move(lambda)};
}

BiSemiAutomaton make_bisemiautomaton(std::string name, std::vector<std::string> states,
                                     std::vector<std::string> inputs1, std::vector<int> delta1,
                                     std::vector<std::string> inputs2,
                                     std::vector<int> delta2) {
    auto subset = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        for (const auto& x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        return true;
    };
    // the alphabets must form a biset or the machine degenerates
    if (subset(inputs1, inputs2) || subset(inputs2, inputs1))
        fail("NotABiset", "input alphabets must be incomparable");
    BiSemiAutomaton bsa;
    bsa.name = std::move(name);
    bsa.states = states;
    bsa.channels.push_back(
        make_semiautomaton("ch1", states, std::move(inputs1), std::move(delta1)));
    bsa.channels.push_back(
        make_semiautomaton("ch2", std::move(states), std::move(inputs2), std::move(delta2)));
    return bsa;
}

std::vector<int> run(const SemiAutomaton& sa, int z0, const std::vector<std::string>& word) {
    if (z0 < 0 || z0 >= sa.nstates()) fail("IndexOutOfRange", "start state");
    std::vector<int> trace{z0};
    for (const auto& s : word) trace.push_back(sa.next(trace.back(), sa.input_index(s)));
    return trace;
}

RunOutput run_auto(const Automaton& a, int z0, const std::vector<std::string>& word) {
    RunOutput out;
    out.trace.push_back(z0);
    for (const auto& s : word) {
        int i = a.base.input_index(s);
        out.outputs.push_back(a.out(out.trace.back(), i));
        out.trace.push_back(a.base.next(out.trace.back(), i));
    }
    return out;
}

std::vector<int> run_bi(const BiSemiAutomaton& bsa, int z0,
                        const std::vector<TaggedSymbol>& word) {
    std::vector<int> trace{z0};
    for (const auto& [channel, symbol] : word) {
        if (channel < 0 || channel >= static_cast<int>(bsa.channels.size()))
            fail("IndexOutOfRange", "channel tag");
        const auto& ch = bsa.channels[channel];
        trace.push_back(ch.next(trace.back(), ch.input_index(symbol)));
    }
    return trace;
}

std::vector<SubMachine> sub_semiautomata(const SemiAutomaton& sa) {
    const int n = sa.nstates();
    if (n > 20) fail("CapExceeded", "state subset enumeration capped at 20 states");
    std::vector<SubMachine> out;
    // the full state set is included (trivially closed under every input)
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> states;
        std::vector<char> in(n, 0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                states.push_back(i);
                in[i] = 1;
            }
        // maximal input set under which the subset is closed
        std::vector<int> inputs;
        for (int a = 0; a < sa.ninputs(); ++a) {
            bool ok = true;
            for (int z : states)
                if (!in[sa.next(z, a)]) {
                    ok = false;
                    break;
                }
            if (ok) inputs.push_back(a);
        }
        if (inputs.empty()) continue;
        SubMachine sm;
        sm.states = std::move(states);
        sm.closed_under_all_inputs = static_cast<int>(inputs.size()) == sa.ninputs();
        sm.inputs = std::move(inputs);
        out.push_back(std::move(sm));
    }
    return out;
}

SemiAutomaton restrict_machine(const SemiAutomaton& sa, const std::vector<int>& states,
                               const std::vector<int>& inputs) {
    std::vector<int> pos(sa.nstates(), -1);
    for (size_t i = 0; i < states.size(); ++i) pos[states[i]] = static_cast<int>(i);
    std::vector<std::string> slabs, ilabs;
    for (int z : states) slabs.push_back(sa.states[z]);
    for (int a : inputs) ilabs.push_back(sa.inputs[a]);
    std::vector<int> delta;
    for (int z : states)
        for (int a : inputs) {
            int t = sa.next(z, a);
            if (pos[t] < 0) fail("NotClosed", "restriction leaks outside the state subset");
            delta.push_back(pos[t]);
        }
    return make_semiautomaton(sa.name + "-sub", std::move(slabs), std::move(ilabs),
                              std::move(delta));
}

std::vector<SSubMachine> s_semigroup_subautomata(const Magma& state_semigroup,
                                                 const SemiAutomaton& sa) {
    if (state_semigroup.labels() != sa.states)
        fail("SchemaError", "state magma must label the machine states");
    std::vector<SSubMachine> out;
    for (const auto& sm : sub_semiautomata(sa)) {
        if (!sm.closed_under_all_inputs) continue;
        if (static_cast<int>(sm.states.size()) == sa.nstates()) continue; // proper only
        // the state subset must also be closed under the state operation
        std::vector<char> in(state_semigroup.size(), 0);
        for (int z : sm.states) in[z] = 1;
        bool closed = true;
        for (int a : sm.states) {
            for (int b : sm.states)
                if (!in[state_semigroup.op(a, b)]) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (!closed) continue;
        auto sub = state_semigroup.restrict_to(sm.states, "sub");
        auto r = classify(sub);
        SSubMachine s;
        s.states = sm.states;
        s.group = is_group(r);
        if (!s.group) {
            // a group hiding properly inside the subset
            auto subs = enumerate_subalgebras(sub, SubKind::subgroup);
            for (const auto& g : subs.sets)
                if (g.size() > 1 && g.size() < sm.states.size()) s.s_subsemigroup = true;
        }
        if (s.group || s.s_subsemigroup) out.push_back(std::move(s));
    }
    return out;
}

SyntacticReport syntactic_nearring(const Magma& state_group, const SemiAutomaton& sa,
                                   int cap) {
    if (state_group.labels() != sa.states)
        fail("SchemaError", "state magma must label the machine states");
    auto rc = classify(state_group);
    if (!is_group(rc)) fail("NotAdditive", "states must form a group under +");
    const int n = state_group.size();
    const int zero = *rc.identity;
    auto neg = [&](int a) {
        for (int b = 0; b < n; ++b)
            if (state_group.op(a, b) == zero && state_group.op(b, a) == zero) return b;
        fail("InternalError", "missing inverse in state group");
    };

    // additivity: find x0 with delta(q,x) = delta(q,x0) + delta(0,x) and
    // delta(q - q', x0) = delta(q, x0) - delta(q', x0)
    SyntacticReport rep;
    for (int x0 = 0; x0 < sa.ninputs() && rep.x0 < 0; ++x0) {
        bool ok = true;
        for (int q = 0; q < n && ok; ++q)
            for (int x = 0; x < sa.ninputs(); ++x)
                if (sa.next(q, x) !=
                    state_group.op(sa.next(q, x0), sa.next(zero, x))) {
                    ok = false;
                    break;
                }
        for (int q = 0; q < n && ok; ++q)
            for (int q2 = 0; q2 < n; ++q2) {
                int diff = state_group.op(q, neg(q2));
                if (sa.next(diff, x0) !=
                    state_group.op(sa.next(q, x0), neg(sa.next(q2, x0)))) {
                    ok = false;
                    break;
                }
            }
        if (ok) rep.x0 = x0;
    }
    if (rep.x0 < 0) fail("NotAdditive", "no input decomposes delta additively");

    // closure of the transition maps under pointwise + and composition
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    for (int a = 0; a < sa.ninputs(); ++a) {
        std::vector<int> f(n);
        for (int q = 0; q < n; ++q) f[q] = sa.next(q, a);
        if (seen.insert(f).second) work.push_back(f);
    }
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = 0; j < work.size(); ++j) {
            if (static_cast<int>(seen.size()) > cap)
                fail("CapExceeded", "syntactic closure exceeded the map cap");
            std::vector<int> sum(n), comp(n);
            for (int q = 0; q < n; ++q) {
                sum[q] = state_group.op(work[i][q], work[j][q]);
                comp[q] = work[i][work[j][q]];
            }
            if (seen.insert(sum).second) work.push_back(sum);
            if (seen.insert(comp).second) work.push_back(comp);
        }
    }
    rep.maps.assign(seen.begin(), seen.end());

    // right distributivity (f+g) . h = f.h + g.h on the generated set
    rep.right_distributive = true;
    auto ptsum = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> s(n);
        for (int q = 0; q < n; ++q) s[q] = state_group.op(f[q], g[q]);
        return s;
    };
    auto compose = [&](const std::vector<int>& f, const std::vector<int>& g) {
        std::vector<int> s(n);
        for (int q = 0; q < n; ++q) s[q] = f[g[q]];
        return s;
    };
    for (const auto& f : rep.maps) {
        for (const auto& g : rep.maps) {
            auto fg = ptsum(f, g);
            for (const auto& h : rep.maps)
                if (compose(fg, h) != ptsum(compose(f, h), compose(g, h))) {
                    rep.right_distributive = false;
                    return rep;
                }
        }
    }
    return rep;
}

SemiAutomaton direct_product(const SemiAutomaton& a, const SemiAutomaton& b) {
    std::vector<std::string> states, inputs;
    for (const auto& x : a.states)
        for (const auto& y : b.states) states.push_back("(" + x + "," + y + ")");
    for (const auto& x : a.inputs)
        for (const auto& y : b.inputs) inputs.push_back("(" + x + "," + y + ")");
    std::vector<int> delta;
    delta.reserve(states.size() * inputs.size());
    for (int za = 0; za < a.nstates(); ++za)
        for (int zb = 0; zb < b.nstates(); ++zb)
            for (int ia = 0; ia < a.ninputs(); ++ia)
                for (int ib = 0; ib < b.ninputs(); ++ib)
                    delta.push_back(a.next(za, ia) * b.nstates() + b.next(zb, ib));
    return make_semiautomaton(a.name + "x" + b.name, std::move(states), std::move(inputs),
                              std::move(delta));
}

namespace {

void dot_header(std::ostringstream& os, const std::string& name) {
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
}

} // namespace

std::string to_dot(const SemiAutomaton& sa) {
    std::ostringstream os;
    dot_header(os, sa.name);
    for (const auto& s : sa.states) os << "  \"" << s << "\";\n";
    for (int z = 0; z < sa.nstates(); ++z)
        for (int a = 0; a < sa.ninputs(); ++a)
            os << "  \"" << sa.states[z] << "\" -> \"" << sa.states[sa.next(z, a)]
               << "\" [label=\"" << sa.inputs[a] << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Automaton& a) {
    std::ostringstream os;
    dot_header(os, a.base.name);
    for (const auto& s : a.base.states) os << "  \"" << s << "\";\n";
    for (int z = 0; z < a.base.nstates(); ++z)
        for (int i = 0; i < a.base.ninputs(); ++i)
            os << "  \"" << a.base.states[z] << "\" -> \""
               << a.base.states[a.base.next(z, i)] << "\" [label=\"" << a.base.inputs[i]
               << "/" << a.outputs[a.out(z, i)] << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

std::vector<int> read_table(const nlohmann::json& rows) {
    std::vector<int> t;
    for (const auto& row : rows)
        for (const auto& v : row) t.push_back(v.get<int>());
    return t;
}

} // namespace

SemiAutomaton semiautomaton_from_json(const nlohmann::json& doc) {
    if (!doc.contains("states") || !doc.contains("inputs") || !doc.contains("delta"))
        fail("SchemaError", "machine document needs 'states', 'inputs', 'delta'");
    return make_semiautomaton(doc.value("name", "machine"),
                              doc["states"].get<std::vector<std::string>>(),
                              doc["inputs"].get<std::vector<std::string>>(),
                              read_table(doc["delta"]));
}

nlohmann::json semiautomaton_to_json(const SemiAutomaton& sa) {
    nlohmann::json doc;
    doc["name"] = sa.name;
    doc["states"] = sa.states;
    doc["inputs"] = sa.inputs;
    nlohmann::json rows = nlohmann::json::array();
    for (int z = 0; z < sa.nstates(); ++z) {
        nlohmann::json row = nlohmann::json::array();
        for (int a = 0; a < sa.ninputs(); ++a) row.push_back(sa.next(z, a));
        rows.push_back(row);
    }
    doc["delta"] = rows;
    return doc;
}

Automaton automaton_from_json(const nlohmann::json& doc) {
    auto base = semiautomaton_from_json(doc);
    if (!doc.contains("outputs") || !doc.contains("lambda"))
        fail("SchemaError", "automaton document needs 'outputs' and 'lambda'");
    return make_automaton(std::move(base), doc["outputs"].get<std::vector<std::string>>(),
                          read_table(doc["lambda"]));
}

nlohmann::json automaton_to_json(const Automaton& a) {
    auto doc = semiautomaton_to_json(a.base);
    doc["outputs"] = a.outputs;
    nlohmann::json rows = nlohmann::json::array();
    for (int z = 0; z < a.base.nstates(); ++z) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i < a.base.ninputs(); ++i) row.push_back(a.out(z, i));
        rows.push_back(row);
    }
    doc["lambda"] = rows;
    return doc;
}

BiSemiAutomaton bisemiautomaton_from_json(const nlohmann::json& doc) {
    if (!doc.contains("states") || !doc.contains("components"))
        fail("SchemaError", "bi-machine document needs 'states' and 'components'");
    const auto& comps = doc["components"];
    if (comps.size() != 2) fail("SchemaError", "bi-machine needs two components");
    return make_bisemiautomaton(doc.value("name", "bimachine"),
                                doc["states"].get<std::vector<std::string>>(),
                                comps[0]["inputs"].get<std::vector<std::string>>(),
                                read_table(comps[0]["delta"]),
                                comps[1]["inputs"].get<std::vector<std::string>>(),
                                read_table(comps[1]["delta"]));
}

} // namespace bialg
