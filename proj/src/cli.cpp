#include "bialg/cli.hpp"

#include "bialg/automata.hpp"
#include "bialg/bistruct.hpp"
#include "bialg/bivect.hpp"
#include "bialg/constructors.hpp"
#include "bialg/convolution.hpp"
#include "bialg/designs.hpp"
#include "bialg/magma.hpp"
#include "bialg/ringlike.hpp"
#include "bialg/smarandache.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bialg {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("InputError", "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail("InputError", std::string("bad JSON in '") + path + "': " + e.what());
    }
    return doc;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct Options {
    bool json = false;
    bool dot = false;
    std::string out_path;
    long long seed = 12345;
    long long cap = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.json, "emit a JSON report");
    cmd->add_flag("--dot", opt.dot, "emit DOT where applicable");
    cmd->add_option("--out", opt.out_path, "write the report to a file");
    cmd->add_option("--seed", opt.seed, "seed for randomized property subcommands");
    cmd->add_option("--cap", opt.cap, "override enumeration caps");
}

int finish(const Options& opt, const std::string& rendered, std::string& out, int code) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) fail("InputError", "cannot write '" + opt.out_path + "'");
        f << rendered;
    }
    out += rendered;
    return code;
}

std::string render_magma_text(const Magma& m) {
    std::ostringstream os;
    os << m.name() << " (order " << m.size() << ")\n";
    size_t w = 1;
    for (const auto& l : m.labels()) w = std::max(w, l.size());
    auto pad = [&](const std::string& s) {
        return s + std::string(w + 1 - s.size(), ' ');
    };
    os << pad("*");
    for (const auto& l : m.labels()) os << pad(l);
    os << "\n";
    for (int i = 0; i < m.size(); ++i) {
        os << pad(m.label(i));
        for (int j = 0; j < m.size(); ++j) os << pad(m.label(m.op(i, j)));
        os << "\n";
    }
    return os.str();
}

BiStructure load_bistructure(const std::string& path) {
    return bistructure_from_json(load_json(path));
}

int cmd_gen(const std::vector<std::string>& params, const std::string& family,
            const std::string& tier, const Options& opt, std::string& out) {
    std::vector<int> nums;
    for (const auto& p : params) nums.push_back(std::stoi(p));
    auto m = build_family(family, nums, tier);
    std::string rendered =
        opt.json ? magma_to_json(m).dump(2) + "\n" : render_magma_text(m);
    return finish(opt, rendered, out, 0);
}

int cmd_classify(const std::string& path, const Options& opt, std::string& out) {
    auto m = magma_from_json(load_json(path));
    auto r = classify(m);
    if (opt.json) return finish(opt, classification_to_json(m, r).dump(2) + "\n", out, 0);
    std::ostringstream os;
    os << m.name() << ": " << to_string(r.kind);
    os << (r.commutative ? ", commutative" : ", non-commutative");
    os << (r.associative ? ", associative" : ", non-associative");
    if (r.identity) os << ", identity " << m.label(*r.identity);
    os << "\n";
    return finish(opt, os.str(), out, 0);
}

int cmd_identity(const std::string& path, const std::string& kind, const Options& opt,
                 std::string& out) {
    auto m = magma_from_json(load_json(path));
    auto k = identity_kind_from_string(kind);
    if (!k) fail("UsageError", "unknown identity '" + kind + "'");
    auto chk = check_identity(m, *k);
    nlohmann::json j;
    j["structure"] = m.name();
    j["identity"] = kind;
    j["holds"] = chk.holds;
    if (chk.witness) {
        nlohmann::json w = nlohmann::json::array();
        for (int i : *chk.witness) w.push_back(m.label(i));
        j["witness"] = w;
    }
    std::string rendered = opt.json
                               ? j.dump(2) + "\n"
                               : m.name() + ": " + kind +
                                     (chk.holds ? " holds\n" : " refuted\n");
    return finish(opt, rendered, out, chk.holds ? 0 : 1);
}

int cmd_bistruct(const std::string& verb, const std::string& path, const Options& opt,
                 std::string& out) {
    auto bs = load_bistructure(path);
    nlohmann::json j;
    j["order"] = bs.order();
    j["kind"] = to_string(classify_bi(bs));
    int code = 0;
    if (verb == "lagrange") {
        auto rep = lagrange_report(bs);
        j["verdict"] = to_string(rep.verdict);
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : rep.entries) {
            nlohmann::json je;
            je["order"] = e.order;
            je["divides"] = e.divides;
            entries.push_back(je);
        }
        j["entries"] = entries;
        if (rep.verdict == LagrangeVerdict::non_lagrange) code = 1;
    } else if (verb == "cauchy") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : cauchy_elements(bs)) {
            nlohmann::json jr;
            jr["element"] = bs.part(r.component).label(r.element);
            jr["component"] = r.component;
            jr["order"] = r.order;
            jr["divides"] = r.divides_union_order;
            rows.push_back(jr);
        }
        j["elements"] = rows;
    } else if (verb != "classify") {
        fail("UsageError", "unknown bistruct verb '" + verb + "'");
    }
    std::string rendered = opt.json ? j.dump(2) + "\n"
                                    : "order " + std::to_string(bs.order()) + ", " +
                                          std::string(j["kind"]) + "\n";
    return finish(opt, rendered, out, code);
}

int cmd_smar(const std::string& verb, const std::string& path, const std::string& target,
             const Options& opt, std::string& out) {
    nlohmann::json j;
    int code = 0;
    if (verb == "detect") {
        auto m = magma_from_json(load_json(path));
        auto t = starget_from_string(target);
        if (!t) fail("UsageError", "unknown target '" + target + "'");
        auto d = s_detect(m, *t);
        j = sdetection_to_json(m, d);
        code = d.smarandache ? 0 : 1;
    } else if (verb == "bi") {
        auto bs = load_bistructure(path);
        auto d = s_bi_detect(bs);
        j["structure"] = "bistructure";
        j["base"] = to_string(d.base);
        j["s_kind"] = d.smarandache ? d.s_kind : "not-smarandache";
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : d.witnesses) {
            nlohmann::json lw = nlohmann::json::array();
            for (const auto& l : w.labels) lw.push_back(l);
            ws.push_back(lw);
        }
        j["witnesses"] = ws;
        code = d.smarandache ? 0 : 1;
    } else if (verb == "cauchy") {
        auto bs = load_bistructure(path);
        auto rep = s_cauchy(bs);
        auto rows = [&](const std::vector<SCauchyRow>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& r : v) {
                nlohmann::json jr;
                jr["element"] = bs.part(r.component).label(r.element);
                jr["order"] = r.order;
                a.push_back(jr);
            }
            return a;
        };
        j["s_cauchy"] = rows(rep.s_cauchy);
        j["s_special_cauchy"] = rows(rep.s_special_cauchy);
    } else if (verb == "grade") {
        auto bs = load_bistructure(path);
        auto p = sproperty_from_string(target);
        if (!p) fail("UsageError", "unknown property '" + target + "'");
        auto rep = s_grade(bs, *p);
        j["property"] = rep.property;
        j["strong"] = rep.strong;
        j["weak"] = rep.weak;
        if (*p == SProperty::lagrange) {
            j["s_lagrange"] = rep.s_lagrange;
            j["s_weakly_lagrange"] = rep.s_weakly_lagrange;
            j["s_non_lagrange"] = rep.s_non_lagrange;
        }
        if (rep.hyper) j["hyper_order"] = rep.hyper->order;
        if (*p == SProperty::simple) j["simple"] = rep.simple;
    } else {
        fail("UsageError", "unknown smar verb '" + verb + "'");
    }
    std::string rendered = opt.json ? j.dump(2) + "\n" : j.dump(2) + "\n";
    return finish(opt, rendered, out, code);
}

int cmd_ring(const std::string& verb, const std::string& path, const Options& opt,
             std::string& out) {
    auto rt = ringtable_from_json(load_json(path));
    nlohmann::json j;
    int code = 0;
    if (verb == "classify") {
        j = ringclass_to_json(rt, classify_ringlike(rt));
    } else if (verb == "sring") {
        auto det = s_ring_detect(rt);
        j["structure"] = rt.name();
        j["s_ring_1"] = det.s_ring_1;
        j["s_ring_2"] = det.s_ring_2;
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : det.witnesses) {
            nlohmann::json lw;
            nlohmann::json elems = nlohmann::json::array();
            for (int e : w.elems) elems.push_back(rt.label(e));
            lw["elements"] = elems;
            lw["field"] = w.field;
            if (w.unit) lw["unit"] = rt.label(*w.unit);
            ws.push_back(lw);
        }
        j["witnesses"] = ws;
        code = det.witnesses.empty() ? 1 : 0;
    } else if (verb == "selems") {
        auto se = s_elements(rt);
        j["s_units"] = se.s_units.size();
        j["s_zero_divisors"] = se.s_zero_divisors.size();
        j["s_idempotents"] = se.s_idempotents.size();
        j["s_anti_zero_divisors"] = se.s_anti_zero_divisors.size();
    } else if (verb == "ifp") {
        auto rep = ifp_check(rt);
        j["holds"] = rep.holds;
        if (rep.witness) {
            auto [a, n, b] = *rep.witness;
            j["witness"] = {rt.label(a), rt.label(n), rt.label(b)};
        }
        code = rep.holds ? 0 : 1;
    } else {
        fail("UsageError", "unknown ring verb '" + verb + "'");
    }
    return finish(opt, j.dump(2) + "\n", out, code);
}

int cmd_conv(const std::string& verb, const std::string& path, long long modulus,
             const std::string& element, const Options& opt, std::string& out) {
    auto basis = magma_from_json(load_json(path));
    ConvAlgebra alg{basis, modulus};
    nlohmann::json j;
    int code = 0;
    if (verb == "zero-divisor") {
        auto g = basis.index_of(element);
        auto [a, b] = zero_divisor_witness(alg, g);
        j["alpha"] = conv_to_json(alg, a);
        j["beta"] = conv_to_json(alg, b);
        j["product_zero"] = true;
    } else if (verb == "envelope") {
        int p = static_cast<int>(modulus);
        auto env = mod_p_envelope(p, basis, opt.cap > 0 ? opt.cap : 20000);
        j["p"] = p;
        j["size"] = env.elements.size();
        j["closure"] = to_string(env.closure);
    } else {
        fail("UsageError", "unknown conv verb '" + verb + "'");
    }
    return finish(opt, j.dump(2) + "\n", out, code);
}

int cmd_design(const std::string& verb, const std::string& path, const Options& opt,
               std::string& out) {
    auto rt = ringtable_from_json(load_json(path));
    nlohmann::json j;
    int code = 0;
    if (verb == "build") {
        auto rep = planar_check(rt);
        if (!rep.planar) {
            j["planar"] = false;
            if (rep.witness) {
                auto [a, b, c] = *rep.witness;
                j["witness"] = {rt.label(a), rt.label(b), rt.label(c)};
            }
            j["classes"] = rep.equivalence_classes.size();
            code = 1;
        } else {
            auto d = bibd_from_planar(rt);
            j = design_to_json(d);
            j["planar"] = true;
            nlohmann::json classes = nlohmann::json::array();
            for (const auto& cls : rep.equivalence_classes) {
                nlohmann::json c = nlohmann::json::array();
                for (int x : cls) c.push_back(rt.label(x));
                classes.push_back(c);
            }
            j["equivalence_classes"] = classes;
        }
    } else if (verb == "planar") {
        auto rep = planar_check(rt);
        j["planar"] = rep.planar;
        code = rep.planar ? 0 : 1;
    } else {
        fail("UsageError", "unknown design verb '" + verb + "'");
    }
    return finish(opt, j.dump(2) + "\n", out, code);
}

int cmd_automaton(const std::string& verb, const std::string& path,
                  const std::string& state, const std::string& word, const Options& opt,
                  std::string& out) {
    auto doc = load_json(path);
    nlohmann::json j;
    if (verb == "dot") {
        std::string rendered = doc.contains("lambda")
                                   ? to_dot(automaton_from_json(doc))
                                   : to_dot(semiautomaton_from_json(doc));
        return finish(opt, rendered, out, 0);
    }
    if (verb == "run") {
        auto letters = split_csv(word);
        if (doc.contains("lambda")) {
            auto a = automaton_from_json(doc);
            auto ro = run_auto(a, a.base.state_index(state), letters);
            nlohmann::json trace = nlohmann::json::array();
            for (int z : ro.trace) trace.push_back(a.base.states[z]);
            nlohmann::json outs = nlohmann::json::array();
            for (int o : ro.outputs) outs.push_back(a.outputs[o]);
            j["trace"] = trace;
            j["outputs"] = outs;
        } else {
            auto sa = semiautomaton_from_json(doc);
            auto trace = run(sa, sa.state_index(state), letters);
            nlohmann::json t = nlohmann::json::array();
            for (int z : trace) t.push_back(sa.states[z]);
            j["trace"] = t;
        }
        return finish(opt, j.dump(2) + "\n", out, 0);
    }
    if (verb == "subs") {
        auto sa = semiautomaton_from_json(doc);
        nlohmann::json subs = nlohmann::json::array();
        for (const auto& sm : sub_semiautomata(sa)) {
            nlohmann::json e;
            nlohmann::json st = nlohmann::json::array();
            for (int z : sm.states) st.push_back(sa.states[z]);
            nlohmann::json in = nlohmann::json::array();
            for (int a : sm.inputs) in.push_back(sa.inputs[a]);
            e["states"] = st;
            e["inputs"] = in;
            e["closed_under_all_inputs"] = sm.closed_under_all_inputs;
            subs.push_back(e);
        }
        j["sub_machines"] = subs;
        return finish(opt, j.dump(2) + "\n", out, 0);
    }
    fail("UsageError", "unknown automaton verb '" + verb + "'");
}

int cmd_bivect(const std::string& verb, int p, const std::string& dims_v,
               const std::string& dims_w, const std::string& first_json,
               const std::string& second_json, const Options& opt, std::string& out) {
    auto parse_dims = [](const std::string& s) {
        auto parts = split_csv(s);
        if (parts.size() != 2) fail("UsageError", "dims must look like m,n");
        return std::pair{std::stoi(parts[0]), std::stoi(parts[1])};
    };
    nlohmann::json j;
    if (verb == "matrix") {
        auto first = mat_from_json(p, nlohmann::json::parse(first_json));
        auto second = mat_from_json(p, nlohmann::json::parse(second_json));
        auto v = make_bivector_space(p, first.cols, second.cols);
        auto w = make_bivector_space(p, first.rows, second.rows);
        auto t = make_bilinear(v, w, first, second);
        j["matrix"] = mat_to_json(block_matrix(t));
        j["rows"] = first.rows + second.rows;
        j["cols"] = first.cols + second.cols;
        return finish(opt, j.dump(2) + "\n", out, 0);
    }
    auto [m, n] = parse_dims(dims_v);
    auto v = make_bivector_space(p, m, n);
    if (verb == "dim") {
        j["dim"] = dim(v);
    } else if (verb == "bihom") {
        auto [m1, n1] = parse_dims(dims_w);
        auto w = make_bivector_space(p, m1, n1);
        j["dim"] = bihom_dim(v, w);
        j["isomorphic"] = isomorphic(v, w);
        if (bihom_dim(v, w) <= 8) {
            auto chk = bihom_count_check(v, w);
            j["count"] = chk.counted;
            j["matches"] = chk.matches;
        }
    } else {
        fail("UsageError", "unknown bivect verb '" + verb + "'");
    }
    return finish(opt, j.dump(2) + "\n", out, 0);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::string& out) {
    CLI::App app{"finite bialgebraic structure toolkit"};
    app.require_subcommand(1);
    Options opt;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named family");
    std::string family, tier = "z***";
    std::vector<std::string> params;
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("--tier", tier, "groupoid tier (z, z*, z**, z***)");
    add_common(gen, opt);

    // classify / identity
    auto* classify_cmd = app.add_subcommand("classify", "classify a magma document");
    std::string path, kind;
    classify_cmd->add_option("file", path)->required();
    add_common(classify_cmd, opt);

    auto* identity_cmd = app.add_subcommand("identity", "check a named identity");
    identity_cmd->add_option("file", path)->required();
    identity_cmd->add_option("kind", kind)->required();
    add_common(identity_cmd, opt);

    // bistruct
    auto* bistruct_cmd = app.add_subcommand("bistruct", "analyze a union structure");
    std::string verb;
    bistruct_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"classify", "lagrange", "cauchy"}));
    bistruct_cmd->add_option("file", path)->required();
    add_common(bistruct_cmd, opt);

    // smar
    auto* smar_cmd = app.add_subcommand("smar", "Smarandache substructure detection");
    std::string target;
    smar_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"detect", "bi", "cauchy", "grade"}));
    smar_cmd->add_option("file", path)->required();
    smar_cmd->add_option("--target", target, "detection target or graded property");
    add_common(smar_cmd, opt);

    // ring
    auto* ring_cmd = app.add_subcommand("ring", "two-operation table analysis");
    ring_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"classify", "sring", "selems", "ifp"}));
    ring_cmd->add_option("file", path)->required();
    add_common(ring_cmd, opt);

    // conv
    auto* conv_cmd = app.add_subcommand("conv", "convolution algebra utilities");
    long long modulus = 0;
    std::string element;
    conv_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"zero-divisor", "envelope"}));
    conv_cmd->add_option("file", path)->required();
    conv_cmd->add_option("--mod", modulus, "coefficient modulus (prime for envelope)");
    conv_cmd->add_option("--element", element, "basis element label");
    add_common(conv_cmd, opt);

    // design
    auto* design_cmd = app.add_subcommand("design", "planar near-ring block designs");
    design_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"build", "planar"}));
    design_cmd->add_option("file", path)->required();
    add_common(design_cmd, opt);

    // automaton
    auto* auto_cmd = app.add_subcommand("automaton", "finite machine utilities");
    std::string state = "0", word;
    auto_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"run", "dot", "subs"}));
    auto_cmd->add_option("file", path)->required();
    auto_cmd->add_option("--state", state, "start state label");
    auto_cmd->add_option("--word", word, "comma-separated input word");
    add_common(auto_cmd, opt);

    // bivect
    auto* bivect_cmd = app.add_subcommand("bivect", "bivector space calculations");
    int prime = 2;
    std::string dims_v = "1,1", dims_w = "1,1";
    std::string first_json = "[[1]]", second_json = "[[1]]";
    bivect_cmd->add_option("verb", verb)->required()
        ->check(CLI::IsMember({"dim", "bihom", "matrix"}));
    bivect_cmd->add_option("--p", prime, "prime field order");
    bivect_cmd->add_option("--v", dims_v, "first space dims m,n");
    bivect_cmd->add_option("--w", dims_w, "second space dims m,n");
    bivect_cmd->add_option("--first", first_json, "first block as a JSON array");
    bivect_cmd->add_option("--second", second_json, "second block as a JSON array");
    add_common(bivect_cmd, opt);

    // batch
    auto* batch_cmd = app.add_subcommand("batch", "run a command manifest");
    batch_cmd->add_option("file", path)->required();
    add_common(batch_cmd, opt);

    std::vector<const char*> argv;
    argv.push_back("bialg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        out += os.str();
        return 0;
    } catch (const CLI::ParseError& e) {
        out += std::string("usage error: ") + e.what() + "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(params, family, tier, opt, out);
        if (classify_cmd->parsed()) return cmd_classify(path, opt, out);
        if (identity_cmd->parsed()) return cmd_identity(path, kind, opt, out);
        if (bistruct_cmd->parsed()) return cmd_bistruct(verb, path, opt, out);
        if (smar_cmd->parsed()) return cmd_smar(verb, path, target, opt, out);
        if (ring_cmd->parsed()) return cmd_ring(verb, path, opt, out);
        if (conv_cmd->parsed()) return cmd_conv(verb, path, modulus, element, opt, out);
        if (design_cmd->parsed()) return cmd_design(verb, path, opt, out);
        if (auto_cmd->parsed()) return cmd_automaton(verb, path, state, word, opt, out);
        if (bivect_cmd->parsed())
            return cmd_bivect(verb, prime, dims_v, dims_w, first_json, second_json,
                              opt, out);
        if (batch_cmd->parsed()) return run_batch(path, out);
    } catch (const error& e) {
        out += std::string("error: ") + e.what() + "\n";
        return 2;
    } catch (const std::exception& e) {
        out += std::string("error: ") + e.what() + "\n";
        return 2;
    }
    out += "usage error: no subcommand\n";
    return 2;
}

int run_batch(const std::string& manifest_path, std::string& out) {
    auto doc = load_json(manifest_path);
    if (!doc.contains("commands") || !doc["commands"].is_array()) {
        out += "error: manifest needs a 'commands' array\n";
        return 2;
    }
    auto base = std::filesystem::path(manifest_path).parent_path();
    nlohmann::json results = nlohmann::json::array();
    int worst = 0;
    for (const auto& cmd : doc["commands"]) {
        std::vector<std::string> args;
        for (const auto& a : cmd) {
            std::string s = a.get<std::string>();
            // resolve fixture paths relative to the manifest
            if (s.size() > 5 && s.substr(s.size() - 5) == ".json" &&
                !std::filesystem::exists(s))
                s = (base / s).string();
            args.push_back(s);
        }
        std::string sub;
        int code = dispatch(args, sub);
        nlohmann::json r;
        r["args"] = cmd;
        r["exit"] = code;
        if (code != 0) r["report"] = sub;
        results.push_back(r);
        worst = std::max(worst, code);
    }
    nlohmann::json j;
    j["results"] = results;
    j["exit"] = worst;
    out += j.dump(2) + "\n";
    return worst;
}

} // namespace bialg
