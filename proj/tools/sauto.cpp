// sauto -- command-line workbench for complete letter-to-letter transducers,
// the word problem of the semigroups/monoids they generate, correspondence-
// instance reductions and bounded structural analysis.
//
// Exit codes: 0 affirmative/success, 1 negative answer or counterexample,
// 2 usage or input error.

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "sauto/analysis.hpp"
#include "sauto/serialization.hpp"

using nlohmann::json;
using namespace sauto;

namespace {

struct Output {
    bool as_json = false;
    std::optional<std::string> path;

    void emit(const json& doc, const std::string& human) const {
        std::string text = as_json ? doc.dump(2) + "\n" : human;
        if (path) {
            write_file(*path, text);
        } else {
            std::cout << text;
        }
    }
};

Transducer load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

AnyInstance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

PcpInstance require_pcp(AnyInstance instance) {
    if (!std::holds_alternative<PcpInstance>(instance))
        throw ParseError("this command needs a plain (unpadded) instance");
    return std::get<PcpInstance>(std::move(instance));
}

// Padded instances pass through; plain ones are padded with the given (or a
// fresh) symbol first.
EpcpInstance require_epcp(AnyInstance instance, const std::optional<std::string>& padding) {
    if (std::holds_alternative<EpcpInstance>(instance)) {
        if (padding && std::get<EpcpInstance>(instance).padding != *padding)
            throw ParseError("instance already carries a different padding symbol");
        return std::get<EpcpInstance>(std::move(instance));
    }
    const PcpInstance& plain = std::get<PcpInstance>(instance);
    std::string symbol = padding.value_or("");
    if (symbol.empty()) {
        std::vector<std::string> taken = plain.lambda;
        auto index = plain.index_symbols();
        taken.insert(taken.end(), index.begin(), index.end());
        symbol = fresh_name("e", taken);
    }
    return pad_instance(plain, symbol);
}

json seq_json(const Transducer& t, const StateSeq& p) {
    json arr = json::array();
    for (StateId s : p) arr.push_back(t.state_name(s));
    return arr;
}

json word_json(const Transducer& t, const Word& u) {
    json arr = json::array();
    for (LetterId a : u) arr.push_back(t.letter_name(a));
    return arr;
}

json symbols_json(const SemigroupSymbols& sym) {
    return {{"lambda_sharp", sym.lambda_sharp},
            {"lambda_r", sym.lambda_r},
            {"mark1", sym.mark1},
            {"mark2", sym.mark2},
            {"a", sym.a},
            {"b", sym.b},
            {"iota", sym.iota},
            {"alpha", sym.alpha},
            {"alpha_prime", sym.alpha_prime},
            {"f_alpha", sym.f_alpha},
            {"beta", sym.beta},
            {"beta_prime", sym.beta_prime},
            {"f_beta", sym.f_beta},
            {"f", sym.f},
            {"gamma", sym.gamma}};
}

json symbols_json(const MonoidSymbols& sym) {
    json alpha_chain = json::object();
    json beta_chain = json::object();
    for (const auto& [key, name] : sym.alpha_chain)
        alpha_chain[key.first + "," + std::to_string(key.second)] = name;
    for (const auto& [key, name] : sym.beta_chain)
        beta_chain[key.first + "," + std::to_string(key.second)] = name;
    return {{"padding", sym.padding},
            {"mark1", sym.mark1},
            {"mark2", sym.mark2},
            {"a", sym.a},
            {"b", sym.b},
            {"iota", sym.iota},
            {"f_alpha", sym.f_alpha},
            {"f_beta", sym.f_beta},
            {"f", sym.f},
            {"alpha_0", sym.alpha0},
            {"alpha_L", sym.alphaL},
            {"beta_0", sym.beta0},
            {"beta_L", sym.betaL},
            {"alpha_chain", alpha_chain},
            {"beta_chain", beta_chain},
            {"gamma", sym.gamma}};
}

void emit_automaton(const Output& out, const Transducer& t) {
    // the canonical file format is already JSON; --json only suppresses
    // nothing here, both modes print the same document
    std::string text = serialize_automaton(t);
    if (out.path) {
        write_file(*out.path, text);
    } else {
        std::cout << text;
    }
}

std::vector<std::string> parse_solution(const std::string& csv) { return split_symbols(csv); }

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"workbench for transducer-generated semigroups and monoids"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Output out;
    app.add_flag("--json", out.as_json, "machine-readable JSON output");
    app.add_option("--output", out.path, "write the result to a file instead of stdout");

    int exit_code = 0;

    // ---- validate ----------------------------------------------------
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check a transducer file");
    cmd_validate->add_option("file", validate_file)->required();
    cmd_validate->callback([&] {
        TransducerSpec spec = parse_automaton_spec(read_file(validate_file));
        ValidationReport report = validate(spec);
        out.emit({{"ok", report.ok()}, {"report", report.to_string()}},
                 report.ok() ? "ok\n" : report.to_string() + "\n");
        exit_code = report.ok() ? 0 : 1;
    });

    // ---- act ---------------------------------------------------------
    std::string act_file, act_states, act_word;
    auto* cmd_act = app.add_subcommand("act", "apply a state sequence to a word");
    cmd_act->add_option("file", act_file)->required();
    cmd_act->add_option("--states", act_states, "comma-separated state sequence (leftmost acts last)");
    cmd_act->add_option("--word", act_word, "comma-separated input word");
    cmd_act->callback([&] {
        Transducer t = load_automaton(act_file);
        StateSeq p = parse_state_seq(t, act_states);
        Word u = parse_word(t, act_word);
        Word v = t.act(p, u);
        StateSeq r = t.dual_act(p, u);
        out.emit({{"output", word_json(t, v)}, {"residual", seq_json(t, r)}},
                 "output:   " + format_word(t, v) + "\nresidual: " + format_state_seq(t, r) + "\n");
    });

    // ---- decide ------------------------------------------------------
    std::string dec_file, dec_left, dec_right;
    auto* cmd_decide = app.add_subcommand("decide", "decide equality of two state sequences");
    cmd_decide->add_option("file", dec_file)->required();
    cmd_decide->add_option("--left", dec_left, "left state sequence (empty for the empty sequence)");
    cmd_decide->add_option("--right", dec_right, "right state sequence");
    cmd_decide->callback([&] {
        Transducer t = load_automaton(dec_file);
        Decision d = decide_equal(t, parse_state_seq(t, dec_left), parse_state_seq(t, dec_right));
        out.emit({{"equal", d.equal}, {"separator", word_json(t, d.separator)}},
                 d.equal ? "equal\n" : "separated by: " + format_word(t, d.separator) + "\n");
        exit_code = d.equal ? 0 : 1;
    });

    // ---- relations ---------------------------------------------------
    std::string rel_file;
    unsigned rel_bound = 2;
    auto* cmd_relations = app.add_subcommand("relations", "enumerate equal pairs up to a length");
    cmd_relations->add_option("file", rel_file)->required();
    cmd_relations->add_option("--bound", rel_bound, "maximum sequence length")->required();
    cmd_relations->callback([&] {
        Transducer t = load_automaton(rel_file);
        std::vector<Relation> relations = enumerate_relations(t, rel_bound);
        json list = json::array();
        std::string human;
        for (const Relation& rel : relations) {
            list.push_back({{"left", seq_json(t, rel.left)}, {"right", seq_json(t, rel.right)}});
            human += format_state_seq(t, rel.left) + "  ==  " + format_state_seq(t, rel.right) + "\n";
        }
        if (relations.empty()) human = "no relations up to length " + std::to_string(rel_bound) + "\n";
        out.emit({{"bound", rel_bound}, {"relations", list}}, human);
        exit_code = relations.empty() ? 0 : 1;
    });

    // ---- build -------------------------------------------------------
    auto* cmd_build = app.add_subcommand("build", "construct standard automata");
    cmd_build->require_subcommand(1);

    auto* cmd_am = cmd_build->add_subcommand("adding-machine", "the reverse-binary incrementer");
    cmd_am->callback([&] { emit_automaton(out, adding_machine()); });

    std::string free_alphabet, free_identity;
    auto* cmd_free = cmd_build->add_subcommand("free", "free-semigroup generator automaton");
    cmd_free->add_option("--alphabet", free_alphabet, "comma-separated symbols (at least two)")
        ->required();
    cmd_free->add_option("--with-identity", free_identity, "also add an identity state");
    cmd_free->callback([&] {
        Transducer t = free_semigroup_automaton(split_symbols(free_alphabet));
        if (!free_identity.empty()) t = with_identity_state(t, free_identity);
        emit_automaton(out, t);
    });

    std::string rhat_lambda, rhat_index;
    unsigned rhat_len = 1;
    auto* cmd_rhat = cmd_build->add_subcommand(
        "rhat", "free basis over base symbols plus index symbols, with projection");
    cmd_rhat->add_option("--lambda", rhat_lambda, "base symbols")->required();
    cmd_rhat->add_option("--index", rhat_index, "index symbols")->required();
    cmd_rhat->add_option("--len", rhat_len, "maximum word length per state (default 1)");
    cmd_rhat->callback([&] {
        FreeBasis basis = build_free_basis(split_symbols(rhat_lambda), split_symbols(rhat_index),
                                           rhat_len);
        json pi = json::object();
        for (StateId s = 0; s < basis.automaton.state_count(); ++s)
            pi[basis.automaton.state_name(s)] = basis.pi(s);
        json doc = {{"automaton", json::parse(serialize_automaton(basis.automaton))}, {"pi", pi}};
        std::string text = doc.dump(2) + "\n";
        if (out.path) {
            write_file(*out.path, text);
        } else {
            std::cout << text;
        }
    });

    // ---- compose / power / dual / union --------------------------------
    std::string comp_outer, comp_inner;
    auto* cmd_compose = app.add_subcommand("compose", "compose two transducers (inner runs first)");
    cmd_compose->add_option("outer", comp_outer)->required();
    cmd_compose->add_option("inner", comp_inner)->required();
    cmd_compose->callback(
        [&] { emit_automaton(out, compose(load_automaton(comp_outer), load_automaton(comp_inner))); });

    std::string pow_file;
    unsigned pow_exp = 1;
    auto* cmd_power = app.add_subcommand("power", "k-fold composition with itself");
    cmd_power->add_option("file", pow_file)->required();
    cmd_power->add_option("--exponent", pow_exp)->required();
    cmd_power->callback([&] { emit_automaton(out, power(load_automaton(pow_file), pow_exp)); });

    std::string dual_file;
    auto* cmd_dual = app.add_subcommand("dual", "swap states and letters");
    cmd_dual->add_option("file", dual_file)->required();
    cmd_dual->callback([&] { emit_automaton(out, dual(load_automaton(dual_file))); });

    std::string union_a, union_b;
    auto* cmd_union = app.add_subcommand("union", "componentwise union of two transducers");
    cmd_union->add_option("first", union_a)->required();
    cmd_union->add_option("second", union_b)->required();
    cmd_union->callback(
        [&] { emit_automaton(out, union_of(load_automaton(union_a), load_automaton(union_b))); });

    // ---- reduce --------------------------------------------------------
    auto* cmd_reduce = app.add_subcommand("reduce", "encode a correspondence instance");
    cmd_reduce->require_subcommand(1);

    std::string red_sgr_file;
    auto* cmd_red_s = cmd_reduce->add_subcommand("semigroup", "the semigroup-freeness encoding");
    cmd_red_s->add_option("instance", red_sgr_file)->required();
    cmd_red_s->callback([&] {
        SemigroupReduction red =
            SemigroupReduction::build(require_pcp(load_instance(red_sgr_file)));
        json doc = {{"automaton", json::parse(serialize_automaton(red.automaton()))},
                    {"symbols", symbols_json(red.symbols())}};
        std::string text = doc.dump(2) + "\n";
        if (out.path) {
            write_file(*out.path, text);
        } else {
            std::cout << text;
        }
    });

    std::string red_mon_file;
    std::optional<std::string> red_mon_padding;
    auto* cmd_red_m = cmd_reduce->add_subcommand("monoid", "the free-presentation encoding");
    cmd_red_m->add_option("instance", red_mon_file)->required();
    cmd_red_m->add_option("--padding", red_mon_padding, "padding symbol for plain instances");
    cmd_red_m->callback([&] {
        MonoidReduction red =
            MonoidReduction::build(require_epcp(load_instance(red_mon_file), red_mon_padding));
        json doc = {{"automaton", json::parse(serialize_automaton(red.automaton()))},
                    {"symbols", symbols_json(red.symbols())}};
        std::string text = doc.dump(2) + "\n";
        if (out.path) {
            write_file(*out.path, text);
        } else {
            std::cout << text;
        }
    });

    // ---- witness -------------------------------------------------------
    auto* cmd_witness = app.add_subcommand("witness", "relation induced by a solution word");
    cmd_witness->require_subcommand(1);
    std::string wit_file, wit_solution;
    std::optional<std::string> wit_padding;
    for (const char* kind : {"semigroup", "monoid"}) {
        auto* sub = cmd_witness->add_subcommand(kind);
        sub->add_option("instance", wit_file)->required();
        sub->add_option("--solution", wit_solution, "comma-separated index word")->required();
        if (std::string(kind) == "monoid")
            sub->add_option("--padding", wit_padding, "padding symbol for plain instances");
    }
    cmd_witness->callback([&] {
        bool monoid = cmd_witness->get_subcommands().front()->get_name() == "monoid";
        Relation rel;
        const Transducer* t = nullptr;
        std::optional<SemigroupReduction> sred;
        std::optional<MonoidReduction> mred;
        if (monoid) {
            mred = MonoidReduction::build(require_epcp(load_instance(wit_file), wit_padding));
            rel = mred->witness_relation(parse_solution(wit_solution));
            t = &mred->automaton();
        } else {
            sred = SemigroupReduction::build(require_pcp(load_instance(wit_file)));
            rel = sred->witness_relation(parse_solution(wit_solution));
            t = &sred->automaton();
        }
        out.emit({{"left", seq_json(*t, rel.left)},
                  {"right", seq_json(*t, rel.right)},
                  {"verified", true}},
                 format_state_seq(*t, rel.left) + "  ==  " + format_state_seq(*t, rel.right) + "\n");
    });

    // ---- extract -------------------------------------------------------
    auto* cmd_extract = app.add_subcommand("extract", "decode a solution from a relation");
    cmd_extract->require_subcommand(1);
    std::string ext_file, ext_left, ext_right;
    std::optional<std::string> ext_padding;
    for (const char* kind : {"semigroup", "monoid"}) {
        auto* sub = cmd_extract->add_subcommand(kind);
        sub->add_option("instance", ext_file)->required();
        sub->add_option("--left", ext_left)->required();
        sub->add_option("--right", ext_right)->required();
        if (std::string(kind) == "monoid")
            sub->add_option("--padding", ext_padding, "padding symbol for plain instances");
    }
    cmd_extract->callback([&] {
        bool monoid = cmd_extract->get_subcommands().front()->get_name() == "monoid";
        std::vector<std::string> solution;
        if (monoid) {
            MonoidReduction red =
                MonoidReduction::build(require_epcp(load_instance(ext_file), ext_padding));
            const Transducer& t = red.automaton();
            solution = red.extract_solution(parse_state_seq(t, ext_left),
                                            parse_state_seq(t, ext_right));
        } else {
            SemigroupReduction red = SemigroupReduction::build(require_pcp(load_instance(ext_file)));
            const Transducer& t = red.automaton();
            solution = red.extract_solution(parse_state_seq(t, ext_left),
                                            parse_state_seq(t, ext_right));
        }
        std::string joined;
        for (std::size_t i = 0; i < solution.size(); ++i) {
            if (i) joined += ",";
            joined += solution[i];
        }
        out.emit({{"solution", solution}}, joined + "\n");
    });

    // ---- check free-presentation ----------------------------------------
    auto* cmd_check = app.add_subcommand("check", "bounded structural checks on instances");
    cmd_check->require_subcommand(1);
    std::string fp_file;
    unsigned fp_bound = 3;
    std::optional<std::string> fp_padding;
    auto* cmd_fp = cmd_check->add_subcommand("free-presentation",
                                             "scan for relations crossing the marker states");
    cmd_fp->add_option("instance", fp_file)->required();
    cmd_fp->add_option("--bound", fp_bound, "maximum sequence length")->required();
    cmd_fp->add_option("--padding", fp_padding, "padding symbol for plain instances");
    cmd_fp->callback([&] {
        MonoidReduction red = MonoidReduction::build(require_epcp(load_instance(fp_file), fp_padding));
        auto report = red.check_free_presentation(fp_bound);
        const Transducer& t = red.automaton();
        json doc = {{"consistent_up_to_bound", report.consistent}, {"bound", report.bound}};
        std::string human;
        if (report.consistent) {
            human = "consistent up to length " + std::to_string(report.bound) + "\n";
        } else {
            doc["violation"] = {{"left", seq_json(t, report.violation->left)},
                                {"right", seq_json(t, report.violation->right)}};
            human = "violation: " + format_state_seq(t, report.violation->left) + "  ==  " +
                    format_state_seq(t, report.violation->right) +
                    " (marker projections differ)\n";
        }
        out.emit(doc, human);
        exit_code = report.consistent ? 0 : 1;
    });

    // ---- analyze ---------------------------------------------------------
    std::string an_file, an_check, an_side = "both", an_weights, an_map, an_target;
    unsigned an_bound = 2;
    bool an_proper = false;
    auto* cmd_analyze = app.add_subcommand("analyze", "bounded property checkers");
    cmd_analyze->add_option("file", an_file)->required();
    cmd_analyze->add_option("--check", an_check, "cancellative|equidivisible|length|hom")
        ->required()
        ->check(CLI::IsMember({"cancellative", "equidivisible", "length", "hom"}));
    cmd_analyze->add_option("--bound", an_bound, "search bound")->required();
    cmd_analyze->add_option("--side", an_side, "left|right|both (cancellative only)")
        ->check(CLI::IsMember({"left", "right", "both"}));
    cmd_analyze->add_option("--weights", an_weights, "JSON file {state: weight} (length only)");
    cmd_analyze->add_flag("--proper", an_proper, "require weight 0 only for identities");
    cmd_analyze->add_option("--map", an_map, "JSON file {state: image} (hom only)");
    cmd_analyze->add_option("--target", an_target, "target automaton file (hom only)");
    cmd_analyze->callback([&] {
        Transducer t = load_automaton(an_file);
        PropertyReport report;
        if (an_check == "cancellative") {
            Side side = an_side == "left" ? Side::left : an_side == "right" ? Side::right : Side::both;
            report = check_cancellative(t, an_bound, side);
        } else if (an_check == "equidivisible") {
            report = check_equidivisible(t, an_bound);
        } else if (an_check == "length") {
            if (an_weights.empty()) throw ParseError("--weights is required for --check length");
            json doc = json::parse(read_file(an_weights));
            std::vector<std::size_t> weights(t.state_count(), 0);
            for (const auto& [name, value] : doc.items()) weights[t.state(name)] = value;
            report = check_length_function(t, weights, an_bound, an_proper);
        } else {
            if (an_map.empty() || an_target.empty())
                throw ParseError("--map and --target are required for --check hom");
            Transducer target = load_automaton(an_target);
            json doc = json::parse(read_file(an_map));
            std::vector<StateSeq> images(t.state_count());
            for (StateId s = 0; s < t.state_count(); ++s) {
                const std::string& name = t.state_name(s);
                if (!doc.contains(name)) throw ParseError("map misses state '" + name + "'");
                if (doc[name].is_string()) {
                    images[s] = parse_state_seq(target, doc[name].get<std::string>());
                } else {
                    for (const auto& part : doc[name]) {
                        images[s].push_back(target.state(part.get<std::string>()));
                    }
                }
            }
            report = check_hom_extension(t, target, images, an_bound);
        }
        json witness = json::array();
        for (const StateSeq& w : report.witness) witness.push_back(seq_json(t, w));
        out.emit({{"property", report.property},
                  {"bound", report.bound},
                  {"verdict", report.verdict()},
                  {"detail", report.detail},
                  {"witness", witness}},
                 report.property + " (bound " + std::to_string(report.bound) +
                     "): " + report.verdict() + (report.detail.empty() ? "" : "\n" + report.detail) +
                     "\n");
        exit_code = report.counterexample_found ? 1 : 0;
    });

    // ---- export ----------------------------------------------------------
    auto* cmd_export = app.add_subcommand("export", "export to other formats");
    cmd_export->require_subcommand(1);
    std::string dot_file;
    bool dot_dual = false;
    auto* cmd_dot = cmd_export->add_subcommand("dot", "graphviz rendering");
    cmd_dot->add_option("file", dot_file)->required();
    cmd_dot->add_flag("--dual", dot_dual, "export the dual automaton instead");
    cmd_dot->callback([&] {
        Transducer t = load_automaton(dot_file);
        if (dot_dual) t = dual(t);
        std::string text = export_dot(t);
        if (out.path) {
            write_file(*out.path, text);
        } else {
            std::cout << text;
        }
    });

    CLI11_PARSE(app, argc, argv);
    return exit_code;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedOperation& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
