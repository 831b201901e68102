#include "sauto/free_constructions.hpp"

#include <algorithm>
#include <map>

namespace sauto {

Transducer adding_machine() {
    TransducerSpec spec;
    spec.states = {"q", "id"};
    spec.alphabet = {"0", "1"};
    spec.transitions = {
        {"q", "0", "1", "id"},
        {"q", "1", "0", "q"},
        {"id", "0", "0", "id"},
        {"id", "1", "1", "id"},
    };
    return Transducer::from_spec(spec);
}

Transducer free_semigroup_automaton(const std::vector<std::string>& symbols) {
    if (symbols.size() < 2)
        throw std::invalid_argument("free_semigroup_automaton: need at least 2 symbols");
    TransducerSpec spec;
    spec.states = symbols;
    spec.alphabet = symbols;
    for (const auto& a : symbols) {
        for (const auto& b : symbols) {
            // state a reads b, emits its own name and moves to state b
            spec.transitions.push_back({a, b, a, b});
        }
    }
    return Transducer::from_spec(spec);
}

Transducer with_identity_state(const Transducer& t, const std::string& name) {
    if (t.find_state(name))
        throw std::invalid_argument("with_identity_state: state '" + name + "' already exists");
    TransducerSpec spec = t.spec();
    spec.states.push_back(name);
    for (const auto& a : spec.alphabet) spec.transitions.push_back({name, a, a, name});
    return Transducer::from_spec(spec);
}

Transducer union_of_powers(const Transducer& t, unsigned max_power) {
    if (max_power == 0) throw std::invalid_argument("union_of_powers: need max_power >= 1");
    Transducer result = t;
    for (unsigned k = 2; k <= max_power; ++k) result = union_of(result, power(t, k));
    return result;
}

std::vector<std::string> FreeBasis::pi_seq(const StateSeq& p) const {
    std::vector<std::string> word;
    for (StateId s : p) {
        const auto& part = projection[s];
        word.insert(word.end(), part.begin(), part.end());
    }
    return word;
}

std::optional<StateId> FreeBasis::state_of(const std::vector<std::string>& word) const {
    for (StateId s = 0; s < projection.size(); ++s) {
        if (projection[s] == word) return s;
    }
    return std::nullopt;
}

FreeBasis union_of_powers_basis(const Transducer& base, unsigned max_power) {
    Transducer automaton = union_of_powers(base, max_power);
    FreeBasis basis{automaton, {}};
    basis.projection.resize(automaton.state_count());
    // Arity-1 states keep their own name; tuple states project to their
    // components, recovered by re-running the power construction's naming.
    for (StateId s = 0; s < automaton.state_count(); ++s) {
        const std::string& name = automaton.state_name(s);
        if (base.find_state(name)) {
            basis.projection[s] = {name};
        } else {
            std::vector<std::string> parts =
                split_symbols(std::string_view(name).substr(1, name.size() - 2));
            basis.projection[s] = std::move(parts);
        }
    }
    return basis;
}

Transducer adjoin_free_generator(const Transducer&, const std::string& name) {
    throw UnsupportedOperation(
        "adjoin_free_generator('" + name +
        "'): no construction for adding a free generator is available; "
        "supply a FreeBasisProvider implementing one");
}

FreeBasis DefaultFreeBasisProvider::build(const std::vector<std::string>& lambda,
                                          const std::vector<std::string>& index,
                                          unsigned max_word_len) const {
    if (max_word_len == 1) {
        std::vector<std::string> symbols = lambda;
        symbols.insert(symbols.end(), index.begin(), index.end());
        FreeBasis basis{free_semigroup_automaton(symbols), {}};
        basis.projection.resize(symbols.size());
        for (StateId s = 0; s < symbols.size(); ++s) basis.projection[s] = {symbols[s]};
        return basis;
    }
    // Word-states over lambda are fine (a union of powers), but every index
    // symbol then needs a genuine free-generator adjunction.
    Transducer result = union_of_powers(free_semigroup_automaton(lambda), max_word_len);
    for (const auto& i : index) result = adjoin_free_generator(result, i);
    throw UnsupportedOperation("unreachable: adjoin_free_generator cannot succeed");
}

const FreeBasisProvider& default_free_basis_provider() {
    static const DefaultFreeBasisProvider provider;
    return provider;
}

FreeBasis build_free_basis(const std::vector<std::string>& lambda,
                           const std::vector<std::string>& index, unsigned max_word_len,
                           const FreeBasisProvider& provider) {
    if (lambda.size() < 2) throw std::invalid_argument("build_free_basis: need |lambda| >= 2");
    if (index.empty()) throw std::invalid_argument("build_free_basis: need a non-empty index set");
    if (max_word_len == 0) throw std::invalid_argument("build_free_basis: need max_word_len >= 1");
    for (const auto& i : index) {
        if (std::find(lambda.begin(), lambda.end(), i) != lambda.end())
            throw std::invalid_argument("build_free_basis: index symbol '" + i +
                                        "' also occurs in lambda");
    }
    return provider.build(lambda, index, max_word_len);
}

BasisReport validate_free_basis(const FreeBasis& basis, unsigned bound) {
    const Transducer& t = basis.automaton;
    BasisReport report;
    report.bound = bound;

    auto join = [](const std::vector<std::string>& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += w[i];
        }
        return s;
    };

    StateSeq p;
    for (bool more_p = true; more_p; more_p = next_sequence(p, t.state_count(), bound)) {
        StateSeq q;
        for (bool more_q = true; more_q; more_q = next_sequence(q, t.state_count(), bound)) {
            if (q.size() > p.size() || (q.size() == p.size() && !(q < p))) break;
            bool same_word = basis.pi_seq(p) == basis.pi_seq(q);
            bool same_action = decide_equal(t, p, q).equal;
            if (same_word != same_action) {
                report.ok = false;
                report.detail = "sequences [" + format_state_seq(t, p) + "] and [" +
                                format_state_seq(t, q) + "]: projections " +
                                (same_word ? "equal" : "differ") + " but actions " +
                                (same_action ? "equal" : "differ") + " (projections '" +
                                join(basis.pi_seq(p)) + "' vs '" + join(basis.pi_seq(q)) + "')";
                return report;
            }
        }
    }
    return report;
}

} // namespace sauto
