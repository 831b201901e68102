#include "sauto/transducer.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace sauto {

namespace {

const char* issue_name(ValidationIssue::Kind kind) {
    switch (kind) {
    case ValidationIssue::Kind::empty_states: return "empty state set";
    case ValidationIssue::Kind::empty_alphabet: return "empty alphabet";
    case ValidationIssue::Kind::duplicate_state: return "duplicate state";
    case ValidationIssue::Kind::duplicate_letter: return "duplicate letter";
    case ValidationIssue::Kind::undeclared_symbol: return "undeclared symbol";
    case ValidationIssue::Kind::missing_transition: return "missing transition";
    case ValidationIssue::Kind::duplicate_transition: return "duplicate transition";
    }
    return "unknown";
}

} // namespace

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << issue_name(issues[i].kind) << ": " << issues[i].detail;
    }
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("invalid transducer: " + report.to_string()),
      report_(std::move(report)) {}

ValidationReport validate(const TransducerSpec& spec) {
    ValidationReport report;
    auto add = [&report](ValidationIssue::Kind kind, std::string detail) {
        report.issues.push_back({kind, std::move(detail)});
    };

    if (spec.states.empty()) add(ValidationIssue::Kind::empty_states, "no states declared");
    if (spec.alphabet.empty()) add(ValidationIssue::Kind::empty_alphabet, "no letters declared");

    std::unordered_set<std::string> states, letters;
    for (const auto& s : spec.states) {
        if (!states.insert(s).second) add(ValidationIssue::Kind::duplicate_state, s);
    }
    for (const auto& a : spec.alphabet) {
        if (!letters.insert(a).second) add(ValidationIssue::Kind::duplicate_letter, a);
    }

    // Count transitions per (state, letter) cell.
    std::unordered_map<std::string, unsigned> cell_count;
    for (const auto& tr : spec.transitions) {
        bool declared = true;
        if (!states.count(tr.from)) {
            add(ValidationIssue::Kind::undeclared_symbol, "state '" + tr.from + "'");
            declared = false;
        }
        if (!states.count(tr.to)) {
            add(ValidationIssue::Kind::undeclared_symbol, "state '" + tr.to + "'");
            declared = false;
        }
        if (!letters.count(tr.in)) {
            add(ValidationIssue::Kind::undeclared_symbol, "letter '" + tr.in + "'");
            declared = false;
        }
        if (!letters.count(tr.out)) {
            add(ValidationIssue::Kind::undeclared_symbol, "letter '" + tr.out + "'");
            declared = false;
        }
        if (declared) ++cell_count[tr.from + "\x1f" + tr.in];
    }
    for (const auto& s : spec.states) {
        for (const auto& a : spec.alphabet) {
            auto it = cell_count.find(s + "\x1f" + a);
            unsigned n = it == cell_count.end() ? 0 : it->second;
            if (n == 0) {
                add(ValidationIssue::Kind::missing_transition, "(" + s + ", " + a + ")");
            } else if (n > 1) {
                add(ValidationIssue::Kind::duplicate_transition, "(" + s + ", " + a + ")");
            }
        }
    }
    return report;
}

Transducer Transducer::from_spec(const TransducerSpec& spec) {
    ValidationReport report = validate(spec);
    if (!report.ok()) throw ValidationError(std::move(report));

    Transducer t;
    t.state_names_ = spec.states;
    t.letter_names_ = spec.alphabet;
    for (StateId i = 0; i < t.state_names_.size(); ++i) t.state_index_[t.state_names_[i]] = i;
    for (LetterId i = 0; i < t.letter_names_.size(); ++i) t.letter_index_[t.letter_names_[i]] = i;

    t.out_.assign(t.state_names_.size() * t.letter_names_.size(), 0);
    t.next_.assign(t.state_names_.size() * t.letter_names_.size(), 0);
    for (const auto& tr : spec.transitions) {
        StateId s = t.state_index_.at(tr.from);
        LetterId a = t.letter_index_.at(tr.in);
        t.out_[t.idx(s, a)] = t.letter_index_.at(tr.out);
        t.next_[t.idx(s, a)] = t.state_index_.at(tr.to);
    }
    return t;
}

std::optional<StateId> Transducer::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<LetterId> Transducer::find_letter(std::string_view name) const {
    auto it = letter_index_.find(std::string(name));
    if (it == letter_index_.end()) return std::nullopt;
    return it->second;
}

StateId Transducer::state(std::string_view name) const {
    auto s = find_state(name);
    if (!s) throw std::invalid_argument("unknown state '" + std::string(name) + "'");
    return *s;
}

LetterId Transducer::letter(std::string_view name) const {
    auto a = find_letter(name);
    if (!a) throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
    return *a;
}

LetterId Transducer::step(StateSeq& seq, LetterId in) const {
    LetterId cur = in;
    for (std::size_t j = seq.size(); j-- > 0;) {
        StateId s = seq[j];
        seq[j] = next(s, cur);
        cur = output(s, cur);
    }
    return cur;
}

Word Transducer::act(const StateSeq& p, const Word& u) const {
    StateSeq residual = p;
    Word out;
    out.reserve(u.size());
    for (LetterId a : u) out.push_back(step(residual, a));
    return out;
}

StateSeq Transducer::dual_act(const StateSeq& p, const Word& u) const {
    StateSeq residual = p;
    for (LetterId a : u) step(residual, a);
    return residual;
}

bool Transducer::is_invertible() const {
    std::vector<bool> seen(letter_count());
    for (StateId s = 0; s < state_count(); ++s) {
        std::fill(seen.begin(), seen.end(), false);
        for (LetterId a = 0; a < letter_count(); ++a) {
            LetterId b = output(s, a);
            if (seen[b]) return false;
            seen[b] = true;
        }
    }
    return true;
}

std::vector<Transition> Transducer::transitions() const {
    std::vector<Transition> result;
    result.reserve(state_count() * letter_count());
    for (StateId s = 0; s < state_count(); ++s) {
        for (LetterId a = 0; a < letter_count(); ++a) {
            result.push_back({state_name(s), letter_name(a),
                              letter_name(output(s, a)), state_name(next(s, a))});
        }
    }
    std::sort(result.begin(), result.end(), [](const Transition& x, const Transition& y) {
        return std::tie(x.from, x.in) < std::tie(y.from, y.in);
    });
    return result;
}

TransducerSpec Transducer::spec() const {
    return {state_names_, letter_names_, transitions()};
}

bool Transducer::operator==(const Transducer& other) const {
    return state_names_ == other.state_names_ && letter_names_ == other.letter_names_ &&
           transitions() == other.transitions();
}

Transducer union_of(const Transducer& t1, const Transducer& t2) {
    TransducerSpec spec = t1.spec();
    std::unordered_set<std::string> states(spec.states.begin(), spec.states.end());
    std::unordered_set<std::string> letters(spec.alphabet.begin(), spec.alphabet.end());
    for (const auto& s : t2.state_names()) {
        if (states.insert(s).second) spec.states.push_back(s);
    }
    for (const auto& a : t2.letter_names()) {
        if (letters.insert(a).second) spec.alphabet.push_back(a);
    }
    std::vector<Transition> merged = spec.transitions;
    for (const auto& tr : t2.transitions()) {
        if (std::find(merged.begin(), merged.end(), tr) == merged.end()) merged.push_back(tr);
    }
    spec.transitions = std::move(merged);
    return Transducer::from_spec(spec);
}

namespace {

std::string tuple_name(const std::vector<std::string>& parts) {
    std::string name = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) name += ",";
        name += parts[i];
    }
    name += ")";
    return name;
}

} // namespace

Transducer compose(const Transducer& outer, const Transducer& inner) {
    if (outer.letter_names() != inner.letter_names())
        throw std::invalid_argument("compose: alphabets differ");

    TransducerSpec spec;
    spec.alphabet = outer.letter_names();
    for (StateId o = 0; o < outer.state_count(); ++o) {
        for (StateId i = 0; i < inner.state_count(); ++i) {
            std::string name = tuple_name({outer.state_name(o), inner.state_name(i)});
            spec.states.push_back(name);
            for (LetterId a = 0; a < outer.letter_count(); ++a) {
                LetterId b = inner.output(i, a);
                std::string to = tuple_name({outer.state_name(outer.next(o, b)),
                                             inner.state_name(inner.next(i, a))});
                spec.transitions.push_back({name, outer.letter_name(a),
                                            outer.letter_name(outer.output(o, b)), to});
            }
        }
    }
    return Transducer::from_spec(spec);
}

Transducer power(const Transducer& t, unsigned k) {
    if (k == 0) throw std::invalid_argument("power: exponent must be >= 1");
    if (k == 1) return t;

    // Enumerate all k-tuples; each tuple acts as the corresponding state
    // sequence (leftmost component applied last).
    std::size_t n = t.state_count();
    std::size_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= n;

    TransducerSpec spec;
    spec.alphabet = t.letter_names();
    StateSeq seq(k);
    auto decode = [&](std::size_t code, StateSeq& target) {
        for (std::size_t j = k; j-- > 0;) {
            target[j] = static_cast<StateId>(code % n);
            code /= n;
        }
    };
    auto name_of = [&](const StateSeq& tup) {
        std::vector<std::string> parts;
        parts.reserve(k);
        for (StateId s : tup) parts.push_back(t.state_name(s));
        return tuple_name(parts);
    };
    for (std::size_t code = 0; code < count; ++code) {
        decode(code, seq);
        std::string name = name_of(seq);
        spec.states.push_back(name);
        for (LetterId a = 0; a < t.letter_count(); ++a) {
            StateSeq residual = seq;
            LetterId b = t.step(residual, a);
            spec.transitions.push_back({name, t.letter_name(a), t.letter_name(b),
                                        name_of(residual)});
        }
    }
    return Transducer::from_spec(spec);
}

Transducer dual(const Transducer& t) {
    TransducerSpec spec;
    spec.states = t.letter_names();
    spec.alphabet = t.state_names();
    for (StateId p = 0; p < t.state_count(); ++p) {
        for (LetterId a = 0; a < t.letter_count(); ++a) {
            // p --a/b--> q  becomes  a --p/q--> b
            spec.transitions.push_back({t.letter_name(a), t.state_name(p),
                                        t.state_name(t.next(p, a)),
                                        t.letter_name(t.output(p, a))});
        }
    }
    return Transducer::from_spec(spec);
}

std::vector<std::string> split_symbols(std::string_view csv) {
    std::vector<std::string> parts;
    if (csv.empty()) return parts;
    std::string cur;
    int depth = 0;
    for (char c : csv) {
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
            continue;
        }
        if (c == '(') ++depth;
        if (c == ')') --depth;
        cur += c;
    }
    parts.push_back(cur);
    return parts;
}

StateSeq parse_state_seq(const Transducer& t, std::string_view csv) {
    StateSeq seq;
    for (const auto& name : split_symbols(csv)) seq.push_back(t.state(name));
    return seq;
}

Word parse_word(const Transducer& t, std::string_view csv) {
    Word word;
    for (const auto& name : split_symbols(csv)) word.push_back(t.letter(name));
    return word;
}

std::string format_state_seq(const Transducer& t, const StateSeq& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += t.state_name(p[i]);
    }
    return s;
}

std::string format_word(const Transducer& t, const Word& u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += t.letter_name(u[i]);
    }
    return s;
}

} // namespace sauto
