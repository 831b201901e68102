// transducer.hpp -- complete deterministic letter-to-letter transducers
//
// A Transducer is a finite set of states Q, an alphabet S and a total
// transition map Q x S -> S x Q.  Every state induces a length-preserving
// function on words; state sequences act by composition with the rightmost
// state applied first (so the leftmost state acts last).  The dual action
// records the residual state sequence left behind after a word has been
// processed.

#ifndef SAUTO_TRANSDUCER_HPP
#define SAUTO_TRANSDUCER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sauto {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// Sequence of states, written leftmost-first; the leftmost state acts last.
using StateSeq = std::vector<StateId>;
/// Input/output word, written leftmost-first; the leftmost letter is read first.
using Word = std::vector<LetterId>;

/// One symbolic transition: from --in/out--> to.
struct Transition {
    std::string from;
    std::string in;
    std::string out;
    std::string to;

    bool operator==(const Transition&) const = default;
};

/// Raw (unchecked) description of a transducer.
struct TransducerSpec {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<Transition> transitions;
};

struct ValidationIssue {
    enum class Kind {
        empty_states,
        empty_alphabet,
        duplicate_state,
        duplicate_letter,
        undeclared_symbol,
        missing_transition,   // no transition for some (state, letter)
        duplicate_transition, // more than one transition for some (state, letter)
    };
    Kind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

/// Thrown when an operation would produce an invalid transducer.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

/// Checks that a spec describes a complete deterministic transducer:
/// non-empty state set and alphabet, no duplicate symbols, every transition
/// over declared symbols, and exactly one transition per (state, letter).
ValidationReport validate(const TransducerSpec& spec);

class Transducer {
  public:
    /// Empty placeholder; assign a real transducer before use.
    Transducer() = default;

    /// Builds from a spec; throws ValidationError if validate(spec) fails.
    static Transducer from_spec(const TransducerSpec& spec);

    std::size_t state_count() const { return state_names_.size(); }
    std::size_t letter_count() const { return letter_names_.size(); }

    const std::string& state_name(StateId s) const { return state_names_[s]; }
    const std::string& letter_name(LetterId a) const { return letter_names_[a]; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& letter_names() const { return letter_names_; }

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<LetterId> find_letter(std::string_view name) const;
    /// Like find_state/find_letter but throws std::invalid_argument on unknown symbols.
    StateId state(std::string_view name) const;
    LetterId letter(std::string_view name) const;

    LetterId output(StateId s, LetterId a) const { return out_[idx(s, a)]; }
    StateId next(StateId s, LetterId a) const { return next_[idx(s, a)]; }

    /// Feeds one letter through a state sequence (rightmost state first).
    /// Returns the emitted letter and advances the sequence in place.
    LetterId step(StateSeq& seq, LetterId in) const;

    /// The left action p o u.  |result| == |u|; the empty sequence acts as the identity.
    Word act(const StateSeq& p, const Word& u) const;
    /// The dual (right) action p . u: the residual sequence, |result| == |p|.
    StateSeq dual_act(const StateSeq& p, const Word& u) const;

    /// True iff every state's output map on letters is a bijection.
    bool is_invertible() const;

    /// Symbolic transitions sorted by (from, in); the canonical listing.
    std::vector<Transition> transitions() const;
    TransducerSpec spec() const;

    /// Structural equality: same ordered symbols, same transition table.
    bool operator==(const Transducer& other) const;

  private:
    std::size_t idx(StateId s, LetterId a) const { return s * letter_names_.size() + a; }

    std::vector<std::string> state_names_;
    std::vector<std::string> letter_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, LetterId> letter_index_;
    std::vector<LetterId> out_;
    std::vector<StateId> next_;
};

/// Componentwise union of two transducers (symbols merged by name).
/// Throws ValidationError if the merged automaton is incomplete or
/// nondeterministic; transitions present in both operands must agree.
Transducer union_of(const Transducer& t1, const Transducer& t2);

/// Composition outer o inner over a common alphabet: pair states "(o,i)" act
/// as inner first, then outer.  Throws std::invalid_argument on alphabet mismatch.
Transducer compose(const Transducer& outer, const Transducer& inner);

/// k-fold composition; states are flat k-tuples "(q_k,...,q_1)" whose action
/// equals the action of the corresponding state sequence.  k = 1 returns a copy.
Transducer power(const Transducer& t, unsigned k);

/// Swaps the roles of states and letters:
/// p --a/b--> q  becomes  a --p/q--> b.
Transducer dual(const Transducer& t);

/// Splits a comma-separated symbol list; commas inside parentheses do not
/// split, so tuple states like "(x,y)" survive.  Empty input means the empty
/// sequence.
std::vector<std::string> split_symbols(std::string_view csv);

StateSeq parse_state_seq(const Transducer& t, std::string_view csv);
Word parse_word(const Transducer& t, std::string_view csv);
std::string format_state_seq(const Transducer& t, const StateSeq& p);
std::string format_word(const Transducer& t, const Word& u);

} // namespace sauto

#endif
