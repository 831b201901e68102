// free_constructions.hpp -- generator automata for free semigroups/monoids
// and composite free bases with a projection onto their base symbols.

#ifndef SAUTO_FREE_CONSTRUCTIONS_HPP
#define SAUTO_FREE_CONSTRUCTIONS_HPP

#include <memory>

#include "sauto/transducer.hpp"
#include "sauto/word_problem.hpp"

namespace sauto {

/// Thrown by constructions whose correct implementation is not available;
/// callers get an explicit failure instead of a wrong automaton.
class UnsupportedOperation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The 2-state transducer over {0,1} whose generator increments reverse-binary
/// numbers (least significant bit first); the second state is an identity.
Transducer adding_machine();

/// The |R|-state transducer over R itself in which state a maps any input b
/// to output a and moves to state b; it generates the free semigroup on R.
/// Requires |R| >= 2.
Transducer free_semigroup_automaton(const std::vector<std::string>& symbols);

/// Adds a fresh state with a/a self-loops on the whole alphabet.
/// Throws std::invalid_argument if the name clashes with an existing state.
Transducer with_identity_state(const Transducer& t, const std::string& name);

/// Union of the first max_power powers of t.  Tuple states of distinct
/// arities are disjoint by construction, so the union is always valid.
Transducer union_of_powers(const Transducer& t, unsigned max_power);

/// A transducer generating a free semigroup together with the projection of
/// each state onto the word of base symbols it stands for.  Equality of state
/// sequences must coincide with equality of projected words (the contract
/// checked by validate_free_basis).
struct FreeBasis {
    Transducer automaton;
    std::vector<std::vector<std::string>> projection; // indexed by StateId

    const std::vector<std::string>& pi(StateId s) const { return projection[s]; }
    /// Projection of a whole sequence, concatenated leftmost-first.
    std::vector<std::string> pi_seq(const StateSeq& p) const;
    /// Looks up the unique state projecting to the given word, if any.
    std::optional<StateId> state_of(const std::vector<std::string>& word) const;
};

/// Same automaton as union_of_powers, with each tuple state projecting to the
/// word of its components.
FreeBasis union_of_powers_basis(const Transducer& base, unsigned max_power);

/// Extends a transducer by one state that generates a new free factor:
/// existing equalities must be preserved and no new relation may involve the
/// added state.  The known construction for this lives outside this codebase,
/// so this entry point reports UnsupportedOperation; plug in a
/// FreeBasisProvider to supply one.
Transducer adjoin_free_generator(const Transducer& t, const std::string& name);

/// Strategy for building the composite free basis over lambda (letters, each
/// state standing for a word of length <= max_word_len) plus index symbols
/// (each its own free generator).
class FreeBasisProvider {
  public:
    virtual ~FreeBasisProvider() = default;
    virtual unsigned max_supported_length() const = 0;
    virtual FreeBasis build(const std::vector<std::string>& lambda,
                            const std::vector<std::string>& index,
                            unsigned max_word_len) const = 0;
};

/// Default strategy: for max_word_len == 1 the basis collapses to the free
/// semigroup automaton over lambda + index (self-contained).  For longer
/// words it would need a working adjoin_free_generator, so it throws
/// UnsupportedOperation rather than guessing.
class DefaultFreeBasisProvider final : public FreeBasisProvider {
  public:
    unsigned max_supported_length() const override { return 1; }
    FreeBasis build(const std::vector<std::string>& lambda,
                    const std::vector<std::string>& index,
                    unsigned max_word_len) const override;
};

const FreeBasisProvider& default_free_basis_provider();

/// Builds the free basis over lambda + index with word-states up to length
/// max_word_len.  Validates the arguments (|lambda| >= 2, index non-empty and
/// disjoint from lambda) and delegates to the provider; may throw
/// UnsupportedOperation.
FreeBasis build_free_basis(const std::vector<std::string>& lambda,
                           const std::vector<std::string>& index, unsigned max_word_len,
                           const FreeBasisProvider& provider = default_free_basis_provider());

struct BasisReport {
    bool ok = true;
    unsigned bound = 0;
    std::string detail; // first counterexample, if any
};

/// Checks, for all sequences p, q of length <= bound, that equal action and
/// equal projection coincide; reports the first counterexample.
BasisReport validate_free_basis(const FreeBasis& basis, unsigned bound);

} // namespace sauto

#endif
