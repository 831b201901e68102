// analysis.hpp -- bounded checkers for freeness-adjacent properties
// (cancellativity, equidivisibility, length functions, homomorphism
// extension).  All verdicts are explicitly bounded: "no counterexample up to
// k" is evidence, never a proof; the underlying unbounded properties are not
// decidable in general.

#ifndef SAUTO_ANALYSIS_HPP
#define SAUTO_ANALYSIS_HPP

#include "sauto/word_problem.hpp"

namespace sauto {

enum class Side { left, right, both };

struct PropertyReport {
    std::string property;
    unsigned bound = 0;
    bool counterexample_found = false;
    std::string detail;                // human-readable witness description
    std::vector<StateSeq> witness;     // the sequences involved, if any

    std::string verdict() const {
        return counterexample_found ? "counterexample" : "no-counterexample-up-to-bound";
    }
};

/// Groups every state sequence of length <= max_len into equal-action
/// classes by partition refinement: the set of such sequences is closed
/// under the dual action (which preserves length), so it forms a finite
/// Mealy system whose coarsest output-respecting congruence is exactly
/// equality of actions.  Class ids agree with decide_equal.
class SequenceClassifier {
  public:
    SequenceClassifier(const Transducer& t, unsigned max_len);

    /// Class id of a sequence of length <= max_len (by value lookup).
    std::size_t class_of(const StateSeq& p) const;
    std::size_t class_count() const { return class_count_; }

  private:
    std::unordered_map<std::string, std::size_t> node_by_key_;
    std::vector<std::size_t> class_of_node_;
    std::size_t class_count_ = 0;
};

/// Searches for sequences s, t, t' (lengths 1..bound) with s t equal to s t'
/// but t not equal to t' (left side; the right side uses t s and t' s).
PropertyReport check_cancellative(const Transducer& t, unsigned bound, Side side);

/// Searches factorizations s1 s2 == s1' s2' (all parts of length 1..bound)
/// admitting no middle factor x (empty or of length <= bound) with
/// s1 == s1' x and x s2 == s2', nor with s1 x == s1' and s2 == x s2'.
/// The x search is itself bounded by `bound`; a missing x is therefore
/// bounded evidence only.
PropertyReport check_equidivisible(const Transducer& t, unsigned bound);

/// Checks that every relation up to the bound preserves the total state
/// weight; with `proper`, additionally that only sequences equal to the
/// empty sequence have weight 0.
PropertyReport check_length_function(const Transducer& t, const std::vector<std::size_t>& weights,
                                     unsigned bound, bool proper);

/// Checks whether mapping each state of t1 to a sequence over t2 respects all
/// relations of t1 up to the bound.
PropertyReport check_hom_extension(const Transducer& t1, const Transducer& t2,
                                   const std::vector<StateSeq>& state_images, unsigned bound);

} // namespace sauto

#endif
