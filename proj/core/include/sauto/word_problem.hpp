// word_problem.hpp -- exact equality of state sequences under the action on words
//
// Two state sequences are equal when they act identically on every input
// word.  decide_equal explores the finite set of residual pairs reachable
// under the dual action, comparing single-letter outputs; this is sound and
// complete because at most |Q|^(|p|+|q|) pairs exist.  bounded_separator is
// the independent brute-force oracle used to cross-check it.

#ifndef SAUTO_WORD_PROBLEM_HPP
#define SAUTO_WORD_PROBLEM_HPP

#include "sauto/transducer.hpp"

namespace sauto {

struct Decision {
    bool equal;
    Word separator; // meaningful iff !equal; act(p, separator) != act(q, separator)
};

/// A pair of state sequences known to act identically.
struct Relation {
    StateSeq left;
    StateSeq right;
};

/// Decides p == q under the action on all words.  When separated, the
/// returned witness is shortest-by-search (breadth-first over residual
/// pairs, letters in declaration order); it is not guaranteed to be a
/// globally shortest separator.
Decision decide_equal(const Transducer& t, const StateSeq& p, const StateSeq& q);

/// True iff p acts like the identity on every word (p == empty sequence).
bool acts_as_identity(const Transducer& t, const StateSeq& p);

/// All pairs (p, q) with 0 <= |q| <= |p| <= max_len, p != q as sequences and
/// equal action.  Pairs are emitted with p in shortlex order and, within one
/// p, q in shortlex order; for |p| == |q| only q < p is kept, so symmetric
/// duplicates never appear.
std::vector<Relation> enumerate_relations(const Transducer& t, unsigned max_len);

struct BoundedDecision {
    bool separated; // false means: no separator among words of length <= depth
    Word witness;
};

/// Brute force over all words of length <= depth in shortlex order.
/// Deliberately independent of decide_equal (test oracle).
BoundedDecision bounded_separator(const Transducer& t, const StateSeq& p, const StateSeq& q,
                                  unsigned depth);

/// Shortlex successor over all sequences of length <= max_len with entries in
/// [0, count); returns false when seq was the last one.  Starting from the
/// empty sequence this enumerates every sequence exactly once.
bool next_sequence(std::vector<std::uint32_t>& seq, std::size_t count, unsigned max_len);

} // namespace sauto

#endif
