#include "sauto/word_problem.hpp"

#include <cstring>
#include <unordered_map>

namespace sauto {

namespace {

// Packed key for a residual pair; |p| is fixed during one search, so the
// split point is implicit.
std::string pair_key(const StateSeq& p, const StateSeq& q) {
    std::string key;
    key.resize((p.size() + q.size()) * sizeof(StateId));
    if (!p.empty()) std::memcpy(key.data(), p.data(), p.size() * sizeof(StateId));
    if (!q.empty())
        std::memcpy(key.data() + p.size() * sizeof(StateId), q.data(), q.size() * sizeof(StateId));
    return key;
}

} // namespace

Decision decide_equal(const Transducer& t, const StateSeq& p, const StateSeq& q) {
    struct Node {
        StateSeq p, q;
        std::size_t parent;
        LetterId via;
    };

    std::vector<Node> nodes;
    std::unordered_map<std::string, std::size_t> visited;
    nodes.push_back({p, q, SIZE_MAX, 0});
    visited.emplace(pair_key(p, q), 0);

    auto path_to = [&nodes](std::size_t i, LetterId last) {
        Word w{last};
        while (nodes[i].parent != SIZE_MAX) {
            w.push_back(nodes[i].via);
            i = nodes[i].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        // Identical residuals can never separate; skip expanding them.
        if (nodes[head].p == nodes[head].q) continue;
        for (LetterId a = 0; a < t.letter_count(); ++a) {
            StateSeq rp = nodes[head].p;
            StateSeq rq = nodes[head].q;
            LetterId out_p = t.step(rp, a);
            LetterId out_q = t.step(rq, a);
            if (out_p != out_q) return {false, path_to(head, a)};
            std::string key = pair_key(rp, rq);
            if (visited.emplace(std::move(key), nodes.size()).second) {
                nodes.push_back({std::move(rp), std::move(rq), head, a});
            }
        }
    }
    return {true, {}};
}

bool acts_as_identity(const Transducer& t, const StateSeq& p) {
    return decide_equal(t, p, StateSeq{}).equal;
}

bool next_sequence(std::vector<std::uint32_t>& seq, std::size_t count, unsigned max_len) {
    for (std::size_t j = seq.size(); j-- > 0;) {
        if (seq[j] + 1 < count) {
            ++seq[j];
            std::fill(seq.begin() + j + 1, seq.end(), 0);
            return true;
        }
    }
    if (seq.size() < max_len) {
        seq.assign(seq.size() + 1, 0);
        return true;
    }
    return false;
}

std::vector<Relation> enumerate_relations(const Transducer& t, unsigned max_len) {
    std::vector<Relation> relations;
    std::size_t n = t.state_count();

    StateSeq p;
    while (next_sequence(p, n, max_len)) { // skips the empty p: q <= p and q != p force |p| >= 1
        StateSeq q;
        for (bool more = true; more; more = next_sequence(q, n, max_len)) {
            if (q.size() > p.size() || (q.size() == p.size() && !(q < p))) break;
            if (decide_equal(t, p, q).equal) relations.push_back({p, q});
        }
    }
    return relations;
}

BoundedDecision bounded_separator(const Transducer& t, const StateSeq& p, const StateSeq& q,
                                  unsigned depth) {
    Word u;
    for (bool more = true; more; more = next_sequence(u, t.letter_count(), depth)) {
        if (t.act(p, u) != t.act(q, u)) return {true, u};
    }
    return {false, {}};
}

} // namespace sauto
