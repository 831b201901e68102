#include "sauto/reduction_semigroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace sauto {

std::vector<std::string> PcpInstance::index_symbols() const {
    std::vector<std::string> index;
    for (std::size_t i = 1; i <= phi.size(); ++i) index.push_back(std::to_string(i));
    return index;
}

unsigned PcpInstance::max_tile_length() const {
    std::size_t len = 0;
    for (const auto& w : phi) len = std::max(len, w.size());
    for (const auto& w : psi) len = std::max(len, w.size());
    return static_cast<unsigned>(len);
}

std::vector<std::string>
PcpInstance::image(const std::vector<std::vector<std::string>>& tiles,
                   const std::vector<std::string>& index_word) const {
    std::vector<std::string> result;
    for (const auto& i : index_word) {
        std::size_t n = std::stoul(i);
        if (n == 0 || n > tiles.size())
            throw std::invalid_argument("unknown tile index '" + i + "'");
        const auto& tile = tiles[n - 1];
        result.insert(result.end(), tile.begin(), tile.end());
    }
    return result;
}

bool PcpInstance::is_solution(const std::vector<std::string>& index_word) const {
    return !index_word.empty() && image(phi, index_word) == image(psi, index_word);
}

void PcpInstance::check() const {
    if (lambda.size() < 2) throw std::invalid_argument("instance: need |lambda| >= 2");
    if (phi.empty() || phi.size() != psi.size())
        throw std::invalid_argument("instance: need n >= 1 tiles with both components");
    std::unordered_set<std::string> letters(lambda.begin(), lambda.end());
    if (letters.size() != lambda.size())
        throw std::invalid_argument("instance: duplicate lambda symbol");
    for (const auto& i : index_symbols()) {
        if (letters.count(i))
            throw std::invalid_argument("instance: index symbol '" + i + "' occurs in lambda");
    }
    auto check_tiles = [&](const std::vector<std::vector<std::string>>& tiles, const char* side) {
        for (std::size_t n = 0; n < tiles.size(); ++n) {
            if (tiles[n].empty())
                throw std::invalid_argument("instance: tile " + std::to_string(n + 1) + " has an empty " +
                                            side + " component");
            for (const auto& c : tiles[n]) {
                if (!letters.count(c))
                    throw std::invalid_argument("instance: tile symbol '" + c +
                                                "' not declared in lambda");
            }
        }
    };
    check_tiles(phi, "phi");
    check_tiles(psi, "psi");
    if (lambda_sharp && !letters.count(*lambda_sharp))
        throw std::invalid_argument("instance: lambda_sharp not in lambda");
    if (lambda_r && !letters.count(*lambda_r))
        throw std::invalid_argument("instance: lambda_r not in lambda");
    if (lambda_sharp && lambda_r && *lambda_sharp == *lambda_r)
        throw std::invalid_argument("instance: lambda_sharp and lambda_r must differ");
}

std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
    return base;
}

namespace {

std::pair<std::string, std::string> pick_marked_letters(const PcpInstance& instance) {
    std::vector<std::string> sorted = instance.lambda;
    std::sort(sorted.begin(), sorted.end());
    std::string sharp = instance.lambda_sharp.value_or(sorted[0]);
    std::string filler;
    if (instance.lambda_r) {
        filler = *instance.lambda_r;
    } else {
        for (const auto& s : sorted) {
            if (s != sharp) {
                filler = s;
                break;
            }
        }
    }
    if (sharp == filler) throw std::invalid_argument("lambda_sharp and lambda_r must differ");
    return {sharp, filler};
}

} // namespace

SemigroupReduction SemigroupReduction::build(const PcpInstance& instance,
                                             const FreeBasisProvider& provider) {
    instance.check();

    SemigroupReduction red;
    red.instance_ = instance;
    unsigned max_len = instance.max_tile_length();
    red.basis_ = build_free_basis(instance.lambda, instance.index_symbols(), max_len, provider);
    const Transducer& rhat = red.basis_.automaton;

    auto [sharp, filler] = pick_marked_letters(instance);

    SemigroupSymbols& sym = red.symbols_;
    sym.lambda_sharp = sharp;
    sym.lambda_r = filler;
    sym.gamma = rhat.letter_names();

    std::vector<std::string> taken = rhat.state_names();
    sym.mark1 = fresh_name("#1", taken);
    taken.push_back(sym.mark1);
    sym.mark2 = fresh_name("#2", taken);
    taken.push_back(sym.mark2);

    std::vector<std::string> letters_taken = sym.gamma;
    auto new_letter = [&letters_taken](const char* base) {
        std::string name = fresh_name(base, letters_taken);
        letters_taken.push_back(name);
        return name;
    };
    sym.a = new_letter("a");
    sym.b = new_letter("b");
    sym.iota = new_letter("iota");
    sym.alpha = new_letter("alpha");
    sym.alpha_prime = new_letter("alpha'");
    sym.f_alpha = new_letter("f_alpha");
    sym.beta = new_letter("beta");
    sym.beta_prime = new_letter("beta'");
    sym.f_beta = new_letter("f_beta");
    sym.f = new_letter("f");

    TransducerSpec spec;
    spec.states = rhat.state_names();
    spec.states.push_back(sym.mark1);
    spec.states.push_back(sym.mark2);
    spec.alphabet = letters_taken;

    spec.transitions = rhat.transitions();
    StateId sharp_id = rhat.state(sharp);
    for (const std::string& mark : {sym.mark1, sym.mark2}) {
        for (LetterId c = 0; c < rhat.letter_count(); ++c) {
            // markers copy the duplicated letter-state on the base alphabet
            spec.transitions.push_back({mark, rhat.letter_name(c),
                                        rhat.letter_name(rhat.output(sharp_id, c)),
                                        rhat.state_name(rhat.next(sharp_id, c))});
        }
    }

    // Filler target for an ordinary state: the word-state filler^(projected length).
    std::unordered_set<std::string> index_set;
    for (const auto& i : instance.index_symbols()) index_set.insert(i);
    auto filler_target = [&](StateId s) {
        std::vector<std::string> word(red.basis_.pi(s).size(), filler);
        auto target = red.basis_.state_of(word);
        if (!target)
            throw std::logic_error("free basis lacks the filler word-state of length " +
                                   std::to_string(word.size()));
        return rhat.state_name(*target);
    };
    auto tile_target = [&](const std::vector<std::string>& word) {
        auto target = red.basis_.state_of(word);
        if (!target) throw std::logic_error("free basis lacks a tile word-state");
        return rhat.state_name(*target);
    };

    for (StateId s = 0; s < rhat.state_count(); ++s) {
        const std::string& name = rhat.state_name(s);
        bool is_index = index_set.count(name) > 0;
        std::string fill = filler_target(s);

        spec.transitions.push_back({name, sym.a, sym.a, fill});
        spec.transitions.push_back({name, sym.b, sym.b, name});
        spec.transitions.push_back({name, sym.iota, sym.iota, fill});
        spec.transitions.push_back({name, sym.f_alpha, sym.f_alpha, fill});
        spec.transitions.push_back({name, sym.f_beta, sym.f_beta, fill});
        spec.transitions.push_back({name, sym.f, sym.f, fill});

        if (is_index) {
            std::size_t n = std::stoul(name);
            std::string phi_state = tile_target(instance.phi[n - 1]);
            std::string psi_state = tile_target(instance.psi[n - 1]);
            spec.transitions.push_back({name, sym.alpha, sym.alpha_prime, phi_state});
            spec.transitions.push_back({name, sym.alpha_prime, sym.alpha_prime, phi_state});
            spec.transitions.push_back({name, sym.beta, sym.beta_prime, psi_state});
            spec.transitions.push_back({name, sym.beta_prime, sym.beta_prime, psi_state});
        } else {
            spec.transitions.push_back({name, sym.alpha, sym.f_alpha, fill});
            spec.transitions.push_back({name, sym.alpha_prime, sym.f_alpha, fill});
            spec.transitions.push_back({name, sym.beta, sym.f_beta, fill});
            spec.transitions.push_back({name, sym.beta_prime, sym.f_beta, fill});
        }
    }

    for (const std::string& mark : {sym.mark1, sym.mark2}) {
        spec.transitions.push_back({mark, sym.a, sym.b, sharp});
        spec.transitions.push_back({mark, sym.b, sym.b, mark});
        spec.transitions.push_back({mark, sym.f_alpha, sym.f_alpha, sharp});
        spec.transitions.push_back({mark, sym.f_beta, sym.f_beta, sharp});
        spec.transitions.push_back({mark, sym.f, sym.f, sharp});
        spec.transitions.push_back({mark, sym.alpha, sym.f_alpha, sharp});
        spec.transitions.push_back({mark, sym.beta, sym.f_beta, sharp});
        spec.transitions.push_back({mark, sym.alpha_prime, sym.f, sharp});
        spec.transitions.push_back({mark, sym.beta_prime, sym.f, sharp});
    }
    spec.transitions.push_back({sym.mark1, sym.iota, sym.alpha, sharp});
    spec.transitions.push_back({sym.mark2, sym.iota, sym.beta, sharp});

    red.automaton_ = Transducer::from_spec(spec);
    red.mark1_ = red.automaton_.state(sym.mark1);
    red.mark2_ = red.automaton_.state(sym.mark2);

    red.state_kind_.assign(red.automaton_.state_count(), 0);
    red.state_kind_[red.mark1_] = 1;
    red.state_kind_[red.mark2_] = 2;
    red.state_pi_.resize(red.automaton_.state_count());
    red.index_state_.assign(red.automaton_.state_count(), false);
    for (StateId s = 0; s < rhat.state_count(); ++s) {
        StateId here = red.automaton_.state(rhat.state_name(s));
        red.state_pi_[here] = red.basis_.pi(s);
        red.index_state_[here] = index_set.count(rhat.state_name(s)) > 0;
    }
    return red;
}

bool SemigroupReduction::is_mark(StateId s) const { return state_kind_[s] != 0; }
int SemigroupReduction::mark_index(StateId s) const { return state_kind_[s]; }
bool SemigroupReduction::is_index_state(StateId s) const { return index_state_[s]; }

std::vector<std::string> SemigroupReduction::pi(const StateSeq& p) const {
    std::vector<std::string> word;
    for (StateId s : p) {
        if (is_mark(s))
            throw std::invalid_argument("pi: marker state '" + automaton_.state_name(s) +
                                        "' has no projection");
        word.insert(word.end(), state_pi_[s].begin(), state_pi_[s].end());
    }
    return word;
}

bool SemigroupReduction::r_equiv(const StateSeq& p, const StateSeq& q) const {
    return pi(p) == pi(q);
}

std::size_t SemigroupReduction::r_len(const StateSeq& p) const { return pi(p).size(); }

std::vector<int> SemigroupReduction::mark_projection(const StateSeq& p) const {
    std::vector<int> marks;
    for (StateId s : p) {
        if (is_mark(s)) marks.push_back(mark_index(s));
    }
    return marks;
}

std::vector<std::string> SemigroupReduction::pi_prime(const StateSeq& p) const {
    std::vector<std::string> word;
    for (StateId s : p) {
        if (is_mark(s)) {
            word.push_back(automaton_.state_name(s));
        } else {
            word.insert(word.end(), state_pi_[s].begin(), state_pi_[s].end());
        }
    }
    return word;
}

BlockFactorization SemigroupReduction::factorize_blocks(const StateSeq& p) const {
    // Scan left to right; marks are numbered from the right, so collect
    // segments first and then store them rightmost-first.
    std::vector<StateSeq> segments{StateSeq{}};
    std::vector<int> marks_ltr;
    for (StateId s : p) {
        if (is_mark(s)) {
            marks_ltr.push_back(mark_index(s));
            segments.emplace_back();
        } else {
            segments.back().push_back(s);
        }
    }
    BlockFactorization fact;
    fact.blocks.assign(segments.rbegin(), segments.rend());
    fact.marks.assign(marks_ltr.rbegin(), marks_ltr.rend());
    return fact;
}

bool SemigroupReduction::compatible(const StateSeq& p, const StateSeq& q) const {
    BlockFactorization fp = factorize_blocks(p);
    BlockFactorization fq = factorize_blocks(q);
    if (fp.mark_count() != fq.mark_count()) return false;
    for (std::size_t j = 0; j < fp.blocks.size(); ++j) {
        if (!r_equiv(fp.blocks[j], fq.blocks[j])) return false;
    }
    return true;
}

StateSeq SemigroupReduction::shift_law(const StateSeq& p, unsigned mu) const {
    BlockFactorization fact = factorize_blocks(p);
    std::size_t s = fact.mark_count();
    if (mu < 1 || mu > s)
        throw std::invalid_argument("shift_law: mu must be between 1 and the mark count " +
                                    std::to_string(s));

    StateId sharp_state = automaton_.state(symbols_.lambda_sharp);
    StateId filler_state = automaton_.state(symbols_.lambda_r);

    StateSeq result;
    auto mark_state = [this](int x) { return x == 1 ? mark1_ : mark2_; };
    for (std::size_t j = s; j > mu; --j) {
        result.insert(result.end(), fact.blocks[j].begin(), fact.blocks[j].end());
        result.push_back(mark_state(fact.marks[j - 1]));
    }
    result.insert(result.end(), fact.blocks[mu].begin(), fact.blocks[mu].end());
    result.push_back(sharp_state);
    std::size_t filler_count = mu - 1;
    for (std::size_t j = 0; j < mu; ++j) filler_count += r_len(fact.blocks[j]);
    result.insert(result.end(), filler_count, filler_state);
    return result;
}

Relation SemigroupReduction::witness_relation(const std::vector<std::string>& solution) const {
    if (!instance_.is_solution(solution))
        throw std::invalid_argument("witness_relation: the given index word is not a solution");
    StateSeq middle;
    for (const auto& i : solution) middle.push_back(automaton_.state(i));
    Relation rel;
    rel.left.push_back(mark1_);
    rel.left.insert(rel.left.end(), middle.begin(), middle.end());
    rel.right = rel.left;
    rel.left.push_back(mark1_);
    rel.right.push_back(mark2_);
    if (!decide_equal(automaton_, rel.left, rel.right).equal)
        throw std::logic_error("witness_relation: solution did not induce a relation");
    return rel;
}

std::vector<std::string> SemigroupReduction::extract_solution(const StateSeq& p,
                                                              const StateSeq& q) const {
    if (!decide_equal(automaton_, p, q).equal)
        throw std::invalid_argument("extract_solution: sequences are not equal");
    if (!compatible(p, q))
        throw std::logic_error("extract_solution: equal sequences must be compatible");

    BlockFactorization fp = factorize_blocks(p);
    BlockFactorization fq = factorize_blocks(q);
    std::size_t mu0 = 0;
    for (std::size_t j = 1; j <= fp.mark_count(); ++j) {
        if (fp.marks[j - 1] != fq.marks[j - 1]) {
            mu0 = j;
            break;
        }
    }
    if (mu0 == 0)
        throw std::invalid_argument("extract_solution: marker projections agree; nothing to decode");

    StateSeq left = p, right = q;
    if (mu0 > 1) {
        Word shift(mu0 - 1, automaton_.letter(symbols_.a));
        left = automaton_.dual_act(left, shift);
        right = automaton_.dual_act(right, shift);
        fp = factorize_blocks(left);
        fq = factorize_blocks(right);
    }
    if (fp.marks.empty() || fq.marks.empty() || fp.marks[0] == fq.marks[0])
        throw std::logic_error("extract_solution: shift did not expose differing marks");

    const StateSeq& block = fp.marks[0] == 1 ? fp.blocks[1] : fq.blocks[1];
    std::vector<std::string> index_word;
    for (StateId s : block) {
        if (!is_index_state(s))
            throw std::logic_error("extract_solution: decoded block contains the non-index state '" +
                                   automaton_.state_name(s) + "'");
        index_word.push_back(automaton_.state_name(s));
    }
    if (!instance_.is_solution(index_word))
        throw std::logic_error("extract_solution: decoded word failed the solution check");
    return index_word;
}

std::size_t SemigroupReduction::length_value(const StateSeq& p) const {
    std::size_t total = 0;
    for (StateId s : p) total += is_mark(s) ? 1 : state_pi_[s].size();
    return total;
}

} // namespace sauto
