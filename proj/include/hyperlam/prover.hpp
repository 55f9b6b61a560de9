#ifndef HYPERLAM_PROVER_HPP
#define HYPERLAM_PROVER_HPP

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlam/decompose.hpp"
#include "hyperlam/sequent.hpp"

namespace hyperlam {

enum class Calculus { HL, HMEL0, HLStar };
enum class Verdict { Found, NotDerivable, Unknown };

const char* to_string(Calculus c);
const char* to_string(Verdict v);

/// Zero means "derive a default from the sequent".
struct SearchConfig {
    int max_depth = 0;        // modal calculi only; default 4·connectives
    int max_bang_copies = 0;  // derelictions per !-type on one branch; default |E| + 8
    int star_unfold_cap = 3;  // N_max
    std::size_t state_cap = 200000; // modal calculi only
    bool accept_bounded_omega = false;
    bool eager_invertible = true;
};

struct ProofResult {
    Verdict verdict = Verdict::NotDerivable;
    DerivationPtr tree;
    std::size_t states = 0;
    std::string diagnostics;
};

/// A reading of G as H[e/D[e$/(N÷D)•, d_i/H_i]] for a given division edge.
struct DivisorSplit {
    Hypergraph main; // H[e/N•]
    EdgeId numerator_edge = -1;
    std::vector<Hypergraph> parts; // H_i, one per non-$ denominator edge in order
};

/// All readings for the division edge f, one per distinct premise tuple.
std::vector<DivisorSplit> match_divisor(const Hypergraph& g, EdgeId f);

/// All readings of G as M[m_1/H_1, ..., m_l/H_l], one per distinct tuple.
std::vector<std::vector<Hypergraph>> match_product(const Hypergraph& g, const Hypergraph& m);

/**
 * Backward proof search. HL search is complete and always terminates; the
 * modal calculi are searched under the budgets of SearchConfig and report
 * Unknown when a budget cut a branch. One Prover may answer many queries
 * and keeps its memo table between them.
 */
class Prover {
public:
    explicit Prover(Calculus calc, SearchConfig cfg = {});

    ProofResult prove(const Sequent& s);

    /// Number of inferences at which the connective-count decrease was
    /// asserted, over the lifetime of this prover.
    std::size_t metric_checks() const { return metric_checks_; }
    std::size_t states() const { return states_; }

private:
    struct Outcome {
        Verdict verdict;
        DerivationPtr tree; // conclusion = the explicit sequent of the query
    };
    struct Budget {
        int depth;
        std::map<std::string, int> copies;
    };

    Outcome solve(const Hypergraph& delta, const std::vector<Type>& bank, const Type& goal, Budget budget);
    Outcome search(const Hypergraph& delta, const std::vector<Type>& bank, const Type& goal, Budget& budget);
    void check_metric(const Sequent& conclusion, const std::vector<Sequent>& premises);

    Calculus calc_;
    SearchConfig cfg_;
    SearchConfig active_;
    std::unordered_map<std::string, Outcome> memo_;
    std::size_t metric_checks_ = 0;
    std::size_t states_ = 0;
    std::size_t query_states_ = 0;
    bool capped_ = false;
};

ProofResult derive(const Sequent& s, Calculus calc, const SearchConfig& cfg = {});

/// H[e/(×(M))•] -> A  ==>  H[e/M] -> A. Throws InvalidArgument.
Sequent invert_product(const Sequent& s, EdgeId e);
/// F -> N÷D  ==>  D[$/F] -> N. Throws InvalidArgument.
Sequent invert_rdiv(const Sequent& s);

struct CutResult {
    Sequent composed;
    Verdict verdict = Verdict::Unknown;
    DerivationPtr tree; // cut-free derivation of the composed sequent, if found
};

/// From H -> A and G[e0/A•] -> B, builds G[e0/H] -> B and searches it.
CutResult cut_compose(const Derivation& left, const Derivation& right, EdgeId e0, Calculus calc,
                      const SearchConfig& cfg = {});

/// Mix: H -> !C and G' + n·(!C)• -> B give G' + H -> B. The n copies are
/// the floating edges listed in `copies`.
CutResult mix_compose(const Derivation& left, const Derivation& right, const std::vector<EdgeId>& copies,
                      const SearchConfig& cfg = {});

} // namespace hyperlam

#endif // HYPERLAM_PROVER_HPP
