#ifndef HYPERLAM_SEQUENT_HPP
#define HYPERLAM_SEQUENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlam/hypergraph.hpp"
#include "hyperlam/template.hpp"

namespace hyperlam {

struct Sequent {
    Hypergraph antecedent;
    Type succedent;
};

/// rk(antecedent) = rk(succedent) and only logical labels. Throws.
void validate(const Sequent& s);

/// Isomorphism-invariant key.
std::string sequent_key(const Sequent& s);

/// Connectives in the antecedent plus the succedent.
int connectives(const Sequent& s);

bool modal(const Sequent& s);

enum class Rule {
    Axiom,
    DivLeft,
    DivRight,
    MulRight,
    MulLeft,
    BangLeft,
    BangRight,
    Weakening,
    Contraction,
    Cut,
    StarLeft,
    StarRightBounded,
};

const char* to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);

/**
 * One inference. `edge` is the principal edge of the conclusion antecedent
 * for left rules, weakening and contraction. `premise_edge` is the edge of
 * the first premise that receives the numerator in (÷→), and the cut edge
 * e0 of the second premise in (cut). `n` is the iteration count for (*→)
 * and the largest n covered by a bounded (→*).
 *
 * Premise order: (÷→) main premise, then one per non-$ denominator edge in
 * edge order; (→×) one per body edge; (cut) H -> A, then G[e0/A•] -> B;
 * bounded (→*) one per n = 0..n.
 */
struct Derivation {
    Rule rule = Rule::Axiom;
    Sequent conclusion;
    std::vector<std::shared_ptr<const Derivation>> premises;
    std::optional<EdgeId> edge;
    std::optional<EdgeId> premise_edge;
    int n = 0;
};

using DerivationPtr = std::shared_ptr<const Derivation>;

/// Re-validates every node as an instance of its rule.
bool check_tree(const Derivation& d, std::string* why = nullptr);

int count_rule(const Derivation& d, Rule r);
int tree_size(const Derivation& d);
int tree_height(const Derivation& d);

/// Same inference with conclusion replaced by an isomorphic sequent; the
/// principal edge is carried across the isomorphism.
DerivationPtr rebase(const DerivationPtr& d, const Sequent& target);

} // namespace hyperlam

#endif // HYPERLAM_SEQUENT_HPP
