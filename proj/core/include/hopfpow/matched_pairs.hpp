#pragma once

#include "hopfpow/perm_groups.hpp"

#include <string>
#include <vector>

namespace hopfpow {

/// sigma = f_part * g_part with g_part = tau^shift (tau the standard n-cycle),
/// shift = n - sigma^{-1}(n), and f_part fixing n.
struct SnFactorization {
    Permutation f_part;
    Permutation g_part;
    int shift = 0;
};

SnFactorization factor_sn(const Permutation& sigma, int n);

/// Raw action tables of a candidate matched pair, indexed [x * |F| + a].
/// hit holds indices of x |> a in F, hitby indices of x <| a in G.
struct ActionTables {
    std::vector<int> hit;
    std::vector<int> hitby;
};

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::string counterexample;
};

struct VerificationReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
};

/// Exhaustive check of the matched-pair axioms on raw tables.
VerificationReport verify_actions(const FiniteGroup& f, const FiniteGroup& g, const ActionTables& tables);

/// A matched pair (F, G, |>, <|): G acts on F from the left, F acts on G from the right,
/// x a = (x |> a)(x <| a) in F |><| G. Verified at construction.
class MatchedPair {
public:
    /// Throws InternalConsistencyError if any axiom fails.
    static MatchedPair create(std::string name, FiniteGroup f, FiniteGroup g, ActionTables tables);

    const std::string& name() const noexcept { return name_; }
    const FiniteGroup& f() const noexcept { return f_; }
    const FiniteGroup& g() const noexcept { return g_; }
    const ActionTables& tables() const noexcept { return tables_; }

    int hit(int x, int a) const { return tables_.hit[slot(x, a)]; }
    int hitby(int x, int a) const { return tables_.hitby[slot(x, a)]; }

    /// Renders the bowtie element (a, x) as "a ⋈ x".
    std::string pair_label(int a, int x) const;

private:
    MatchedPair() = default;
    std::size_t slot(int x, int a) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(f_.order()) + static_cast<std::size_t>(a);
    }

    std::string name_;
    FiniteGroup f_ = cyclic_group(1);
    FiniteGroup g_ = cyclic_group(1);
    ActionTables tables_;
};

VerificationReport verify(const MatchedPair& mp);

/// S_n = S_{n-1} C_n with F the stabilizer of n (degree-n permutations) and G = <(1 2 ... n)>.
MatchedPair from_factorizable_symmetric(int n);
/// A_n = A_{n-1} C_n for odd n.
MatchedPair from_factorizable_alternating(int n);
/// (G, G) with trivial |> and x <| a = a^{-1} x a; its bismash is D(kG).
MatchedPair double_pair(const FiniteGroup& g);
/// Both actions trivial; the bismash is k^G (x) kF.
MatchedPair trivial_pair(const FiniteGroup& f, const FiniteGroup& g);

/// F |><| G on pairs (a, x), element index a * |G| + x, with
/// (a, x)(b, y) = (a (x |> b), (x <| b) y).
FiniteGroup bowtie_group(const MatchedPair& mp);

} // namespace hopfpow
