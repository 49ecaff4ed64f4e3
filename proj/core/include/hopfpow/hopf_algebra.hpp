#pragma once

#include "hopfpow/exact_linalg.hpp"
#include "hopfpow/matched_pairs.hpp"
#include "hopfpow/perm_groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopfpow {

struct SparseTerm {
    int index = 0;
    Integer coeff;

    friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<SparseTerm>;

/// coeff * e_left ⊗ e_right
struct CoproductTerm {
    Integer coeff;
    int left = 0;
    int right = 0;

    friend bool operator==(const CoproductTerm&, const CoproductTerm&) = default;
};

/// Which constructor produced an algebra, and from what.
struct Provenance {
    std::string kind;        // group, dualgroup, bismash, tensor, dual, op
    std::string description; // e.g. "QS3", "Q^C4#QS3", "D(QS3)"
    std::vector<std::string> groups;
    /// exp(F ⋈ G) for bismash products, computed from the group side.
    std::optional<long long> bowtie_exponent;
};

/// Structure constants of a finite-dimensional Hopf algebra over Q in a fixed basis.
class HopfAlgebra {
public:
    struct Data {
        int dim = 0;
        std::vector<std::string> labels;
        std::vector<SparseVector> mult; // dim * dim, entry i * dim + j holds e_i e_j
        std::vector<std::vector<CoproductTerm>> comult;
        std::vector<Integer> counit;
        std::vector<Integer> unit;
        Provenance provenance;
    };

    /// Throws InternalConsistencyError when the bialgebra axioms fail
    /// (full scan up to dim 128, sampled above).
    static HopfAlgebra create(Data data);

    int dim() const noexcept { return data_.dim; }
    const std::string& label(int i) const { return data_.labels[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const noexcept { return data_.labels; }
    const SparseVector& mult(int i, int j) const {
        return data_.mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(data_.dim) + static_cast<std::size_t>(j)];
    }
    const std::vector<CoproductTerm>& comult(int i) const { return data_.comult[static_cast<std::size_t>(i)]; }
    const std::vector<Integer>& counit() const noexcept { return data_.counit; }
    const std::vector<Integer>& unit() const noexcept { return data_.unit; }
    const Provenance& provenance() const noexcept { return data_.provenance; }
    const Data& data() const noexcept { return data_; }

    Vector unit_vector() const;
    Rational counit_of(const Vector& v) const;
    /// Product of two coordinate vectors.
    Vector multiply(const Vector& a, const Vector& b) const;
    /// out += factor * (v e_k)
    void accumulate_times_basis(Vector& out, const Vector& v, int k, const Integer& factor) const;

    /// Stable 64-bit FNV-1a hash of the structure constants, as 16 hex digits.
    std::string structure_hash() const;

    friend bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

private:
    explicit HopfAlgebra(Data data) : data_(std::move(data)) {}

    Data data_;
};

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::string first_failure;

    bool all_passed() const;
};

/// Unit, associativity, coassociativity, counit and bialgebra compatibility.
/// Triples and pairs are scanned fully when dim <= full_scan_limit, otherwise
/// `samples` random draws are used.
AxiomReport check_axioms(const HopfAlgebra::Data& data, std::uint64_t seed = 1, int full_scan_limit = 128,
                         int samples = 10000);
inline AxiomReport check_axioms(const HopfAlgebra& h, std::uint64_t seed = 1) {
    return check_axioms(h.data(), seed);
}

HopfAlgebra group_algebra(const FiniteGroup& g);
HopfAlgebra dual_group_algebra(const FiniteGroup& g);
/// k^G # kF; basis element (x, a) has index a * |G| + x.
HopfAlgebra bismash(const MatchedPair& mp);
/// Basis index (i, j) -> i * dim K + j.
HopfAlgebra tensor(const HopfAlgebra& h, const HopfAlgebra& k);
/// Dual Hopf algebra on the dual basis: multiplication and comultiplication
/// swap roles by transposition, as do unit and counit.
HopfAlgebra dual(const HopfAlgebra& h);
HopfAlgebra opposite(const HopfAlgebra& h);

} // namespace hopfpow
