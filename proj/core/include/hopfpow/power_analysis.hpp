#pragma once

#include "hopfpow/exact_linalg.hpp"
#include "hopfpow/hopf_algebra.hpp"
#include "hopfpow/perm_groups.hpp"
#include "hopfpow/power_matrices.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hopfpow {

/// tpd_{i,j} for 1 <= i <= j <= e - 1, packed row by row.
struct TpdTable {
    std::string algebra; // provenance description
    std::string kind;
    int dim = 0;
    int exponent = 1;
    std::vector<long long> cells;
    /// tpn_1 .. tpn_{e-1}, group algebras only.
    std::optional<std::vector<long long>> tpn;

    int size() const noexcept { return exponent - 1; }
    /// Symmetric in (i, j).
    long long at(int i, int j) const;
    long long& at(int i, int j);
    static std::size_t packed_index(int size, int i, int j);

    friend bool operator==(const TpdTable&, const TpdTable&) = default;
};

struct OrderDiagnostic {
    int n = 0;
    long long tpd = 0;
    long long max_below = 0; // max over m < n of tpd_{m,n}; 0 when n = 1
    int argmax = 0;
    bool realizable = false;
};

struct OrderReport {
    int exponent = 1;
    std::vector<int> realizable;
    std::vector<OrderDiagnostic> diagnostics; // n = 1 .. e

    bool contains(int n) const;
};

struct CheckReport {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// Trivial power spaces and everything derived from them, for one algebra.
class PowerAnalysis {
public:
    explicit PowerAnalysis(std::shared_ptr<PowerMatrixFamily> family);
    PowerAnalysis(std::shared_ptr<const HopfAlgebra> algebra, PowerOptions options);

    PowerMatrixFamily& family() noexcept { return *family_; }
    const HopfAlgebra& algebra() const noexcept { return family_->algebra(); }
    int exponent() { return family_->exponent(); }

    /// Canonical basis of ker(A_n - ηε); n >= 1, reduced into [1, e].
    const Subspace& tps(int n);
    /// dim TPS_n, cross-checked against dim + 1 - rank(A_n) for n < e.
    long long tpd(int n);
    long long tpd_pair(int m, int n);

    /// Every cell, cells computed on up to `jobs` threads.
    TpdTable table(int jobs = 1);

    /// tpd_n > tpd_{m,n} for all m < n.
    OrderDiagnostic has_element_of_order(int n);
    OrderReport realizable_orders();

    /// Least n >= 1 with A_n v = ηε v.
    int hopf_order(const Vector& v);

private:
    int reduce(long long n);

    std::shared_ptr<PowerMatrixFamily> family_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<Subspace>> tps_;
    std::map<int, long long> tpd_;
    std::map<std::pair<int, int>, long long> pairs_;
};

/// Build a family for dual(H) from the transposes of H's matrices.
std::shared_ptr<PowerMatrixFamily> transposed_family(PowerMatrixFamily& source,
                                                     std::shared_ptr<const HopfAlgebra> dual_algebra);

/// |G| - |{g^n} \ {e}|, the value of tpd_n(kG) computed on the group side.
long long group_algebra_tpd_oracle(const FiniteGroup& g, long long n);
/// Least n such that g is not an n-th power (the exponent for g = e).
int dual_delta_order_oracle(const FiniteGroup& g, int element);

bool is_commutative(const HopfAlgebra& h);
bool is_cocommutative(const HopfAlgebra& h);

/// A_n A_m = A_{mn} for 1 <= m, n <= e; every failure is listed.
CheckReport check_power_rule(PowerAnalysis& a);
/// h^[m+n] = h_(1)^[m] h_(2)^[n] on every basis element, m + n <= min(e, limit).
CheckReport check_convolution(PowerAnalysis& a, int limit = 8);
/// A_n 1 = 1 and ε A_n = ε for n <= e.
CheckReport check_unit_counit(PowerAnalysis& a);
/// S^2 = I for S = A_{e-1}.
CheckReport check_antipode(PowerAnalysis& a);
/// tpd_n = dim + 1 - rank(A_n) for n < e.
CheckReport check_rank_identity(PowerAnalysis& a);
/// Anti-diagonal symmetry of the table.
CheckReport check_antidiagonal(const TpdTable& t);
/// TPS_n(H) = TPS_{e-n}(H^op) as canonical subspaces, 1 <= n < e.
CheckReport check_opposite(PowerAnalysis& h, PowerAnalysis& op);
/// tpd_n(H) = tpd_n(H*) for 1 <= n < e.
CheckReport check_dual_tpd(PowerAnalysis& h, PowerAnalysis& dual);
/// The three symmetry checks together; builds op(H) and dual(H) itself.
std::vector<CheckReport> check_symmetries(PowerAnalysis& h, const PowerOptions& options, int jobs = 1);
/// tpd_n(D(kG)) = 1 whenever gcd(n, |G|) = 1, n <= e.
CheckReport check_coprime_double(PowerAnalysis& double_algebra, int group_order);
/// tpd_n(H ⊗ K) from tpd_n(H), tpd_n(K) and the dimensions.
CheckReport check_tensor_formula(PowerAnalysis& h, PowerAnalysis& k, PowerAnalysis& hk, int n);
/// tpd_n(kG) against the group oracle, all n <= e.
CheckReport check_group_oracle(PowerAnalysis& a, const FiniteGroup& g);
/// Hopf order of every δ_g in k^G against the group oracle.
CheckReport check_dual_delta_orders(PowerAnalysis& a, const FiniteGroup& g);

} // namespace hopfpow
