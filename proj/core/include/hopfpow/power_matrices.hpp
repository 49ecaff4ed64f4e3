#pragma once

#include "hopfpow/exact_linalg.hpp"
#include "hopfpow/hopf_algebra.hpp"

#include <deque>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace hopfpow {

/// On-disk store of power matrices, one file per (structure hash, n):
/// dim, n, then the row-major entries, one decimal per line.
class PowerCache {
public:
    explicit PowerCache(std::filesystem::path directory);

    /// The flag value when given, else $HOPFPOW_CACHE_DIR, else no cache.
    static std::optional<PowerCache> resolve(const std::optional<std::string>& flag);

    const std::filesystem::path& directory() const noexcept { return directory_; }
    std::filesystem::path file_for(const std::string& hash, int n) const;

    /// Missing, truncated or mismatched files count as a miss.
    std::optional<ExactMatrix> load(const std::string& hash, int n, int dim) const;
    void store(const std::string& hash, int n, const ExactMatrix& m) const;

private:
    std::filesystem::path directory_;
};

struct PowerOptions {
    int jobs = 0; // 0: hardware concurrency
    const PowerCache* cache = nullptr;
    int exponent_cap = 256;
};

/// Column j is ε(e_j) times the coordinates of 1.
ExactMatrix eta_epsilon_matrix(const HopfAlgebra& h);

/// A_{n+1} from A_n: column i is Σ c (A_n[:, j] e_k) over the terms c e_j ⊗ e_k of Δ(e_i).
ExactMatrix next_power_matrix(const HopfAlgebra& h, const ExactMatrix& an, int jobs = 1);

/// A_{m+n} assembled from A_m and A_n by h^[m+n] = h_(1)^[m] h_(2)^[n].
ExactMatrix convolve_power_matrices(const HopfAlgebra& h, const ExactMatrix& am, const ExactMatrix& an);

/// Memoized A_1, A_2, ... for one algebra. Safe to share between threads.
class PowerMatrixFamily {
public:
    explicit PowerMatrixFamily(std::shared_ptr<const HopfAlgebra> algebra, PowerOptions options = {});
    /// A family whose matrices A_1 .. A_e were obtained elsewhere (e.g. by transposition).
    /// Checks A_1 = I and A_e = ηε.
    static std::shared_ptr<PowerMatrixFamily> from_matrices(std::shared_ptr<const HopfAlgebra> algebra,
                                                            PowerOptions options, std::vector<ExactMatrix> powers);

    const HopfAlgebra& algebra() const noexcept { return *algebra_; }
    std::shared_ptr<const HopfAlgebra> algebra_ptr() const noexcept { return algebra_; }
    int jobs() const noexcept { return options_.jobs; }

    /// A_n for n >= 1. Once the exponent is known, n is reduced into [1, e].
    const ExactMatrix& power(long long n);
    const ExactMatrix& eta_epsilon() const noexcept { return eta_epsilon_; }

    /// Least n with A_n = ηε. Throws CapExceededError past the cap and
    /// InternalConsistencyError if a bismash product disagrees with exp(F ⋈ G).
    int exponent();
    /// S = [e - 1].
    const ExactMatrix& antipode();
    /// v^[n] for any integer n; n <= 0 reduces modulo the exponent.
    Vector hopf_power(const Vector& v, long long n);

private:
    const ExactMatrix& power_locked(int n);
    int exponent_locked();

    std::shared_ptr<const HopfAlgebra> algebra_;
    PowerOptions options_;
    std::string hash_;
    ExactMatrix eta_epsilon_;
    std::deque<ExactMatrix> powers_; // powers_[k] = A_{k+1}
    std::optional<int> exponent_;
    std::recursive_mutex mutex_;
};

} // namespace hopfpow
