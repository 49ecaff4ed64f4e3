#include "hopfpow/power_matrices.hpp"

#include "hopfpow/errors.hpp"
#include "hopfpow/parallel.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace hopfpow {

namespace {

std::vector<Vector> columns_of(const ExactMatrix& m) {
    std::vector<Vector> cols(m.cols(), Vector(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(row[c]) != 0) cols[c][r] = row[c];
        }
    }
    return cols;
}

} // namespace

PowerCache::PowerCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<PowerCache> PowerCache::resolve(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return PowerCache(*flag);
    if (const char* env = std::getenv("HOPFPOW_CACHE_DIR"); env != nullptr && *env != '\0') return PowerCache(env);
    return std::nullopt;
}

std::filesystem::path PowerCache::file_for(const std::string& hash, int n) const {
    return directory_ / (hash + "-" + std::to_string(n) + ".pow");
}

std::optional<ExactMatrix> PowerCache::load(const std::string& hash, int n, int dim) const {
    std::ifstream in(file_for(hash, n));
    if (!in) return std::nullopt;
    long long file_dim = 0;
    long long file_n = 0;
    if (!(in >> file_dim >> file_n) || file_dim != dim || file_n != n) return std::nullopt;
    const auto d = static_cast<std::size_t>(dim);
    ExactMatrix m(d, d);
    std::string token;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (!(in >> token)) return std::nullopt;
            try {
                m(r, c) = Rational(token);
                m(r, c).canonicalize();
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
    }
    if (in >> token) return std::nullopt;
    return m;
}

void PowerCache::store(const std::string& hash, int n, const ExactMatrix& m) const {
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    const auto target = file_for(hash, n);
    auto temp = target;
    temp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&m));
    {
        std::ofstream out(temp);
        if (!out) return; // the cache only accelerates; an unwritable directory is not fatal
        out << m.rows() << '\n' << n << '\n';
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) out << m(r, c).get_str() << '\n';
        }
        if (!out) {
            std::filesystem::remove(temp, ec);
            return;
        }
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) std::filesystem::remove(temp, ec);
}

ExactMatrix eta_epsilon_matrix(const HopfAlgebra& h) {
    const auto d = static_cast<std::size_t>(h.dim());
    ExactMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (sgn(h.unit()[r]) == 0) continue;
        for (std::size_t c = 0; c < d; ++c) m(r, c) = h.unit()[r] * h.counit()[c];
    }
    return m;
}

ExactMatrix next_power_matrix(const HopfAlgebra& h, const ExactMatrix& an, int jobs) {
    const auto d = static_cast<std::size_t>(h.dim());
    if (an.rows() != d || an.cols() != d) throw ArgumentError("next_power_matrix: shape mismatch");
    const auto cols = columns_of(an);
    ExactMatrix out(d, d);
    parallel_for(d, jobs, [&](std::size_t i) {
        Vector col(d);
        for (const auto& t : h.comult(static_cast<int>(i))) {
            h.accumulate_times_basis(col, cols[static_cast<std::size_t>(t.left)], t.right, t.coeff);
        }
        for (std::size_t r = 0; r < d; ++r) out(r, i) = std::move(col[r]);
    });
    return out;
}

ExactMatrix convolve_power_matrices(const HopfAlgebra& h, const ExactMatrix& am, const ExactMatrix& an) {
    const auto d = static_cast<std::size_t>(h.dim());
    const auto mcols = columns_of(am);
    const auto ncols = columns_of(an);
    ExactMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector col(d);
        for (const auto& t : h.comult(static_cast<int>(i))) {
            const auto prod = h.multiply(mcols[static_cast<std::size_t>(t.left)], ncols[static_cast<std::size_t>(t.right)]);
            for (std::size_t r = 0; r < d; ++r) {
                if (sgn(prod[r]) != 0) col[r] += t.coeff * prod[r];
            }
        }
        out.set_column(i, col);
    }
    return out;
}

PowerMatrixFamily::PowerMatrixFamily(std::shared_ptr<const HopfAlgebra> algebra, PowerOptions options)
    : algebra_(std::move(algebra)), options_(options) {
    if (!algebra_) throw ArgumentError("PowerMatrixFamily: null algebra");
    if (options_.exponent_cap < 1) throw ArgumentError("exponent cap must be positive");
    hash_ = algebra_->structure_hash();
    eta_epsilon_ = eta_epsilon_matrix(*algebra_);
}

std::shared_ptr<PowerMatrixFamily> PowerMatrixFamily::from_matrices(std::shared_ptr<const HopfAlgebra> algebra,
                                                                   PowerOptions options,
                                                                   std::vector<ExactMatrix> powers) {
    auto family = std::make_shared<PowerMatrixFamily>(std::move(algebra), options);
    const auto d = static_cast<std::size_t>(family->algebra().dim());
    if (powers.empty() || powers.front() != ExactMatrix::identity(d)) {
        throw InternalConsistencyError("from_matrices: first matrix is not the identity");
    }
    if (powers.back() != family->eta_epsilon_) {
        throw InternalConsistencyError("from_matrices: last matrix is not eta epsilon");
    }
    int first_trivial = 0;
    for (std::size_t k = 0; k < powers.size() && first_trivial == 0; ++k) {
        if (powers[k] == family->eta_epsilon_) first_trivial = static_cast<int>(k) + 1;
    }
    for (auto& m : powers) family->powers_.push_back(std::move(m));
    family->exponent_ = first_trivial;
    family->powers_.resize(static_cast<std::size_t>(first_trivial), ExactMatrix());
    return family;
}

const ExactMatrix& PowerMatrixFamily::power(long long n) {
    if (n < 1) throw ArgumentError("power matrix index must be >= 1, got " + std::to_string(n));
    std::lock_guard lock(mutex_);
    if (exponent_) n = (n - 1) % *exponent_ + 1;
    if (n > options_.exponent_cap) {
        n = (n - 1) % exponent_locked() + 1;
    }
    return power_locked(static_cast<int>(n));
}

const ExactMatrix& PowerMatrixFamily::power_locked(int n) {
    while (static_cast<int>(powers_.size()) < n) {
        const int next = static_cast<int>(powers_.size()) + 1;
        std::optional<ExactMatrix> loaded;
        if (options_.cache != nullptr) loaded = options_.cache->load(hash_, next, algebra_->dim());
        if (loaded) {
            powers_.push_back(std::move(*loaded));
            continue;
        }
        if (next == 1) {
            powers_.push_back(ExactMatrix::identity(static_cast<std::size_t>(algebra_->dim())));
        } else {
            powers_.push_back(next_power_matrix(*algebra_, powers_.back(), options_.jobs));
        }
        if (options_.cache != nullptr) options_.cache->store(hash_, next, powers_.back());
    }
    return powers_[static_cast<std::size_t>(n - 1)];
}

int PowerMatrixFamily::exponent() {
    std::lock_guard lock(mutex_);
    return exponent_locked();
}

int PowerMatrixFamily::exponent_locked() {
    if (exponent_) return *exponent_;
    for (int n = 1; n <= options_.exponent_cap; ++n) {
        if (power_locked(n) == eta_epsilon_) {
            const auto& expected = algebra_->provenance().bowtie_exponent;
            if (expected && *expected != n) {
                throw InternalConsistencyError("exponent " + std::to_string(n) + " of " +
                                               algebra_->provenance().description +
                                               " differs from the group exponent " + std::to_string(*expected));
            }
            exponent_ = n;
            return n;
        }
    }
    throw CapExceededError("no exponent found up to " + std::to_string(options_.exponent_cap));
}

const ExactMatrix& PowerMatrixFamily::antipode() {
    std::lock_guard lock(mutex_);
    const int e = exponent_locked();
    return e == 1 ? eta_epsilon_ : power_locked(e - 1);
}

Vector PowerMatrixFamily::hopf_power(const Vector& v, long long n) {
    if (v.size() != static_cast<std::size_t>(algebra_->dim())) throw ArgumentError("hopf_power: length mismatch");
    std::lock_guard lock(mutex_);
    if (n < 1 || n > options_.exponent_cap || exponent_) {
        const long long e = exponent_locked();
        n = ((n - 1) % e + e) % e + 1;
    }
    return mat_vec(power_locked(static_cast<int>(n)), v);
}

} // namespace hopfpow
