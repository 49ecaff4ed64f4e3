#include "hopfpow/power_analysis.hpp"

#include "hopfpow/errors.hpp"
#include "hopfpow/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace hopfpow {

namespace {

std::string mn(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

} // namespace

std::size_t TpdTable::packed_index(int size, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > size) {
        throw ArgumentError("table cell " + mn(i, j) + " outside 1.." + std::to_string(size));
    }
    const auto s = static_cast<std::size_t>(size);
    const auto r = static_cast<std::size_t>(i - 1);
    return r * s - r * (r - 1) / 2 + static_cast<std::size_t>(j - i);
}

long long TpdTable::at(int i, int j) const { return cells.at(packed_index(size(), i, j)); }
long long& TpdTable::at(int i, int j) { return cells.at(packed_index(size(), i, j)); }

bool OrderReport::contains(int n) const {
    return std::binary_search(realizable.begin(), realizable.end(), n);
}

PowerAnalysis::PowerAnalysis(std::shared_ptr<PowerMatrixFamily> family) : family_(std::move(family)) {
    if (!family_) throw ArgumentError("PowerAnalysis: null family");
}

PowerAnalysis::PowerAnalysis(std::shared_ptr<const HopfAlgebra> algebra, PowerOptions options)
    : PowerAnalysis(std::make_shared<PowerMatrixFamily>(std::move(algebra), options)) {}

int PowerAnalysis::reduce(long long n) {
    if (n < 1) throw ArgumentError("power index must be >= 1, got " + std::to_string(n));
    const long long e = exponent();
    return static_cast<int>((n - 1) % e + 1);
}

const Subspace& PowerAnalysis::tps(int n) {
    n = reduce(n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = tps_.find(n); it != tps_.end()) return *it->second;
    }
    const auto& an = family_->power(n);
    auto space = std::make_unique<Subspace>(nullspace(subtract(an, family_->eta_epsilon())));
    std::lock_guard lock(mutex_);
    auto [it, inserted] = tps_.try_emplace(n, std::move(space));
    return *it->second;
}

long long PowerAnalysis::tpd(int n) {
    n = reduce(n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = tpd_.find(n); it != tpd_.end()) return it->second;
    }
    const auto d = static_cast<long long>(tps(n).dim());
    const auto by_rank = static_cast<long long>(algebra().dim()) + 1 - static_cast<long long>(rank(family_->power(n)));
    if (d != by_rank) {
        throw InternalConsistencyError("tpd_" + std::to_string(n) + ": kernel dimension " + std::to_string(d) +
                                       " but dim + 1 - rank = " + std::to_string(by_rank));
    }
    std::lock_guard lock(mutex_);
    tpd_.emplace(n, d);
    return d;
}

long long PowerAnalysis::tpd_pair(int m, int n) {
    m = reduce(m);
    n = reduce(n);
    if (m > n) std::swap(m, n);
    if (m == n) return tpd(n);
    {
        std::lock_guard lock(mutex_);
        if (auto it = pairs_.find({m, n}); it != pairs_.end()) return it->second;
    }
    const auto value = static_cast<long long>(intersect_dim(tps(m), tps(n)));
    std::lock_guard lock(mutex_);
    pairs_.emplace(std::pair{m, n}, value);
    return value;
}

TpdTable PowerAnalysis::table(int jobs) {
    const int e = exponent();
    TpdTable t;
    t.algebra = algebra().provenance().description;
    t.kind = algebra().provenance().kind;
    t.dim = algebra().dim();
    t.exponent = e;
    const int size = e - 1;
    t.cells.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size + 1) / 2, 0);

    for (int n = 1; n <= size; ++n) family_->power(n);
    parallel_for(static_cast<std::size_t>(size), jobs, [&](std::size_t k) { tpd(static_cast<int>(k) + 1); });

    std::vector<std::pair<int, int>> jobs_list;
    for (int i = 1; i <= size; ++i)
        for (int j = i; j <= size; ++j) jobs_list.emplace_back(i, j);
    parallel_for(jobs_list.size(), jobs, [&](std::size_t k) {
        const auto [i, j] = jobs_list[k];
        t.cells[TpdTable::packed_index(size, i, j)] = tpd_pair(i, j);
    });

    if (t.kind == "group") {
        // tpn_n counts the basis elements g with g^n = 1.
        const auto unit = algebra().unit_vector();
        std::vector<long long> row;
        for (int n = 1; n <= size; ++n) {
            const auto& an = family_->power(n);
            long long count = 0;
            for (std::size_t c = 0; c < an.cols(); ++c) {
                if (an.column(c) == unit) ++count;
            }
            row.push_back(count);
        }
        t.tpn = std::move(row);
    }
    return t;
}

OrderDiagnostic PowerAnalysis::has_element_of_order(int n) {
    const int e = exponent();
    if (n < 1 || n > e) throw ArgumentError("order " + std::to_string(n) + " outside 1.." + std::to_string(e));
    OrderDiagnostic d;
    d.n = n;
    d.tpd = n == e ? algebra().dim() : tpd(n);
    for (int m = 1; m < n; ++m) {
        const long long v = n == e ? tpd(m) : tpd_pair(m, n);
        if (v > d.max_below) {
            d.max_below = v;
            d.argmax = m;
        }
    }
    d.realizable = d.tpd > d.max_below;
    return d;
}

OrderReport PowerAnalysis::realizable_orders() {
    OrderReport r;
    r.exponent = exponent();
    for (int n = 1; n <= r.exponent; ++n) {
        auto d = has_element_of_order(n);
        if (d.realizable) r.realizable.push_back(n);
        r.diagnostics.push_back(d);
    }
    return r;
}

int PowerAnalysis::hopf_order(const Vector& v) {
    if (v.size() != static_cast<std::size_t>(algebra().dim())) throw ArgumentError("hopf_order: length mismatch");
    if (is_zero(v)) throw ArgumentError("hopf_order: zero vector");
    const int e = exponent();
    const auto target = mat_vec(family_->eta_epsilon(), v);
    for (int n = 1; n <= e; ++n) {
        if (mat_vec(family_->power(n), v) == target) return n;
    }
    throw InternalConsistencyError("hopf_order: no trivial power up to the exponent");
}

std::shared_ptr<PowerMatrixFamily> transposed_family(PowerMatrixFamily& source,
                                                     std::shared_ptr<const HopfAlgebra> dual_algebra) {
    const int e = source.exponent();
    std::vector<ExactMatrix> powers;
    powers.reserve(static_cast<std::size_t>(e));
    for (int n = 1; n <= e; ++n) powers.push_back(transpose(source.power(n)));
    PowerOptions options;
    options.jobs = source.jobs();
    return PowerMatrixFamily::from_matrices(std::move(dual_algebra), options, std::move(powers));
}

long long group_algebra_tpd_oracle(const FiniteGroup& g, long long n) {
    const auto powers = nth_power_set(g, n);
    const auto nontrivial = std::count_if(powers.begin(), powers.end(), [&](int x) { return x != g.identity(); });
    return g.order() - static_cast<long long>(nontrivial);
}

int dual_delta_order_oracle(const FiniteGroup& g, int element) {
    if (element == g.identity()) return static_cast<int>(group_exponent(g));
    for (long long n = 1;; ++n) {
        const auto powers = nth_power_set(g, n);
        if (!std::binary_search(powers.begin(), powers.end(), element)) return static_cast<int>(n);
    }
}

bool is_commutative(const HopfAlgebra& h) {
    for (int i = 0; i < h.dim(); ++i)
        for (int j = i + 1; j < h.dim(); ++j)
            if (h.mult(i, j) != h.mult(j, i)) return false;
    return true;
}

bool is_cocommutative(const HopfAlgebra& h) {
    for (int i = 0; i < h.dim(); ++i) {
        std::map<std::pair<int, int>, Integer> terms;
        for (const auto& t : h.comult(i)) {
            terms[{t.left, t.right}] += t.coeff;
            terms[{t.right, t.left}] -= t.coeff;
        }
        for (const auto& [key, c] : terms)
            if (sgn(c) != 0) return false;
    }
    return true;
}

CheckReport check_power_rule(PowerAnalysis& a) {
    CheckReport r{"power rule", 0, {}};
    const int e = a.exponent();
    auto& f = a.family();
    for (int m = 1; m <= e; ++m) {
        for (int n = 1; n <= e; ++n) {
            ++r.cases;
            const int mn_index = static_cast<int>((static_cast<long long>(m) * n - 1) % e + 1);
            if (mat_mul(f.power(n), f.power(m)) != f.power(mn_index)) {
                r.failures.push_back("A_" + std::to_string(n) + " A_" + std::to_string(m) + " != A_" +
                                     std::to_string(mn_index));
            }
        }
    }
    return r;
}

CheckReport check_convolution(PowerAnalysis& a, int limit) {
    CheckReport r{"convolution additivity", 0, {}};
    const int top = std::min(a.exponent(), limit);
    auto& f = a.family();
    for (int m = 1; m < top; ++m) {
        for (int n = 1; m + n <= top; ++n) {
            ++r.cases;
            if (convolve_power_matrices(a.algebra(), f.power(m), f.power(n)) != f.power(m + n)) {
                r.failures.push_back("A_" + std::to_string(m + n) + " differs from the convolution of A_" +
                                     std::to_string(m) + " and A_" + std::to_string(n));
            }
        }
    }
    return r;
}

CheckReport check_unit_counit(PowerAnalysis& a) {
    CheckReport r{"powers fix unit and counit", 0, {}};
    const auto unit = a.algebra().unit_vector();
    const auto d = static_cast<std::size_t>(a.algebra().dim());
    ExactMatrix counit_row(1, d);
    for (std::size_t c = 0; c < d; ++c) counit_row(0, c) = a.algebra().counit()[c];
    for (int n = 1; n <= a.exponent(); ++n) {
        ++r.cases;
        const auto& an = a.family().power(n);
        if (mat_vec(an, unit) != unit) r.failures.push_back("A_" + std::to_string(n) + " moves the unit");
        if (mat_mul(counit_row, an) != counit_row) r.failures.push_back("counit not preserved by A_" + std::to_string(n));
    }
    return r;
}

CheckReport check_antipode(PowerAnalysis& a) {
    CheckReport r{"antipode squares to identity", 1, {}};
    const auto& s = a.family().antipode();
    if (mat_mul(s, s) != ExactMatrix::identity(s.rows())) r.failures.push_back("S^2 != I");
    return r;
}

CheckReport check_rank_identity(PowerAnalysis& a) {
    CheckReport r{"tpd_n = dim + 1 - rank(A_n)", 0, {}};
    const auto d = static_cast<long long>(a.algebra().dim());
    for (int n = 1; n < a.exponent(); ++n) {
        ++r.cases;
        const auto kernel = static_cast<long long>(a.tps(n).dim());
        const auto by_rank = d + 1 - static_cast<long long>(rank(a.family().power(n)));
        if (kernel != by_rank) {
            r.failures.push_back("n = " + std::to_string(n) + ": " + std::to_string(kernel) + " vs " + std::to_string(by_rank));
        }
    }
    return r;
}

CheckReport check_antidiagonal(const TpdTable& t) {
    CheckReport r{"anti-diagonal symmetry", 0, {}};
    const int e = t.exponent;
    for (int m = 1; m < e; ++m) {
        for (int n = m; n < e; ++n) {
            ++r.cases;
            if (t.at(m, n) != t.at(e - m, e - n)) {
                r.failures.push_back("tpd" + mn(m, n) + " = " + std::to_string(t.at(m, n)) + " but tpd" +
                                     mn(e - m, e - n) + " = " + std::to_string(t.at(e - m, e - n)));
            }
        }
    }
    return r;
}

CheckReport check_opposite(PowerAnalysis& h, PowerAnalysis& op) {
    CheckReport r{"TPS_n(H) = TPS_{e-n}(H^op)", 0, {}};
    const int e = h.exponent();
    if (op.exponent() != e) {
        r.failures.push_back("exponents differ: " + std::to_string(e) + " vs " + std::to_string(op.exponent()));
        return r;
    }
    for (int n = 1; n < e; ++n) {
        ++r.cases;
        if (!(h.tps(n) == op.tps(e - n))) r.failures.push_back("n = " + std::to_string(n));
    }
    return r;
}

CheckReport check_dual_tpd(PowerAnalysis& h, PowerAnalysis& dual) {
    CheckReport r{"tpd_n(H) = tpd_n(H*)", 0, {}};
    const int e = h.exponent();
    if (dual.exponent() != e) {
        r.failures.push_back("exponents differ: " + std::to_string(e) + " vs " + std::to_string(dual.exponent()));
        return r;
    }
    for (int n = 1; n < e; ++n) {
        ++r.cases;
        if (h.tpd(n) != dual.tpd(n)) {
            r.failures.push_back("n = " + std::to_string(n) + ": " + std::to_string(h.tpd(n)) + " vs " +
                                 std::to_string(dual.tpd(n)));
        }
    }
    return r;
}

std::vector<CheckReport> check_symmetries(PowerAnalysis& h, const PowerOptions& options, int jobs) {
    std::vector<CheckReport> out;
    out.push_back(check_antidiagonal(h.table(jobs)));
    PowerAnalysis op(std::make_shared<const HopfAlgebra>(opposite(h.algebra())), options);
    out.push_back(check_opposite(h, op));
    PowerAnalysis du(std::make_shared<const HopfAlgebra>(dual(h.algebra())), options);
    out.push_back(check_dual_tpd(h, du));
    return out;
}

CheckReport check_coprime_double(PowerAnalysis& double_algebra, int group_order) {
    CheckReport r{"tpd_n(D(kG)) = 1 for n prime to |G|", 0, {}};
    const int e = double_algebra.exponent();
    for (int n = 1; n <= e; ++n) {
        if (std::gcd(n, group_order) != 1) continue;
        ++r.cases;
        const long long v = double_algebra.tpd(n);
        if (v != 1) r.failures.push_back("n = " + std::to_string(n) + ": tpd = " + std::to_string(v));
    }
    return r;
}

CheckReport check_tensor_formula(PowerAnalysis& h, PowerAnalysis& k, PowerAnalysis& hk, int n) {
    CheckReport r{"tensor tpd formula, n = " + std::to_string(n), 1, {}};
    const long long th = h.tpd(n) - 1;
    const long long tk = k.tpd(n) - 1;
    const long long expected = th * k.algebra().dim() + tk * h.algebra().dim() + 1 - th * tk;
    const long long actual = hk.tpd(n);
    if (actual != expected) {
        r.failures.push_back("expected " + std::to_string(expected) + ", computed " + std::to_string(actual));
    }
    return r;
}

CheckReport check_group_oracle(PowerAnalysis& a, const FiniteGroup& g) {
    CheckReport r{"group tpd oracle", 0, {}};
    for (int n = 1; n <= a.exponent(); ++n) {
        ++r.cases;
        const long long expected = group_algebra_tpd_oracle(g, n);
        const long long actual = a.tpd(n);
        if (actual != expected) {
            r.failures.push_back("n = " + std::to_string(n) + ": oracle " + std::to_string(expected) + ", computed " +
                                 std::to_string(actual));
        }
    }
    return r;
}

CheckReport check_dual_delta_orders(PowerAnalysis& a, const FiniteGroup& g) {
    CheckReport r{"delta Hopf order oracle", 0, {}};
    if (a.algebra().dim() != g.order()) {
        r.failures.push_back("dimension differs from the group order");
        return r;
    }
    for (int x = 0; x < g.order(); ++x) {
        ++r.cases;
        Vector v(static_cast<std::size_t>(g.order()));
        v[static_cast<std::size_t>(x)] = 1;
        const int expected = dual_delta_order_oracle(g, x);
        const int actual = a.hopf_order(v);
        if (actual != expected) {
            r.failures.push_back(g.label(x) + ": oracle " + std::to_string(expected) + ", computed " +
                                 std::to_string(actual));
        }
    }
    return r;
}

} // namespace hopfpow
