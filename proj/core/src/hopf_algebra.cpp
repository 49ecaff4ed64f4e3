#include "hopfpow/hopf_algebra.hpp"

#include "hopfpow/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <tuple>

namespace hopfpow {

namespace {

using Pair = std::pair<int, int>;
using Triple = std::tuple<int, int, int>;

template <typename Key>
void add_term(std::map<Key, Integer>& acc, const Key& key, const Integer& coeff) {
    auto [it, inserted] = acc.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

SparseVector to_sparse(const std::map<int, Integer>& acc) {
    SparseVector out;
    out.reserve(acc.size());
    for (const auto& [index, coeff] : acc) {
        if (sgn(coeff) != 0) out.push_back({index, coeff});
    }
    return out;
}

SparseVector single(int index) { return {SparseTerm{index, 1}}; }

std::size_t slot(int dim, int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j);
}

// Sum of coeff * mult(l, k) over terms (l, coeff) of a, i.e. a * e_k.
std::map<int, Integer> times_basis(const HopfAlgebra::Data& d, const SparseVector& a, int k) {
    std::map<int, Integer> acc;
    for (const auto& t : a) {
        for (const auto& u : d.mult[slot(d.dim, t.index, k)]) add_term(acc, u.index, Integer(t.coeff * u.coeff));
    }
    return acc;
}

// e_i * a
std::map<int, Integer> basis_times(const HopfAlgebra::Data& d, int i, const SparseVector& a) {
    std::map<int, Integer> acc;
    for (const auto& t : a) {
        for (const auto& u : d.mult[slot(d.dim, i, t.index)]) add_term(acc, u.index, Integer(t.coeff * u.coeff));
    }
    return acc;
}

std::map<Pair, Integer> coproduct_of(const HopfAlgebra::Data& d, const SparseVector& a) {
    std::map<Pair, Integer> acc;
    for (const auto& t : a) {
        for (const auto& c : d.comult[static_cast<std::size_t>(t.index)]) {
            add_term(acc, Pair{c.left, c.right}, Integer(t.coeff * c.coeff));
        }
    }
    return acc;
}

class Checker {
public:
    void record(const std::string& name, bool ok, const std::string& where) {
        report_.checks.emplace_back(name, ok);
        if (!ok && report_.first_failure.empty()) report_.first_failure = name + " fails at " + where;
    }
    AxiomReport take() { return std::move(report_); }

private:
    AxiomReport report_;
};

std::string fnv_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

AxiomReport check_axioms(const HopfAlgebra::Data& d, std::uint64_t seed, int full_scan_limit, int samples) {
    Checker checker;
    const int n = d.dim;
    const auto nn = static_cast<std::size_t>(n);
    if (n < 1 || d.labels.size() != nn || d.mult.size() != nn * nn || d.comult.size() != nn ||
        d.counit.size() != nn || d.unit.size() != nn) {
        checker.record("shape", false, "structure constant tables");
        return checker.take();
    }
    checker.record("shape", true, "");

    SparseVector unit;
    for (int i = 0; i < n; ++i) {
        if (sgn(d.unit[static_cast<std::size_t>(i)]) != 0) unit.push_back({i, d.unit[static_cast<std::size_t>(i)]});
    }

    {
        bool ok = true;
        std::string where;
        for (int k = 0; k < n && ok; ++k) {
            const auto right = to_sparse(times_basis(d, unit, k));
            const auto left = to_sparse(basis_times(d, k, unit));
            if (right != single(k) || left != single(k)) {
                ok = false;
                where = "e_" + std::to_string(k);
            }
        }
        checker.record("unit", ok, where);
    }

    const bool full = n <= full_scan_limit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);

    {
        bool ok = true;
        std::string where;
        auto check = [&](int i, int j, int k) {
            const auto lhs = times_basis(d, d.mult[slot(n, i, j)], k);
            const auto rhs = basis_times(d, i, d.mult[slot(n, j, k)]);
            if (lhs != rhs) {
                ok = false;
                where = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
            }
        };
        if (full) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int k = 0; k < n && ok; ++k) check(i, j, k);
        } else {
            for (int s = 0; s < samples && ok; ++s) {
                const int i = pick(rng);
                const int j = pick(rng);
                check(i, j, pick(rng));
            }
        }
        checker.record("associativity", ok, where);
    }

    {
        bool coassoc = true;
        bool counit_ok = true;
        std::string where_coassoc;
        std::string where_counit;
        for (int i = 0; i < n; ++i) {
            std::map<Triple, Integer> left;
            std::map<Triple, Integer> right;
            std::map<int, Integer> eps_left;
            std::map<int, Integer> eps_right;
            for (const auto& t : d.comult[static_cast<std::size_t>(i)]) {
                for (const auto& u : d.comult[static_cast<std::size_t>(t.left)]) {
                    add_term(left, Triple{u.left, u.right, t.right}, Integer(t.coeff * u.coeff));
                }
                for (const auto& u : d.comult[static_cast<std::size_t>(t.right)]) {
                    add_term(right, Triple{t.left, u.left, u.right}, Integer(t.coeff * u.coeff));
                }
                const Integer& el = d.counit[static_cast<std::size_t>(t.left)];
                const Integer& er = d.counit[static_cast<std::size_t>(t.right)];
                if (sgn(el) != 0) add_term(eps_left, t.right, Integer(t.coeff * el));
                if (sgn(er) != 0) add_term(eps_right, t.left, Integer(t.coeff * er));
            }
            if (coassoc && left != right) {
                coassoc = false;
                where_coassoc = "e_" + std::to_string(i);
            }
            if (counit_ok && (to_sparse(eps_left) != single(i) || to_sparse(eps_right) != single(i))) {
                counit_ok = false;
                where_counit = "e_" + std::to_string(i);
            }
        }
        checker.record("coassociativity", coassoc, where_coassoc);
        checker.record("counit", counit_ok, where_counit);
    }

    {
        bool ok = true;
        std::string where;
        auto check = [&](int i, int j) {
            const auto& prod = d.mult[slot(n, i, j)];
            const auto lhs = coproduct_of(d, prod);
            std::map<Pair, Integer> rhs;
            for (const auto& a : d.comult[static_cast<std::size_t>(i)]) {
                for (const auto& b : d.comult[static_cast<std::size_t>(j)]) {
                    const auto& l = d.mult[slot(n, a.left, b.left)];
                    const auto& r = d.mult[slot(n, a.right, b.right)];
                    if (l.empty() || r.empty()) continue;
                    const Integer ab = a.coeff * b.coeff;
                    for (const auto& x : l)
                        for (const auto& y : r) add_term(rhs, Pair{x.index, y.index}, Integer(ab * x.coeff * y.coeff));
                }
            }
            Integer eps_prod = 0;
            for (const auto& t : prod) eps_prod += t.coeff * d.counit[static_cast<std::size_t>(t.index)];
            const Integer eps_pair = d.counit[static_cast<std::size_t>(i)] * d.counit[static_cast<std::size_t>(j)];
            if (lhs != rhs || eps_prod != eps_pair) {
                ok = false;
                where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        };
        if (full) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) check(i, j);
        } else {
            for (int s = 0; s < samples && ok; ++s) {
                const int i = pick(rng);
                check(i, pick(rng));
            }
        }
        const auto unit_coproduct = coproduct_of(d, unit);
        std::map<Pair, Integer> unit_tensor;
        for (const auto& a : unit)
            for (const auto& b : unit) add_term(unit_tensor, Pair{a.index, b.index}, Integer(a.coeff * b.coeff));
        Integer eps_unit = 0;
        for (const auto& t : unit) eps_unit += t.coeff * d.counit[static_cast<std::size_t>(t.index)];
        if (ok && (unit_coproduct != unit_tensor || eps_unit != 1)) {
            ok = false;
            where = "unit";
        }
        checker.record("bialgebra compatibility", ok, where);
    }
    return checker.take();
}

HopfAlgebra HopfAlgebra::create(Data data) {
    const auto report = check_axioms(data);
    if (!report.all_passed()) {
        throw InternalConsistencyError("Hopf algebra " + data.provenance.description + ": " + report.first_failure);
    }
    return HopfAlgebra(std::move(data));
}

Vector HopfAlgebra::unit_vector() const {
    Vector v(static_cast<std::size_t>(dim()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = data_.unit[i];
    return v;
}

Rational HopfAlgebra::counit_of(const Vector& v) const {
    if (v.size() != static_cast<std::size_t>(dim())) throw ArgumentError("counit_of: length mismatch");
    Rational out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0 && sgn(data_.counit[i]) != 0) out += v[i] * data_.counit[i];
    }
    return out;
}

void HopfAlgebra::accumulate_times_basis(Vector& out, const Vector& v, int k, const Integer& factor) const {
    Rational tmp;
    for (int l = 0; l < dim(); ++l) {
        const Rational& vl = v[static_cast<std::size_t>(l)];
        if (sgn(vl) == 0) continue;
        for (const auto& t : mult(l, k)) {
            tmp = vl * t.coeff;
            if (factor != 1) tmp *= factor;
            out[static_cast<std::size_t>(t.index)] += tmp;
        }
    }
}

Vector HopfAlgebra::multiply(const Vector& a, const Vector& b) const {
    const auto n = static_cast<std::size_t>(dim());
    if (a.size() != n || b.size() != n) throw ArgumentError("multiply: length mismatch");
    Vector out(n);
    Vector scaled(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(b[k]) == 0) continue;
        for (std::size_t l = 0; l < n; ++l) scaled[l] = sgn(a[l]) == 0 ? Rational(0) : Rational(a[l] * b[k]);
        accumulate_times_basis(out, scaled, static_cast<int>(k), Integer(1));
    }
    return out;
}

std::string HopfAlgebra::structure_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        h ^= 0xff;
        h *= 0x100000001b3ULL;
    };
    feed("dim " + std::to_string(dim()));
    for (const auto& sv : data_.mult) {
        std::string s = "m";
        for (const auto& t : sv) s += " " + std::to_string(t.index) + ":" + t.coeff.get_str();
        feed(s);
    }
    for (const auto& terms : data_.comult) {
        std::string s = "c";
        for (const auto& t : terms) {
            s += " " + t.coeff.get_str() + ":" + std::to_string(t.left) + "," + std::to_string(t.right);
        }
        feed(s);
    }
    for (const auto& x : data_.counit) feed("e " + x.get_str());
    for (const auto& x : data_.unit) feed("u " + x.get_str());
    return fnv_hex(h);
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (a.data_.dim != b.data_.dim || a.data_.mult != b.data_.mult || a.data_.counit != b.data_.counit ||
        a.data_.unit != b.data_.unit) {
        return false;
    }
    // comultiplication terms may come in any order
    auto merged = [](const std::vector<CoproductTerm>& terms) {
        std::map<std::pair<int, int>, Integer> acc;
        for (const auto& t : terms) acc[{t.left, t.right}] += t.coeff;
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        return acc;
    };
    for (int i = 0; i < a.dim(); ++i) {
        if (merged(a.comult(i)) != merged(b.comult(i))) return false;
    }
    return true;
}

HopfAlgebra group_algebra(const FiniteGroup& g) {
    HopfAlgebra::Data d;
    d.dim = g.order();
    const auto n = static_cast<std::size_t>(d.dim);
    d.mult.resize(n * n);
    d.comult.resize(n);
    d.counit.assign(n, Integer(1));
    d.unit.assign(n, Integer(0));
    d.unit[static_cast<std::size_t>(g.identity())] = 1;
    for (int i = 0; i < d.dim; ++i) {
        d.labels.push_back(g.label(i));
        d.comult[static_cast<std::size_t>(i)].push_back({Integer(1), i, i});
        for (int j = 0; j < d.dim; ++j) d.mult[slot(d.dim, i, j)] = single(g.multiply(i, j));
    }
    d.provenance = {"group", "Q" + g.name(), {g.name()}, std::nullopt};
    return HopfAlgebra::create(std::move(d));
}

HopfAlgebra dual_group_algebra(const FiniteGroup& g) {
    HopfAlgebra::Data d;
    d.dim = g.order();
    const auto n = static_cast<std::size_t>(d.dim);
    d.mult.resize(n * n);
    d.comult.resize(n);
    d.counit.assign(n, Integer(0));
    d.counit[static_cast<std::size_t>(g.identity())] = 1;
    d.unit.assign(n, Integer(1));
    for (int x = 0; x < d.dim; ++x) {
        d.labels.push_back("d[" + g.label(x) + "]");
        d.mult[slot(d.dim, x, x)] = single(x);
        for (int u = 0; u < d.dim; ++u) {
            d.comult[static_cast<std::size_t>(x)].push_back({Integer(1), u, g.multiply(g.inverse(u), x)});
        }
    }
    d.provenance = {"dualgroup", "Q^" + g.name(), {g.name()}, std::nullopt};
    return HopfAlgebra::create(std::move(d));
}

HopfAlgebra bismash(const MatchedPair& mp) {
    const FiniteGroup& f = mp.f();
    const FiniteGroup& g = mp.g();
    const int ng = g.order();
    auto index = [ng](int x, int a) { return a * ng + x; };
    HopfAlgebra::Data d;
    d.dim = f.order() * ng;
    const auto n = static_cast<std::size_t>(d.dim);
    d.labels.resize(n);
    d.mult.resize(n * n);
    d.comult.resize(n);
    d.counit.assign(n, Integer(0));
    d.unit.assign(n, Integer(0));
    for (int a = 0; a < f.order(); ++a) {
        for (int x = 0; x < ng; ++x) {
            const int i = index(x, a);
            d.labels[static_cast<std::size_t>(i)] = "d[" + g.label(x) + "]#" + f.label(a);
            // (d_x # a)(d_y # b) = [x <| a = y] d_x # ab
            const int y = mp.hitby(x, a);
            for (int b = 0; b < f.order(); ++b) {
                d.mult[slot(d.dim, i, index(y, b))] = single(index(x, f.multiply(a, b)));
            }
            // Δ(d_x # a) = Σ_y d_{x y^-1} # (y |> a) ⊗ d_y # a
            auto& terms = d.comult[static_cast<std::size_t>(i)];
            for (int z = 0; z < ng; ++z) {
                terms.push_back({Integer(1), index(g.multiply(x, g.inverse(z)), mp.hit(z, a)), index(z, a)});
            }
            if (x == g.identity()) d.counit[static_cast<std::size_t>(i)] = 1;
            if (a == f.identity()) d.unit[static_cast<std::size_t>(i)] = 1;
        }
    }
    d.provenance.kind = "bismash";
    if (mp.name().starts_with("double(")) {
        d.provenance.description = "D(Q" + f.name() + ")";
    } else {
        d.provenance.description = "Q^" + g.name() + "#Q" + f.name();
    }
    d.provenance.groups = {f.name(), g.name()};
    d.provenance.bowtie_exponent = group_exponent(bowtie_group(mp));
    return HopfAlgebra::create(std::move(d));
}

HopfAlgebra tensor(const HopfAlgebra& h, const HopfAlgebra& k) {
    const int dh = h.dim();
    const int dk = k.dim();
    auto index = [dk](int i, int j) { return i * dk + j; };
    HopfAlgebra::Data d;
    d.dim = dh * dk;
    const auto n = static_cast<std::size_t>(d.dim);
    d.labels.resize(n);
    d.mult.resize(n * n);
    d.comult.resize(n);
    d.counit.resize(n);
    d.unit.resize(n);
    for (int i = 0; i < dh; ++i) {
        for (int j = 0; j < dk; ++j) {
            const int ij = index(i, j);
            const auto uij = static_cast<std::size_t>(ij);
            d.labels[uij] = h.label(i) + " ⊗ " + k.label(j);
            d.counit[uij] = h.counit()[static_cast<std::size_t>(i)] * k.counit()[static_cast<std::size_t>(j)];
            d.unit[uij] = h.unit()[static_cast<std::size_t>(i)] * k.unit()[static_cast<std::size_t>(j)];
            for (const auto& a : h.comult(i)) {
                for (const auto& b : k.comult(j)) {
                    d.comult[uij].push_back({Integer(a.coeff * b.coeff), index(a.left, b.left), index(a.right, b.right)});
                }
            }
            for (int i2 = 0; i2 < dh; ++i2) {
                const auto& hm = h.mult(i, i2);
                if (hm.empty()) continue;
                for (int j2 = 0; j2 < dk; ++j2) {
                    const auto& km = k.mult(j, j2);
                    if (km.empty()) continue;
                    std::map<int, Integer> acc;
                    for (const auto& x : hm)
                        for (const auto& y : km) add_term(acc, index(x.index, y.index), Integer(x.coeff * y.coeff));
                    d.mult[slot(d.dim, ij, index(i2, j2))] = to_sparse(acc);
                }
            }
        }
    }
    d.provenance.kind = "tensor";
    d.provenance.description = h.provenance().description + "⊗" + k.provenance().description;
    d.provenance.groups = h.provenance().groups;
    d.provenance.groups.insert(d.provenance.groups.end(), k.provenance().groups.begin(), k.provenance().groups.end());
    return HopfAlgebra::create(std::move(d));
}

HopfAlgebra dual(const HopfAlgebra& h) {
    HopfAlgebra::Data d;
    d.dim = h.dim();
    const auto n = static_cast<std::size_t>(d.dim);
    std::vector<std::map<int, Integer>> mult(n * n);
    d.comult.resize(n);
    for (int i = 0; i < d.dim; ++i) {
        d.labels.push_back("dual[" + h.label(i) + "]");
        // e*_l e*_r = Σ_i (coefficient of e_l ⊗ e_r in Δ e_i) e*_i
        for (const auto& t : h.comult(i)) add_term(mult[slot(d.dim, t.left, t.right)], i, t.coeff);
    }
    for (int j = 0; j < d.dim; ++j) {
        for (int k = 0; k < d.dim; ++k) {
            // Δ e*_i = Σ_{j,k} (coefficient of e_i in e_j e_k) e*_j ⊗ e*_k
            for (const auto& t : h.mult(j, k)) d.comult[static_cast<std::size_t>(t.index)].push_back({t.coeff, j, k});
        }
    }
    d.mult.reserve(n * n);
    for (const auto& acc : mult) d.mult.push_back(to_sparse(acc));
    d.unit = h.counit();
    d.counit = h.unit();
    d.provenance = h.provenance();
    d.provenance.kind = "dual";
    d.provenance.description = "(" + h.provenance().description + ")^*";
    return HopfAlgebra::create(std::move(d));
}

HopfAlgebra opposite(const HopfAlgebra& h) {
    HopfAlgebra::Data d = h.data();
    for (int i = 0; i < d.dim; ++i) {
        for (int j = 0; j < d.dim; ++j) d.mult[slot(d.dim, i, j)] = h.mult(j, i);
    }
    d.provenance.kind = "op";
    d.provenance.description = "(" + h.provenance().description + ")^op";
    return HopfAlgebra::create(std::move(d));
}

} // namespace hopfpow
