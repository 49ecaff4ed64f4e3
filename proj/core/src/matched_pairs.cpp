#include "hopfpow/matched_pairs.hpp"

#include "hopfpow/errors.hpp"

#include <optional>

namespace hopfpow {

namespace {

// First failing instance of an axiom, rendered for the report.
class AxiomScan {
public:
    explicit AxiomScan(std::string axiom) { check_.axiom = std::move(axiom); }

    bool failed() const { return !check_.passed; }
    void fail(std::string counterexample) {
        if (check_.passed) {
            check_.passed = false;
            check_.counterexample = std::move(counterexample);
        }
    }
    AxiomCheck take() { return std::move(check_); }

private:
    AxiomCheck check_;
};

MatchedPair pair_from_factorization(std::string name, FiniteGroup f, FiniteGroup g, int n) {
    ActionTables tables;
    const auto slots = static_cast<std::size_t>(f.order()) * static_cast<std::size_t>(g.order());
    tables.hit.resize(slots);
    tables.hitby.resize(slots);
    for (int x = 0; x < g.order(); ++x) {
        for (int a = 0; a < f.order(); ++a) {
            const auto parts = factor_sn(g.element(x) * f.element(a), n);
            const auto fa = f.index_of(parts.f_part);
            const auto gx = g.index_of(parts.g_part);
            if (!fa || !gx) throw InternalConsistencyError("factorization left the subgroups");
            const auto s = static_cast<std::size_t>(x) * static_cast<std::size_t>(f.order()) + static_cast<std::size_t>(a);
            tables.hit[s] = *fa;
            tables.hitby[s] = *gx;
        }
    }
    return MatchedPair::create(std::move(name), std::move(f), std::move(g), std::move(tables));
}

FiniteGroup embedded(const FiniteGroup& small, int degree) {
    std::vector<Permutation> elements;
    elements.reserve(static_cast<std::size_t>(small.order()));
    for (const auto& p : small.elements()) elements.push_back(p.extended(degree));
    return FiniteGroup::from_elements(small.name(), std::move(elements));
}

} // namespace

SnFactorization factor_sn(const Permutation& sigma, int n) {
    if (sigma.degree() != n) {
        throw ArgumentError("factor_sn: permutation of degree " + std::to_string(sigma.degree()) +
                            " given for n = " + std::to_string(n));
    }
    const int shift = n - sigma.inverse()(n);
    auto g_part = Permutation::cycle_power(n, shift);
    auto f_part = sigma * g_part.inverse();
    if (f_part(n) != n) throw InternalConsistencyError("factor_sn: first factor moves n");
    return {std::move(f_part), std::move(g_part), shift};
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

VerificationReport verify_actions(const FiniteGroup& f, const FiniteGroup& g, const ActionTables& tables) {
    const int nf = f.order();
    const int ng = g.order();
    const auto slots = static_cast<std::size_t>(nf) * static_cast<std::size_t>(ng);
    VerificationReport report;

    AxiomScan shape("tables are |G| x |F| with entries in range");
    if (tables.hit.size() != slots || tables.hitby.size() != slots) {
        shape.fail("table sizes " + std::to_string(tables.hit.size()) + ", " + std::to_string(tables.hitby.size()) +
                   " expected " + std::to_string(slots));
    } else {
        for (std::size_t s = 0; s < slots && !shape.failed(); ++s) {
            if (tables.hit[s] < 0 || tables.hit[s] >= nf || tables.hitby[s] < 0 || tables.hitby[s] >= ng) {
                shape.fail("slot " + std::to_string(s));
            }
        }
    }
    const bool usable = !shape.failed();
    report.checks.push_back(shape.take());
    if (!usable) return report;

    auto hit = [&](int x, int a) { return tables.hit[static_cast<std::size_t>(x) * static_cast<std::size_t>(nf) + static_cast<std::size_t>(a)]; };
    auto hitby = [&](int x, int a) { return tables.hitby[static_cast<std::size_t>(x) * static_cast<std::size_t>(nf) + static_cast<std::size_t>(a)]; };
    auto fa = [&](int a) { return f.label(a); };
    auto gx = [&](int x) { return g.label(x); };

    AxiomScan left_unit("e |> a = a");
    AxiomScan right_unit("x <| e = x");
    AxiomScan hit_unital("x |> e = e");
    AxiomScan hitby_unital("e <| a = e");
    for (int x = 0; x < ng; ++x) {
        if (hitby(x, f.identity()) != x) right_unit.fail("x = " + gx(x));
        if (hit(x, f.identity()) != f.identity()) hit_unital.fail("x = " + gx(x));
    }
    for (int a = 0; a < nf; ++a) {
        if (hit(g.identity(), a) != a) left_unit.fail("a = " + fa(a));
        if (hitby(g.identity(), a) != g.identity()) hitby_unital.fail("a = " + fa(a));
    }

    AxiomScan left_action("(xy) |> a = x |> (y |> a)");
    AxiomScan hitby_compat("(xy) <| a = (x <| (y |> a))(y <| a)");
    for (int x = 0; x < ng; ++x) {
        for (int y = 0; y < ng; ++y) {
            const int xy = g.multiply(x, y);
            for (int a = 0; a < nf; ++a) {
                if (hit(xy, a) != hit(x, hit(y, a))) {
                    left_action.fail("x = " + gx(x) + ", y = " + gx(y) + ", a = " + fa(a));
                }
                if (hitby(xy, a) != g.multiply(hitby(x, hit(y, a)), hitby(y, a))) {
                    hitby_compat.fail("x = " + gx(x) + ", y = " + gx(y) + ", a = " + fa(a));
                }
            }
        }
    }

    AxiomScan right_action("x <| (ab) = (x <| a) <| b");
    AxiomScan hit_compat("x |> (ab) = (x |> a)((x <| a) |> b)");
    for (int x = 0; x < ng; ++x) {
        for (int a = 0; a < nf; ++a) {
            for (int b = 0; b < nf; ++b) {
                const int ab = f.multiply(a, b);
                if (hitby(x, ab) != hitby(hitby(x, a), b)) {
                    right_action.fail("x = " + gx(x) + ", a = " + fa(a) + ", b = " + fa(b));
                }
                if (hit(x, ab) != f.multiply(hit(x, a), hit(hitby(x, a), b))) {
                    hit_compat.fail("x = " + gx(x) + ", a = " + fa(a) + ", b = " + fa(b));
                }
            }
        }
    }

    for (auto* scan : {&left_unit, &left_action, &right_unit, &right_action, &hit_compat, &hitby_compat,
                       &hit_unital, &hitby_unital}) {
        report.checks.push_back(scan->take());
    }
    return report;
}

MatchedPair MatchedPair::create(std::string name, FiniteGroup f, FiniteGroup g, ActionTables tables) {
    const auto report = verify_actions(f, g, tables);
    if (!report.all_passed()) {
        for (const auto& c : report.checks) {
            if (!c.passed) {
                throw InternalConsistencyError("matched pair '" + name + "' violates " + c.axiom + " (" +
                                               c.counterexample + ")");
            }
        }
    }
    MatchedPair mp;
    mp.name_ = std::move(name);
    mp.f_ = std::move(f);
    mp.g_ = std::move(g);
    mp.tables_ = std::move(tables);
    return mp;
}

std::string MatchedPair::pair_label(int a, int x) const {
    return f_.label(a) + " ⋈ " + g_.label(x);
}

VerificationReport verify(const MatchedPair& mp) {
    return verify_actions(mp.f(), mp.g(), mp.tables());
}

MatchedPair from_factorizable_symmetric(int n) {
    if (n < 3 || n > 6) throw ResourceLimitError("factorizable S_n pair needs 3 <= n <= 6");
    return pair_from_factorization("S" + std::to_string(n), embedded(symmetric_group(n - 1), n), cyclic_group(n), n);
}

MatchedPair from_factorizable_alternating(int n) {
    if (n % 2 == 0) throw ArgumentError("factorizable A_n pair needs odd n");
    if (n != 5) throw ResourceLimitError("factorizable A_n pair is supported for n = 5 only");
    return pair_from_factorization("A" + std::to_string(n), embedded(alternating_group(n - 1), n), cyclic_group(n), n);
}

MatchedPair double_pair(const FiniteGroup& g) {
    ActionTables tables;
    const int n = g.order();
    tables.hit.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    tables.hitby.resize(tables.hit.size());
    for (int x = 0; x < n; ++x) {
        for (int a = 0; a < n; ++a) {
            const auto s = static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
            tables.hit[s] = a;
            tables.hitby[s] = g.multiply(g.inverse(a), g.multiply(x, a));
        }
    }
    return MatchedPair::create("double(" + g.name() + ")", g, g, std::move(tables));
}

MatchedPair trivial_pair(const FiniteGroup& f, const FiniteGroup& g) {
    ActionTables tables;
    const auto slots = static_cast<std::size_t>(f.order()) * static_cast<std::size_t>(g.order());
    tables.hit.resize(slots);
    tables.hitby.resize(slots);
    for (int x = 0; x < g.order(); ++x) {
        for (int a = 0; a < f.order(); ++a) {
            const auto s = static_cast<std::size_t>(x) * static_cast<std::size_t>(f.order()) + static_cast<std::size_t>(a);
            tables.hit[s] = a;
            tables.hitby[s] = x;
        }
    }
    return MatchedPair::create("trivial(" + f.name() + "," + g.name() + ")", f, g, std::move(tables));
}

FiniteGroup bowtie_group(const MatchedPair& mp) {
    const int nf = mp.f().order();
    const int ng = mp.g().order();
    const int order = nf * ng;
    auto index = [ng](int a, int x) { return a * ng + x; };
    std::vector<int> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    std::vector<std::string> labels(static_cast<std::size_t>(order));
    for (int a = 0; a < nf; ++a) {
        for (int x = 0; x < ng; ++x) {
            labels[static_cast<std::size_t>(index(a, x))] = mp.pair_label(a, x);
            for (int b = 0; b < nf; ++b) {
                for (int y = 0; y < ng; ++y) {
                    const int first = mp.f().multiply(a, mp.hit(x, b));
                    const int second = mp.g().multiply(mp.hitby(x, b), y);
                    table[static_cast<std::size_t>(index(a, x)) * static_cast<std::size_t>(order) +
                          static_cast<std::size_t>(index(b, y))] = index(first, second);
                }
            }
        }
    }
    return FiniteGroup::from_cayley_table(mp.f().name() + "⋈" + mp.g().name(), order, std::move(table),
                                          std::move(labels));
}

} // namespace hopfpow
