#include "hopfpow/errors.hpp"
#include "hopfpow/power_analysis.hpp"
#include "hopfpow_cli/app.hpp"
#include "hopfpow_cli/element.hpp"
#include "hopfpow_cli/spec.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hopfpow;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

// One criterion: sub-checks print as they finish, the verdict line closes the block.
class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
        std::cout << "criterion " << number_ << ": " << title_ << '\n' << std::flush;
    }

    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        ++count_;
        if (!ok) failed_.push_back(name);
        std::cout << "  " << (ok ? "[PASS] " : "[FAIL] ") << number_ << '.' << count_ << ' ' << name;
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << '\n' << std::flush;
    }

    // Runs body, turning an escaped exception into a failed sub-check.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }

    bool finish() const {
        std::cout << (failed_.empty() ? "[PASS] " : "[FAIL] ") << "criterion " << number_ << ": " << title_ << " ("
                  << count_ - failed_.size() << '/' << count_ << " checks passed";
        if (!failed_.empty()) {
            std::cout << "; failing:";
            for (const auto& f : failed_) std::cout << " [" << f << ']';
        }
        std::cout << ")\n\n" << std::flush;
        return failed_.empty();
    }

private:
    int number_;
    std::string title_;
    std::size_t count_ = 0;
    std::vector<std::string> failed_;
};

struct Printed {
    std::map<std::pair<int, int>, long long> cells;
    std::vector<long long> tpn;
};

Printed load_printed(const std::string& name) {
    const std::string path = std::string(HOPFPOW_TEST_DATA) + "/" + name + ".txt";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing data file " + path);
    Printed p;
    for (std::string line; std::getline(in, line);) {
        std::istringstream row(line);
        std::string head;
        row >> head;
        if (head == "tpn") {
            for (long long v; row >> v;) p.tpn.push_back(v);
        } else if (!head.empty()) {
            int j = 0;
            long long v = 0;
            row >> j >> v;
            p.cells[{std::stoi(head), j}] = v;
        }
    }
    return p;
}

std::shared_ptr<const HopfAlgebra> share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

PowerOptions options() { return PowerOptions{1, nullptr, 256}; }

struct Subject {
    std::string name;
    std::shared_ptr<const HopfAlgebra> algebra;
    std::unique_ptr<PowerAnalysis> analysis;
    TpdTable table;
    double table_seconds = 0;
};

// Algebras shared between criteria, keyed by a short name.
class Registry {
public:
    Subject& add(const std::string& key, const std::string& name, const std::function<HopfAlgebra()>& build) {
        auto& s = subjects_[key];
        if (!s.analysis) {
            s.name = name;
            s.algebra = share(build());
            s.analysis = std::make_unique<PowerAnalysis>(s.algebra, options());
        }
        return s;
    }
    Subject& get(const std::string& key) { return subjects_.at(key); }
    std::map<std::string, Subject>& all() { return subjects_; }

private:
    std::map<std::string, Subject> subjects_;
};

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
    return "{" + out + "}";
}

std::vector<int> in_window(const OrderReport& r, int lo, int hi) {
    std::vector<int> out;
    for (int n : r.realizable)
        if (n >= lo && n <= hi) out.push_back(n);
    return out;
}

std::string first_failure(const CheckReport& r) {
    return r.failures.empty() ? std::to_string(r.cases) + " cases" : r.failures.front();
}

// ---- criterion 1 ----

struct TableCase {
    std::string key;
    std::string name;
    std::function<HopfAlgebra()> build;
    std::string data;
    double limit_seconds;
    bool full_square = false; // printed block covers every row, not just the upper triangle
};

void table_case(Criterion& c, Registry& reg, const TableCase& tc) {
    c.guarded(tc.name + " table", [&] {
        const auto t0 = Clock::now();
        auto& s = reg.add(tc.key, tc.name, tc.build);
        s.table = s.analysis->table(1);
        s.table_seconds = seconds_since(t0);
        const auto printed = load_printed(tc.data);
        std::size_t compared = 0;
        std::vector<std::string> mismatches;
        for (const auto& [ij, v] : printed.cells) {
            ++compared;
            const auto ours = s.table.at(ij.first, ij.second);
            if (ours != v) {
                mismatches.push_back("(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                     ") = " + std::to_string(ours) + " vs printed " + std::to_string(v));
            }
        }
        const std::size_t e1 = static_cast<std::size_t>(s.table.size());
        const std::size_t expected_cells = tc.full_square ? e1 * static_cast<std::size_t>(s.table.exponent / 2)
                                                          : e1 * (e1 + 1) / 2;
        if (compared != expected_cells) {
            mismatches.push_back("printed block has " + std::to_string(compared) + " cells, expected " +
                                 std::to_string(expected_cells));
        }
        if (!printed.tpn.empty()) {
            ++compared;
            if (!s.table.tpn || *s.table.tpn != std::vector<long long>(printed.tpn)) mismatches.push_back("tpn row differs");
        }
        const bool in_time = s.table_seconds < tc.limit_seconds;
        std::string detail = "e=" + std::to_string(s.table.exponent) + ", dim " + std::to_string(s.table.dim) + ", " +
                             std::to_string(compared) + " printed values compared, " + fixed(s.table_seconds) +
                             " s (limit " + fixed(tc.limit_seconds, 0) + " s)";
        if (!mismatches.empty()) detail += "; first mismatch " + mismatches.front();
        c.check(tc.name + " table", mismatches.empty() && in_time, detail);
    });
}

bool criterion_tables(Registry& reg) {
    Criterion c(1, "table reproduction, every printed cell");
    const auto s3 = symmetric_group(3);
    const auto a4 = alternating_group(4);
    const auto s4 = symmetric_group(4);
    const std::vector<TableCase> cases = {
        {"QS3", "QS3", [&] { return group_algebra(s3); }, "group_s3", 1},
        {"QA4", "QA4", [&] { return group_algebra(a4); }, "group_a4", 1},
        {"QS4", "QS4", [&] { return group_algebra(s4); }, "group_s4", 1},
        {"DS3", "D(QS3)", [&] { return bismash(double_pair(s3)); }, "double_s3", 5},
        {"FS3xS3", "Q^S3 (x) QS3", [&] { return tensor(dual_group_algebra(s3), group_algebra(s3)); },
         "dualgroup_s3_tensor_group_s3", 5},
        {"DA4", "D(QA4)", [&] { return bismash(double_pair(a4)); }, "double_a4", 30},
        {"DA4*", "D(QA4)*", [&] { return dual(bismash(double_pair(a4))); }, "double_a4_dual", 30},
        {"DS4", "D(QS4)", [&] { return bismash(double_pair(s4)); }, "double_s4", 600},
        {"DS4*", "D(QS4)*", [&] { return dual(bismash(double_pair(s4))); }, "double_s4_dual", 600},
        {"C4S3", "Q^C4#QS3", [] { return bismash(from_factorizable_symmetric(4)); }, "bismash_c4_s3", 5},
        {"C4S3*", "(Q^C4#QS3)*", [] { return dual(bismash(from_factorizable_symmetric(4))); }, "bismash_c4_s3_dual", 5},
        {"C5S4", "Q^C5#QS4", [] { return bismash(from_factorizable_symmetric(5)); }, "bismash_c5_s4", 900, true},
        {"C5S4*", "(Q^C5#QS4)*", [] { return dual(bismash(from_factorizable_symmetric(5))); }, "bismash_c5_s4_dual", 900,
         true},
    };
    for (const auto& tc : cases) table_case(c, reg, tc);
    c.guarded("Q^C5#QS4 bold diagonal", [&] {
        const std::vector<long long> bold = {69, 57, 86, 37, 85, 33, 88, 41, 77, 19, 104, 21, 69, 61, 76,
                                             33, 85, 31, 94, 41, 73, 21, 96, 25, 77, 57, 86, 13, 97};
        const auto& t = reg.get("C5S4").table;
        bool ok = true;
        for (int n = 2; n <= 30; ++n) ok = ok && t.at(n, n) == bold[static_cast<std::size_t>(n - 2)];
        c.check("Q^C5#QS4 bold diagonal", ok, "tpd_{n,n} for n = 2..30");
    });
    return c.finish();
}

// ---- criterion 2 ----

bool criterion_a5(Registry& reg) {
    Criterion c(2, "claims for Q^C5#QA4 and its dual");
    c.guarded("A5 bismash", [&] {
        const auto t0 = Clock::now();
        auto& h = reg.add("C5A4", "Q^C5#QA4", [] { return bismash(from_factorizable_alternating(5)); });
        auto& d = reg.add("C5A4*", "(Q^C5#QA4)*", [] { return dual(bismash(from_factorizable_alternating(5))); });
        auto& a = *h.analysis;
        auto& b = *d.analysis;
        c.check("exponent 30", a.exponent() == 30 && b.exponent() == 30,
                "H: " + std::to_string(a.exponent()) + ", H*: " + std::to_string(b.exponent()));
        const auto p = a.tpd_pair(3, 13);
        const auto q = b.tpd_pair(3, 13);
        c.check("tpd_{3,13}(H) = 17, tpd_{3,13}(H*) = 21", p == 17 && q == 21,
                std::to_string(p) + " and " + std::to_string(q));
        const auto rh = a.realizable_orders();
        const auto rd = b.realizable_orders();
        auto only = [](const OrderReport& x, const OrderReport& y, std::vector<int> ns) {
            return std::all_of(ns.begin(), ns.end(), [&](int n) { return x.contains(n) && !y.contains(n); });
        };
        c.check("13 and 21 only in H", only(rh, rd, {13, 21}));
        c.check("17 and 25 only in H*", only(rd, rh, {17, 25}));
        const std::vector<int> neither = {14, 16, 19, 23};
        c.check("14, 16, 19, 23 in neither", std::none_of(neither.begin(), neither.end(), [&](int n) {
                    return rh.contains(n) || rd.contains(n);
                }));
        const auto wh = in_window(rh, 2, 30);
        const auto wd = in_window(rd, 2, 30);
        c.check("22 orders n >= 2 in each of H, H*", wh.size() == 22 && wd.size() == 22,
                "H " + join(rh.realizable) + ", H* " + join(rd.realizable));
        const auto secs = seconds_since(t0);
        c.check("runtime < 180 s", secs < 180, fixed(secs) + " s");
    });
    return c.finish();
}

// ---- criterion 3 ----

bool criterion_orders(Registry& reg) {
    Criterion c(3, "realizable orders");
    c.guarded("orders", [&] {
        const auto qs4 = reg.get("QS4").analysis->realizable_orders();
        c.check("QS4 realizes exactly the divisors of 12", qs4.realizable == std::vector<int>{1, 2, 3, 4, 6, 12},
                join(qs4.realizable));
        const auto b = in_window(reg.get("C4S3").analysis->realizable_orders(), 1, 10);
        c.check("Q^C4#QS3 in [1,10]: all but 7 and 10", b == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9}, join(b));
        const auto bd = in_window(reg.get("C4S3*").analysis->realizable_orders(), 1, 10);
        c.check("(Q^C4#QS3)* in [1,10]: all but 7 and 9", bd == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10}, join(bd));
        const auto ds3 = reg.get("DS3").analysis->has_element_of_order(4);
        c.check("D(QS3) has an element of order 4", ds3.realizable,
                "tpd_4 = " + std::to_string(ds3.tpd) + " > " + std::to_string(ds3.max_below));
        const auto ds4 = reg.get("DS4").analysis->has_element_of_order(10);
        const auto ds4d = reg.get("DS4*").analysis->has_element_of_order(10);
        c.check("D(QS4) has order 10, D(QS4)* does not", ds4.realizable && !ds4d.realizable,
                "tpd_10 = " + std::to_string(ds4.tpd) + " vs max above " + std::to_string(ds4.max_below) + "; dual " +
                    std::to_string(ds4d.tpd) + " vs " + std::to_string(ds4d.max_below));
    });
    return c.finish();
}

// ---- criterion 4 ----

bool criterion_elements(Registry& reg) {
    Criterion c(4, "individual Hopf orders");
    auto element = [&](Subject& s, const std::string& text, int expected) {
        c.guarded(s.name + ": " + text, [&] {
            const auto v = cli::parse_element(*s.algebra, text);
            const int got = s.analysis->hopf_order(v);
            c.check(s.name + ": " + text + " has order " + std::to_string(expected), got == expected,
                    "computed " + std::to_string(got));
        });
    };
    auto& b = reg.get("C4S3");
    element(b, "d[(1 3)(2 4)]#(2 3) - d[(1 4 3 2)]#(1 2) + d[(1 3)(2 4)]#(1 3 2)", 5);
    element(b, "d[(1 2 3 4)]#(1 2)", 3);
    element(b, "1#(1 2)", 12);
    element(b, "1#(1 3)", 2);
    element(b, "d[(1 3)(2 4)]#(1 2)", 2);
    element(b, "d[(1 2 3 4)]#(1 2 3)", 2);
    auto& a5 = reg.add("C5A4", "Q^C5#QA4", [] { return bismash(from_factorizable_alternating(5)); });
    auto& s5 = reg.get("C5S4");
    element(a5, "d[(1 2 3 4 5)]#(1 2 4)", 3);
    element(s5, "d[(1 2 3 4 5)]#(1 2 4)", 3);

    c.guarded("basis orders", [&] {
        std::set<int> seen;
        for (int i = 0; i < b.algebra->dim(); ++i) {
            Vector v(static_cast<std::size_t>(b.algebra->dim()));
            v[static_cast<std::size_t>(i)] = 1;
            seen.insert(b.analysis->hopf_order(v));
        }
        const bool ok = std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1 || n == 2 || n == 3 || n == 4 || n == 12; });
        c.check("Q^C4#QS3 basis elements have orders in {1,2,3,4,12}", ok, join({seen.begin(), seen.end()}));
    });
    c.guarded("1#a in Q^C5#QS4", [&] {
        std::set<int> seen;
        const auto mp = from_factorizable_symmetric(5);
        for (int a = 0; a < mp.f().order(); ++a) {
            seen.insert(s5.analysis->hopf_order(cli::parse_element(*s5.algebra, "1#" + mp.f().label(a))));
        }
        const std::set<int> allowed = {1, 2, 4, 12, 30};
        const bool ok = std::includes(allowed.begin(), allowed.end(), seen.begin(), seen.end());
        c.check("elements 1#a of Q^C5#QS4 have orders in {1,2,4,12,30}", ok, join({seen.begin(), seen.end()}));
    });

    for (const auto& g : {symmetric_group(3), alternating_group(4), symmetric_group(4)}) {
        c.guarded("integrals " + g.name(), [&] {
            PowerAnalysis kg(share(group_algebra(g)), options());
            PowerAnalysis fg(share(dual_group_algebra(g)), options());
            const Vector ones(static_cast<std::size_t>(g.order()), Rational(1));
            Vector delta(static_cast<std::size_t>(g.order()));
            delta[static_cast<std::size_t>(g.identity())] = 1;
            const auto e = group_exponent(g);
            const int o1 = kg.hopf_order(ones);
            const int o2 = fg.hopf_order(delta);
            c.check("integrals of Q" + g.name() + " and Q^" + g.name() + " have order exp = " + std::to_string(e),
                    o1 == e && o2 == e, std::to_string(o1) + " and " + std::to_string(o2));
        });
    }
    return c.finish();
}

// ---- criterion 5 ----

bool criterion_properties(Registry& reg) {
    Criterion c(5, "property suites");
    const auto s3 = symmetric_group(3);
    const auto a4 = alternating_group(4);
    const auto s4 = symmetric_group(4);

    // every constructed algebra, with op and dual companions where small
    std::vector<std::pair<std::string, std::shared_ptr<const HopfAlgebra>>> constructed;
    for (auto& [key, s] : reg.all()) constructed.emplace_back(s.name, s.algebra);
    constructed.emplace_back("Q^S3", share(dual_group_algebra(s3)));
    constructed.emplace_back("Q^A4 (x) QA4", share(tensor(dual_group_algebra(a4), group_algebra(a4))));
    constructed.emplace_back("QS5", share(group_algebra(symmetric_group(5))));
    constructed.emplace_back("Q^S4", share(dual_group_algebra(s4)));
    constructed.emplace_back("D(QS3)^op", share(opposite(*reg.get("DS3").algebra)));
    constructed.emplace_back("(Q^C4#QS3)^op", share(opposite(*reg.get("C4S3").algebra)));
    for (const auto& [name, h] : constructed) {
        c.guarded("axioms " + name, [&] {
            const auto t0 = Clock::now();
            const bool full = h->dim() <= 144;
            const auto report = check_axioms(h->data(), 1, 144, 10000);
            c.check("bialgebra axioms, " + name + (full ? " (full scan)" : " (10000 sampled triples)"),
                    report.all_passed(),
                    "dim " + std::to_string(h->dim()) + ", " + fixed(seconds_since(t0)) + " s" +
                        (report.first_failure.empty() ? "" : "; " + report.first_failure));
        });
    }

    // Dual pairs among the table algebras; the rest get a fresh dual.
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"DA4", "DA4*"}, {"DS4", "DS4*"}, {"C4S3", "C4S3*"}, {"C5S4", "C5S4*"}, {"C5A4", "C5A4*"}};
    std::map<std::string, std::string> partner;
    for (const auto& [a, b] : pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    const std::vector<std::string> table_keys = {"QS3", "QA4", "QS4", "DS3", "FS3xS3", "DA4", "DA4*",
                                                 "DS4", "DS4*", "C4S3", "C4S3*", "C5S4", "C5S4*"};
    for (const auto& key : table_keys) {
        auto& s = reg.get(key);
        c.guarded("identities " + s.name, [&] {
            const auto rank_id = check_rank_identity(*s.analysis);
            c.check("tpd_n = dim + 1 - rank(A_n), " + s.name, rank_id.passed(), first_failure(rank_id));
            std::unique_ptr<PowerAnalysis> fresh;
            PowerAnalysis* other = nullptr;
            if (partner.count(key)) {
                other = reg.get(partner[key]).analysis.get();
            } else {
                fresh = std::make_unique<PowerAnalysis>(share(dual(*s.algebra)), options());
                other = fresh.get();
            }
            const auto d = check_dual_tpd(*s.analysis, *other);
            c.check("tpd_n(H) = tpd_n(H*), " + s.name, d.passed(), first_failure(d));
            const auto anti = check_antipode(*s.analysis);
            c.check("antipode squares to I, " + s.name, anti.passed(), first_failure(anti));
            const auto sym = check_antidiagonal(s.table);
            c.check("anti-diagonal symmetry, " + s.name, sym.passed(), first_failure(sym));
        });
    }
    c.guarded("transposed duals", [&] {
        for (const auto& key : {"C4S3", "C5S4", "DA4"}) {
            auto& s = reg.get(key);
            PowerAnalysis transposed(transposed_family(s.analysis->family(), reg.get(partner[key]).algebra));
            c.check("dual table by transposition, " + s.name, transposed.table(1) == reg.get(partner[key]).table);
        }
    });
    c.guarded("tensor formula", [&] {
        PowerAnalysis f(share(dual_group_algebra(s3)), options());
        auto& g = *reg.get("QS3").analysis;
        auto& fg = *reg.get("FS3xS3").analysis;
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 5; ++n) {
            const auto r = check_tensor_formula(f, g, fg, n);
            ok = ok && r.passed();
            if (!r.passed()) detail = r.failures.front();
        }
        c.check("tensor formula for Q^S3 (x) QS3, n = 2..5", ok, detail);
    });
    c.guarded("power rule", [&] {
        PowerAnalysis fs4(share(dual_group_algebra(s4)), options());
        const auto qs4 = check_power_rule(*reg.get("QS4").analysis);
        const auto f = check_power_rule(fs4);
        const auto t = check_power_rule(*reg.get("FS3xS3").analysis);
        c.check("power rule holds for QS4, Q^S4, Q^S3 (x) QS3", qs4.passed() && f.passed() && t.passed(),
                std::to_string(qs4.cases + f.cases + t.cases) + " cases");
        const auto d = check_power_rule(*reg.get("DS3").analysis);
        const auto b = check_power_rule(*reg.get("C4S3").analysis);
        c.check("power rule fails for D(QS3) and Q^C4#QS3", !d.passed() && !b.passed(),
                "witnesses: " + (d.failures.empty() ? "none" : d.failures.front()) + "; " +
                    (b.failures.empty() ? "none" : b.failures.front()));
    });
    c.guarded("opposite", [&] {
        for (const auto& key : {"DS3", "C4S3"}) {
            auto& s = reg.get(key);
            PowerAnalysis op(share(opposite(*s.algebra)), options());
            const auto r = check_opposite(*s.analysis, op);
            c.check("TPS_n(H) = TPS_{e-n}(H^op) as subspaces, " + s.name, r.passed(), first_failure(r));
        }
    });
    c.guarded("coprime doubles", [&] {
        for (const auto& [key, order] : std::vector<std::pair<std::string, int>>{{"DS3", 6}, {"DS4", 24}}) {
            const auto r = check_coprime_double(*reg.get(key).analysis, order);
            c.check("tpd_n = 1 for n coprime to |G|, " + reg.get(key).name, r.passed(), first_failure(r));
        }
        auto& da4 = reg.get("DA4");
        const auto r = check_coprime_double(*da4.analysis, 12);
        c.check("tpd_n = 1 for n coprime to |G|, " + da4.name, r.passed(), first_failure(r));
    });
    c.guarded("group oracles", [&] {
        std::vector<std::pair<FiniteGroup, PowerAnalysis*>> groups = {
            {s3, reg.get("QS3").analysis.get()}, {a4, reg.get("QA4").analysis.get()}, {s4, reg.get("QS4").analysis.get()}};
        PowerAnalysis s5(share(group_algebra(symmetric_group(5))), options());
        groups.emplace_back(symmetric_group(5), &s5);
        for (auto& [g, a] : groups) {
            const auto r = check_group_oracle(*a, g);
            c.check("tpd oracle for Q" + g.name() + ", all n", r.passed(), first_failure(r));
        }
        PowerAnalysis fs4(share(dual_group_algebra(s4)), options());
        const auto r = check_dual_delta_orders(fs4, s4);
        c.check("delta order oracle for every delta_g in Q^S4", r.passed(), first_failure(r));
    });
    c.guarded("antipode of group algebras", [&] {
        for (const auto& key : {"QS3", "QA4", "QS4"}) {
            auto& s = reg.get(key);
            const auto g = key == std::string("QS3") ? s3 : key == std::string("QA4") ? a4 : s4;
            const auto& anti = s.analysis->family().antipode();
            bool ok = true;
            for (int col = 0; col < g.order(); ++col)
                for (int row = 0; row < g.order(); ++row)
                    ok = ok && anti(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) ==
                                   (row == g.inverse(col) ? 1 : 0);
            c.check("A_{e-1} of " + s.name + " is the inversion permutation", ok);
        }
    });
    c.guarded("matched pairs", [&] {
        std::vector<MatchedPair> all = {from_factorizable_symmetric(3), from_factorizable_symmetric(4),
                                        from_factorizable_symmetric(5), from_factorizable_symmetric(6),
                                        from_factorizable_alternating(5), double_pair(s3),
                                        double_pair(a4), double_pair(s4), trivial_pair(s3, cyclic_group(4))};
        bool ok = true;
        for (const auto& mp : all) ok = ok && verify(mp).all_passed();
        c.check("matched-pair axioms for all constructed pairs", ok, std::to_string(all.size()) + " pairs");
        auto tables = all[1].tables();
        tables.hitby[9] = (tables.hitby[9] + 1) % all[1].g().order();
        const auto mutated = verify_actions(all[1].f(), all[1].g(), tables);
        std::string failing;
        for (const auto& chk : mutated.checks)
            if (!chk.passed) failing += (failing.empty() ? "" : "; ") + chk.axiom;
        c.check("mutated table is rejected", !mutated.all_passed(), "failing axioms: " + failing);
    });
    return c.finish();
}

// ---- criterion 6 ----

bool criterion_determinism() {
    Criterion c(6, "determinism across job counts");
    c.guarded("jobs", [&] {
        auto run_table = [](const char* jobs) {
            const char* argv[] = {"hopfpow", "table", "--algebra", "double:S4", "--format", "csv", "--jobs", jobs};
            std::ostringstream out, err;
            const int code = cli::run(8, argv, out, err);
            return std::make_pair(code, out.str());
        };
        const auto one = run_table("1");
        const auto eight = run_table("8");
        c.check("D(QS4) CSV identical for --jobs 1 and --jobs 8",
                one.first == 0 && eight.first == 0 && one.second == eight.second && !one.second.empty(),
                std::to_string(one.second.size()) + " bytes");
    });
    return c.finish();
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    Registry reg;
    std::vector<bool> verdicts;
    verdicts.push_back(criterion_tables(reg));
    verdicts.push_back(criterion_a5(reg));
    verdicts.push_back(criterion_orders(reg));
    verdicts.push_back(criterion_elements(reg));
    verdicts.push_back(criterion_properties(reg));
    verdicts.push_back(criterion_determinism());
    std::cout << "summary:";
    for (std::size_t i = 0; i < verdicts.size(); ++i) std::cout << ' ' << (i + 1) << '=' << (verdicts[i] ? "PASS" : "FAIL");
    std::cout << "  (" << fixed(seconds_since(t0), 1) << " s)\n";
    return std::all_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; }) ? 0 : 1;
}
