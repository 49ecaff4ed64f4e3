#include "hopfpow_cli/app.hpp"

#include "hopfpow/errors.hpp"
#include "hopfpow/matched_pairs.hpp"
#include "hopfpow/power_analysis.hpp"
#include "hopfpow_cli/element.hpp"
#include "hopfpow_cli/emit.hpp"
#include "hopfpow_cli/spec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iterator>
#include <sstream>

namespace hopfpow::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kSuites = {"axioms", "powers", "symmetry", "duality", "oracle", "coprime", "tensor"};

struct Options {
    std::string algebra;
    std::string format = "plain";
    bool half_table = false;
    bool full_table = false;
    int jobs = 0;
    std::string cache_dir;
    std::string element;
    std::string element_file;
    std::string suites = "all";
    int n = 1;
};

// Everything a command needs about the selected algebra.
class Session {
public:
    explicit Session(const Options& o) : spec_(parse_spec(o.algebra)), format_(parse_format(o.format)), jobs_(o.jobs) {
        cache_ = PowerCache::resolve(o.cache_dir.empty() ? std::nullopt : std::optional<std::string>(o.cache_dir));
        options_.jobs = o.jobs;
        options_.cache = cache_ ? &*cache_ : nullptr;
        algebra_ = build_algebra(spec_);
        analysis_ = std::make_unique<PowerAnalysis>(algebra_, options_);
    }

    const AlgebraSpec& spec() const { return spec_; }
    Format format() const { return format_; }
    int jobs() const { return jobs_; }
    const PowerOptions& options() const { return options_; }
    const HopfAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const HopfAlgebra> algebra_ptr() const { return algebra_; }
    PowerAnalysis& analysis() { return *analysis_; }
    std::string name() const { return algebra_->provenance().description; }

private:
    AlgebraSpec spec_;
    Format format_;
    int jobs_;
    std::optional<PowerCache> cache_;
    PowerOptions options_;
    std::shared_ptr<const HopfAlgebra> algebra_;
    std::unique_ptr<PowerAnalysis> analysis_;
};

TableLayout layout_for(const Options& o, const Session& s, int exponent) {
    TableLayout layout;
    layout.half = o.half_table || (!o.full_table && default_half_table(exponent));
    layout.latex_name = latex_name(s.spec());
    return layout;
}

int cmd_table(const Options& o, std::ostream& out) {
    Session s(o);
    const auto t = s.analysis().table(s.jobs());
    emit_table(out, t, s.format(), layout_for(o, s, t.exponent));
    return 0;
}

int cmd_orders(const Options& o, std::ostream& out) {
    Session s(o);
    s.analysis().table(s.jobs());
    emit_orders(out, s.name(), s.analysis().realizable_orders(), s.format());
    return 0;
}

int cmd_element_order(const Options& o, std::ostream& out) {
    if (o.element.empty() == o.element_file.empty()) throw ArgumentError("give exactly one of --element and --element-file");
    std::string text = o.element;
    if (!o.element_file.empty()) {
        std::ifstream in(o.element_file);
        if (!in) throw ArgumentError("cannot read " + o.element_file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    Session s(o);
    const auto v = parse_element(s.algebra(), text);
    const int order = s.analysis().hopf_order(v);
    const int e = s.analysis().exponent();
    if (s.format() == Format::Json) {
        out << json{{"algebra", s.name()}, {"element", to_string(v)}, {"hopf_order", order}, {"e", e}}.dump(1) << '\n';
        return 0;
    }
    out << "Hopf order: " << order << '\n';
    for (int n = 1; n <= order; ++n) {
        const bool trivial = mat_vec(s.analysis().family().power(n), v) == mat_vec(s.analysis().family().eta_epsilon(), v);
        out << "  n = " << n << (trivial ? ": A_n v = ηε v" : ": A_n v != ηε v") << '\n';
    }
    out << "exponent: " << e << '\n';
    return 0;
}

int cmd_exponent(const Options& o, std::ostream& out) {
    Session s(o);
    const int e = s.analysis().exponent();
    const auto& bowtie = s.algebra().provenance().bowtie_exponent;
    if (s.format() == Format::Json) {
        json j{{"algebra", s.name()}, {"e", e}};
        j["group_exponent"] = bowtie ? json(*bowtie) : json(nullptr);
        out << j.dump(1) << '\n';
        return 0;
    }
    out << "exponent: " << e << '\n';
    if (bowtie) out << "exp(F⋈G): " << *bowtie << (*bowtie == e ? " (agrees)" : " (DIFFERS)") << '\n';
    return bowtie && *bowtie != e ? 1 : 0;
}

int cmd_basis(const Options& o, std::ostream& out) {
    Session s(o);
    const auto& labels = s.algebra().labels();
    if (s.format() == Format::Json) {
        out << json(labels).dump(1) << '\n';
    } else if (s.format() == Format::Csv) {
        out << "index,label\n";
        for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << ",\"" << labels[i] << "\"\n";
    } else {
        for (std::size_t i = 0; i < labels.size(); ++i) out << i + 1 << ' ' << labels[i] << '\n';
    }
    return 0;
}

int cmd_tps(const Options& o, std::ostream& out) {
    if (o.n < 1) throw ArgumentError("--n must be >= 1");
    Session s(o);
    const auto& space = s.analysis().tps(o.n);
    if (s.format() == Format::Json) {
        json basis = json::array();
        for (const auto& v : space.basis()) {
            json row = json::array();
            for (const auto& x : v) row.push_back(x.get_str());
            basis.push_back(row);
        }
        out << json{{"algebra", s.name()}, {"n", o.n}, {"dim", space.dim()}, {"basis", basis}}.dump(1) << '\n';
        return 0;
    }
    out << "TPS_" << o.n << '(' << s.name() << ")  dim " << space.dim() << '\n';
    for (const auto& v : space.basis()) out << to_string(v) << '\n';
    return 0;
}

int cmd_compare_dual(const Options& o, std::ostream& out) {
    Session s(o);
    const auto t = s.analysis().table(s.jobs());
    PowerAnalysis du(std::make_shared<const HopfAlgebra>(dual(s.algebra())), s.options());
    const auto td = du.table(s.jobs());
    std::vector<std::array<long long, 4>> diffs;
    for (int i = 1; i <= t.size(); ++i)
        for (int j = i; j <= t.size(); ++j)
            if (t.at(i, j) != td.at(i, j)) diffs.push_back({i, j, t.at(i, j), td.at(i, j)});
    if (s.format() == Format::Json) {
        json d = json::array();
        for (const auto& x : diffs) d.push_back({x[0], x[1], x[2], x[3]});
        out << json{{"algebra", json::parse(table_to_json(t))}, {"dual", json::parse(table_to_json(td))}, {"differences", d}}
                   .dump(1)
            << '\n';
        return 0;
    }
    const auto layout = layout_for(o, s, t.exponent);
    emit_table(out, t, s.format(), layout);
    out << '\n';
    auto dual_layout = layout;
    dual_layout.latex_name = latex_name(AlgebraSpec{AlgebraSpec::Kind::Dual, 'S', 1, {s.spec()}});
    emit_table(out, td, s.format(), dual_layout);
    out << '\n' << "differing cells: " << diffs.size() << '\n';
    for (const auto& x : diffs) out << "  (" << x[0] << ',' << x[1] << "): " << x[2] << " vs " << x[3] << '\n';
    return 0;
}

// One line per check; returns false on any failure.
class VerifyPrinter {
public:
    explicit VerifyPrinter(std::ostream& out) : out_(out) {}

    void report(const std::string& suite, const CheckReport& r) {
        if (r.passed()) {
            out_ << "PASS  " << suite << ": " << r.name << " (" << r.cases << " cases)\n";
            return;
        }
        ok_ = false;
        out_ << "FAIL  " << suite << ": " << r.name << ": " << r.failures.front();
        if (r.failures.size() > 1) out_ << " (+" << r.failures.size() - 1 << " more)";
        out_ << '\n';
    }
    void info(const std::string& suite, const std::string& text) { out_ << "INFO  " << suite << ": " << text << '\n'; }
    void skip(const std::string& suite, const std::string& why) { out_ << "SKIP  " << suite << ": " << why << '\n'; }
    bool ok() const { return ok_; }

private:
    std::ostream& out_;
    bool ok_ = true;
};

std::vector<std::string> selected_suites(const std::string& text) {
    if (text == "all") return kSuites;
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (std::find(kSuites.begin(), kSuites.end(), item) == kSuites.end()) {
            throw ArgumentError("unknown suite '" + item + "'");
        }
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    if (out.empty()) throw ArgumentError("no suites selected");
    return out;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto suites = selected_suites(o.suites);
    Session s(o);
    using Kind = AlgebraSpec::Kind;
    const auto kind = s.spec().kind;
    auto& a = s.analysis();
    VerifyPrinter p(out);
    const bool power_rule_algebra = is_commutative(s.algebra()) || is_cocommutative(s.algebra());

    for (const auto& suite : suites) {
        if (suite == "axioms") {
            const auto r = check_axioms(s.algebra().data(), 1, 144);
            CheckReport c{"bialgebra axioms", r.checks.size(), {}};
            if (!r.all_passed()) c.failures.push_back(r.first_failure);
            p.report(suite, c);
            if (kind == Kind::Double || kind == Kind::Bismash) {
                const auto mp = kind == Kind::Double ? double_pair(leaf_group(s.spec()))
                                : s.spec().family == 'S'   ? from_factorizable_symmetric(s.spec().k)
                                                           : from_factorizable_alternating(s.spec().k);
                const auto vr = verify(mp);
                CheckReport m{"matched pair axioms", vr.checks.size(), {}};
                for (const auto& ch : vr.checks)
                    if (!ch.passed) m.failures.push_back(ch.axiom + ": " + ch.counterexample);
                p.report(suite, m);
            }
        } else if (suite == "powers") {
            p.report(suite, check_unit_counit(a));
            p.report(suite, check_antipode(a));
            p.report(suite, check_convolution(a, 8));
            const auto rule = check_power_rule(a);
            if (power_rule_algebra) {
                p.report(suite, rule);
            } else if (rule.passed()) {
                p.info(suite, "power rule holds");
            } else {
                p.info(suite, "power rule fails in " + std::to_string(rule.failures.size()) + " of " +
                                  std::to_string(rule.cases) + " cases, e.g. " + rule.failures.front());
            }
        } else if (suite == "symmetry") {
            const auto t = a.table(s.jobs());
            p.report(suite, check_antidiagonal(t));
            PowerAnalysis op(std::make_shared<const HopfAlgebra>(opposite(s.algebra())), s.options());
            p.report(suite, check_opposite(a, op));
            if (power_rule_algebra) {
                CheckReport r{"tpd_{m,n} = tpd_{m,e-n}", 0, {}};
                const int e = t.exponent;
                for (int m = 1; m < e; ++m)
                    for (int n = 1; n < e; ++n) {
                        ++r.cases;
                        if (t.at(m, n) != t.at(m, e - n)) r.failures.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
                    }
                p.report(suite, r);
            }
        } else if (suite == "duality") {
            p.report(suite, check_rank_identity(a));
            auto dual_algebra = std::make_shared<const HopfAlgebra>(dual(s.algebra()));
            PowerAnalysis du(dual_algebra, s.options());
            p.report(suite, check_dual_tpd(a, du));
            PowerAnalysis transposed(transposed_family(a.family(), dual_algebra));
            CheckReport r{"dual table from transposed matrices", 1, {}};
            if (!(du.table(s.jobs()).cells == transposed.table(s.jobs()).cells)) {
                r.failures.push_back("tables differ");
            }
            p.report(suite, r);
        } else if (suite == "oracle") {
            if (kind != Kind::Group && kind != Kind::DualGroup) {
                p.skip(suite, "group oracles apply to group: and dualgroup: only");
                continue;
            }
            const auto g = leaf_group(s.spec());
            p.report(suite, check_group_oracle(a, g));
            Vector integral(static_cast<std::size_t>(g.order()));
            if (kind == Kind::Group) {
                std::fill(integral.begin(), integral.end(), Rational(1));
            } else {
                integral[static_cast<std::size_t>(g.identity())] = 1;
                p.report(suite, check_dual_delta_orders(a, g));
            }
            CheckReport r{"integral has Hopf order exp(G)", 1, {}};
            const int order = a.hopf_order(integral);
            if (order != group_exponent(g)) r.failures.push_back("order " + std::to_string(order));
            p.report(suite, r);
        } else if (suite == "coprime") {
            if (kind != Kind::Double) {
                p.skip(suite, "applies to double: only");
                continue;
            }
            p.report(suite, check_coprime_double(a, leaf_group(s.spec()).order()));
        } else if (suite == "tensor") {
            if (kind != Kind::Tensor) {
                p.skip(suite, "applies to tensor(...) only");
                continue;
            }
            PowerAnalysis h(build_algebra(s.spec().children[0]), s.options());
            PowerAnalysis k(build_algebra(s.spec().children[1]), s.options());
            for (int n = 1; n <= a.exponent(); ++n) p.report(suite, check_tensor_formula(h, k, a, n));
        }
    }
    out << (p.ok() ? "all checks passed" : "verification FAILED") << '\n';
    return p.ok() ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hopf power maps, trivial power spaces and Hopf orders of finite-dimensional Hopf algebras"};
    app.name("hopfpow");
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "algebra spec, e.g. double:S3 or dual(bismash:S4)")->required();
        sub->add_option("--format", o.format, "plain, csv, latex or json")
            ->check(CLI::IsMember({"plain", "csv", "latex", "json"}));
        sub->add_option("--jobs", o.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
        sub->add_option("--cache-dir", o.cache_dir, "power matrix cache (default: $HOPFPOW_CACHE_DIR)");
    };
    auto layout = [&o](CLI::App* sub) {
        auto* half = sub->add_flag("--half-table", o.half_table, "print columns 1..ceil(e/2) only");
        auto* full = sub->add_flag("--full-table", o.full_table, "print the whole upper triangle");
        half->excludes(full);
    };

    std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
    auto add = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        commands.emplace_back(sub, fn);
        return sub;
    };
    layout(add("table", "tpd_{i,j} table", cmd_table));
    add("orders", "realizable Hopf orders", cmd_orders);
    auto* eo = add("element-order", "Hopf order of one element", cmd_element_order);
    eo->add_option("--element", o.element, "coordinates or a sum of basis labels");
    eo->add_option("--element-file", o.element_file, "file holding the element")->check(CLI::ExistingFile);
    add("exponent", "exponent of the algebra", cmd_exponent);
    add("verify", "run verification suites", cmd_verify)
        ->add_option("--suites", o.suites, "comma list of axioms,powers,symmetry,duality,oracle,coprime,tensor or all");
    add("basis", "basis labels in index order", cmd_basis);
    add("tps", "basis of TPS_n", cmd_tps)->add_option("--n", o.n, "power")->required();
    layout(add("compare-dual", "tables of H and H* with their differences", cmd_compare_dual));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        for (const auto& [sub, fn] : commands) {
            if (sub->parsed()) return fn(o, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace hopfpow::cli
