#include "hopfpow/errors.hpp"
#include "hopfpow_cli/app.hpp"
#include "hopfpow_cli/element.hpp"
#include "hopfpow_cli/emit.hpp"
#include "hopfpow_cli/spec.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hopfpow;
using namespace hopfpow::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hopfpow");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

} // namespace

TEST(Spec, ParseAndDimensions) {
    EXPECT_EQ(spec_dim(parse_spec("double:S3")), 36);
    EXPECT_EQ(spec_dim(parse_spec("bismash:S5")), 120);
    EXPECT_EQ(spec_dim(parse_spec("tensor(dualgroup:S3,group:S3)")), 36);
    EXPECT_EQ(spec_dim(parse_spec("bismash:A5")), 60);
    EXPECT_EQ(spec_dim(parse_spec("dual(op(group:C7))")), 7);
    EXPECT_EQ(build_algebra(parse_spec("double:S3"))->dim(), 36);
    EXPECT_EQ(build_algebra(parse_spec("bismash:S4"))->provenance().description, "Q^C4#QS3");
}

TEST(Spec, RoundTrip) {
    for (const char* text : {"group:S3", "dualgroup:C7", "double:A4", "bismash:S4", "bismash:A5",
                             "tensor(dualgroup:S3,group:S3)", "dual(bismash:S4)", "op(dual(double:S3))",
                             "tensor(group:C2,tensor(group:C3,dualgroup:S3))"}) {
        const auto s = parse_spec(text);
        EXPECT_EQ(parse_spec(render(s)), s) << text;
        EXPECT_EQ(render(s), text);
    }
    EXPECT_EQ(render(parse_spec(" tensor( group:S3 , group:C2 ) ")), "tensor(group:S3,group:C2)");
}

TEST(Spec, Errors) {
    for (const char* bad : {"", "group:", "group:X3", "grp:S3", "tensor(group:S3)", "dual(group:S3", "group:S3)",
                            "bismash:C4", "bismash:A4", "bismash:S2", "group:S0", "group:A2"}) {
        EXPECT_THROW(parse_spec(bad), Error) << bad;
    }
    try {
        parse_spec("tensor(group:S3,grup:S3)");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 16u);
    }
    EXPECT_THROW(parse_spec("group:S7"), ResourceLimitError);
    EXPECT_THROW(parse_spec("double:S5"), ResourceLimitError);
    EXPECT_THROW(parse_spec("tensor(group:S5,group:S4)"), ResourceLimitError);
    EXPECT_NO_THROW(parse_spec("tensor(group:S4,group:S4)"));
}

TEST(Element, Labels) {
    EXPECT_EQ(canonical_label("d[(1 4 3 2)]#(1 2)"), canonical_label("d[(2 1 4 3)]#(2,1)"));
    EXPECT_EQ(canonical_label("d[(3 1)(4 2)]#(2 3)"), "d[(1 3)(2 4)]#(2 3)");
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Element, Parsing) {
    const auto h = build_algebra(parse_spec("bismash:S4"));
    const auto v = parse_element(*h, "d[(1 3)(2 4)]#(2 3) - d[(1 4 3 2)]#(1 2) + 2*d[(1 3)(2 4)]#(1 3 2)");
    int nonzero = 0;
    for (const auto& x : v) nonzero += x != 0;
    EXPECT_EQ(nonzero, 3);
    EXPECT_THROW(parse_element(*h, "d[(1 5)]#()"), ArgumentError);
    try {
        parse_element(*h, "d[(1 2 3 4)]#(1 2 4)");
        FAIL();
    } catch (const ArgumentError& e) {
        EXPECT_NE(std::string(e.what()).find("d["), std::string::npos);
    }
    const auto g = build_algebra(parse_spec("group:C2"));
    EXPECT_EQ(parse_element(*g, "1, -1/2"), (Vector{Rational(1), Rational(-1, 2)}));
    EXPECT_EQ(parse_element(*g, "1\n0"), (Vector{Rational(1), Rational(0)}));
    EXPECT_THROW(parse_element(*g, "1, 2, 3"), ArgumentError);
    const auto ones = parse_element(*h, "1#(1 2)");
    int count = 0;
    for (const auto& x : ones) count += x == 1;
    EXPECT_EQ(count, 4);
}

TEST(Cli, TableCsv) {
    const auto r = run_cli({"table", "--algebra", "group:S3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 7u);
    EXPECT_EQ(ls[0], "i\\j,1,2,3,4,5");
    EXPECT_EQ(ls[1], "1,1,1,1,1,1");
    EXPECT_EQ(ls[2], "2,,4,1,4,1");
    EXPECT_EQ(ls[3], "3,,,3,1,1");
    EXPECT_EQ(ls[6], "tpn,1,4,3,4,1");
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(split(ls[static_cast<std::size_t>(i)], ',')[static_cast<std::size_t>(i)],
                                           std::to_string(std::vector<int>{1, 4, 3, 4, 1}[static_cast<std::size_t>(i - 1)]));
}

TEST(Cli, TableEntries) {
    auto cell = [](const std::string& spec, int i, int j) {
        const auto r = run_cli({"table", "--algebra", spec, "--format", "csv", "--jobs", "1"});
        EXPECT_EQ(r.code, 0) << r.err;
        return split(lines(r.out)[static_cast<std::size_t>(i)], ',')[static_cast<std::size_t>(j)];
    };
    EXPECT_EQ(cell("double:A4", 2, 4), "34");
    EXPECT_EQ(cell("dual(bismash:S4)", 2, 4), "6");
}

TEST(Cli, FormatsAgree) {
    const auto csv = run_cli({"table", "--algebra", "bismash:S4", "--format", "csv"});
    const auto tex = run_cli({"table", "--algebra", "bismash:S4", "--format", "latex"});
    const auto plain = run_cli({"table", "--algebra", "bismash:S4", "--format", "plain"});
    const auto js = run_cli({"table", "--algebra", "bismash:S4", "--format", "json"});
    ASSERT_EQ(csv.code, 0);
    ASSERT_EQ(tex.code, 0);
    ASSERT_EQ(plain.code, 0);
    ASSERT_EQ(js.code, 0);
    // cell numerals in row order, header dropped
    auto body = [](const std::string& text, std::size_t skip) {
        auto ls = lines(text);
        std::string joined;
        for (std::size_t i = skip; i < ls.size(); ++i) joined += ls[i] + "\n";
        return joined;
    };
    std::vector<long long> from_csv;
    for (const auto& l : lines(body(csv.out, 1))) {
        const auto cells = split(l, ',');
        for (std::size_t c = 1; c < cells.size(); ++c)
            if (!cells[c].empty()) from_csv.push_back(std::stoll(cells[c]));
    }
    EXPECT_EQ(from_csv.size(), 66u);
    EXPECT_NE(tex.out.find("\\begin{array}"), std::string::npos);
    EXPECT_NE(tex.out.find("\\mathrm{tpd}_{i,j}"), std::string::npos);
    const auto table = table_from_json(js.out);
    std::vector<long long> from_json;
    for (int i = 1; i <= table.size(); ++i)
        for (int j = i; j <= table.size(); ++j) from_json.push_back(table.at(i, j));
    EXPECT_EQ(from_csv, from_json);
    EXPECT_EQ(table_to_json(table_from_json(js.out)), table_to_json(table));
    EXPECT_THROW(table_from_json("{\"e\": 3}"), Error);
}

TEST(Cli, JsonRoundTrip) {
    const auto r = run_cli({"table", "--algebra", "group:S4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto t = table_from_json(r.out);
    EXPECT_EQ(t.exponent, 12);
    EXPECT_EQ(t.at(6, 6), 21);
    ASSERT_TRUE(t.tpn);
    EXPECT_EQ((*t.tpn)[5], 18);
    std::ostringstream again;
    emit_table(again, t, Format::Json, {});
    EXPECT_EQ(again.str(), r.out);
}

TEST(Cli, HalfTable) {
    EXPECT_FALSE(default_half_table(12));
    EXPECT_TRUE(default_half_table(30));
    const auto full = run_cli({"table", "--algebra", "group:S4", "--format", "csv"});
    const auto half = run_cli({"table", "--algebra", "group:S4", "--format", "csv", "--half-table"});
    ASSERT_EQ(half.code, 0);
    EXPECT_EQ(lines(half.out)[0], "i\\j,1,2,3,4,5,6");
    EXPECT_EQ(lines(half.out)[10], "10,1,13,1,13,1,13");
    EXPECT_NE(full.out, half.out);
}

TEST(Cli, Orders) {
    const auto r = run_cli({"orders", "--algebra", "group:S4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("12"), std::string::npos);
    const auto plain = run_cli({"orders", "--algebra", "double:S3"});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(plain.out.find("4"), std::string::npos);
}

TEST(Cli, ElementOrder) {
    auto order = [](const std::string& spec, const std::string& element) {
        const auto r = run_cli({"element-order", "--algebra", spec, "--element", element});
        EXPECT_EQ(r.code, 0) << r.err;
        return lines(r.out).empty() ? std::string() : lines(r.out)[0];
    };
    EXPECT_EQ(order("bismash:S4", "d[(1 3)(2 4)]#(2 3) - d[(1 4 3 2)]#(1 2) + d[(1 3)(2 4)]#(1 3 2)"), "Hopf order: 5");
    EXPECT_EQ(order("bismash:S4", "d[(1 2 3 4)]#(1 2)"), "Hopf order: 3");
    EXPECT_EQ(order("bismash:S4", "1#(1 2)"), "Hopf order: 12");
    EXPECT_EQ(order("bismash:S4", "1#(1 3)"), "Hopf order: 2");

    const auto path = std::filesystem::temp_directory_path() / "hopfpow_element.txt";
    {
        std::ofstream f(path);
        f << "1\n1\n";
    }
    const auto r = run_cli({"element-order", "--algebra", "group:C2", "--element-file", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out)[0], "Hopf order: 2");
    std::filesystem::remove(path);

    EXPECT_EQ(run_cli({"element-order", "--algebra", "group:C2", "--element", "0, 0"}).code, 2);
    const auto unknown = run_cli({"element-order", "--algebra", "bismash:S4", "--element", "d[(1 5)]#()"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("d["), std::string::npos);
}

TEST(Cli, Exponent) {
    const auto a5 = run_cli({"exponent", "--algebra", "bismash:A5"});
    ASSERT_EQ(a5.code, 0);
    EXPECT_NE(a5.out.find("exponent: 30"), std::string::npos);
    EXPECT_NE(a5.out.find("exp(F⋈G): 30 (agrees)"), std::string::npos);
    EXPECT_EQ(lines(run_cli({"exponent", "--algebra", "group:S4"}).out)[0], "exponent: 12");
    EXPECT_EQ(lines(run_cli({"exponent", "--algebra", "dualgroup:C7"}).out)[0], "exponent: 7");
}

TEST(Cli, BasisAndTps) {
    const auto b = run_cli({"basis", "--algebra", "group:C2"});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(lines(b.out), (std::vector<std::string>{"1 ()", "2 (1 2)"}));
    EXPECT_EQ(lines(run_cli({"basis", "--algebra", "bismash:S4"}).out).size(), 24u);
    const auto t = run_cli({"tps", "--algebra", "group:S3", "--n", "2"});
    ASSERT_EQ(t.code, 0);
    const auto ls = lines(t.out);
    EXPECT_EQ(ls.size(), 5u);
    EXPECT_NE(ls[0].find("dim 4"), std::string::npos);
}

TEST(Cli, Verify) {
    EXPECT_EQ(run_cli({"verify", "--algebra", "group:S4", "--suites", "oracle"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "--algebra", "double:S3", "--suites", "coprime,symmetry,duality"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "--algebra", "bismash:S4", "--suites", "axioms,powers"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "--algebra", "tensor(dualgroup:S3,group:S3)", "--suites", "tensor"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "--algebra", "group:S3", "--suites", "bogus"}).code, 2);
}

TEST(Cli, CompareDual) {
    const auto r = run_cli({"compare-dual", "--algebra", "double:A4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(2,4): 34 vs 40"), std::string::npos);
}

TEST(Cli, CacheGivesIdenticalOutput) {
    const auto dir = std::filesystem::temp_directory_path() / "hopfpow_cli_cache";
    std::filesystem::remove_all(dir);
    const auto plain = run_cli({"table", "--algebra", "double:S3", "--format", "csv"});
    const auto cold = run_cli({"table", "--algebra", "double:S3", "--format", "csv", "--cache-dir", dir.string()});
    const auto warm = run_cli({"table", "--algebra", "double:S3", "--format", "csv", "--cache-dir", dir.string()});
    EXPECT_EQ(plain.out, cold.out);
    EXPECT_EQ(plain.out, warm.out);
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"table"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--algebra", "group:S9"}).code, 2);
    const auto bad = run_cli({"table", "--algebra", "tensor(group:S3,"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run_cli({"table", "--algebra", "group:S3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}
