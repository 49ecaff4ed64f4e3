#include "hopfpow_cli/emit.hpp"

#include "hopfpow/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hopfpow::cli {

namespace {

using nlohmann::json;

int column_count(const TpdTable& t, bool half) { return half ? (t.exponent + 1) / 2 : t.size(); }

// Cell text for row i, column j; blank below the diagonal in the full layout.
std::string cell(const TpdTable& t, int i, int j, bool half) {
    if (j > t.size()) return "";
    if (!half && j < i) return "";
    return std::to_string(t.at(i, j));
}

void emit_plain(std::ostream& out, const TpdTable& t, const TableLayout& layout) {
    const int cols = column_count(t, layout.half);
    std::size_t width = 3;
    for (long long v : t.cells) width = std::max(width, std::to_string(v).size());
    if (t.tpn) {
        for (long long v : *t.tpn) width = std::max(width, std::to_string(v).size());
    }
    out << "tpd_{i,j}(" << t.algebra << ")  dim " << t.dim << "  e = " << t.exponent
        << (layout.half ? "  (columns 1.." + std::to_string(cols) + ")" : "") << '\n';
    out << std::setw(static_cast<int>(width)) << "i\\j";
    for (int j = 1; j <= cols; ++j) out << ' ' << std::setw(static_cast<int>(width)) << j;
    out << '\n';
    for (int i = 1; i <= t.size(); ++i) {
        std::string line;
        std::ostringstream row;
        row << std::setw(static_cast<int>(width)) << i;
        for (int j = 1; j <= cols; ++j) row << ' ' << std::setw(static_cast<int>(width)) << cell(t, i, j, layout.half);
        line = row.str();
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    if (t.tpn) {
        out << std::setw(static_cast<int>(width)) << "tpn";
        for (int j = 1; j <= cols; ++j) out << ' ' << std::setw(static_cast<int>(width)) << (*t.tpn)[static_cast<std::size_t>(j - 1)];
        out << '\n';
    }
}

void emit_csv(std::ostream& out, const TpdTable& t, const TableLayout& layout) {
    const int cols = column_count(t, layout.half);
    out << "i\\j";
    for (int j = 1; j <= cols; ++j) out << ',' << j;
    out << '\n';
    for (int i = 1; i <= t.size(); ++i) {
        out << i;
        for (int j = 1; j <= cols; ++j) out << ',' << cell(t, i, j, layout.half);
        out << '\n';
    }
    if (t.tpn) {
        out << "tpn";
        for (int j = 1; j <= cols; ++j) out << ',' << (*t.tpn)[static_cast<std::size_t>(j - 1)];
        out << '\n';
    }
}

void emit_latex(std::ostream& out, const TpdTable& t, const TableLayout& layout) {
    const int cols = column_count(t, layout.half);
    const std::string name = layout.latex_name.empty() ? t.algebra : layout.latex_name;
    out << "\\begin{array}{|c|" << std::string(static_cast<std::size_t>(cols), 'c') << "|} \\hline\n";
    out << "\\mathrm{tpd}_{i,j}(" << name << ")";
    for (int j = 1; j <= cols; ++j) out << '&' << j;
    out << "\\\\ \\hline\n";
    for (int i = 1; i <= t.size(); ++i) {
        out << i;
        for (int j = 1; j <= cols; ++j) {
            const std::string c = cell(t, i, j, layout.half);
            if (layout.half && i == j) {
                out << "&\\mathbf{" << c << '}';
            } else {
                out << '&' << c;
            }
        }
        out << "\\\\\n";
    }
    out << "\\hline\n";
    if (t.tpn) {
        out << "\\mathrm{tpn}_n";
        for (int j = 1; j <= cols; ++j) out << '&' << (*t.tpn)[static_cast<std::size_t>(j - 1)];
        out << "\\\\ \\hline\n";
    }
    out << "\\end{array}\n";
}

} // namespace

Format parse_format(const std::string& text) {
    if (text == "plain") return Format::Plain;
    if (text == "csv") return Format::Csv;
    if (text == "latex") return Format::Latex;
    if (text == "json") return Format::Json;
    throw ArgumentError("unknown format '" + text + "' (plain, csv, latex, json)");
}

bool default_half_table(int exponent) { return exponent > 16; }

void emit_table(std::ostream& out, const TpdTable& table, Format format, const TableLayout& layout) {
    switch (format) {
    case Format::Plain: emit_plain(out, table, layout); break;
    case Format::Csv: emit_csv(out, table, layout); break;
    case Format::Latex: emit_latex(out, table, layout); break;
    case Format::Json: out << table_to_json(table) << '\n'; break;
    }
}

std::string table_to_json(const TpdTable& t) {
    json entries = json::array();
    for (int i = 1; i <= t.size(); ++i)
        for (int j = i; j <= t.size(); ++j) entries.push_back({i, j, t.at(i, j)});
    json j = {
        {"provenance", {{"algebra", t.algebra}, {"kind", t.kind}, {"dim", t.dim}}},
        {"e", t.exponent},
        {"entries", entries},
        {"tpn", t.tpn ? json(*t.tpn) : json(nullptr)},
    };
    return j.dump(1);
}

TpdTable table_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid json: ") + err.what(), err.byte);
    }
    try {
        TpdTable t;
        const auto& p = j.at("provenance");
        t.algebra = p.at("algebra").get<std::string>();
        t.kind = p.at("kind").get<std::string>();
        t.dim = p.at("dim").get<int>();
        t.exponent = j.at("e").get<int>();
        if (t.exponent < 1) throw ParseError("exponent must be positive", 0);
        t.cells.assign(static_cast<std::size_t>(t.size()) * static_cast<std::size_t>(t.size() + 1) / 2, 0);
        std::vector<bool> seen(t.cells.size(), false);
        for (const auto& e : j.at("entries")) {
            const int r = e.at(0).get<int>();
            const int c = e.at(1).get<int>();
            if (r > c) throw ParseError("entry below the diagonal", 0);
            const auto idx = TpdTable::packed_index(t.size(), r, c);
            t.cells[idx] = e.at(2).get<long long>();
            seen[idx] = true;
        }
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("missing table entries", 0);
        if (!j.at("tpn").is_null()) t.tpn = j.at("tpn").get<std::vector<long long>>();
        return t;
    } catch (const json::exception& err) {
        throw ParseError(std::string("malformed table json: ") + err.what(), 0);
    } catch (const ArgumentError& err) {
        throw ParseError(err.what(), 0);
    }
}

void emit_orders(std::ostream& out, const std::string& name, const OrderReport& r, Format format) {
    if (format == Format::Json) {
        json diag = json::array();
        for (const auto& d : r.diagnostics) {
            diag.push_back({{"n", d.n}, {"tpd", d.tpd}, {"max_below", d.max_below}, {"argmax", d.argmax},
                            {"realizable", d.realizable}});
        }
        out << json{{"algebra", name}, {"e", r.exponent}, {"realizable", r.realizable}, {"diagnostics", diag}}.dump(1)
            << '\n';
        return;
    }
    if (format == Format::Csv) {
        out << "n,tpd_n,max_m<n tpd_m_n,argmax,realizable\n";
        for (const auto& d : r.diagnostics) {
            out << d.n << ',' << d.tpd << ',' << d.max_below << ',' << d.argmax << ',' << (d.realizable ? "yes" : "no")
                << '\n';
        }
        return;
    }
    out << "algebra: " << name << '\n' << "exponent: " << r.exponent << '\n' << "realizable orders:";
    for (int n : r.realizable) out << ' ' << n;
    out << "\ncount: " << r.realizable.size() << '\n';
    out << "   n   tpd_n  max tpd_{m,n}   m  realizable\n";
    for (const auto& d : r.diagnostics) {
        out << std::setw(4) << d.n << std::setw(8) << d.tpd << std::setw(15) << d.max_below << std::setw(4)
            << (d.argmax == 0 ? std::string("-") : std::to_string(d.argmax)) << "  " << (d.realizable ? "yes" : "no")
            << '\n';
    }
}

} // namespace hopfpow::cli
