#include "hopfpow_cli/element.hpp"

#include "hopfpow/errors.hpp"
#include "hopfpow/perm_groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hopfpow::cli {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Length of a run of "(...)" groups holding only digits, commas and spaces.
std::size_t cycle_run(std::string_view s, std::size_t pos, int& max_point) {
    std::size_t p = pos;
    max_point = 1;
    while (p < s.size() && s[p] == '(') {
        std::size_t q = p + 1;
        int number = 0;
        while (q < s.size() && s[q] != ')') {
            const char c = s[q];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                number = number * 10 + (c - '0');
                max_point = std::max(max_point, number);
            } else if (c == ',' || is_space(c)) {
                number = 0;
            } else {
                return p - pos;
            }
            ++q;
        }
        if (q >= s.size()) return p - pos;
        p = q + 1;
    }
    return p - pos;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

Vector parse_coordinates(const HopfAlgebra& h, std::string_view text) {
    Vector v;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            v.push_back(parse_rational(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || is_space(c)) {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    if (v.size() != static_cast<std::size_t>(h.dim())) {
        throw ArgumentError("coordinate vector has " + std::to_string(v.size()) + " entries, expected " +
                            std::to_string(h.dim()));
    }
    return v;
}

} // namespace

std::string canonical_label(std::string_view label) {
    std::string out;
    std::size_t i = 0;
    while (i < label.size()) {
        if (label[i] == '(') {
            int max_point = 1;
            const std::size_t len = cycle_run(label, i, max_point);
            if (len > 0) {
                try {
                    out += Permutation::parse(label.substr(i, len), max_point).to_cycle_string();
                    i += len;
                    continue;
                } catch (const Error&) {
                    // not a valid cycle word; keep the text as written
                }
            }
        }
        if (is_space(label[i])) {
            if (!out.empty() && out.back() != ' ') out += ' ';
            ++i;
            continue;
        }
        out += label[i++];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

Rational parse_rational(std::string_view text) {
    const std::string t = trim(text);
    if (t.empty()) throw ArgumentError("empty number");
    std::string body = t;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body.erase(0, 1);
    }
    auto digits_only = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    Rational value;
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        const auto num = body.substr(0, slash);
        const auto den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) throw ArgumentError("not a rational number: '" + t + "'");
        if (Integer(den) == 0) throw ArgumentError("zero denominator in '" + t + "'");
        value = Rational(Integer(num), Integer(den));
    } else if (const auto dot = body.find('.'); dot != std::string::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !digits_only(whole)) || !digits_only(frac)) {
            throw ArgumentError("not a decimal number: '" + t + "'");
        }
        Integer den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
        value = Rational(Integer(whole.empty() ? "0" : whole) * den + Integer(frac), den);
    } else {
        if (!digits_only(body)) throw ArgumentError("not a number: '" + t + "'");
        value = Rational(Integer(body));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

Vector parse_element(const HopfAlgebra& h, std::string_view text) {
    if (trim(text).empty()) throw ArgumentError("empty element");
    const bool numeric = std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || is_space(c) || std::string_view("/-+.,").find(c) != std::string_view::npos;
    });
    if (numeric) return parse_coordinates(h, text);

    std::map<std::string, int> index;
    // "1#a" stands for the sum of d[x]#a over all x
    std::multimap<std::string, int> by_right;
    for (int i = 0; i < h.dim(); ++i) {
        const auto label = canonical_label(h.label(i));
        index.emplace(label, i);
        if (const auto hash = label.find("]#"); label.rfind("d[", 0) == 0 && hash != std::string::npos) {
            by_right.emplace(label.substr(hash + 2), i);
        }
    }

    // Split at top-level signs.
    std::vector<std::pair<bool, std::string>> terms;
    bool negative = false;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            const std::string t = trim(current);
            if (!t.empty() && t.back() != '*' && t.back() != '/') {
                terms.emplace_back(negative, t);
                current.clear();
                negative = c == '-';
                continue;
            }
            if (t.empty()) {
                if (c == '-') negative = !negative;
                current.clear();
                continue;
            }
        }
        current += c;
    }
    if (!trim(current).empty()) {
        terms.emplace_back(negative, trim(current));
    } else {
        throw ArgumentError("element ends with a dangling sign");
    }

    Vector v(static_cast<std::size_t>(h.dim()));
    for (const auto& [neg, term] : terms) {
        Rational coeff = 1;
        std::string label = term;
        if (const auto star = term.find('*'); star != std::string::npos) {
            const std::string head = trim(term.substr(0, star));
            bool plain_number = !head.empty() && head.find_first_of("([") == std::string::npos;
            if (plain_number) {
                coeff = parse_rational(head);
                label = trim(term.substr(star + 1));
            }
        }
        const std::string key = canonical_label(label);
        if (key.rfind("1#", 0) == 0) {
            const auto [lo, hi] = by_right.equal_range(key.substr(2));
            if (lo != hi) {
                for (auto r = lo; r != hi; ++r) v[static_cast<std::size_t>(r->second)] += neg ? Rational(-coeff) : coeff;
                continue;
            }
        }
        const auto it = index.find(key);
        if (it == index.end()) {
            std::vector<std::pair<std::size_t, std::string>> scored;
            for (const auto& [k, i] : index) scored.emplace_back(edit_distance(key, k), h.label(i));
            std::sort(scored.begin(), scored.end());
            std::string nearest;
            for (std::size_t s = 0; s < std::min<std::size_t>(3, scored.size()); ++s) {
                nearest += (s == 0 ? "" : ", ") + scored[s].second;
            }
            throw ArgumentError("'" + label + "' is not a basis label; nearest: " + nearest);
        }
        v[static_cast<std::size_t>(it->second)] += neg ? Rational(-coeff) : coeff;
    }
    return v;
}

} // namespace hopfpow::cli
