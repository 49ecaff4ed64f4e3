#include "hopfpow/perm_groups.hpp"

#include "hopfpow/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace hopfpow {

namespace {

constexpr int kMaxPermDegree = 8;
constexpr int kMaxCyclicOrder = 64;

std::string images_key(const std::vector<int>& images) {
    std::string key;
    key.reserve(images.size() * 2);
    for (int v : images) {
        key += std::to_string(v);
        key += ',';
    }
    return key;
}

std::string normalize_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) out += c;
    }
    return out;
}

void check_degree_cap(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
        throw ResourceLimitError(std::string(what) + " degree " + std::to_string(n) +
                                 " outside supported range [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
}

// All permutations of {1..n} in lexicographic order of their image sequences.
std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

} // namespace

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw ArgumentError("permutation degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
    if (images.empty()) throw ArgumentError("permutation degree must be positive");
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)]) {
            throw ArgumentError("image sequence is not a bijection");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    };
    skip_space();
    if (pos == text.size()) throw ArgumentError("empty permutation text");
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw ArgumentError("expected '(' in permutation \"" + std::string(text) + "\"");
        }
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos == text.size() || std::isdigit(static_cast<unsigned char>(text[pos])) == 0) {
                throw ArgumentError("malformed cycle in \"" + std::string(text) + "\"");
            }
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
                value = value * 10 + (text[pos] - '0');
                if (value > degree) break;
                ++pos;
            }
            if (value < 1 || value > degree) {
                throw ArgumentError("point out of range 1.." + std::to_string(degree) + " in \"" +
                                    std::string(text) + "\"");
            }
            if (used[static_cast<std::size_t>(value - 1)]) {
                throw ArgumentError("repeated point in \"" + std::string(text) + "\"");
            }
            used[static_cast<std::size_t>(value - 1)] = true;
            cycle.push_back(value);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
        }
        skip_space();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::cycle_power(int n, long long k) {
    if (n < 1) throw ArgumentError("cycle length must be positive");
    const long long shift = ((k % n) + n) % n;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        images[static_cast<std::size_t>(i)] = static_cast<int>((i + shift) % n) + 1;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

bool Permutation::is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::size_t length = 0;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images_[p] - 1)) {
            seen[p] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0;
}

Permutation Permutation::extended(int degree) const {
    if (degree < this->degree()) throw ArgumentError("cannot shrink a permutation");
    std::vector<int> images = images_;
    for (int p = this->degree() + 1; p <= degree; ++p) images.push_back(p);
    return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<int>(start) + 1) continue;
        out += '(';
        bool first = true;
        for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(images_[p] - 1)) {
            seen[p] = true;
            if (!first) out += ' ';
            out += std::to_string(p + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.degree() != y.degree()) throw ArgumentError("permutation degree mismatch");
    std::vector<int> images(y.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i] = x(y.images_[i]);
    }
    return Permutation(std::move(images));
}

FiniteGroup FiniteGroup::from_elements(std::string name, std::vector<Permutation> elements,
                                       std::vector<std::string> labels) {
    if (elements.empty()) throw ArgumentError("a group needs at least one element");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.elements_ = std::move(elements);
    if (labels.empty()) {
        for (const auto& p : g.elements_) labels.push_back(p.to_cycle_string());
    }
    if (labels.size() != g.elements_.size()) throw ArgumentError("label count mismatch");
    g.labels_ = std::move(labels);
    const int degree = g.elements_.front().degree();
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        if (g.elements_[i].degree() != degree) throw ArgumentError("mixed permutation degrees");
        auto [it, inserted] = g.by_images_.emplace(images_key(g.elements_[i].images()), static_cast<int>(i));
        if (!inserted) throw ArgumentError("duplicate group element");
    }
    g.build_tables();
    return g;
}

FiniteGroup FiniteGroup::from_cayley_table(std::string name, int order, std::vector<int> table,
                                           std::vector<std::string> labels) {
    const auto n = static_cast<std::size_t>(order);
    if (order < 1 || table.size() != n * n) throw ArgumentError("Cayley table has the wrong shape");
    if (labels.size() != n) throw ArgumentError("label count mismatch");
    FiniteGroup g;
    g.name_ = std::move(name);
    g.labels_ = std::move(labels);
    g.elements_.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<int> images(n);
        for (std::size_t p = 0; p < n; ++p) {
            const int v = table[a * n + p];
            if (v < 0 || v >= order) throw InternalConsistencyError("Cayley table entry out of range");
            images[p] = v + 1;
        }
        try {
            g.elements_.push_back(Permutation::from_images(std::move(images)));
        } catch (const ArgumentError&) {
            throw InternalConsistencyError("Cayley table row is not a permutation");
        }
        g.by_images_.emplace(images_key(g.elements_.back().images()), static_cast<int>(a));
    }
    if (g.by_images_.size() != n) throw InternalConsistencyError("Cayley table has repeated rows");
    g.cayley_ = std::move(table);
    g.identity_ = -1;
    for (std::size_t a = 0; a < n && g.identity_ < 0; ++a) {
        bool neutral = true;
        for (std::size_t b = 0; b < n && neutral; ++b) {
            neutral = g.cayley_[a * n + b] == static_cast<int>(b) && g.cayley_[b * n + a] == static_cast<int>(b);
        }
        if (neutral) g.identity_ = static_cast<int>(a);
    }
    if (g.identity_ < 0) throw InternalConsistencyError("Cayley table has no neutral element");
    g.inverse_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (g.cayley_[a * n + b] == g.identity_) g.inverse_[a] = static_cast<int>(b);
        }
        if (g.inverse_[a] < 0 || g.cayley_[static_cast<std::size_t>(g.inverse_[a]) * n + a] != g.identity_) {
            throw InternalConsistencyError("Cayley table element without a two-sided inverse");
        }
    }
    if (!is_associative(g)) throw InternalConsistencyError("Cayley table is not associative");
    for (std::size_t i = 0; i < n; ++i) g.by_label_.emplace(g.labels_[i], static_cast<int>(i));
    return g;
}

void FiniteGroup::build_tables() {
    const std::size_t n = elements_.size();
    cayley_.assign(n * n, -1);
    inverse_.assign(n, -1);
    identity_ = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (elements_[i].is_identity()) identity_ = static_cast<int>(i);
    }
    if (identity_ < 0) throw InternalConsistencyError("group '" + name_ + "' lacks the identity");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto product = elements_[i] * elements_[j];
            auto it = by_images_.find(images_key(product.images()));
            if (it == by_images_.end()) {
                throw InternalConsistencyError("group '" + name_ + "' is not closed under products");
            }
            cayley_[i * n + j] = it->second;
            if (it->second == identity_) inverse_[i] = static_cast<int>(j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        by_label_.emplace(labels_[i], static_cast<int>(i));
    }
}

int FiniteGroup::power(int i, long long n) const {
    if (n < 0) return power(inverse(i), -n);
    int result = identity_;
    int base = i;
    while (n > 0) {
        if ((n & 1) != 0) result = multiply(result, base);
        base = multiply(base, base);
        n >>= 1;
    }
    return result;
}

std::optional<int> FiniteGroup::index_of(const Permutation& p) const {
    auto it = by_images_.find(images_key(p.images()));
    if (it == by_images_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> FiniteGroup::index_of_label(std::string_view text) const {
    if (auto it = by_label_.find(std::string(text)); it != by_label_.end()) return it->second;
    const std::string squeezed = normalize_spaces(text);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (normalize_spaces(labels_[i]) == squeezed) return static_cast<int>(i);
    }
    try {
        return index_of(Permutation::parse(text, elements_.front().degree()));
    } catch (const ArgumentError&) {
        return std::nullopt;
    }
}

FiniteGroup symmetric_group(int n) {
    check_degree_cap(n, 1, kMaxPermDegree, "symmetric group");
    return FiniteGroup::from_elements("S" + std::to_string(n), all_permutations(n));
}

FiniteGroup alternating_group(int n) {
    check_degree_cap(n, 3, kMaxPermDegree, "alternating group");
    auto all = all_permutations(n);
    std::vector<Permutation> even;
    for (auto& p : all) {
        if (p.is_even()) even.push_back(std::move(p));
    }
    return FiniteGroup::from_elements("A" + std::to_string(n), std::move(even));
}

FiniteGroup cyclic_group(int n) {
    check_degree_cap(n, 1, kMaxCyclicOrder, "cyclic group");
    std::vector<Permutation> elements;
    for (int k = 0; k < n; ++k) elements.push_back(Permutation::cycle_power(n, k));
    return FiniteGroup::from_elements("C" + std::to_string(n), std::move(elements));
}

int element_order(const FiniteGroup& group, int i) {
    int order = 1;
    for (int g = i; g != group.identity(); g = group.multiply(g, i)) ++order;
    return order;
}

long long group_exponent(const FiniteGroup& group) {
    long long e = 1;
    for (int i = 0; i < group.order(); ++i) e = std::lcm(e, static_cast<long long>(element_order(group, i)));
    return e;
}

std::vector<int> nth_power_set(const FiniteGroup& group, long long n) {
    if (n < 0) throw ArgumentError("power must be non-negative");
    std::vector<bool> hit(static_cast<std::size_t>(group.order()), false);
    for (int i = 0; i < group.order(); ++i) hit[static_cast<std::size_t>(group.power(i, n))] = true;
    std::vector<int> out;
    for (int i = 0; i < group.order(); ++i) {
        if (hit[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

std::vector<int> tpm(const FiniteGroup& group, long long n) {
    if (n < 1) throw ArgumentError("trivial power set needs n >= 1");
    std::vector<int> out;
    for (int i = 0; i < group.order(); ++i) {
        if (group.power(i, n) == group.identity()) out.push_back(i);
    }
    return out;
}

long long tpn(const FiniteGroup& group, long long n) {
    return static_cast<long long>(tpm(group, n).size());
}

bool is_associative(const FiniteGroup& group, std::uint64_t seed, int samples) {
    const int n = group.order();
    auto holds = [&](int a, int b, int c) {
        return group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c));
    };
    if (n <= 60) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!holds(a, b, c)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < samples; ++s) {
        if (!holds(pick(rng), pick(rng), pick(rng))) return false;
    }
    return true;
}

} // namespace hopfpow
