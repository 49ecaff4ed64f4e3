#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopfpow {

/// A bijection of {1, ..., degree}; images()[i - 1] is the image of i.
///
/// Products act on the left: (x * y)(p) = x(y(p)), so x * y means "apply y,
/// then x". Every group table in the library uses this convention.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree);
    /// Throws ArgumentError unless images is a bijection on {1, ..., size}.
    static Permutation from_images(std::vector<int> images);
    /// Disjoint-cycle notation, e.g. "(1 3)(2 4)" or "(1,2,3)"; "()" is the identity.
    static Permutation parse(std::string_view text, int degree);
    /// The standard n-cycle (1 2 ... n) raised to the power k.
    static Permutation cycle_power(int n, long long k);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    bool is_identity() const noexcept;
    bool is_even() const;
    /// Same permutation on {1, ..., degree}, fixing the added points.
    Permutation extended(int degree) const;

    /// Disjoint cycles in order of their smallest point; fixed points omitted.
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation& x, const Permutation& y);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// A finite permutation group, fully enumerated, with Cayley and inverse tables.
///
/// Element indices are 0-based positions in elements(). The Cayley table obeys
/// the Permutation product convention: multiply(i, j) indexes elements()[i] * elements()[j].
class FiniteGroup {
public:
    /// Builds tables from an explicit duplicate-free element list; throws
    /// InternalConsistencyError if the list is not closed under products.
    static FiniteGroup from_elements(std::string name, std::vector<Permutation> elements,
                                     std::vector<std::string> labels = {});
    /// Abstract group given by a Cayley table (row-major, order x order).
    /// Elements are realized through the left regular representation.
    static FiniteGroup from_cayley_table(std::string name, int order, std::vector<int> table,
                                         std::vector<std::string> labels);

    const std::string& name() const noexcept { return name_; }
    int order() const noexcept { return static_cast<int>(elements_.size()); }
    int identity() const noexcept { return identity_; }
    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    int multiply(int i, int j) const {
        return cayley_[static_cast<std::size_t>(i) * elements_.size() + static_cast<std::size_t>(j)];
    }
    int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    /// i-th element raised to n >= 0, by repeated squaring on the table.
    int power(int i, long long n) const;

    std::optional<int> index_of(const Permutation& p) const;
    /// Looks up a label exactly; also accepts cycle notation for permutation groups.
    std::optional<int> index_of_label(std::string_view text) const;

    const std::vector<int>& cayley_table() const noexcept { return cayley_; }

private:
    FiniteGroup() = default;
    void build_tables();

    std::string name_;
    std::vector<Permutation> elements_;
    std::vector<std::string> labels_;
    std::vector<int> cayley_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::unordered_map<std::string, int> by_label_;
    std::unordered_map<std::string, int> by_images_;
};

/// S_n with elements in lexicographic order of image sequences (identity first).
FiniteGroup symmetric_group(int n);
/// A_n, the even permutations of S_n in the same order.
FiniteGroup alternating_group(int n);
/// C_n generated by the n-cycle (1 2 ... n); element k (1-based) is the power k - 1.
FiniteGroup cyclic_group(int n);

int element_order(const FiniteGroup& group, int i);
/// lcm of the element orders.
long long group_exponent(const FiniteGroup& group);

/// Sorted indices of {g^n : g in G}.
std::vector<int> nth_power_set(const FiniteGroup& group, long long n);
/// Sorted indices of {g : g^n = identity}.
std::vector<int> tpm(const FiniteGroup& group, long long n);
long long tpn(const FiniteGroup& group, long long n);

/// Checks (gh)k = g(hk): every triple when order <= 60, else `samples` random triples.
bool is_associative(const FiniteGroup& group, std::uint64_t seed = 1, int samples = 10000);

} // namespace hopfpow
