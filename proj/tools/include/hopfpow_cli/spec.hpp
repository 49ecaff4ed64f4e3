#pragma once

#include "hopfpow/hopf_algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfpow::cli {

inline constexpr long long kMaxDim = 1024;

/// Parsed algebra expression, e.g. "tensor(dualgroup:S3,group:S3)".
struct AlgebraSpec {
    enum class Kind { Group, DualGroup, Double, Bismash, Tensor, Dual, Op };

    Kind kind = Kind::Group;
    char family = 'S'; // S, A or C for the leaf kinds
    int k = 1;
    std::vector<AlgebraSpec> children;

    bool is_leaf() const noexcept { return children.empty(); }
    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Throws ParseError (with the offending position) or ResourceLimitError.
AlgebraSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(render(s)) == s.
std::string render(const AlgebraSpec& spec);
/// Name as used in table captions, in LaTeX.
std::string latex_name(const AlgebraSpec& spec);

long long spec_dim(const AlgebraSpec& spec);

/// The leaf group G behind group:, dualgroup: and double: specs.
FiniteGroup leaf_group(const AlgebraSpec& spec);

std::shared_ptr<const HopfAlgebra> build_algebra(const AlgebraSpec& spec);

} // namespace hopfpow::cli
