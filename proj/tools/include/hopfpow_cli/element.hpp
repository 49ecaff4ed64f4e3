#pragma once

#include "hopfpow/hopf_algebra.hpp"

#include <string>
#include <string_view>

namespace hopfpow::cli {

/// Whitespace collapsed and every run of cycles rewritten in canonical
/// cycle notation, so "d[(1 4 3 2)]#(1 2)" and "d[(2 1 4 3)]#(2,1)" agree.
std::string canonical_label(std::string_view label);

/// Exact rational from "3", "-1/2" or "0.25".
Rational parse_rational(std::string_view text);

/// Either a coordinate vector (numbers separated by commas, whitespace or
/// newlines; exactly dim of them) or a signed sum of basis labels with
/// optional "c*" coefficients; "1#a" expands to the sum of every d[x]#a.
/// Unknown labels raise ArgumentError naming the closest basis labels.
Vector parse_element(const HopfAlgebra& h, std::string_view text);

} // namespace hopfpow::cli
