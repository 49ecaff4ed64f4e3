#include "hopfpow_cli/spec.hpp"

#include "hopfpow/errors.hpp"
#include "hopfpow/matched_pairs.hpp"

#include <cctype>

namespace hopfpow::cli {

namespace {

using Kind = AlgebraSpec::Kind;

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long group_order(char family, int k) {
    switch (family) {
    case 'S': return factorial(k);
    case 'A': return k < 2 ? 1 : factorial(k) / 2;
    default: return k;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    AlgebraSpec parse() {
        auto spec = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    AlgebraSpec expression() {
        const std::size_t start = pos_;
        if (accept("group:")) return leaf(Kind::Group, "SAC");
        if (accept("dualgroup:")) return leaf(Kind::DualGroup, "SAC");
        if (accept("double:")) return leaf(Kind::Double, "SAC");
        if (accept("bismash:")) return leaf(Kind::Bismash, "SA");
        if (accept("tensor(")) {
            AlgebraSpec s;
            s.kind = Kind::Tensor;
            s.children.push_back(expression());
            expect(',');
            s.children.push_back(expression());
            expect(')');
            return s;
        }
        for (auto [word, kind] : {std::pair{"dual(", Kind::Dual}, std::pair{"op(", Kind::Op}}) {
            if (accept(word)) {
                AlgebraSpec s;
                s.kind = kind;
                s.children.push_back(expression());
                expect(')');
                return s;
            }
        }
        pos_ = start;
        skip_space();
        fail("expected group:, dualgroup:, double:, bismash:, tensor(, dual( or op(");
    }

    AlgebraSpec leaf(Kind kind, std::string_view families) {
        skip_space();
        if (pos_ >= text_.size() || families.find(text_[pos_]) == std::string_view::npos) {
            fail("expected a group name starting with one of " + std::string(families));
        }
        AlgebraSpec s;
        s.kind = kind;
        s.family = text_[pos_++];
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected a number after the group letter");
        if (pos_ - digits > 4) fail("group parameter too large");
        s.k = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
        const std::size_t end = pos_;
        pos_ = digits;
        validate(s);
        pos_ = end;
        return s;
    }

    void validate(const AlgebraSpec& s) const {
        const std::string name = std::string(1, s.family) + std::to_string(s.k);
        if (s.kind == Kind::Bismash) {
            if (s.family == 'S' && s.k < 3) fail("bismash:S needs k >= 3");
            if (s.family == 'A' && (s.k < 5 || s.k % 2 == 0)) fail("bismash:A needs odd k >= 5");
            if (s.k > 20) throw ResourceLimitError("bismash:" + name + " is far above the dimension cap");
            return;
        }
        if (s.k < 1) fail("group parameter must be positive");
        if (s.family != 'C' && s.k > 20) throw ResourceLimitError(name + " is far above the dimension cap");
        if (s.family == 'A' && s.k < 3) fail("A_k needs k >= 3");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void enforce_caps(const AlgebraSpec& spec) {
    for (const auto& c : spec.children) enforce_caps(c);
    const long long d = spec_dim(spec);
    if (d > kMaxDim) {
        throw ResourceLimitError(render(spec) + " has dimension " + std::to_string(d) + ", above the cap of " +
                                 std::to_string(kMaxDim));
    }
}

std::string group_name(const AlgebraSpec& s) { return std::string(1, s.family) + std::to_string(s.k); }
std::string latex_group(const AlgebraSpec& s) { return std::string(1, s.family) + "_{" + std::to_string(s.k) + "}"; }

FiniteGroup make_group(char family, int k) {
    switch (family) {
    case 'S': return symmetric_group(k);
    case 'A': return alternating_group(k);
    default: return cyclic_group(k);
    }
}

} // namespace

AlgebraSpec parse_spec(std::string_view text) {
    auto spec = Parser(text).parse();
    enforce_caps(spec);
    return spec;
}

std::string render(const AlgebraSpec& spec) {
    switch (spec.kind) {
    case Kind::Group: return "group:" + group_name(spec);
    case Kind::DualGroup: return "dualgroup:" + group_name(spec);
    case Kind::Double: return "double:" + group_name(spec);
    case Kind::Bismash: return "bismash:" + group_name(spec);
    case Kind::Tensor: return "tensor(" + render(spec.children[0]) + "," + render(spec.children[1]) + ")";
    case Kind::Dual: return "dual(" + render(spec.children[0]) + ")";
    case Kind::Op: return "op(" + render(spec.children[0]) + ")";
    }
    return {};
}

std::string latex_name(const AlgebraSpec& spec) {
    switch (spec.kind) {
    case Kind::Group: return "\\mathbb{Q} " + latex_group(spec);
    case Kind::DualGroup: return "\\mathbb{Q}^{" + latex_group(spec) + "}";
    case Kind::Double: return "D(\\mathbb{Q} " + latex_group(spec) + ")";
    case Kind::Bismash: {
        const std::string sub = std::string(1, spec.family) + "_{" + std::to_string(spec.k - 1) + "}";
        return "\\mathbb{Q}^{C_{" + std::to_string(spec.k) + "}}\\#\\mathbb{Q} " + sub;
    }
    case Kind::Tensor: return latex_name(spec.children[0]) + "\\otimes " + latex_name(spec.children[1]);
    case Kind::Dual: {
        const auto& c = spec.children[0];
        if (c.kind == Kind::Double) return latex_name(c) + "^*";
        return "(" + latex_name(c) + ")^*";
    }
    case Kind::Op: return "(" + latex_name(spec.children[0]) + ")^{\\mathrm{op}}";
    }
    return {};
}

long long spec_dim(const AlgebraSpec& spec) {
    switch (spec.kind) {
    case Kind::Group:
    case Kind::DualGroup: return group_order(spec.family, spec.k);
    case Kind::Double: {
        const long long g = group_order(spec.family, spec.k);
        return g > kMaxDim ? g * kMaxDim : g * g;
    }
    case Kind::Bismash: return static_cast<long long>(spec.k) * group_order(spec.family, spec.k - 1);
    case Kind::Tensor: {
        const long long a = spec_dim(spec.children[0]);
        const long long b = spec_dim(spec.children[1]);
        return a > kMaxDim || b > kMaxDim ? (kMaxDim + 1) : a * b;
    }
    case Kind::Dual:
    case Kind::Op: return spec_dim(spec.children[0]);
    }
    return 0;
}

FiniteGroup leaf_group(const AlgebraSpec& spec) {
    if (!spec.is_leaf() || spec.kind == Kind::Bismash) throw ArgumentError(render(spec) + " has no single underlying group");
    return make_group(spec.family, spec.k);
}

std::shared_ptr<const HopfAlgebra> build_algebra(const AlgebraSpec& spec) {
    switch (spec.kind) {
    case Kind::Group: return std::make_shared<const HopfAlgebra>(group_algebra(leaf_group(spec)));
    case Kind::DualGroup: return std::make_shared<const HopfAlgebra>(dual_group_algebra(leaf_group(spec)));
    case Kind::Double: return std::make_shared<const HopfAlgebra>(bismash(double_pair(leaf_group(spec))));
    case Kind::Bismash: {
        const auto mp = spec.family == 'S' ? from_factorizable_symmetric(spec.k) : from_factorizable_alternating(spec.k);
        return std::make_shared<const HopfAlgebra>(bismash(mp));
    }
    case Kind::Tensor: {
        const auto a = build_algebra(spec.children[0]);
        const auto b = build_algebra(spec.children[1]);
        return std::make_shared<const HopfAlgebra>(tensor(*a, *b));
    }
    case Kind::Dual: return std::make_shared<const HopfAlgebra>(dual(*build_algebra(spec.children[0])));
    case Kind::Op: return std::make_shared<const HopfAlgebra>(opposite(*build_algebra(spec.children[0])));
    }
    throw ArgumentError("unknown spec kind");
}

} // namespace hopfpow::cli
