#include "normeq/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace normeq {

std::string_view to_string(Field f)
{
    return f == Field::real ? "real" : "complex";
}

ExtIndex::ExtIndex(double value)
{
    if (std::isnan(value) || value < 1.0)
        throw PreconditionError("norm index must lie in [1, inf]");
    if (std::isinf(value)) {
        kind_ = Kind::infinity;
        value_ = 0.0;
    } else if (value == 1.0) {
        kind_ = Kind::one;
        value_ = 1.0;
    } else if (value == 2.0) {
        kind_ = Kind::two;
        value_ = 2.0;
    } else {
        kind_ = Kind::finite;
        value_ = value;
    }
}

ExtIndex ExtIndex::parse(std::string_view text)
{
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered == "inf" || lowered == "infinity" || lowered == "+inf")
        return infinity();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(lowered.data(), lowered.data() + lowered.size(), v);
    if (ec != std::errc{} || ptr != lowered.data() + lowered.size())
        throw PreconditionError("cannot parse norm index '" + std::string(text) + "'");
    return ExtIndex(v);
}

double ExtIndex::value() const
{
    return kind_ == Kind::infinity ? std::numeric_limits<double>::infinity() : value_;
}

double ExtIndex::reciprocal() const
{
    switch (kind_) {
    case Kind::one: return 1.0;
    case Kind::two: return 0.5;
    case Kind::infinity: return 0.0;
    case Kind::finite: break;
    }
    return 1.0 / value_;
}

std::string ExtIndex::str() const
{
    if (kind_ == Kind::infinity)
        return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

std::partial_ordering operator<=>(const ExtIndex& a, const ExtIndex& b)
{
    return a.value() <=> b.value();
}

bool operator==(const ExtIndex& a, const ExtIndex& b)
{
    return a.kind_ == b.kind_ && (a.kind_ != ExtIndex::Kind::finite || a.value_ == b.value_);
}

ExtIndex conjugate(ExtIndex p)
{
    switch (p.kind()) {
    case ExtIndex::Kind::one: return ExtIndex::infinity();
    case ExtIndex::Kind::two: return ExtIndex::two();
    case ExtIndex::Kind::infinity: return ExtIndex::one();
    case ExtIndex::Kind::finite: break;
    }
    const double v = p.value();
    return ExtIndex(v / (v - 1.0));
}

int sign_of_difference(ExtIndex a, ExtIndex b)
{
    if (a == b)
        return 0;
    return a < b ? -1 : 1;
}

double vector_norm(std::span<const Scalar> x, ExtIndex p)
{
    double largest = 0.0;
    for (const auto& v : x)
        largest = std::max(largest, std::abs(v));
    if (p.is_infinite() || largest == 0.0)
        return largest;

    double acc = 0.0;
    switch (p.kind()) {
    case ExtIndex::Kind::one:
        for (const auto& v : x)
            acc += std::abs(v);
        return acc;
    case ExtIndex::Kind::two:
        for (const auto& v : x) {
            const double t = std::abs(v) / largest;
            acc += t * t;
        }
        return largest * std::sqrt(acc);
    default:
        break;
    }
    const double e = p.value();
    for (const auto& v : x)
        acc += std::pow(std::abs(v) / largest, e);
    return largest * std::pow(acc, 1.0 / e);
}

double prop1_factor(ExtIndex r, ExtIndex p, std::size_t m)
{
    const double exponent = positive_part(r.reciprocal() - p.reciprocal());
    return exponent == 0.0 ? 1.0 : std::pow(static_cast<double>(m), exponent);
}

std::string_view to_string(KClass k)
{
    switch (k) {
    case KClass::K1: return "K1";
    case KClass::Kminus1: return "K-1";
    case KClass::K0: return "K0";
    }
    return "?";
}

KClass k_class_from_sign(int sgn)
{
    if (sgn > 0)
        return KClass::K1;
    if (sgn < 0)
        return KClass::Kminus1;
    return KClass::K0;
}

bool k_class_test(std::span<const Scalar> x, KClass k, double tol)
{
    if (k == KClass::K0 || x.empty())
        return true;
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& v : x) {
        const double a = std::abs(v);
        hi = std::max(hi, a);
        lo = std::min(lo, a);
    }
    if (hi == 0.0)
        return true;
    if (k == KClass::K1)
        return hi - lo <= tol * hi;
    const auto big = std::count_if(x.begin(), x.end(),
                                   [&](const Scalar& v) { return std::abs(v) > tol * hi; });
    return big <= 1;
}

KClass prop1_equality_class(ExtIndex p, ExtIndex r)
{
    return k_class_from_sign(sign_of_difference(p, r));
}

Scalar phase(Scalar z)
{
    const double a = std::abs(z);
    if (a == 0.0)
        return {1.0, 0.0};
    // keep real inputs exactly real
    if (z.imag() == 0.0)
        return {z.real() > 0.0 ? 1.0 : -1.0, 0.0};
    return z / a;
}

} // namespace normeq
