#include "seidel/bounds.hpp"

#include <algorithm>

namespace seidel {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

namespace {

Rational bound_value(std::int64_t d, std::int64_t lambda0)
{
    const std::int64_t l2 = lambda0 * lambda0;
    return Rational(d * (l2 - 1), l2 - d);
}

// Sum of (lambda_i - mu)^2 over the d eigenvalues other than lambda0, from the power sums.
std::int64_t deviation_sum(std::int64_t d, std::int64_t lambda0, std::int64_t n, std::int64_t mu)
{
    return n * (n - 1) - (n - d) * lambda0 * lambda0 + 2 * mu * lambda0 * (n - d) + d * mu * mu;
}

std::int64_t gap_rhs(std::int64_t d, std::int64_t lambda0, std::int64_t n, std::int64_t mu, Rational& t_out)
{
    const std::int64_t l2 = lambda0 * lambda0;
    const Rational t = bound_value(d, lambda0) - n;
    const std::int64_t lin = d * mu + lambda0 * (n - d);
    const Rational via_t = (t * (t * (l2 - d) - d * (l2 - 1)) - lin * lin + d * d) / d;
    const std::int64_t via_sums = d - deviation_sum(d, lambda0, n, mu);
    if (via_t != Rational(via_sums))
        throw Error("multiplicity bound: the two evaluations disagree (" + to_string(via_t) + " vs " +
                    std::to_string(via_sums) + ")");
    t_out = t;
    return via_sums;
}

std::optional<Spectrum> equality_case(std::int64_t d, std::int64_t lambda0, std::int64_t n, std::int64_t mu,
                                      std::int64_t m, std::optional<std::int64_t>& w_out)
{
    const std::int64_t twice_w = d * mu + lambda0 * (n - d) + d - m;
    if (m < 0 || mod(twice_w, 2) != 0)
        return std::nullopt;
    const std::int64_t w = twice_w / 2;
    if (w < 0 || w > d - m)
        return std::nullopt;
    w_out = w;
    return Spectrum({{lambda0, n - d}, {mu - 1, w}, {mu, m}, {mu + 1, d - m - w}});
}

} // namespace

RelativeBoundResult relative_bound(std::int64_t d, std::int64_t lambda0)
{
    if (d < 1 || lambda0 >= 0)
        throw PreconditionError("relative bound needs d >= 1 and lambda0 < 0");
    if (lambda0 * lambda0 <= d)
        throw PreconditionError("relative bound is vacuous for lambda0^2 <= d");
    RelativeBoundResult out;
    out.d = d;
    out.lambda0 = lambda0;
    out.bound = bound_value(d, lambda0);
    out.floor_bound = floor(out.bound);
    out.tight_applicable = lambda0 * lambda0 >= d + 2;
    if (out.bound.denominator() == 1) {
        const std::int64_t n = out.bound.numerator();
        if ((-lambda0 * (n - d)) % d == 0)
            out.equality_spectrum = Spectrum({{lambda0, n - d}, {-lambda0 * (n - d) / d, d}});
    }
    return out;
}

RelativeBoundGap multiplicity_lower_bound(std::int64_t d, std::int64_t lambda0, std::int64_t n, std::int64_t mu)
{
    if (d < 1 || mu == lambda0)
        throw PreconditionError("multiplicity bound needs d >= 1 and mu != lambda0");
    if (lambda0 * lambda0 < d + 2)
        throw PreconditionError("multiplicity bound needs lambda0^2 >= d + 2");
    if (n < d + 1 || Rational(n) > bound_value(d, lambda0))
        throw PreconditionError("order " + std::to_string(n) + " is outside (d, relative bound]");
    RelativeBoundGap out;
    out.d = d;
    out.lambda0 = lambda0;
    out.n = n;
    out.mu = mu;
    out.rhs = gap_rhs(d, lambda0, n, mu, out.t);
    out.equality_spectrum = equality_case(d, lambda0, n, mu, out.rhs, out.w);
    return out;
}

std::string to_string(ForcedSpectrum::Kind kind)
{
    switch (kind) {
    case ForcedSpectrum::Kind::Forced: return "forced";
    case ForcedSpectrum::Kind::Nonexistent: return "nonexistent";
    case ForcedSpectrum::Kind::NotForced: return "not-forced";
    }
    return "not-forced";
}

std::string to_string(ForcedSpectrum::Source source)
{
    return source == ForcedSpectrum::Source::OddOrder ? "odd-order" : "even-order";
}

ForcedSpectrum forced_spectrum_even_mu(std::int64_t d, std::int64_t lambda0)
{
    const auto rb = relative_bound(d, lambda0);
    ForcedSpectrum out;
    out.d = d;
    out.lambda0 = lambda0;
    out.n = rb.floor_bound;
    out.source = out.n % 2 == 1 ? ForcedSpectrum::Source::OddOrder : ForcedSpectrum::Source::EvenOrder;
    out.allowed = out.n % 2 == 1 ? 1 : 0;

    // closest even integer to x = -lambda0 (n-d)/d
    const Rational half = Rational(-lambda0 * (out.n - d), d) / 2;
    const std::int64_t fl = floor(half);
    const Rational frac = half - fl;
    if (frac < Rational(1, 2)) {
        out.mu = 2 * fl;
    }
    else if (frac > Rational(1, 2)) {
        out.mu = 2 * (fl + 1);
    }
    else {
        out.tie = true;
        out.mu = std::abs(2 * fl) <= std::abs(2 * fl + 2) ? 2 * fl : 2 * fl + 2;
    }

    Rational t;
    out.rhs = gap_rhs(d, lambda0, out.n, out.mu, t);
    if (out.rhs < out.allowed)
        return out;
    std::optional<std::int64_t> w;
    out.spectrum = equality_case(d, lambda0, out.n, out.mu, out.rhs, w);
    out.w = w.value_or(0);
    out.kind = out.rhs == out.allowed ? ForcedSpectrum::Kind::Forced : ForcedSpectrum::Kind::Nonexistent;
    if (out.kind == ForcedSpectrum::Kind::Forced && !out.spectrum)
        throw Error("forced multiplicity does not give an integral spectrum");
    return out;
}

std::int64_t diag_lower_bound(std::int64_t n, std::int64_t c2, std::int64_t /*c1*/, std::int64_t c0, int sigma)
{
    return sigma * ((n - 1) * c2 + c0);
}

TraceCubeResult trace_cube_test(const Spectrum& spectrum)
{
    if (spectrum.has_residual() || spectrum.distinct_explicit() != 4 ||
        spectrum.integer_eigenvalues().size() != 4)
        throw PreconditionError("trace-cube test needs four distinct integer eigenvalues");
    const std::int64_t n = spectrum.order();
    if (n % 2 == 0)
        throw PreconditionError("trace-cube test needs odd order");

    std::vector<SpectrumEntry> others;
    std::optional<std::int64_t> theta0;
    for (const auto& entry : spectrum.entries()) {
        const std::int64_t v = std::get<std::int64_t>(entry.value);
        if (!theta0 && entry.multiplicity == 1 && mod(v, 2) == 0)
            theta0 = v;
        else
            others.push_back(entry);
    }
    if (!theta0)
        throw PreconditionError("trace-cube test needs a simple even eigenvalue");

    TraceCubeResult out;
    out.theta0 = *theta0;
    std::int64_t e1 = 0;
    std::int64_t e3 = 1;
    BigInt p_at_theta0 = 1;
    for (const auto& entry : others) {
        const std::int64_t v = std::get<std::int64_t>(entry.value);
        e1 += v;
        e3 *= v;
        p_at_theta0 *= BigInt(out.theta0 - v);
        out.cube_sum += BigInt(entry.multiplicity) * v * v * v;
    }
    out.sigma = p_at_theta0 > 0 ? 1 : -1;
    out.parity_value = (n - 1) * e1 + e3;
    const BigInt bn = n;
    out.lhs = BigInt(out.sigma) * out.theta0 * out.theta0 * out.theta0;
    out.rhs = bn + out.sigma * (bn * (bn - 1) * e1 + bn * e3 - out.cube_sum);
    out.holds = out.lhs >= out.rhs;
    return out;
}

} // namespace seidel
