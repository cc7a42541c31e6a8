#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace adm {

/// Exponents closer than this are the same monomial.
inline constexpr double kExponentTolerance = 1e-12;
/// Coefficients below this fraction of the largest |coeff| are dropped.
inline constexpr double kPruneRelative = 1e-14;
inline constexpr std::size_t kDefaultTermCap = 10000;

struct Term {
    double coeff = 0.0;
    double exponent = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Generalized power series: a finite sum of c * x^e with real exponents,
/// kept sorted by strictly increasing exponent. Immutable once built; every
/// operation returns a fresh normalized value.
class GPSeries {
public:
    GPSeries() = default;

    /// Sort, merge near-equal exponents, prune negligible coefficients.
    /// Throws Error(NonFiniteTerm) on NaN/inf input.
    static GPSeries normalize(std::vector<Term> raw);
    static GPSeries constant(double c);
    static GPSeries monomial(double c, double exponent);

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Zero, or a single term whose exponent is 0 within tolerance.
    bool is_constant() const noexcept;
    /// Value of a constant series; only meaningful when is_constant().
    double constant_value() const noexcept;
    double min_exponent() const noexcept;
    double max_exponent() const noexcept;

    /// Sum of c * x^e. At x = 0 all exponents must be >= 0 (0^0 = 1); for
    /// x < 0 they must also be integers. Otherwise DomainError.
    double evaluate(double x) const;

    friend bool operator==(const GPSeries&, const GPSeries&) = default;

private:
    explicit GPSeries(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;
};

GPSeries add(const GPSeries& a, const GPSeries& b);
GPSeries sub(const GPSeries& a, const GPSeries& b);
GPSeries scale(const GPSeries& a, double k);
/// Pairwise product; throws TermBlowup when the normalized result has more
/// than `term_cap` terms.
GPSeries mul(const GPSeries& a, const GPSeries& b, std::size_t term_cap = kDefaultTermCap);
/// Multiply by the single monomial c * x^e (no term growth).
GPSeries mul_monomial(const GPSeries& a, double c, double exponent);
GPSeries differentiate(const GPSeries& a);

/// `{coeff:.10e}*x^{exponent:.6g}` terms joined by " + ", or "0".
std::string to_display(const GPSeries& a);
/// Single coefficient in the display's scientific style, e.g. "2.5000000000e-1".
std::string format_coeff(double c);

} // namespace adm
