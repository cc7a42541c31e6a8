#include "adm/gp_series.hpp"

#include "adm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace adm {

namespace {

bool is_integer_valued(double e) { return std::abs(e - std::round(e)) <= kExponentTolerance; }

} // namespace

GPSeries GPSeries::normalize(std::vector<Term> raw) {
    for (const Term& t : raw) {
        if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent)) {
            throw Error(ErrorCode::NonFiniteTerm, "non-finite term in series (coeff " +
                                                      std::to_string(t.coeff) + ", exponent " +
                                                      std::to_string(t.exponent) + ")");
        }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Term& a, const Term& b) { return a.exponent < b.exponent; });

    // Groups are anchored at their smallest exponent so that a second pass
    // sees every surviving neighbour pair more than the tolerance apart.
    std::vector<Term> merged;
    merged.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
        const double anchor = raw[i].exponent;
        double sum = 0.0;
        std::size_t j = i;
        while (j < raw.size() && raw[j].exponent - anchor <= kExponentTolerance) {
            sum += raw[j].coeff;
            ++j;
        }
        merged.push_back({sum, std::abs(anchor) <= kExponentTolerance ? 0.0 : anchor});
        i = j;
    }

    double largest = 0.0;
    for (const Term& t : merged) largest = std::max(largest, std::abs(t.coeff));
    const double cutoff = kPruneRelative * largest;
    std::erase_if(merged, [&](const Term& t) { return t.coeff == 0.0 || std::abs(t.coeff) < cutoff; });
    return GPSeries(std::move(merged));
}

GPSeries GPSeries::constant(double c) { return normalize({{c, 0.0}}); }

GPSeries GPSeries::monomial(double c, double exponent) { return normalize({{c, exponent}}); }

bool GPSeries::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && std::abs(terms_[0].exponent) <= kExponentTolerance);
}

double GPSeries::constant_value() const noexcept { return terms_.empty() ? 0.0 : terms_[0].coeff; }

double GPSeries::min_exponent() const noexcept { return terms_.empty() ? 0.0 : terms_.front().exponent; }

double GPSeries::max_exponent() const noexcept { return terms_.empty() ? 0.0 : terms_.back().exponent; }

double GPSeries::evaluate(double x) const {
    if (x > 0.0) {
        double sum = 0.0;
        for (const Term& t : terms_) sum += t.coeff * std::pow(x, t.exponent);
        return sum;
    }
    double sum = 0.0;
    for (const Term& t : terms_) {
        const bool negative = t.exponent < -kExponentTolerance;
        if (negative || (x < 0.0 && !is_integer_valued(t.exponent))) {
            throw Error(ErrorCode::DomainError, "cannot evaluate x^" + std::to_string(t.exponent) +
                                                    " at x = " + std::to_string(x));
        }
        if (t.exponent == 0.0) {
            sum += t.coeff; // 0^0 = 1
        } else if (x < 0.0) {
            sum += t.coeff * std::pow(x, static_cast<int>(std::round(t.exponent)));
        }
    }
    return sum;
}

GPSeries add(const GPSeries& a, const GPSeries& b) {
    std::vector<Term> raw(a.terms().begin(), a.terms().end());
    raw.insert(raw.end(), b.terms().begin(), b.terms().end());
    return GPSeries::normalize(std::move(raw));
}

GPSeries sub(const GPSeries& a, const GPSeries& b) { return add(a, scale(b, -1.0)); }

GPSeries scale(const GPSeries& a, double k) {
    std::vector<Term> raw;
    raw.reserve(a.size());
    for (const Term& t : a.terms()) raw.push_back({t.coeff * k, t.exponent});
    return GPSeries::normalize(std::move(raw));
}

GPSeries mul(const GPSeries& a, const GPSeries& b, std::size_t term_cap) {
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) raw.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
    }
    GPSeries out = GPSeries::normalize(std::move(raw));
    if (out.size() > term_cap) {
        throw Error(ErrorCode::TermBlowup, "product has " + std::to_string(out.size()) +
                                               " terms, cap is " + std::to_string(term_cap));
    }
    return out;
}

GPSeries mul_monomial(const GPSeries& a, double c, double exponent) {
    std::vector<Term> raw;
    raw.reserve(a.size());
    for (const Term& t : a.terms()) raw.push_back({t.coeff * c, t.exponent + exponent});
    return GPSeries::normalize(std::move(raw));
}

GPSeries differentiate(const GPSeries& a) {
    std::vector<Term> raw;
    raw.reserve(a.size());
    for (const Term& t : a.terms()) {
        if (std::abs(t.exponent) <= kExponentTolerance) continue;
        raw.push_back({t.coeff * t.exponent, t.exponent - 1.0});
    }
    return GPSeries::normalize(std::move(raw));
}

std::string format_coeff(double c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10e", c);
    std::string s(buf);
    // printf pads the exponent ("e-02", "e+00"); the display form does not.
    const auto e = s.find('e');
    if (e == std::string::npos) return s;
    std::string mantissa = s.substr(0, e);
    std::string exp = s.substr(e + 1);
    bool negative = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
        negative = exp[0] == '-';
        exp.erase(0, 1);
    }
    exp.erase(0, std::min(exp.find_first_not_of('0'), exp.size() - 1));
    return mantissa + "e" + (negative ? "-" : "") + exp;
}

std::string to_display(const GPSeries& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const Term& t : a.terms()) {
        if (!out.empty()) out += " + ";
        char exp[64];
        std::snprintf(exp, sizeof exp, "%.6g", t.exponent);
        out += format_coeff(t.coeff);
        out += "*x^";
        out += exp;
    }
    return out;
}

} // namespace adm
