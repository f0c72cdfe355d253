#ifndef NBRW_POWER_SERIES_HPP
#define NBRW_POWER_SERIES_HPP

#include "nbrw/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace nbrw {

/// Formal power series truncated after degree N; every operation is exact
/// through degree N when T is exact.
template <class T>
class PowerSeries {
public:
    explicit PowerSeries(int degree, std::string variable = "t")
        : coeffs_(static_cast<std::size_t>(degree) + 1, T(0)), variable_(std::move(variable))
    {
        if (degree < 0) throw BadParams("power series degree must be nonnegative");
    }

    PowerSeries(std::vector<T> coeffs, int degree, std::string variable = "t")
        : PowerSeries(degree, std::move(variable))
    {
        for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
    }

    static PowerSeries constant(const T& c, int degree)
    {
        PowerSeries s(degree);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series of the variable itself.
    static PowerSeries identity(int degree, std::string variable = "t")
    {
        PowerSeries s(degree, std::move(variable));
        if (degree >= 1) s.coeffs_[1] = T(1);
        return s;
    }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::string& variable() const noexcept { return variable_; }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }
    const T& operator[](std::size_t k) const { return coeffs_[k]; }
    T& operator[](std::size_t k) { return coeffs_[k]; }

    PowerSeries& operator+=(const PowerSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o)
    {
        check(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    PowerSeries& operator*=(const T& c)
    {
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const T& c) { return a *= c; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
    {
        a.check(b);
        PowerSeries out(a.degree(), a.variable_);
        const std::size_t n = a.coeffs_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    PowerSeries inverse() const
    {
        if (coeffs_[0] == T(0)) throw BadParams("power series with zero constant term is not invertible");
        PowerSeries out(degree(), variable_);
        const T inv0 = T(1) / coeffs_[0];
        out.coeffs_[0] = inv0;
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            T acc(0);
            for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
            out.coeffs_[k] = -acc * inv0;
        }
        return out;
    }

    /// this(inner(t)) by Horner's rule; inner must have zero constant term.
    PowerSeries compose(const PowerSeries& inner) const
    {
        check(inner);
        if (inner.coeffs_[0] != T(0)) throw BadParams("composition needs an inner series without constant term");
        PowerSeries out(degree(), inner.variable_);
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            out = out * inner;
            out.coeffs_[0] += coeffs_[k];
        }
        return out;
    }

private:
    void check(const PowerSeries& o) const
    {
        if (o.coeffs_.size() != coeffs_.size()) throw BadParams("power series truncation degrees differ");
    }

    std::vector<T> coeffs_;
    std::string variable_;
};

} // namespace nbrw

#endif // NBRW_POWER_SERIES_HPP
