#ifndef NBRW_RATIONAL_HPP
#define NBRW_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nbrw {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class NumericMode { rational, floating };

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// Scalar construction shared by the templated walk code; T is either
// double or Rational.
template <class T>
T fraction(std::int64_t num, std::int64_t den);

template <>
inline double fraction<double>(std::int64_t num, std::int64_t den)
{
    return static_cast<double>(num) / static_cast<double>(den);
}

template <>
inline Rational fraction<Rational>(std::int64_t num, std::int64_t den)
{
    Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::string format_double(double x);

// "1/4" in rational mode, shortest round-trip decimal otherwise.
inline std::string format_scalar(const Rational& q) { return to_string(q); }
inline std::string format_scalar(double x) { return format_double(x); }

} // namespace nbrw

#endif // NBRW_RATIONAL_HPP
