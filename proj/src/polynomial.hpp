#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace choreobraid {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer-coefficient polynomial, ascending coefficients, trailing
// zeros trimmed; empty list is the zero polynomial.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    static IntPolynomial from_ints(std::initializer_list<long long> ascending);
    static IntPolynomial monomial(int degree, BigInt coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }
    BigInt coefficient(int k) const;

    BigInt eval_integer(const BigInt& x) const;
    // Sign of p(num / 2^shift), evaluated exactly.
    int sign_at_dyadic(const BigInt& num, unsigned shift) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial&) const = default;

    // Exact division; nullopt when the remainder is nonzero.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    std::string to_string() const;  // human-readable, descending powers

  private:
    std::vector<BigInt> coeffs_;
};

// f_*(t) = t^deg(f) f(1/t): reversed coefficients.  Rejects the zero
// polynomial.
IntPolynomial reciprocal(const IntPolynomial& f);

// Dyadic enclosure [lo, hi] = [num_lo, num_hi] / 2^shift of a real root.
struct RootEnclosure {
    BigInt num_lo;
    BigInt num_hi;
    unsigned shift = 0;

    double lo() const;
    double hi() const;
    double midpoint() const;
    double width() const;
    bool disjoint_below(const RootEnclosure& other) const;  // hi < other.lo exactly
};

// Certified enclosure of the largest real root in (0, inf), of width at most
// tol.  Root counting by Descartes sign variations over dyadic intervals;
// all sign evaluations exact.  Throws std::domain_error when no positive
// real root exists.
RootEnclosure largest_real_root(const IntPolynomial& f, double tol);

// Refine an enclosure of a simple root to width <= tol by exact bisection.
RootEnclosure refine_root(const IntPolynomial& f, RootEnclosure enc, double tol);

}  // namespace choreobraid
