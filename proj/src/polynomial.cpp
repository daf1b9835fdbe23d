#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace choreobraid {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long long> ascending) {
    std::vector<BigInt> c;
    c.reserve(ascending.size());
    for (long long v : ascending) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
    if (coeff == 0) return {};
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

BigInt IntPolynomial::eval_integer(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at_dyadic(const BigInt& num, unsigned shift) const {
    // sign of sum a_i num^i 2^{shift (d - i)}, Horner over the scaled form
    if (coeffs_.empty()) return 0;
    const BigInt two_s = BigInt(1) << shift;
    BigInt acc = coeffs_.back();
    BigInt p = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        p *= two_s;
        acc = acc * num + coeffs_[i] * p;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> c(coeffs_);
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return IntPolynomial{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<BigInt> rem(coeffs_);
    std::vector<BigInt> quot(degree() - divisor.degree() + 1, BigInt(0));
    const BigInt& dl = divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        const BigInt& rl = rem[k + divisor.degree()];
        if (rl == 0) continue;
        if (rl % dl != 0) return std::nullopt;
        BigInt q = rl / dl;
        quot[k] = q;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[k + j] -= q * divisor.coefficients()[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        BigInt a = abs(c);
        if (a != 1 || i == 0) out << a.str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial reciprocal(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    std::vector<BigInt> c(f.coefficients().rbegin(), f.coefficients().rend());
    return IntPolynomial(std::move(c));
}

double RootEnclosure::lo() const {
    return static_cast<double>(num_lo) / std::ldexp(1.0, static_cast<int>(shift));
}

double RootEnclosure::hi() const {
    return static_cast<double>(num_hi) / std::ldexp(1.0, static_cast<int>(shift));
}

double RootEnclosure::midpoint() const { return 0.5 * (lo() + hi()); }
double RootEnclosure::width() const { return hi() - lo(); }

bool RootEnclosure::disjoint_below(const RootEnclosure& other) const {
    // compare num_hi / 2^shift < other.num_lo / 2^other.shift exactly
    const unsigned s = std::max(shift, other.shift);
    return (num_hi << (s - shift)) < (other.num_lo << (s - other.shift));
}

namespace {

std::vector<BigInt> taylor_shift_one(std::vector<BigInt> c) {
    // c(y) -> c(y + 1)
    const int d = static_cast<int>(c.size()) - 1;
    for (int j = d - 1; j >= 0; --j)
        for (int k = j; k < d; ++k) c[k] += c[k + 1];
    return c;
}

int sign_variations(const std::vector<BigInt>& c) {
    int var = 0, last = 0;
    for (const auto& x : c) {
        if (x == 0) continue;
        const int s = x > 0 ? 1 : -1;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// Variations of (1+y)^d q(1/(1+y)): bound on the roots of q in (0,1).
int variations_01(const std::vector<BigInt>& q) {
    std::vector<BigInt> r(q.rbegin(), q.rend());
    return sign_variations(taylor_shift_one(std::move(r)));
}

std::vector<BigInt> left_half(const std::vector<BigInt>& q) {
    // 2^d q(y/2)
    const int d = static_cast<int>(q.size()) - 1;
    std::vector<BigInt> c(q);
    for (int i = 0; i <= d; ++i) c[i] <<= static_cast<unsigned>(d - i);
    return c;
}

struct Isolation {
    BigInt position;  // interval (position, position + 1) / 2^depth, scaled by 2^bound_exp
    unsigned depth = 0;
    bool exact = false;     // exact root at position / 2^depth
    bool resolved = true;   // false for an unresolved multiple-root cluster
};

// Depth-first, right half first, so the first isolation found is the
// rightmost positive root.
std::optional<Isolation> isolate_rightmost(const std::vector<BigInt>& q, BigInt pos,
                                           unsigned depth, unsigned max_depth) {
    const int var = variations_01(q);
    if (var == 0) return std::nullopt;
    if (var == 1) return Isolation{pos, depth, false, true};
    if (depth >= max_depth)  // unresolved cluster; interval already below tol
        return Isolation{pos, depth, false, false};
    std::vector<BigInt> ql = left_half(q);
    std::vector<BigInt> qr = taylor_shift_one(ql);
    if (auto right = isolate_rightmost(qr, 2 * pos + 1, depth + 1, max_depth)) return right;
    // exact midpoint root: q(1/2) = 0 iff sum of left-half coefficients is 0
    BigInt mid = 0;
    for (const auto& c : ql) mid += c;
    if (mid == 0) return Isolation{2 * pos + 1, depth + 1, true};
    if (auto left = isolate_rightmost(ql, 2 * pos, depth + 1, max_depth)) return left;
    return std::nullopt;
}

}  // namespace

RootEnclosure refine_root(const IntPolynomial& f, RootEnclosure enc, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    int slo = f.sign_at_dyadic(enc.num_lo, enc.shift);
    int shi = f.sign_at_dyadic(enc.num_hi, enc.shift);
    if (slo == 0) return RootEnclosure{enc.num_lo, enc.num_lo, enc.shift};
    if (shi == 0) return RootEnclosure{enc.num_hi, enc.num_hi, enc.shift};
    if (slo == shi)
        throw std::logic_error("refine_root: no sign change on enclosure");
    while (enc.width() > tol) {
        BigInt mid = enc.num_lo + enc.num_hi;
        enc.num_lo <<= 1;
        enc.num_hi <<= 1;
        enc.shift += 1;
        const int sm = f.sign_at_dyadic(mid, enc.shift);
        if (sm == 0) return RootEnclosure{mid, mid, enc.shift};
        if (sm == slo)
            enc.num_lo = mid;
        else
            enc.num_hi = mid;
    }
    return enc;
}

RootEnclosure largest_real_root(const IntPolynomial& f, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (f.is_zero() || f.degree() == 0)
        throw std::domain_error("largest_real_root needs a nonconstant polynomial");

    // Strip the t^v factor; roots at 0 are not positive.
    std::vector<BigInt> c(f.coefficients());
    std::size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    c.erase(c.begin(), c.begin() + v);
    IntPolynomial p{std::vector<BigInt>(c)};
    if (p.degree() == 0) throw std::domain_error("no real root above 0");

    // Strict upper bound 2^e >= 1 + max |a_i / a_d|.
    BigInt lead = abs(p.leading());
    BigInt maxc = 0;
    for (const auto& a : p.coefficients()) maxc = std::max(maxc, abs(a));
    unsigned e = 1;
    while ((lead << e) < lead + maxc) ++e;

    // q(y) = p(2^e y): roots in (0,1) correspond to positive roots of p.
    std::vector<BigInt> q(p.coefficients());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] <<= static_cast<unsigned>(e * i);

    // Depth such that 2^{e-depth} <= tol.
    unsigned max_depth = e + 2;
    while (std::ldexp(1.0, static_cast<int>(e) - static_cast<int>(max_depth)) > tol) ++max_depth;

    auto iso = isolate_rightmost(q, BigInt(0), 0, max_depth);
    if (!iso) throw std::domain_error("no real root above 0");

    if (iso->exact) {
        BigInt num = iso->position << e;
        return RootEnclosure{num, num, iso->depth};
    }
    RootEnclosure enc{iso->position << e, (iso->position + 1) << e, iso->depth};
    if (!iso->resolved) return enc;  // width already <= tol
    // Enclosure endpoints may themselves be roots only at exact dyadics,
    // which refine_root collapses.
    return refine_root(p, enc, tol);
}

}  // namespace choreobraid
