#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "kzeta/errors.hpp"
#include "kzeta/numeric.hpp"

namespace kzeta {

namespace detail {

// Dense polynomials, little-endian (coeff[k] multiplies x^k).
using RatPoly = std::vector<Rational>;

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    poly_trim(c);
    return c;
}

// Remainder of a modulo b (b nonzero, any leading coefficient).
inline RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const Rational lead = b.back();
    while (a.size() > db) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        poly_trim(a);
        if (a.size() > db && a.back() == 0) poly_trim(a);
    }
    return a;
}

inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const Rational lead = b.back();
    RatPoly q;
    if (a.size() > db) q.assign(a.size() - db, Rational(0));
    while (a.size() > db) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - 1 - db;
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

// The m-th cyclotomic polynomial as a monic integer polynomial,
// computed by dividing x^m - 1 by all lower-level factors. Cached;
// fills are idempotent so concurrent readers are safe behind the lock.
inline const RatPoly& cyclotomic_polynomial(long m) {
    static std::map<long, RatPoly> cache;
    static std::mutex lock;
    {
        std::scoped_lock guard(lock);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock (recursion re-enters this function);
    // the fill below is idempotent, so a racing duplicate is harmless.
    RatPoly phi;
    if (m == 1) {
        phi = {Rational(-1), Rational(1)};  // x - 1
    } else {
        RatPoly xm(static_cast<std::size_t>(m) + 1, Rational(0));
        xm[0] = -1;
        xm[static_cast<std::size_t>(m)] = 1;  // x^m - 1
        RatPoly divisor = {Rational(1)};
        for (long d = 1; d < m; ++d)
            if (m % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
        auto [q, r] = poly_divmod(xm, divisor);
        if (!r.empty()) throw Error("cyclotomic polynomial division left a remainder");
        phi = q;
    }
    std::scoped_lock guard(lock);
    return cache.emplace(m, std::move(phi)).first->second;
}

}  // namespace detail

// An exact element of the cyclotomic field Q(zeta_M), stored in the
// power basis 1, zeta, ..., zeta^{phi(M)-1} reduced modulo Phi_M.
// Immutable value type; equality is coefficientwise after lifting both
// operands to the lcm conductor.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(int v) : conductor_(1), coeffs_(1, Rational(v)) {}
    Cyclotomic(const Integer& v) : conductor_(1), coeffs_(1, Rational(v)) {}
    Cyclotomic(const Rational& v) : conductor_(1), coeffs_(1, v) {}

    static Cyclotomic zeta(long m) { return root_of_unity(m, 1); }

    // zeta_m^k, canonicalized so the conductor divides m.
    static Cyclotomic root_of_unity(long m, Integer k) {
        if (m <= 0) throw Error("conductor must be positive");
        k = mod_floor(k, m);
        long g = std::gcd(to_long(k), m);
        long m2 = m / g;  // order of zeta_m^k
        long k2 = to_long(k) / g;
        Cyclotomic z;
        z.conductor_ = m2;
        z.coeffs_.assign(static_cast<std::size_t>(euler_phi(m2)), Rational(0));
        detail::RatPoly mono(static_cast<std::size_t>(k2) + 1, Rational(0));
        mono[static_cast<std::size_t>(k2)] = 1;
        z.assign_reduced(mono);
        return z;
    }

    // e^{2 pi i q}: the root of unity with exponent q (taken mod 1).
    static Cyclotomic from_exponent(const Rational& q) {
        Rational r = frac_part(q);
        return root_of_unity(to_long(den(r)), num(r));
    }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    // Rewrites the element in Q(zeta_m) for any multiple m of the conductor.
    Cyclotomic lifted(long m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0) throw Error("lift target must be a multiple of the conductor");
        long step = m / conductor_;
        detail::RatPoly p(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1, Rational(0));
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            p[j * static_cast<std::size_t>(step)] = coeffs_[j];
        Cyclotomic z;
        z.conductor_ = m;
        z.coeffs_.assign(static_cast<std::size_t>(euler_phi(m)), Rational(0));
        z.assign_reduced(p);
        return z;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] -= y.coeffs_[j];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic z = *this;
        for (auto& c : z.coeffs_) c = -c;
        return z;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        detail::RatPoly prod = detail::poly_mul(x.coeffs_, y.coeffs_);
        Cyclotomic z;
        z.conductor_ = x.conductor_;
        z.coeffs_.assign(x.coeffs_.size(), Rational(0));
        z.assign_reduced(prod);
        return z;
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Field inverse via the extended gcd of the coefficient polynomial
    // with Phi_M.
    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        const detail::RatPoly& phi = detail::cyclotomic_polynomial(conductor_);
        detail::RatPoly r0 = phi, r1 = coeffs_;
        detail::poly_trim(r1);
        detail::RatPoly s0 = {}, s1 = {Rational(1)};  // s tracks the coefficient of *this
        while (!r1.empty()) {
            auto [q, r] = detail::poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            detail::RatPoly s_next = s0;
            detail::RatPoly qs1 = detail::poly_mul(q, s1);
            if (s_next.size() < qs1.size()) s_next.resize(qs1.size(), Rational(0));
            for (std::size_t j = 0; j < qs1.size(); ++j) s_next[j] -= qs1[j];
            detail::poly_trim(s_next);
            s0 = std::move(s1);
            s1 = std::move(s_next);
        }
        if (r0.size() != 1) throw Error("element is a zero divisor; Phi_M not squarefree?");
        Cyclotomic z;
        z.conductor_ = conductor_;
        z.coeffs_.assign(coeffs_.size(), Rational(0));
        for (auto& c : s0) c /= r0[0];
        z.assign_reduced(s0);
        return z;
    }

    // Galois automorphism zeta -> zeta^a; requires gcd(a, M) = 1.
    Cyclotomic galois(const Integer& a) const {
        Integer r = mod_floor(a, conductor_);
        if (boost::multiprecision::gcd(r, Integer(conductor_)) != 1)
            throw NotCoprime("galois exponent not coprime to conductor " + std::to_string(conductor_));
        detail::RatPoly p(static_cast<std::size_t>(conductor_), Rational(0));
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            std::size_t k = static_cast<std::size_t>(to_long(mod_floor(r * Integer(j), conductor_)));
            if (p.size() <= k) p.resize(k + 1, Rational(0));
            p[k] += coeffs_[j];
        }
        Cyclotomic z;
        z.conductor_ = conductor_;
        z.coeffs_.assign(coeffs_.size(), Rational(0));
        z.assign_reduced(p);
        return z;
    }

    // Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conjugate() const {
        if (conductor_ <= 2) return *this;
        return galois(Integer(conductor_ - 1));
    }

    Cyclotomic pow(Integer e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic result(1), base = *this;
        while (e > 0) {
            if ((e & 1) != 0) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    // The rational value if the element is Galois-fixed, otherwise absent.
    std::optional<Rational> to_rational() const {
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (coeffs_[j] != 0) return std::nullopt;
        return coeffs_[0];
    }

    // Multiplicative order if the element is a root of unity. Roots of
    // unity in Q(zeta_M) are exactly +-zeta_M^j, so z^lcm(2,M) = 1 decides.
    std::optional<long> root_of_unity_order() const {
        long L = std::lcm(2L, conductor_);
        if (pow(L) != Cyclotomic(1)) return std::nullopt;
        for (long d = 1; d <= L; ++d)
            if (L % d == 0 && pow(d) == Cyclotomic(1)) return d;
        return std::nullopt;  // unreachable
    }

    // Textual form, e.g. "Q(zeta_8): 1 - 1*z^2".
    std::string str() const {
        std::ostringstream os;
        os << "Q(zeta_" << conductor_ << "):";
        bool first = true;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            if (coeffs_[j] == 0) continue;
            Rational c = coeffs_[j];
            if (first) {
                os << ' ';
                if (c < 0) {
                    os << '-';
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            os << c.str();
            if (j > 0) os << "*z^" << j;
            first = false;
        }
        if (first) os << " 0";
        return os.str();
    }

    static Cyclotomic parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

private:
    long conductor_;
    std::vector<Rational> coeffs_;

    // Reduces p modulo Phi_M and stores the first phi(M) coefficients.
    void assign_reduced(const detail::RatPoly& p) {
        detail::RatPoly r = detail::poly_rem(p, detail::cyclotomic_polynomial(conductor_));
        std::fill(coeffs_.begin(), coeffs_.end(), Rational(0));
        for (std::size_t j = 0; j < r.size(); ++j) coeffs_[j] = r[j];
    }

    static std::pair<Cyclotomic, Cyclotomic> lift_pair(const Cyclotomic& a, const Cyclotomic& b) {
        long m = std::lcm(a.conductor_, b.conductor_);
        return {a.lifted(m), b.lifted(m)};
    }
};

inline Cyclotomic Cyclotomic::parse(const std::string& text) {
    std::size_t pos = text.find("Q(zeta_");
    if (pos == std::string::npos) throw ParseError("missing conductor header: " + text);
    pos += 7;
    std::size_t close = text.find("):", pos);
    if (close == std::string::npos) throw ParseError("malformed conductor header: " + text);
    long m = std::stol(text.substr(pos, close - pos));
    std::string body = text.substr(close + 2);

    Cyclotomic result = Cyclotomic(0).lifted(m);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && body[i] == ' ') ++i; };
    skip_ws();
    bool any = false;
    int sign = 1;
    while (i < body.size()) {
        if (body[i] == '+') { sign = 1; ++i; skip_ws(); continue; }
        if (body[i] == '-') { sign = -1; ++i; skip_ws(); continue; }
        std::size_t start = i;
        while (i < body.size() && (std::isdigit(static_cast<unsigned char>(body[i])) || body[i] == '/')) ++i;
        if (start == i) throw ParseError("expected coefficient in: " + text);
        Rational c(body.substr(start, i - start));
        long k = 0;
        skip_ws();
        if (i + 1 < body.size() && body[i] == '*' && body[i + 1] == 'z') {
            i += 2;
            if (i < body.size() && body[i] == '^') {
                ++i;
                start = i;
                while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
                k = std::stol(body.substr(start, i - start));
            } else {
                k = 1;
            }
        }
        result += Cyclotomic(sign * c) * Cyclotomic::root_of_unity(m, k).lifted(m);
        sign = 1;
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty element body: " + text);
    return result;
}

// The ring homomorphism Z[zeta_{p^k}] -> Z/p sending zeta to 1, as a
// residue in [0, p). Defined because Phi_{p^k}(1) is divisible by p.
inline long reduce_mod_p(const Cyclotomic& z, long p) {
    if (!is_prime(p)) throw Error("modulus must be prime");
    // Rational values reduce regardless of the conductor they are stored at.
    if (!z.to_rational().has_value() && !is_power_of(z.conductor(), p))
        throw NotPrimePowerConductor("conductor " + std::to_string(z.conductor()) +
                                     " is not a power of " + std::to_string(p));
    if (!z.is_integral()) throw NotIntegral("element is not a cyclotomic integer: " + z.str());
    Integer sum = 0;
    for (const auto& c : z.coeffs()) sum += num(c);
    return to_long(mod_floor(sum, p));
}

struct UnitVectorReport {
    bool unit = false;
    std::size_t index = 0;  // position of the unique nonzero entry (when unit)
    long order = 0;         // multiplicative order of that entry (when unit)
    Cyclotomic length_sq;   // sum of z_i * conj(z_i), always populated
};

// Decides whether (z_i) has |z|^2 = 1 exactly. On success the unique
// nonzero entry is a root of unity (Kronecker), and we report it.
inline UnitVectorReport classify_unit_vector(const std::vector<Cyclotomic>& zs) {
    UnitVectorReport report;
    for (const auto& z : zs)
        if (!z.is_integral()) throw NotIntegral("unit-vector entries must be cyclotomic integers");
    Cyclotomic s(0);
    for (const auto& z : zs) s += z * z.conjugate();
    report.length_sq = s;
    if (s != Cyclotomic(1)) return report;
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (!zs[i].is_zero()) {
            ++nonzero;
            where = i;
        }
    }
    if (nonzero != 1) throw Error("unit vector with " + std::to_string(nonzero) + " nonzero entries");
    auto order = zs[where].root_of_unity_order();
    if (!order) throw Error("unit-length entry is not a root of unity: " + zs[where].str());
    report.unit = true;
    report.index = where;
    report.order = *order;
    return report;
}

}  // namespace kzeta
