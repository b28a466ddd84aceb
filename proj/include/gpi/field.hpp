#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpi {

// Scalar domain for every exact computation in the library: the rationals,
// a prime field F_p viewed as an infinite field of characteristic p (no
// exponent reduction on indeterminates), or the finite field F_q itself
// (functions model: exponents reduced via x^q = x).
struct FieldMode {
    enum class Kind { RationalInfinite, PrimeInfinite, Finite };

    Kind kind = Kind::RationalInfinite;
    unsigned long p = 0;  // characteristic / field size; 0 for Q

    static FieldMode rationals() { return {Kind::RationalInfinite, 0}; }

    static FieldMode prime_infinite(unsigned long p) {
        require_prime(p);
        return {Kind::PrimeInfinite, p};
    }

    static FieldMode finite(unsigned long q) {
        if (q < 2) throw std::invalid_argument("invalid field size: " + std::to_string(q));
        require_prime(q);  // v1 restricts finite fields to prime order
        return {Kind::Finite, q};
    }

    bool is_rational() const { return kind == Kind::RationalInfinite; }
    bool is_infinite() const { return kind != Kind::Finite; }
    // Field size when the functions model applies, 0 otherwise.
    unsigned long functions_model_q() const { return kind == Kind::Finite ? p : 0; }
    unsigned long characteristic() const { return kind == Kind::RationalInfinite ? 0 : p; }

    bool operator==(const FieldMode&) const = default;

    std::string to_string() const {
        switch (kind) {
            case Kind::RationalInfinite: return "Q";
            case Kind::PrimeInfinite: return "Fp" + std::to_string(p) + "-inf";
            case Kind::Finite: return "F" + std::to_string(p);
        }
        return "?";
    }

    // Accepts "Q", "F<p>" (finite field) and "Fp<p>-inf" (infinite field of
    // characteristic p).
    static FieldMode parse(const std::string& s) {
        if (s == "Q" || s == "q") return rationals();
        if (s.size() > 2 && s.compare(0, 2, "Fp") == 0) {
            auto dash = s.find("-inf");
            if (dash == std::string::npos || dash + 4 != s.size())
                throw std::invalid_argument("bad field mode: " + s);
            return prime_infinite(std::stoul(s.substr(2, dash - 2)));
        }
        if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))
            return finite(std::stoul(s.substr(1)));
        throw std::invalid_argument("bad field mode: " + s);
    }

private:
    static void require_prime(unsigned long n) {
        if (n < 2) throw std::invalid_argument("field characteristic must be >= 2");
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0)
                throw std::invalid_argument("non-prime field order unsupported: " + std::to_string(n));
    }
};

// Field of rationals, arbitrary precision.
struct QQ {
    using Elem = mpq_class;

    static Elem zero() { return Elem(0); }
    static Elem one() { return Elem(1); }
    static bool is_zero(const Elem& a) { return sgn(a) == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem neg(const Elem& a) { return -a; }
    static Elem inv(const Elem& a) {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return 1 / a;
    }
    static Elem from_int(long n) { return Elem(n); }
    static Elem from_rational(const mpq_class& r) { return r; }
    static std::string to_string(const Elem& a) { return a.get_str(); }
    unsigned long characteristic() const { return 0; }
    // Scalar enumeration only makes sense over finite fields.
    unsigned long size() const { return 0; }
};

// Prime field F_p with machine-word arithmetic.
class GFp {
public:
    using Elem = std::uint64_t;

    explicit GFp(unsigned long p) : p_(p) {
        if (p < 2) throw std::invalid_argument("modulus must be >= 2");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b % p_) % p_; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        a %= p_;
        if (a == 0) throw std::domain_error("division by zero");
        Elem r = 1, base = a;
        unsigned long e = p_ - 2;  // Fermat
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem from_int(long n) const {
        long m = n % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        return static_cast<Elem>(m);
    }
    Elem from_rational(const mpq_class& r) const {
        mpz_class num = r.get_num() % static_cast<long>(p_);
        mpz_class den = r.get_den() % static_cast<long>(p_);
        Elem d = from_int(den.get_si());
        if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
        return mul(from_int(num.get_si()), inv(d));
    }
    std::string to_string(Elem a) const { return std::to_string(a); }
    unsigned long characteristic() const { return p_; }
    unsigned long size() const { return p_; }

private:
    unsigned long p_;
};

// Runs fn with the field model matching the mode. The functions-model
// exponent reduction is orthogonal and read off the mode by the caller.
template <class Fn>
decltype(auto) with_field(const FieldMode& mode, Fn&& fn) {
    if (mode.is_rational()) return fn(QQ{});
    return fn(GFp{mode.p});
}

}  // namespace gpi
