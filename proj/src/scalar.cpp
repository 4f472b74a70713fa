#include "gpa/scalar.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gpa {

namespace {

// Dense polynomial over Q, ascending degree, no trailing zeros enforced by trim().
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Division with remainder by a monic divisor.
void poly_divmod_monic(Poly num, const Poly& den, Poly* quot, Poly* rem) {
    Poly q;
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (quot) { trim(q); *quot = std::move(q); }
    if (rem) *rem = std::move(num);
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // bottom-up so every divisor is already cached.
    std::function<const Poly&(unsigned)> get = [&](unsigned m) -> const Poly& {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        Poly num(m + 1);
        num[0] = -1;
        num[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            Poly q;
            poly_divmod_monic(num, get(d), &q, nullptr);
            num = std::move(q);
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

Cyclotomic Cyclotomic::zeta(unsigned n, long power) {
    if (n == 0) throw std::invalid_argument("zeta: conductor must be positive");
    long k = power % static_cast<long>(n);
    if (k < 0) k += n;
    Cyclotomic z;
    z.conductor_ = n;
    unsigned deg = euler_phi(n);
    Poly raw(static_cast<size_t>(k) + 1);
    raw[static_cast<size_t>(k)] = 1;
    Poly rem;
    poly_divmod_monic(std::move(raw), cyclotomic_polynomial(n), nullptr, &rem);
    rem.resize(deg);
    z.coeffs_ = std::move(rem);
    if (z.coeffs_.empty()) z.coeffs_.assign(1, Rational(0));
    return z;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: element not in Q");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(unsigned n) const {
    if (n == conductor_) return *this;
    if (n % conductor_ != 0)
        throw std::invalid_argument("promoted: target conductor not a multiple");
    unsigned stride = n / conductor_;
    Poly raw;
    raw.assign(static_cast<size_t>(coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * stride] = coeffs_[i];
    Poly rem;
    poly_divmod_monic(std::move(raw), cyclotomic_polynomial(n), nullptr, &rem);
    Cyclotomic r;
    r.conductor_ = n;
    rem.resize(euler_phi(n));
    r.coeffs_ = std::move(rem);
    if (r.coeffs_.empty()) r.coeffs_.assign(1, Rational(0));
    return r;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return;
    unsigned l = std::lcm(a.conductor_, b.conductor_);
    a = a.promoted(l);
    b = b.promoted(l);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    Poly prod = poly_mul(a.coeffs_, b.coeffs_);
    Poly rem;
    poly_divmod_monic(std::move(prod), cyclotomic_polynomial(a.conductor_), nullptr, &rem);
    rem.resize(euler_phi(a.conductor_));
    a.coeffs_ = std::move(rem);
    if (a.coeffs_.empty()) a.coeffs_.assign(1, Rational(0));
    return a;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // Extended Euclid in Q[x] against Phi_N, which is irreducible over Q, so
    // gcd(this, Phi_N) is a nonzero constant.
    Poly r0 = cyclotomic_polynomial(conductor_);
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};  // coefficients of the second argument
    while (!r1.empty()) {
        // make r1 monic for the division helper
        Rational lead = r1.back();
        Poly r1m = r1;
        for (auto& c : r1m) c /= lead;
        Poly q, rem;
        poly_divmod_monic(r0, r1m, &q, &rem);
        for (auto& c : q) c /= lead;  // q now satisfies r0 = q*r1 + rem
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs.size()));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd = s0 * this  (mod Phi), a nonzero constant.
    if (r0.size() != 1)
        throw std::logic_error("inverse: cyclotomic polynomial not coprime with element");
    Rational g = r0[0];
    for (auto& c : s0) c /= g;
    Poly rem;
    poly_divmod_monic(std::move(s0), cyclotomic_polynomial(conductor_), nullptr, &rem);
    Cyclotomic out;
    out.conductor_ = conductor_;
    rem.resize(euler_phi(conductor_));
    out.coeffs_ = std::move(rem);
    if (out.coeffs_.empty()) out.coeffs_.assign(1, Rational(0));
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    Cyclotomic a = *this, b = o;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::optional<unsigned> Cyclotomic::primitive_root_order() const {
    if (is_zero()) return std::nullopt;
    // The torsion units of Q(zeta_N) are generated by -zeta_N, so any root of
    // unity here has order dividing lcm(2, N).
    unsigned m = std::lcm(2u, conductor_);
    if (!(pow(m) == Cyclotomic(1))) return std::nullopt;
    std::vector<unsigned> primes;
    unsigned t = m;
    for (unsigned p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            primes.push_back(p);
            while (t % p == 0) t /= p;
        }
    }
    if (t > 1) primes.push_back(t);
    unsigned ord = m;
    for (unsigned p : primes)
        while (ord % p == 0 && pow(ord / p) == Cyclotomic(1)) ord /= p;
    return ord;
}

std::string Cyclotomic::str() const {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        std::string coef = mag.str();
        if (i == 0) {
            out += coef;
        } else {
            if (mag != 1) out += coef + "*";
            out += "z" + std::to_string(conductor_);
            if (i > 1) out += "^" + std::to_string(i);
        }
        first = false;
    }
    if (first) out = "0";
    return out;
}

namespace {

struct ScalarParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                    ": " + what + " in \"" + std::string(s) + "\"");
    }

    Integer integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Integer(std::string(s.substr(start, pos - start)));
    }

    Cyclotomic atom() {
        skip_ws();
        if (eat('(')) {
            Cyclotomic v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = peek();
        if (c == 'z') {
            ++pos;
            Integer n = integer();
            if (n <= 0 || n > 1000000) fail("conductor out of range");
            return Cyclotomic::zeta(static_cast<unsigned>(n), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = integer();
            return Cyclotomic(Rational(n));
        }
        fail("expected number, z<N> or '('");
    }

    Cyclotomic factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (eat('-')) neg = !neg;
            else eat('+');
        }
        Cyclotomic v = atom();
        if (eat('^')) {
            bool eneg = eat('-');
            Integer e = integer();
            if (e > 100000) fail("exponent out of range");
            long le = static_cast<long>(e);
            v = v.pow(eneg ? -le : le);
        }
        return neg ? -v : v;
    }

    Cyclotomic term() {
        Cyclotomic v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                Cyclotomic d = factor();
                if (d.is_zero()) fail("division by zero");
                v *= d.inverse();
            } else break;
        }
        return v;
    }

    Cyclotomic expr() {
        Cyclotomic v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v += term();
            else if (pos < s.size() && s[pos] == '-') v += term();  // term eats the sign
            else break;
        }
        return v;
    }
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text) {
    ScalarParser p{text};
    Cyclotomic v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace gpa
