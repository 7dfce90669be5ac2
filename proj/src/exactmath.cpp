#include "tripairs/exactmath.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tripairs {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigInt parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_int: empty string");
    mpz_class n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    return n;
}

BigRat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_int(s));
    return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

std::optional<BigRat> rational_sqrt(const BigRat& q) {
    if (q < 0) return std::nullopt;
    auto num = exact_sqrt(q.get_num());
    if (!num) return std::nullopt;
    auto den = exact_sqrt(q.get_den());
    if (!den) return std::nullopt;
    return make_rat(*num, *den);
}

BigInt Factorization::recompose() const {
    BigInt n = 1;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        n *= pe;
    }
    return n;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& base) {
    // returns true if `base` witnesses compositeness of odd n > 2
    BigInt a = base % n;
    if (a == 0) return false;
    BigInt d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // First 13 prime bases are a deterministic test below 3.317e24.
    static const BigInt det_bound("3317044064679887385961981");
    if (n < det_bound) {
        for (long p : small) {
            if (miller_rabin_witness(n, BigInt(p))) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's cycle variant of Pollard rho. n odd composite, not a prime power
// of a small prime. Returns a nontrivial factor.
BigInt brent_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dUL);
    for (;;) {
        BigInt y = rng.get_z_range(n - 3) + 1;
        BigInt c = rng.get_z_range(n - 3) + 1;
        BigInt x = y, q = 1, g = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
        // unlucky parameters; retry with a fresh (y, c)
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers collapse fast and keep rho away from squares
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<BigInt, unsigned> sub;
                factor_into(root, sub);
                for (const auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    BigInt d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

Factorization factorize(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    BigInt m = abs(n);
    std::map<BigInt, unsigned> acc;
    for (long p = 2; p < 10000 && m > 1; p == 2 ? p = 3 : p += 2) {
        if (m % p == 0) {
            unsigned e = 0;
            do {
                m /= p;
                ++e;
            } while (m % p == 0);
            acc[BigInt(p)] = e;
        }
        if (BigInt(p) * p > m) break;
    }
    if (m > 1) factor_into(m, acc);
    Factorization f;
    f.factors.assign(acc.begin(), acc.end());
    return f;
}

BigInt squarefree_part(const Factorization& f, bool negative) {
    BigInt d = negative ? -1 : 1;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) d *= p;
    return d;
}

BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part: zero input");
    return squarefree_part(factorize(n), n < 0);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace tripairs
