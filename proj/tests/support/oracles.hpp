#pragma once

// Reference computations used only by the tests. Each one takes a route that
// the library does not, so agreement is evidence rather than repetition.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace kummer::testing {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    for (; e; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

// B_0 .. B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0, with B_1 = -1/2.
inline std::vector<mpq_class> bernoulli_convolution(unsigned n) {
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        mpq_class s = 0;
        mpz_class c = 1;  // C(m+1, k)
        for (unsigned k = 0; k < m; ++k) {
            s += c * b[k];
            c = c * (m + 1 - k) / (k + 1);
        }
        b[m] = -s / (m + 1);
    }
    return b;
}

// Akiyama-Tanigawa transform; it produces B_1 = +1/2, flipped here.
inline mpq_class bernoulli_akiyama_tanigawa(unsigned n) {
    std::vector<mpq_class> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = mpq_class(1, m + 1);
        a[m].canonicalize();
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    }
    return n == 1 ? mpq_class(-a[0]) : a[0];
}

// Tangent numbers T_1 .. T_m in one sweep; B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
inline std::vector<mpq_class> bernoulli_even_via_tangent(unsigned m) {
    std::vector<mpz_class> t(m + 1);
    std::vector<mpq_class> b(m + 1);
    if (m == 0) return b;
    t[1] = 1;
    for (unsigned k = 2; k <= m; ++k) t[k] = t[k - 1] * (k - 1);
    for (unsigned k = 2; k <= m; ++k)
        for (unsigned j = k; j <= m; ++j) t[j] = t[j - 1] * (j - k) + t[j] * (j - k + 2);
    for (unsigned k = 1; k <= m; ++k) {
        mpz_class four = mpz_class(1) << (2 * k);
        b[k] = mpq_class(t[k] * (2 * k), four * (four - 1));
        b[k].canonicalize();
        if (k % 2 == 0) b[k] = -b[k];
    }
    return b;  // b[k] = B_2k
}

// B_0 .. B_n modulo a prime q > n + 1, by the convolution recurrence over F_q.
inline std::vector<std::uint64_t> bernoulli_mod_prime(unsigned n, std::uint64_t q) {
    std::vector<std::uint64_t> b(n + 1, 0), row{1};  // row = C(m+1, .) mod q
    b[0] = 1;
    row.reserve(n + 2);
    row.push_back(1);
    for (unsigned m = 1; m <= n; ++m) {
        // advance row from C(m, .) to C(m+1, .)
        row.push_back(1);
        for (unsigned k = m; k >= 1; --k) row[k] = (row[k] + row[k - 1]) % q;
        if (m > 1 && m % 2 == 1) continue;
        std::uint64_t s = 0;
        for (unsigned k = 0; k < m; ++k)
            if (b[k]) s = (s + mulmod(row[k], b[k], q)) % q;
        const std::uint64_t inv = powmod(m + 1, q - 2, q);
        b[m] = mulmod(q - s % q, inv, q) % q;
    }
    return b;
}

inline mpz_class power_sum_direct(unsigned long n, unsigned long m) {
    mpz_class s = 0, t;
    for (unsigned long v = 1; v < m; ++v) {
        mpz_ui_pow_ui(t.get_mpz_t(), v, n);
        s += t;
    }
    return s;
}

// (1/(n+1)) sum_{k=0}^{n} C(n+1, k) B_k m^(n+1-k) with B_1 = -1/2.
inline mpq_class faulhaber_sum(unsigned n, unsigned long m, const std::vector<mpq_class>& b) {
    mpq_class s = 0;
    mpz_class c = 1, mp;
    for (unsigned k = 0; k <= n; ++k) {
        mpz_ui_pow_ui(mp.get_mpz_t(), m, n + 1 - k);
        s += c * b[k] * mp;
        c = c * (n + 1 - k) / (k + 1);
    }
    return s / (n + 1);
}

inline long ord(mpz_class v, unsigned long p) {
    if (v == 0) return 1L << 40;
    long e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        v /= p;
        ++e;
    }
    return e;
}

inline long ord(const mpq_class& q, unsigned long p) {
    if (q == 0) return 1L << 40;
    return ord(q.get_num(), p) - ord(q.get_den(), p);
}

// Teichmueller representative mod p^k as the limit a^(p^j): a^(p^(k-1)) mod p^k.
inline mpz_class teichmuller_by_iteration(unsigned long a, unsigned long p, unsigned k) {
    mpz_class mod, e, r;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, k);
    mpz_ui_pow_ui(e.get_mpz_t(), p, k - 1);
    mpz_powm(r.get_mpz_t(), mpz_class(a).get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// q mod p^k for a p-integral rational, in [0, p^k).
inline mpz_class reduce(const mpq_class& q, unsigned long p, unsigned k) {
    mpz_class mod, inv, r;
    mpz_ui_pow_ui(mod.get_mpz_t(), p, k);
    mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), mod.get_mpz_t());
    r = q.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline bool is_prime_naive(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace kummer::testing
