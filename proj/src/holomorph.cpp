#include "endocable/holomorph.hpp"

#include <algorithm>
#include <numeric>

namespace endocable {

namespace {

int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

}  // namespace

AffineMap::AffineMap(int modulus, int alpha, int beta)
    : modulus(modulus), alpha(mod(alpha, modulus)), beta(mod(beta, modulus)) {
    if (modulus < 1) throw std::invalid_argument("AffineMap: modulus < 1");
    if (std::gcd(this->alpha, modulus) != 1)
        throw std::invalid_argument("AffineMap: slope is not a unit");
}

int AffineMap::operator()(int x) const {
    return mod(static_cast<long long>(alpha) * x + beta, modulus);
}

AffineMap AffineMap::after(const AffineMap& g) const {
    if (modulus != g.modulus)
        throw std::invalid_argument("AffineMap: modulus mismatch");
    // this(g(x)) = alpha*(g.alpha*x + g.beta) + beta
    return AffineMap(modulus,
                     mod(static_cast<long long>(alpha) * g.alpha, modulus),
                     mod(static_cast<long long>(alpha) * g.beta + beta, modulus));
}

bool AffineMap::has_fixed_point() const {
    for (int x = 0; x < modulus; ++x)
        if ((*this)(x) == x) return true;
    return false;
}

long long AffineMap::order() const {
    AffineMap g = *this;
    long long k = 1;
    while (!g.is_identity()) {
        g = after(g);
        ++k;
    }
    return k;
}

Perm AffineMap::to_perm() const {
    std::vector<int> im(modulus);
    for (int x = 0; x < modulus; ++x) im[x] = (*this)(x);
    return Perm(std::move(im));
}

std::vector<AffineMap> hol_enumerate(int m) {
    if (m < 1) throw std::invalid_argument("hol_enumerate: m < 1");
    std::vector<AffineMap> out;
    for (int a = 0; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        for (int b = 0; b < m; ++b) out.emplace_back(m, a, b);
    }
    return out;
}

PrimePower factor_prime_power(int m) {
    if (m < 2) throw NotPrimePowerError("not a prime power: " + std::to_string(m));
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int v = 0;
            long long rest = m;
            while (rest % p == 0) {
                rest /= p;
                ++v;
            }
            if (rest != 1)
                throw NotPrimePowerError("not a prime power: " + std::to_string(m));
            return {p, v};
        }
    }
    return {static_cast<long long>(m), 1};
}

std::vector<AffineMap> classify_fixed_point_free(int m, int r) {
    PrimePower pp = factor_prime_power(m);
    if (!((pp.p == 2 && r == 2) || (pp.p % 2 == 1 && r == pp.p)))
        throw std::invalid_argument(
            "classify_fixed_point_free: exponent must be p (odd) or 2");
    std::vector<AffineMap> out;
    for (const AffineMap& g : hol_enumerate(m)) {
        if (g.has_fixed_point()) continue;
        AffineMap gr = g;
        for (int k = 1; k < r; ++k) gr = g.after(gr);
        if (gr.is_identity()) out.push_back(g);
    }
    return out;
}

std::vector<AffineMap> predicted_fixed_point_free_odd(long long p, int v) {
    long long m = 1;
    for (int i = 0; i < v; ++i) m *= p;
    long long step = m / p;  // p^(v-1)
    std::vector<AffineMap> out;
    for (long long i = 1; i < p; ++i)
        out.emplace_back(static_cast<int>(m), 1, static_cast<int>(i * step));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AffineMap> predicted_fixed_point_free_two(int v) {
    int m = 1 << v;
    std::vector<AffineMap> out;
    out.emplace_back(m, 1, m / 2);
    for (int b = 1; b < m; b += 2) out.emplace_back(m, m - 1, b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());  // v = 1 overlap
    return out;
}

ShiftCentralizerInvolutions classify_double_shift_centralizer(int v) {
    if (v < 2)
        throw std::invalid_argument("classify_double_shift_centralizer: v < 2");
    const int n = 1 << v;

    // An element of the centralizer of i |-> i+2 is determined by the images
    // of 0 and 1; it is a bijection exactly when those images have opposite
    // parity.
    auto build = [n](int a, int b) {
        std::vector<int> im(n);
        for (int k = 0; 2 * k < n; ++k) {
            im[2 * k] = (a + 2 * k) % n;
            im[2 * k + 1] = (b + 2 * k) % n;
        }
        return Perm(std::move(im));
    };

    ShiftCentralizerInvolutions out;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if ((a + b) % 2 == 0) continue;
            Perm rho = build(a, b);
            if (!rho.has_fixed_point() && (rho * rho).is_identity())
                out.found.push_back(rho);
        }
    }
    std::sort(out.found.begin(), out.found.end());

    out.predicted.push_back(Perm::rotation(n, n / 2));
    for (int gamma = 1; gamma < n; gamma += 2) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i)
            im[i] = i % 2 == 0 ? (i + gamma) % n : ((i - gamma) % n + n) % n;
        out.predicted.push_back(Perm(std::move(im)));
    }
    std::sort(out.predicted.begin(), out.predicted.end());
    return out;
}

}  // namespace endocable
