#include "sph/rootsys.hpp"

#include <algorithm>
#include <map>

namespace sph {

long long pairing_root(const dynkin& d, int alpha, const ivec& n)
{
    long long s = 0;
    for (int b = 0; b < d.rank; ++b) s += d.cartan[alpha][b] * n[b];
    return s;
}

long long sym_form_roots(const dynkin& d, const ivec& x, const ivec& y)
{
    // (alpha_i, alpha_j) = d_i * a[i][j]
    long long s = 0;
    for (int i = 0; i < d.rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < d.rank; ++j)
            if (y[j] != 0) s += x[i] * d.dsym[i] * d.cartan[i][j] * y[j];
    }
    return s;
}

long long sym_form_weight_root(const dynkin& d, const ivec& lambda, const ivec& x)
{
    // (omega_i, alpha_j) = delta_ij d_j
    long long s = 0;
    for (int i = 0; i < d.rank; ++i) s += lambda[i] * d.dsym[i] * x[i];
    return s;
}

ivec root_to_weight(const dynkin& d, const ivec& n)
{
    ivec c(d.rank, 0);
    for (int a = 0; a < d.rank; ++a) c[a] = pairing_root(d, a, n);
    return c;
}

std::vector<rat> weight_to_root(const dynkin& d, const ivec& c)
{
    mat A(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) A(i, j) = to_rat(d.cartan[i][j]);
    std::vector<rat> b(d.rank);
    for (int i = 0; i < d.rank; ++i) b[i] = to_rat(c[i]);
    std::vector<rat> x;
    bool ok = solve_linear(A, b, x);
    SPH_CHECK(ok, "Cartan matrix must be invertible");
    return x;
}

std::optional<ivec> weight_to_root_integral(const dynkin& d, const ivec& c)
{
    std::vector<rat> x = weight_to_root(d, c);
    ivec n(d.rank);
    for (int i = 0; i < d.rank; ++i) {
        if (!is_integer(x[i])) return std::nullopt;
        n[i] = to_ll(x[i]);
    }
    return n;
}

std::vector<int> support(const ivec& n)
{
    std::vector<int> s;
    for (int i = 0; i < int(n.size()); ++i)
        if (n[i] != 0) s.push_back(i);
    return s;
}

long long height(const ivec& n)
{
    long long h = 0;
    for (long long x : n) h += x;
    return h;
}

bool is_dominant(const ivec& c)
{
    for (long long x : c)
        if (x < 0) return false;
    return true;
}

ivec dominant_rep(const dynkin& d, ivec c)
{
    for (;;) {
        int neg = -1;
        for (int i = 0; i < d.rank; ++i)
            if (c[i] < 0) { neg = i; break; }
        if (neg < 0) return c;
        long long k = c[neg];
        // s_alpha(c) = c - <alpha^vee,c> alpha; alpha's weight coords are the
        // alpha-column of the Cartan matrix
        for (int b = 0; b < d.rank; ++b) c[b] -= k * d.cartan[b][neg];
    }
}

bool is_module_weight(const dynkin& d, const ivec& lambda, const ivec& mu)
{
    ivec dom = dominant_rep(d, mu);
    ivec diff = ivec_sub(lambda, dom);
    auto n = weight_to_root_integral(d, diff);
    if (!n) return false;
    for (long long x : *n)
        if (x < 0) return false;
    return true;
}

std::vector<ivec> positive_roots(const dynkin& d)
{
    std::map<ivec, int> seen;  // root -> height index position (dedup)
    std::vector<ivec> roots;
    for (int i = 0; i < d.rank; ++i) {
        ivec e(d.rank, 0);
        e[i] = 1;
        roots.push_back(e);
        seen[e] = 1;
    }
    size_t level_begin = 0;
    while (level_begin < roots.size()) {
        size_t level_end = roots.size();
        for (size_t r = level_begin; r < level_end; ++r) {
            for (int a = 0; a < d.rank; ++a) {
                ivec beta = roots[r];
                // p = how far the alpha-string continues downward
                long long p = 0;
                {
                    ivec down = beta;
                    for (;;) {
                        down[a] -= 1;
                        bool neg = false;
                        for (long long x : down)
                            if (x < 0) neg = true;
                        if (neg || !seen.count(down)) break;
                        ++p;
                    }
                }
                long long q = p - pairing_root(d, a, beta);
                if (q >= 1) {
                    ivec up = beta;
                    up[a] += 1;
                    if (!seen.count(up)) {
                        seen[up] = 1;
                        roots.push_back(up);
                    }
                }
            }
        }
        level_begin = level_end;
    }
    std::sort(roots.begin(), roots.end(), [](const ivec& a, const ivec& b) {
        long long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return roots;
}

long long coroot_pairing(const dynkin& d, const ivec& beta, const ivec& lambda)
{
    long long num = 2 * sym_form_weight_root(d, lambda, beta);
    long long den = sym_norm(d, beta);
    SPH_CHECK(den > 0 && num % den == 0, "coroot pairing must be integral");
    return num / den;
}

mpz_class weyl_dim(const dynkin& d, const ivec& lambda)
{
    ivec rho(d.rank, 1);
    ivec lr = ivec_add(lambda, rho);
    mpz_class num = 1, den = 1;
    for (const ivec& beta : positive_roots(d)) {
        // 2(mu,beta)/(beta,beta); the common /(beta,beta) cancels in the ratio
        num *= static_cast<long>(sym_form_weight_root(d, lr, beta));
        den *= static_cast<long>(sym_form_weight_root(d, rho, beta));
    }
    SPH_CHECK(num % den == 0, "Weyl dimension must be integral");
    return num / den;
}

}  // namespace sph
