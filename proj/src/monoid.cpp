#include "sph/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sph {

void validate_monoid(const generator_monoid& g)
{
    if (g.gens.empty()) throw input_error("monoid needs at least one generator");
    mat m(int(g.gens.size()), g.d.rank);
    for (int i = 0; i < m.rows; ++i) {
        if (int(g.gens[i].size()) != g.d.rank)
            throw input_error("generator length does not match diagram rank");
        if (!is_dominant(g.gens[i])) throw input_error("generators must be dominant");
        if (ivec_is_zero(g.gens[i])) throw input_error("generators must be nonzero");
        for (int j = 0; j < m.cols; ++j) m(i, j) = to_rat(g.gens[i][j]);
    }
    if (rank_of(m) != m.rows) throw input_error("generators must be linearly independent");
}

namespace {

using lin = std::vector<rat>;  // inequality sum_i v[i] x_i + v.back() >= 0

void normalize(lin& v)
{
    rat mx = 0;
    for (const rat& x : v) {
        rat a = abs(x);
        if (a > mx) mx = a;
    }
    if (!is_zero(mx))
        for (rat& x : v) x /= mx;
}

// Eliminate variable `var` from the system (Fourier-Motzkin).
std::vector<lin> eliminate(const std::vector<lin>& sys, int var)
{
    std::vector<lin> pos, neg, zero;
    for (const auto& v : sys) {
        int s = sgn(v[var]);
        if (s > 0)
            pos.push_back(v);
        else if (s < 0)
            neg.push_back(v);
        else
            zero.push_back(v);
    }
    std::set<lin> out(zero.begin(), zero.end());
    for (const auto& p : pos)
        for (const auto& n : neg) {
            lin comb(p.size());
            // p[var] x_var >= -(...), n gives upper bound; combine to drop x_var
            for (size_t j = 0; j < p.size(); ++j) comb[j] = p[j] * (-n[var]) + n[j] * p[var];
            comb[var] = 0;
            normalize(comb);
            out.insert(std::move(comb));
        }
    return std::vector<lin>(out.begin(), out.end());
}

// One feasible point of a system known to be consistent, by back-substitution.
void back_substitute(std::vector<std::vector<lin>>& stages, const std::vector<int>& order,
                     std::vector<rat>& point)
{
    for (int k = int(order.size()) - 1; k >= 0; --k) {
        int var = order[k];
        bool have_lo = false, have_hi = false;
        rat lo = 0, hi = 0;
        for (const auto& v : stages[k]) {
            rat rest = v.back();
            for (size_t j = 0; j + 1 < v.size(); ++j)
                if (int(j) != var && !is_zero(v[j])) rest += v[j] * point[j];
            int s = sgn(v[var]);
            if (s == 0) continue;
            rat bound = -rest / v[var];
            if (s > 0) {  // x_var >= bound
                if (!have_lo || bound > lo) lo = bound, have_lo = true;
            } else {  // x_var <= bound
                if (!have_hi || bound < hi) hi = bound, have_hi = true;
            }
        }
        rat val;
        if (have_lo && have_hi)
            val = (lo + hi) / 2;
        else if (have_lo)
            val = lo;
        else if (have_hi)
            val = hi;
        else
            val = 0;
        point[var] = val;
    }
}

}  // namespace

bool is_saturated(const generator_monoid& g, ivec* witness)
{
    validate_monoid(g);
    const int s = int(g.gens.size());
    // dominance cone in c-space: for each node a, sum_i gens[i][a] c_i >= 0
    for (int k = 0; k < s; ++k) {
        // feasibility of { A c >= 0, c_k = -1 }
        std::vector<lin> sys;
        for (int a = 0; a < g.d.rank; ++a) {
            lin v(s + 1, rat(0));
            bool all_zero = true;
            for (int i = 0; i < s; ++i) {
                v[i] = to_rat(g.gens[i][a]);
                if (g.gens[i][a] != 0) all_zero = false;
            }
            if (all_zero) continue;
            v[s] = v[k] * rat(-1);  // substitute c_k = -1 into the constant term
            v[k] = 0;
            sys.push_back(std::move(v));
        }
        std::vector<int> order;
        for (int i = 0; i < s; ++i)
            if (i != k) order.push_back(i);
        std::vector<std::vector<lin>> stages;
        std::vector<lin> cur = sys;
        bool feasible = true;
        for (int var : order) {
            stages.push_back(cur);
            cur = eliminate(cur, var);
        }
        for (const auto& v : cur)
            if (sgn(v.back()) < 0) feasible = false;
        if (!feasible) continue;
        if (witness) {
            std::vector<rat> point(s + 1, rat(0));
            point[k] = -1;
            back_substitute(stages, order, point);
            // scale to an integer witness
            mpz_class den = 1;
            for (int i = 0; i < s; ++i) den = lcm(den, point[i].get_den());
            witness->assign(s, 0);
            for (int i = 0; i < s; ++i) {
                rat v = point[i] * rat(den);
                (*witness)[i] = to_ll(v);
            }
            // the scaled point must still witness non-saturation
            ivec wt(g.d.rank, 0);
            for (int a = 0; a < g.d.rank; ++a)
                for (int i = 0; i < s; ++i) wt[a] += (*witness)[i] * g.gens[i][a];
            SPH_CHECK(is_dominant(wt) && (*witness)[k] < 0, "invalid saturation witness");
        }
        return false;
    }
    return true;
}

bool is_saturated_box(const generator_monoid& g, long long box, ivec* witness)
{
    validate_monoid(g);
    const int s = int(g.gens.size());
    double cost = 1;
    for (int i = 0; i < s; ++i) cost *= double(2 * box + 1);
    if (cost > 2e7) throw resource_error("saturation box search too large");
    ivec c(s, -box);
    for (;;) {
        bool has_neg = false;
        for (long long x : c)
            if (x < 0) has_neg = true;
        if (has_neg) {
            ivec wt(g.d.rank, 0);
            for (int a = 0; a < g.d.rank; ++a)
                for (int i = 0; i < s; ++i) wt[a] += c[i] * g.gens[i][a];
            if (is_dominant(wt)) {
                if (witness) *witness = c;
                return false;
            }
        }
        int i = 0;
        while (i < s && c[i] == box) c[i++] = -box;
        if (i == s) return true;
        ++c[i];
    }
}

std::vector<int> sp_of_monoid(const generator_monoid& g)
{
    std::vector<int> out;
    for (int a = 0; a < g.d.rank; ++a) {
        bool all = true;
        for (const auto& lam : g.gens)
            if (lam[a] != 0) all = false;
        if (all) out.push_back(a);
    }
    return out;
}

bool in_monoid_lattice(const generator_monoid& g, const ivec& gamma)
{
    return weight_in_monoid_lattice(g, root_to_weight(g.d, gamma));
}

bool weight_in_monoid_lattice(const generator_monoid& g, const ivec& gw)
{
    mat A(g.d.rank, int(g.gens.size()));
    for (int a = 0; a < g.d.rank; ++a)
        for (int i = 0; i < int(g.gens.size()); ++i) A(a, i) = to_rat(g.gens[i][a]);
    std::vector<rat> b(g.d.rank);
    for (int a = 0; a < g.d.rank; ++a) b[a] = to_rat(gw[a]);
    std::vector<rat> x;
    if (!solve_linear(A, b, x)) return false;
    for (const rat& v : x)
        if (!is_integer(v)) return false;
    return true;
}

const char* gen_class_name(gen_class c)
{
    switch (c) {
        case gen_class::color_multiple: return "COLOR_MULTIPLE";
        case gen_class::pair_weight: return "PAIR_WEIGHT";
        case gen_class::third_case: return "THIRD_CASE";
        case gen_class::none: return "NONE";
    }
    return "?";
}

gen_class classify_generator(const generator_monoid& g, const ivec& lambda,
                             const std::vector<spherical_root>& sigma_cand,
                             const std::vector<color>& delta_cand)
{
    const dynkin& d = g.d;
    bool is_gen = false;
    for (const auto& l : g.gens)
        if (l == lambda) is_gen = true;
    if (!is_gen) throw input_error("classify_generator: lambda is not a generator");

    // lambda = a * color, a rational > 0; a > 1 forces |Sigma| = 1
    for (const auto& c : delta_cand) {
        int j = -1;
        for (int i = 0; i < d.rank; ++i)
            if (c.weight[i] != 0) { j = i; break; }
        if (j < 0) continue;
        rat a = to_rat(lambda[j]) / to_rat(c.weight[j]);
        if (sgn(a) <= 0) continue;
        bool prop = true;
        for (int i = 0; i < d.rank; ++i)
            if (to_rat(lambda[i]) != a * to_rat(c.weight[i])) prop = false;
        if (!prop) continue;
        if (a > 1 && sigma_cand.size() != 1) continue;
        return gen_class::color_multiple;
    }
    // lambda = omega_alpha + omega_beta with some gamma positive on both
    {
        std::vector<int> ones;
        bool shape = true;
        for (int i = 0; i < d.rank; ++i) {
            if (lambda[i] == 0) continue;
            if (lambda[i] == 1)
                ones.push_back(i);
            else
                shape = false;
        }
        if (shape && ones.size() == 2) {
            int a = ones[0], b = ones[1];
            bool found = false;
            for (const auto& s : sigma_cand) {
                ivec ea(d.rank, 0), eb(d.rank, 0);
                ea[a] = 1;
                eb[b] = 1;
                if (sym_form_roots(d, s.n, ea) > 0 && sym_form_roots(d, s.n, eb) > 0) found = true;
            }
            bool side = true;
            for (const auto& l : g.gens) {
                if (l == lambda) continue;
                if (l[a] != 0 || l[b] != 0) side = false;
            }
            if (found && side) return gen_class::pair_weight;
        }
    }
    // lambda = omega_alpha + sum a_delta omega_delta where every gamma is
    // orthogonal to all deltas and no S(gamma) contains alpha
    {
        auto pos = positive_roots(d);
        for (int alpha = 0; alpha < d.rank; ++alpha) {
            if (lambda[alpha] < 1) continue;
            bool ok = true;
            for (const auto& s : sigma_cand) {
                for (int delta = 0; delta < d.rank && ok; ++delta) {
                    if (delta == alpha || lambda[delta] == 0) continue;
                    ivec ed(d.rank, 0);
                    ed[delta] = 1;
                    if (sym_form_roots(d, s.n, ed) != 0) ok = false;
                }
                if (!ok) break;
                auto sg = s_of_gamma(d, pos, s.n);
                if (std::find(sg.begin(), sg.end(), alpha) != sg.end()) ok = false;
                if (!ok) break;
            }
            if (ok) return gen_class::third_case;
        }
    }
    return gen_class::none;
}

namespace {

bool f4_exclusion(const generator_monoid& g)
{
    const dynkin& d = g.d;
    if (d.comps.size() != 1 || d.comps[0].letter != 'F') return false;
    // lambda_i = omega_4 + a omega_3 (a >= 0) and lambda_j = a_j omega_3 (a_j > 0)
    bool first = false, second = false;
    for (const auto& l : g.gens) {
        if (l[0] == 0 && l[1] == 0 && l[3] == 1) first = true;
        if (l[0] == 0 && l[1] == 0 && l[3] == 0 && l[2] > 0) second = true;
    }
    return first && second;
}

}  // namespace

sigma_prediction candidate_tangent_weights(const generator_monoid& g)
{
    validate_monoid(g);
    if (!is_saturated(g)) throw input_error("candidate_tangent_weights: monoid not saturated");
    const dynkin& d = g.d;
    sigma_prediction out;
    out.sp = sp_of_monoid(g);
    auto catalog = spherical_root_catalog(d);
    auto pos = positive_roots(d);
    std::set<ivec> rootset(pos.begin(), pos.end());
    bool f4_kill = f4_exclusion(g);

    std::vector<spherical_root> cand;
    for (const auto& gamma : catalog) {
        sigma_prediction::cand_trace tr;
        tr.root = gamma;
        // (w) a weight vector of T_ad-weight gamma must exist in some V(lambda_i)
        {
            bool some = false;
            ivec gw = root_to_weight(d, gamma.n);
            for (const auto& lam : g.gens)
                if (is_module_weight(d, lam, ivec_sub(lam, gw))) some = true;
            if (!some) tr.dropped_by.push_back("weight-space");
        }
        // (a) Lemma on supports: gamma - delta not a root forces (gamma,delta) >= 0,
        // and orthogonality forces delta orthogonal to the whole monoid
        for (int delta : gamma.supp) {
            ivec diff = gamma.n;
            diff[delta] -= 1;
            bool neg = false;
            for (long long x : diff)
                if (x < 0) neg = true;
            if (!neg && rootset.count(diff)) continue;
            ivec ed(d.rank, 0);
            ed[delta] = 1;
            long long form = sym_form_roots(d, gamma.n, ed);
            bool bad = form < 0 ||
                       (form == 0 &&
                        std::find(out.sp.begin(), out.sp.end(), delta) == out.sp.end());
            if (bad) {
                tr.dropped_by.push_back("root-support");
                break;
            }
        }
        // (b) two-element S(gamma): one generator non-orthogonal to both forces
        // every other generator orthogonal to both
        {
            auto sg = s_of_gamma(d, pos, gamma.n);
            if (sg.size() == 2) {
                int a = sg[0], b = sg[1];
                for (size_t i = 0; i < g.gens.size(); ++i) {
                    if (g.gens[i][a] == 0 || g.gens[i][b] == 0) continue;
                    for (size_t j = 0; j < g.gens.size(); ++j) {
                        if (j == i) continue;
                        if (g.gens[j][a] != 0 || g.gens[j][b] != 0) {
                            tr.dropped_by.push_back("pair-ruleout");
                            goto pair_done;
                        }
                    }
                }
            pair_done:;
            }
        }
        // (c) two generators non-orthogonal to alpha force (gamma, alpha) = 0
        for (int a = 0; a < d.rank; ++a) {
            int nonorth = 0;
            for (const auto& lam : g.gens)
                if (lam[a] != 0) ++nonorth;
            if (nonorth < 2) continue;
            ivec ea(d.rank, 0);
            ea[a] = 1;
            if (sym_form_roots(d, gamma.n, ea) != 0) {
                tr.dropped_by.push_back("two-generators");
                break;
            }
        }
        // (d) F4 pattern kills the whole tangent space
        if (f4_kill) tr.dropped_by.push_back("f4");
        // (e) gamma must lie in Z Gamma
        if (!in_monoid_lattice(g, gamma.n)) tr.dropped_by.push_back("lattice");
        // per-element compatibility requirements of the output system
        if (tr.dropped_by.empty()) {
            if (!is_compatible(d, out.sp, gamma)) tr.dropped_by.push_back("axiom-S");
            const spherical_root* twice = find_spherical_root(catalog, ivec_scale(gamma.n, 2));
            if (twice && is_compatible(d, out.sp, *twice)) tr.dropped_by.push_back("axiom-St");
        }
        if (tr.dropped_by.empty()) {
            tr.kept = true;
            cand.push_back(gamma);
        }
        out.trace.push_back(std::move(tr));
    }

    // Certification pass: the prediction is the largest subset that is a valid
    // system with sp and, when its support is all of S, lets every generator
    // classify against its colors.
    auto valid_subset = [&](const std::vector<spherical_root>& sigma) {
        if (!sigma_independent(sigma)) return false;
        spherical_system sys;
        sys.d = d;
        sys.sp = out.sp;
        sys.sigma = sigma;
        return check_axioms(sys).valid();
    };
    auto full_support = [&](const std::vector<spherical_root>& sigma) {
        std::vector<bool> cov(d.rank, false);
        for (const auto& s : sigma)
            for (int a : s.supp) cov[a] = true;
        for (int a = 0; a < d.rank; ++a)
            if (!cov[a]) return false;
        return true;
    };
    auto certifies = [&](const std::vector<spherical_root>& sigma) {
        auto delta = colors_unchecked(d, out.sp, sigma);
        for (const auto& lam : g.gens)
            if (classify_generator(g, lam, sigma, delta) == gen_class::none) return false;
        return true;
    };
    const size_t n = cand.size();
    std::vector<std::vector<spherical_root>> best_by_mode(2);
    bool found_full = false, found_partial = false;
    for (size_t size = n + 1; size-- > 0;) {
        // subsets of a given size in lexicographic index order
        std::vector<int> idx(size);
        std::function<bool(size_t, size_t)> rec = [&](size_t pos_i, size_t start) -> bool {
            if (pos_i == size) {
                std::vector<spherical_root> sigma;
                for (int i : idx) sigma.push_back(cand[i]);
                if (!valid_subset(sigma)) return false;
                if (full_support(sigma)) {
                    if (!found_full && certifies(sigma)) {
                        best_by_mode[0] = sigma;
                        found_full = true;
                    }
                } else if (!found_partial) {
                    best_by_mode[1] = sigma;
                    found_partial = true;
                }
                return found_full;
            }
            for (size_t i = start; i < n; ++i) {
                idx[pos_i] = int(i);
                if (rec(pos_i + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) break;
        if (found_full) break;
    }
    if (found_full) {
        out.predicted = best_by_mode[0];
        out.certified = true;
    } else {
        out.predicted = best_by_mode[1];  // empty set always qualifies
        out.certified = false;
    }
    std::set<ivec> chosen;
    for (const auto& s : out.predicted) chosen.insert(s.n);
    for (auto& tr : out.trace)
        if (tr.kept && !chosen.count(tr.root.n)) {
            tr.kept = false;
            tr.dropped_by.push_back("certification");
        }
    return out;
}

}  // namespace sph
