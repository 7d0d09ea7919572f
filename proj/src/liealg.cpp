#include "sph/liealg.hpp"

#include <algorithm>
#include <set>

namespace sph {

void smat::set(int i, int j, const rat& v)
{
    if (sph::is_zero(v)) return;
    auto& c = col[j];
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != c.end() && it->first == i)
        it->second = v;
    else
        c.insert(it, {i, v});
}

std::vector<rat> smat::apply(const std::vector<rat>& v) const
{
    SPH_CHECK(int(v.size()) == cols, "smat apply shape");
    std::vector<rat> r(rows, rat(0));
    for (int j = 0; j < cols; ++j) {
        if (sph::is_zero(v[j])) continue;
        for (const auto& [i, c] : col[j]) r[i] += c * v[j];
    }
    return r;
}

bool smat::is_zero() const
{
    for (const auto& c : col)
        for (const auto& [i, v] : c)
            if (!sph::is_zero(v)) return false;
    return true;
}

smat smul(const smat& a, const smat& b)
{
    SPH_CHECK(a.cols == b.rows, "smul shape");
    smat r(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        std::map<int, rat> acc;
        for (const auto& [k, bv] : b.col[j])
            for (const auto& [i, av] : a.col[k]) acc[i] += av * bv;
        for (auto& [i, v] : acc)
            if (!is_zero(v)) r.col[j].push_back({i, v});
    }
    return r;
}

smat slin(const smat& a, const rat& ca, const smat& b, const rat& cb)
{
    SPH_CHECK(a.rows == b.rows && a.cols == b.cols, "slin shape");
    smat r(a.rows, a.cols);
    for (int j = 0; j < a.cols; ++j) {
        std::map<int, rat> acc;
        for (const auto& [i, v] : a.col[j]) acc[i] += ca * v;
        for (const auto& [i, v] : b.col[j]) acc[i] += cb * v;
        for (auto& [i, v] : acc)
            if (!is_zero(v)) r.col[j].push_back({i, v});
    }
    return r;
}

smat sscale(const smat& a, const rat& c)
{
    smat r(a.rows, a.cols);
    if (is_zero(c)) return r;
    for (int j = 0; j < a.cols; ++j)
        for (const auto& [i, v] : a.col[j]) r.col[j].push_back({i, v * c});
    return r;
}

bool sequal(const smat& a, const smat& b) { return slin(a, 1, b, -1).is_zero(); }

// ---------------------------------------------------------------------------
// module construction

namespace {

using sparse_vec = std::vector<std::pair<int, rat>>;  // (basis id, coeff)

struct wblock {
    std::vector<int> ids;               // selected basis vectors at this weight
    std::vector<std::vector<rat>> gram; // contravariant form on them
};

struct builder {
    const dynkin& d;
    ivec lambda;
    long long cap;
    std::map<ivec, wblock> blocks;
    std::vector<ivec> wt;                        // per id
    std::vector<std::vector<sparse_vec>> eact;   // [simple][id]
    std::vector<std::vector<sparse_vec>> fact;   // [simple][id]

    builder(const dynkin& dd, ivec lam, long long c) : d(dd), lambda(std::move(lam)), cap(c)
    {
        eact.resize(d.rank);
        fact.resize(d.rank);
    }

    int new_id(const ivec& mu)
    {
        wt.push_back(mu);
        for (int a = 0; a < d.rank; ++a) {
            eact[a].emplace_back();
            fact[a].emplace_back();
        }
        return int(wt.size()) - 1;
    }

    rat pair_at(const ivec& mu, const sparse_vec& x, int id_in_block)
    {
        // <x, basis vector> where everything lives at weight mu
        const wblock& blk = blocks.at(mu);
        int pos = -1;
        for (int i = 0; i < int(blk.ids.size()); ++i)
            if (blk.ids[i] == id_in_block) pos = i;
        SPH_CHECK(pos >= 0, "pair_at: vector not in block");
        rat s = 0;
        for (const auto& [id, c] : x) {
            int xi = -1;
            for (int i = 0; i < int(blk.ids.size()); ++i)
                if (blk.ids[i] == id) xi = i;
            SPH_CHECK(xi >= 0, "pair_at: foreign id");
            s += c * blk.gram[xi][pos];
        }
        return s;
    }

    void run()
    {
        ivec top = lambda;
        blocks[top] = wblock{{new_id(top)}, {{rat(1)}}};
        std::vector<ivec> frontier{top};
        long long total = 1;
        while (!frontier.empty()) {
            std::set<ivec> next_set;
            for (const ivec& mu : frontier)
                for (int a = 0; a < d.rank; ++a) {
                    ivec down = mu;
                    for (int b = 0; b < d.rank; ++b) down[b] -= d.cartan[b][a];
                    next_set.insert(down);
                }
            std::vector<ivec> next(next_set.begin(), next_set.end());
            std::vector<ivec> produced;
            for (const ivec& mu : next) {
                if (process_weight(mu)) produced.push_back(mu);
                total += static_cast<long long>(blocks.count(mu) ? blocks[mu].ids.size() : 0);
                if (total > cap)
                    throw resource_error("module dimension exceeds cap " + std::to_string(cap));
            }
            frontier = std::move(produced);
        }
    }

    // returns true if the weight space is nonzero
    bool process_weight(const ivec& mu)
    {
        struct cand {
            int a;    // lowering simple
            int pid;  // parent id
            std::vector<sparse_vec> eac;  // e-action per simple
            rat norm;
        };
        std::vector<cand> selected;
        wblock blk;
        for (int a = 0; a < d.rank; ++a) {
            ivec up = mu;
            for (int b = 0; b < d.rank; ++b) up[b] += d.cartan[b][a];
            auto it = blocks.find(up);
            if (it == blocks.end()) continue;
            for (int pid : it->second.ids) {
                cand c;
                c.a = a;
                c.pid = pid;
                c.eac.resize(d.rank);
                for (int b = 0; b < d.rank; ++b) {
                    // e_b f_a p = f_a e_b p + delta_ab <alpha_a^vee, wt(p)> p
                    std::map<int, rat> acc;
                    for (const auto& [id, co] : eact[b][pid])
                        for (const auto& [id2, co2] : fact[a][id]) acc[id2] += co * co2;
                    if (a == b) {
                        long long h = pairing_weight(a, wt[pid]);
                        if (h != 0) acc[pid] += to_rat(h);
                    }
                    for (auto& [id, co] : acc)
                        if (!is_zero(co)) c.eac[b].push_back({id, co});
                }
                // inner products against the selected candidates
                std::vector<rat> rhs(selected.size());
                for (size_t s = 0; s < selected.size(); ++s) {
                    // <S_s, c> = <parent(S_s), e_{a_s} c>
                    const cand& S = selected[s];
                    ivec up_s = mu;
                    for (int b = 0; b < d.rank; ++b) up_s[b] += d.cartan[b][S.a];
                    rhs[s] = pair_at(up_s, c.eac[S.a], S.pid);
                }
                c.norm = pair_at(up, c.eac[a], pid);
                // dependence test against selected via the Gram matrix
                std::vector<rat> x;
                if (!selected.empty()) {
                    mat G(int(selected.size()), int(selected.size()));
                    for (size_t i = 0; i < selected.size(); ++i)
                        for (size_t j = 0; j < selected.size(); ++j) G(int(i), int(j)) = blk.gram[i][j];
                    bool ok = solve_linear(G, rhs, x);
                    SPH_CHECK(ok, "contravariant Gram must be invertible");
                }
                rat residual = c.norm;
                for (size_t s = 0; s < selected.size(); ++s) residual -= x.size() ? x[s] * rhs[s] : rat(0);
                if (is_zero(residual)) {
                    sparse_vec expr;
                    for (size_t s = 0; s < selected.size(); ++s)
                        if (!is_zero(x[s])) expr.push_back({blk.ids[s], x[s]});
                    fact[a][pid] = std::move(expr);
                } else {
                    int id = new_id(mu);
                    fact[a][pid] = {{id, rat(1)}};
                    for (int b = 0; b < d.rank; ++b) eact[b][id] = c.eac[b];
                    // extend gram
                    for (size_t s = 0; s < selected.size(); ++s) blk.gram[s].push_back(rhs[s]);
                    std::vector<rat> row = rhs;
                    row.push_back(c.norm);
                    blk.gram.push_back(std::move(row));
                    blk.ids.push_back(id);
                    selected.push_back(std::move(c));
                }
            }
        }
        if (blk.ids.empty()) return false;
        blocks[mu] = std::move(blk);
        return true;
    }
};

}  // namespace

module_core build_module_core(const dynkin& d, const ivec& lambda, long long dim_cap)
{
    if (!is_dominant(lambda)) throw input_error("module highest weight must be dominant");
    mpz_class wd = weyl_dim(d, lambda);
    if (wd > static_cast<long>(dim_cap))
        throw resource_error("module dimension " + wd.get_str() + " exceeds cap " +
                             std::to_string(dim_cap));
    builder b(d, lambda, dim_cap);
    b.run();
    module_core m;
    m.lambda = lambda;
    m.dim = int(b.wt.size());
    SPH_CHECK(mpz_class(m.dim) == wd, "module dimension must match the Weyl formula");
    m.wt = b.wt;
    m.ope.assign(d.rank, smat(m.dim, m.dim));
    m.opf.assign(d.rank, smat(m.dim, m.dim));
    for (int a = 0; a < d.rank; ++a)
        for (int j = 0; j < m.dim; ++j) {
            for (const auto& [i, c] : b.eact[a][j]) m.ope[a].set(i, j, c);
            for (const auto& [i, c] : b.fact[a][j]) m.opf[a].set(i, j, c);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Lie algebra

ivec lie_algebra::ad_weight(int k) const
{
    if (is_e(k)) return roots[k];
    if (is_f(k)) return ivec_scale(roots[k - nroots], -1);
    return ivec(d.rank, 0);
}

std::string lie_algebra::basis_name(int k) const
{
    auto root_str = [&](const ivec& r) {
        std::string s;
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(r[i]);
        }
        return s;
    };
    if (is_e(k)) return "e[" + root_str(roots[k]) + "]";
    if (is_f(k)) return "f[" + root_str(roots[k - nroots]) + "]";
    return "h[" + d.node_name(k - 2 * nroots) + "]";
}

namespace {

struct op_set {
    // operators of one algebra basis element on a list of module cores
    std::vector<smat> block;
};

op_set make_h(const std::vector<module_core>& W, const dynkin& d, int a)
{
    op_set o;
    for (const auto& m : W) {
        smat s(m.dim, m.dim);
        for (int j = 0; j < m.dim; ++j) {
            long long v = pairing_weight(a, m.wt[j]);
            if (v != 0) s.set(j, j, to_rat(v));
        }
        o.block.push_back(std::move(s));
    }
    return o;
}

op_set lin_comb(const op_set& a, const rat& ca, const op_set& b, const rat& cb)
{
    op_set o;
    for (size_t i = 0; i < a.block.size(); ++i) o.block.push_back(slin(a.block[i], ca, b.block[i], cb));
    return o;
}

op_set commutator_set(const op_set& a, const op_set& b)
{
    op_set o;
    for (size_t i = 0; i < a.block.size(); ++i) o.block.push_back(scomm(a.block[i], b.block[i]));
    return o;
}

bool set_zero(const op_set& a)
{
    for (const auto& s : a.block)
        if (!s.is_zero()) return false;
    return true;
}

bool set_equal(const op_set& a, const op_set& b)
{
    for (size_t i = 0; i < a.block.size(); ++i)
        if (!sequal(a.block[i], b.block[i])) return false;
    return true;
}

// c with a == c*b, for nonzero b; nullopt when not proportional
std::optional<rat> proportionality(const op_set& a, const op_set& b)
{
    rat c;
    bool have = false;
    for (size_t k = 0; k < b.block.size(); ++k)
        for (int j = 0; j < b.block[k].cols && !have; ++j)
            for (const auto& [i, v] : b.block[k].col[j]) {
                c = rat(0);
                // find matching entry of a
                for (const auto& [i2, v2] : a.block[k].col[j])
                    if (i2 == i) c = v2;
                c /= v;
                have = true;
                break;
            }
    if (!have) return std::nullopt;  // b == 0
    if (set_equal(a, lin_comb(b, c, b, 0))) return c;
    return std::nullopt;
}

}  // namespace

lie_algebra build_lie_algebra(const dynkin& d)
{
    lie_algebra L;
    L.d = d;
    L.roots = positive_roots(d);
    L.nroots = int(L.roots.size());
    std::map<ivec, int> root_index;
    for (int r = 0; r < L.nroots; ++r) root_index[L.roots[r]] = r;

    // defining chains
    L.chains.resize(L.nroots);
    for (int r = 0; r < L.nroots; ++r) {
        const ivec& theta = L.roots[r];
        if (height(theta) == 1) {
            L.chains[r].simple = int(std::find_if(theta.begin(), theta.end(),
                                                  [](long long x) { return x != 0; }) -
                                     theta.begin());
            L.chains[r].rest = -1;
            L.chains[r].denom = 1;
            continue;
        }
        int simple = -1, rest = -1;
        for (int a = 0; a < d.rank && simple < 0; ++a) {
            ivec diff = theta;
            diff[a] -= 1;
            bool neg = false;
            for (long long x : diff)
                if (x < 0) neg = true;
            if (!neg && root_index.count(diff)) {
                simple = a;
                rest = root_index[diff];
            }
        }
        SPH_CHECK(simple >= 0, "every positive root descends through a simple root");
        // p = length of the alpha-string below theta - alpha
        long long p = 0;
        ivec down = L.roots[rest];
        for (;;) {
            down[simple] -= 1;
            bool neg = false;
            for (long long x : down)
                if (x < 0) neg = true;
            if (neg || !root_index.count(down)) break;
            ++p;
        }
        L.chains[r].simple = simple;
        L.chains[r].rest = rest;
        L.chains[r].denom = to_rat(p + 1);
    }

    // faithful module: one adjoint block per component
    std::vector<module_core> W;
    for (const auto& comp : d.comps) {
        ivec theta;
        for (int r = L.nroots - 1; r >= 0; --r) {
            auto supp = support(L.roots[r]);
            if (std::find(comp.nodes.begin(), comp.nodes.end(), supp[0]) != comp.nodes.end()) {
                theta = L.roots[r];
                break;
            }
        }
        SPH_CHECK(!theta.empty(), "component highest root");
        W.push_back(build_module_core(d, root_to_weight(d, theta), 4000));
    }
    long long wdim = 0;
    for (const auto& m : W) wdim += m.dim;
    SPH_CHECK(wdim == 2 * L.nroots + d.rank, "adjoint blocks must have dim |Phi| + rank");

    // operators of every basis element on W
    std::vector<op_set> ops(L.dim());
    for (int a = 0; a < d.rank; ++a) ops[L.h_index(a)] = make_h(W, d, a);
    for (int r = 0; r < L.nroots; ++r) {
        if (height(L.roots[r]) != 1) continue;
        int a = L.chains[r].simple;
        op_set e, f;
        for (const auto& m : W) {
            e.block.push_back(m.ope[a]);
            f.block.push_back(m.opf[a]);
        }
        ops[L.e_index(r)] = std::move(e);
        ops[L.f_index(r)] = std::move(f);
    }
    for (int r = 0; r < L.nroots; ++r) {
        if (height(L.roots[r]) == 1) continue;
        const auto& ch = L.chains[r];
        int ai = -1;
        for (int rr = 0; rr < L.nroots; ++rr)
            if (height(L.roots[rr]) == 1 && L.chains[rr].simple == ch.simple) ai = rr;
        op_set e = commutator_set(ops[L.e_index(ai)], ops[L.e_index(ch.rest)]);
        e = lin_comb(e, rat(1) / ch.denom, e, 0);
        op_set ftry = commutator_set(ops[L.f_index(ai)], ops[L.f_index(ch.rest)]);
        ftry = lin_comb(ftry, rat(-1) / ch.denom, ftry, 0);
        // verify [e_theta, f_theta] acts as the coroot; fix the sign of f
        op_set dcheck = commutator_set(e, ftry);
        op_set hexp;
        for (const auto& m : W) {
            smat s(m.dim, m.dim);
            for (int j = 0; j < m.dim; ++j) {
                long long v = coroot_pairing(d, L.roots[r], m.wt[j]);
                if (v != 0) s.set(j, j, to_rat(v));
            }
            hexp.block.push_back(std::move(s));
        }
        int fsign;
        if (set_equal(dcheck, hexp))
            fsign = -1;
        else {
            op_set neg = lin_comb(hexp, -1, hexp, 0);
            SPH_CHECK(set_equal(dcheck, neg), "[e_theta, f_theta] must be the coroot");
            fsign = 1;
            ftry = lin_comb(ftry, -1, ftry, 0);
        }
        L.chains[r].fsign = fsign;
        ops[L.e_index(r)] = std::move(e);
        ops[L.f_index(r)] = std::move(ftry);
    }

    // bracket table by ad-weight
    L.table.assign(L.dim(), std::vector<std::vector<std::pair<int, rat>>>(L.dim()));
    mat hsolve(wdim, d.rank);
    {
        int row = 0;
        for (const auto& m : W)
            for (int j = 0; j < m.dim; ++j, ++row)
                for (int a = 0; a < d.rank; ++a) hsolve(row, a) = to_rat(m.wt[j][a]);
    }
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j) {
            if (i == j) continue;
            op_set C = commutator_set(ops[i], ops[j]);
            ivec w = ivec_add(L.ad_weight(i), L.ad_weight(j));
            std::vector<std::pair<int, rat>> expansion;
            if (ivec_is_zero(w)) {
                if (!set_zero(C)) {
                    // diagonal, expand over the h basis
                    std::vector<rat> diag(wdim, rat(0));
                    int row = 0;
                    for (size_t k = 0; k < W.size(); ++k) {
                        for (int x = 0; x < W[k].dim; ++x, ++row) {
                            for (const auto& [rr, v] : C.block[k].col[x])
                                SPH_CHECK(rr == x, "zero-weight bracket must be diagonal");
                            for (const auto& [rr, v] : C.block[k].col[x]) diag[row] = v;
                        }
                    }
                    std::vector<rat> coeffs;
                    bool ok = solve_linear(hsolve, diag, coeffs);
                    SPH_CHECK(ok, "Cartan bracket must lie in the weight span");
                    for (int a = 0; a < d.rank; ++a)
                        if (!is_zero(coeffs[a])) expansion.push_back({L.h_index(a), coeffs[a]});
                }
            } else {
                bool pos = true;
                ivec aw = w;
                for (long long x : w)
                    if (x < 0) pos = false;
                if (!pos) aw = ivec_scale(w, -1);
                auto it = root_index.find(aw);
                if (it == root_index.end()) {
                    SPH_CHECK(set_zero(C), "bracket weight must be a root or zero");
                } else {
                    int target = pos ? L.e_index(it->second) : L.f_index(it->second);
                    auto c = proportionality(C, ops[target]);
                    SPH_CHECK(c.has_value(), "bracket must be proportional to the root vector");
                    if (!is_zero(*c)) expansion.push_back({target, *c});
                }
            }
            L.table[i][j] = std::move(expansion);
        }
    return L;
}

// ---------------------------------------------------------------------------
// bound modules

const smat& module_t::op(int k) const
{
    auto it = ops.find(k);
    if (it != ops.end()) return it->second;
    const lie_algebra& A = *L;
    smat result;
    if (A.is_h(k)) {
        int a = k - 2 * A.nroots;
        result = smat(dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            long long v = pairing_weight(a, core.wt[j]);
            if (v != 0) result.set(j, j, to_rat(v));
        }
    } else {
        int r = A.is_e(k) ? k : k - A.nroots;
        const auto& ch = A.chains[r];
        if (ch.rest < 0) {
            result = A.is_e(k) ? core.ope[ch.simple] : core.opf[ch.simple];
        } else {
            int simple_root_idx = -1;
            for (int rr = 0; rr < A.nroots; ++rr)
                if (height(A.roots[rr]) == 1 && A.chains[rr].simple == ch.simple)
                    simple_root_idx = rr;
            if (A.is_e(k)) {
                const smat& x = op(A.e_index(simple_root_idx));
                const smat& y = op(A.e_index(ch.rest));
                result = sscale(scomm(x, y), rat(1) / ch.denom);
            } else {
                const smat& x = op(A.f_index(simple_root_idx));
                const smat& y = op(A.f_index(ch.rest));
                result = sscale(scomm(x, y), to_rat(ch.fsign) / ch.denom);
            }
        }
    }
    return ops.emplace(k, std::move(result)).first->second;
}

std::vector<rat> module_t::act_word(const std::vector<int>& word, std::vector<rat> v) const
{
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
    return v;
}

std::vector<rat> module_t::act_power(int k, int power, std::vector<rat> v) const
{
    for (int i = 0; i < power; ++i) v = act(k, v);
    return v;
}

std::vector<rat> module_t::highest_vector() const
{
    std::vector<rat> v(dim(), rat(0));
    v[0] = 1;
    return v;
}

module_t build_irreducible(const lie_algebra& L, const ivec& lambda, long long dim_cap)
{
    module_t m;
    m.L = &L;
    m.core = build_module_core(L.d, lambda, dim_cap);
    return m;
}

// ---------------------------------------------------------------------------
// products and Cartan kernels

ivec product_space::weight(int idx) const
{
    return ivec_add(A->weight(basis[idx].first), B->weight(basis[idx].second));
}

std::vector<rat> product_space::act(int k, const std::vector<rat>& v) const
{
    std::vector<rat> out(dim, rat(0));
    const smat& opa = A->op(k);
    const smat& opb = B->op(k);
    for (int idx = 0; idx < dim; ++idx) {
        if (is_zero(v[idx])) continue;
        auto [p, q] = basis[idx];
        for (const auto& [i, c] : opa.col[p]) {
            std::pair<int, int> key = symmetric ? std::pair<int, int>(std::minmax(i, q)) : std::make_pair(i, q);
            out[index_of.at(key)] += c * v[idx];
        }
        for (const auto& [j, c] : opb.col[q]) {
            std::pair<int, int> key = symmetric ? std::pair<int, int>(std::minmax(p, j)) : std::make_pair(p, j);
            out[index_of.at(key)] += c * v[idx];
        }
    }
    return out;
}

std::vector<rat> product_space::mul(const std::vector<rat>& u, const std::vector<rat>& w) const
{
    std::vector<rat> out(dim, rat(0));
    for (int p = 0; p < A->dim(); ++p) {
        if (is_zero(u[p])) continue;
        for (int q = 0; q < B->dim(); ++q) {
            if (is_zero(w[q])) continue;
            std::pair<int, int> key = symmetric ? std::pair<int, int>(std::minmax(p, q)) : std::make_pair(p, q);
            out[index_of.at(key)] += u[p] * w[q];
        }
    }
    return out;
}

product_space make_product(const module_t& a, const module_t& b, bool symmetric)
{
    product_space s;
    s.A = &a;
    s.B = &b;
    s.symmetric = symmetric;
    if (symmetric) SPH_CHECK(&a == &b, "symmetric square needs equal factors");
    for (int p = 0; p < a.dim(); ++p)
        for (int q = symmetric ? p : 0; q < b.dim(); ++q) {
            s.index_of[{p, q}] = int(s.basis.size());
            s.basis.push_back({p, q});
        }
    s.dim = int(s.basis.size());
    return s;
}

namespace {

std::vector<std::vector<rat>> lowering_closure(const product_space& sp, const lie_algebra& L,
                                               const std::vector<std::vector<rat>>& seeds)
{
    echelon span(sp.dim);
    std::vector<std::vector<rat>> basis;
    std::vector<std::vector<rat>> queue;
    for (const auto& v : seeds)
        if (span.add(v)) {
            basis.push_back(v);
            queue.push_back(v);
        }
    while (!queue.empty()) {
        std::vector<rat> v = std::move(queue.back());
        queue.pop_back();
        for (int a = 0; a < L.d.rank; ++a) {
            // lowering by the simple root vectors f_alpha
            int r = -1;
            for (int rr = 0; rr < L.nroots; ++rr)
                if (height(L.roots[rr]) == 1 && L.chains[rr].simple == a) r = rr;
            std::vector<rat> w = sp.act(L.f_index(r), v);
            if (span.add(w)) {
                basis.push_back(w);
                queue.push_back(w);
            }
        }
    }
    return basis;
}

}  // namespace

cartan_kernel_result cartan_kernel(const module_t& a, const module_t& b, bool symmetric,
                                   long long dim_cap)
{
    const lie_algebra& L = *a.L;
    cartan_kernel_result res;
    res.space = make_product(a, b, symmetric);
    const product_space& sp = res.space;
    if (sp.dim > dim_cap) throw resource_error("product dimension exceeds cap");

    // singular vectors: joint kernel of all raising operators
    mat stacked(L.d.rank * sp.dim, sp.dim);
    for (int avar = 0; avar < L.d.rank; ++avar) {
        int r = -1;
        for (int rr = 0; rr < L.nroots; ++rr)
            if (height(L.roots[rr]) == 1 && L.chains[rr].simple == avar) r = rr;
        for (int j = 0; j < sp.dim; ++j) {
            std::vector<rat> unit(sp.dim, rat(0));
            unit[j] = 1;
            std::vector<rat> img = sp.act(L.e_index(r), unit);
            for (int i = 0; i < sp.dim; ++i) stacked(avar * sp.dim + i, j) = img[i];
        }
    }
    auto singular = kernel_basis(stacked);

    ivec top = ivec_add(a.lambda(), b.lambda());
    std::vector<std::vector<rat>> cartan_seeds, k_seeds;
    for (const auto& v : singular) {
        // split by weight: singular vectors returned by kernel_basis may mix
        // weights, so project to weight components first
        std::map<ivec, std::vector<rat>> parts;
        for (int i = 0; i < sp.dim; ++i) {
            if (is_zero(v[i])) continue;
            auto& part = parts[sp.weight(i)];
            if (part.empty()) part.assign(sp.dim, rat(0));
            part[i] = v[i];
        }
        for (auto& [w, part] : parts) {
            if (w == top)
                cartan_seeds.push_back(part);
            else
                k_seeds.push_back(part);
        }
    }
    res.cartan_basis = lowering_closure(sp, L, cartan_seeds);
    res.k_basis = lowering_closure(sp, L, k_seeds);
    mpz_class cd = weyl_dim(L.d, top);
    SPH_CHECK(mpz_class(int(res.cartan_basis.size())) == cd,
              "Cartan component dimension must match the Weyl formula");
    SPH_CHECK(int(res.cartan_basis.size() + res.k_basis.size()) == sp.dim,
              "product must split as Cartan component plus K");
    return res;
}

}  // namespace sph
