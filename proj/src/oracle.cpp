#include "sph/oracle.hpp"

#include <algorithm>
#include <set>

namespace sph {

namespace {

ivec td_degree(const dynkin& d, const ivec& lambda, const ivec& mu)
{
    auto n = weight_to_root_integral(d, ivec_sub(lambda, mu));
    SPH_CHECK(n.has_value(), "T_ad degree must lie in the root lattice");
    return *n;
}

int simple_root_index(const lie_algebra& L, int node)
{
    for (int r = 0; r < L.nroots; ++r)
        if (height(L.roots[r]) == 1 && L.chains[r].simple == node) return r;
    SPH_CHECK(false, "simple root index");
    return -1;
}

}  // namespace

ivec orbit_data::gv_degree(int i) const
{
    if (i < int(gv_roots.size())) return L.ad_weight(gv_roots[i]);
    return ivec(L.d.rank, 0);
}

std::string orbit_data::gv_name(int i) const
{
    if (i < int(gv_roots.size())) return L.basis_name(gv_roots[i]);
    std::string s = "h(";
    const auto& combo = gv_torals[i - gv_roots.size()];
    for (int a = 0; a < L.d.rank; ++a) {
        if (a) s += ",";
        s += rat_str(combo[a]);
    }
    return s + ")";
}

std::vector<rat> orbit_data::base_vector() const
{
    std::vector<rat> v(vdim, rat(0));
    for (size_t i = 0; i < mods.size(); ++i) v[offset[i]] = 1;
    return v;
}

std::vector<rat> orbit_data::apply_algebra(int k, const std::vector<rat>& vec) const
{
    std::vector<rat> out(vdim, rat(0));
    for (size_t i = 0; i < mods.size(); ++i) {
        std::vector<rat> part(vec.begin() + offset[i], vec.begin() + offset[i] + mods[i].dim());
        std::vector<rat> img = mods[i].act(k, part);
        for (int j = 0; j < mods[i].dim(); ++j) out[offset[i] + j] = img[j];
    }
    return out;
}

std::vector<rat> orbit_data::apply_gv(int i, const std::vector<rat>& vec) const
{
    if (i < int(gv_roots.size())) return apply_algebra(gv_roots[i], vec);
    const auto& combo = gv_torals[i - gv_roots.size()];
    std::vector<rat> out(vdim, rat(0));
    for (int a = 0; a < L.d.rank; ++a) {
        if (is_zero(combo[a])) continue;
        std::vector<rat> part = apply_algebra(L.h_index(a), vec);
        for (int j = 0; j < vdim; ++j) out[j] += combo[a] * part[j];
    }
    return out;
}

std::vector<rat> orbit_data::gv_bracket(int i, int j) const
{
    const int nr = int(gv_roots.size());
    std::vector<rat> out(gv_dim(), rat(0));
    auto add_root_part = [&](int algebra_index, const rat& coeff) {
        for (int t = 0; t < nr; ++t)
            if (gv_roots[t] == algebra_index) {
                out[t] += coeff;
                return;
            }
        SPH_CHECK(false, "bracket of g_v elements must stay in g_v");
    };
    if (i < nr && j < nr) {
        std::vector<rat> hpart(L.d.rank, rat(0));
        for (const auto& [k, c] : L.bracket(gv_roots[i], gv_roots[j])) {
            if (L.is_h(k))
                hpart[k - 2 * L.nroots] += c;
            else
                add_root_part(k, c);
        }
        bool hzero = true;
        for (const rat& x : hpart)
            if (!is_zero(x)) hzero = false;
        if (!hzero) {
            std::vector<rat> coeffs;
            bool ok = toral_span.express(hpart, coeffs);
            SPH_CHECK(ok, "Cartan part of a g_v bracket must lie in the toral kernel");
            for (size_t t = 0; t < gv_torals.size(); ++t) out[nr + int(t)] += coeffs[t];
        }
        return out;
    }
    if (i >= nr && j >= nr) return out;  // torals commute
    // toral against root vector: [h, x_beta] = <beta-degree, h> x_beta
    int root_pos = i < nr ? i : j;
    int toral_pos = i < nr ? j : i;
    rat sign = i < nr ? rat(-1) : rat(1);  // [x, h] = -[h, x]
    const auto& combo = gv_torals[toral_pos - nr];
    ivec w = L.ad_weight(gv_roots[root_pos]);
    ivec wc = root_to_weight(L.d, w);
    rat val = 0;
    for (int a = 0; a < L.d.rank; ++a) val += combo[a] * to_rat(wc[a]);
    out[root_pos] = sign * val;
    return out;
}

bool orbit_data::in_orbit_span(const std::vector<rat>& vec) const
{
    // split by degree and reduce each part
    std::map<ivec, std::vector<rat>> parts;
    for (int j = 0; j < vdim; ++j) {
        if (is_zero(vec[j])) continue;
        auto& p = parts[degree[j]];
        if (p.empty()) p.assign(vdim, rat(0));
        p[j] = vec[j];
    }
    for (const auto& [deg, p] : parts) {
        auto it = orbit_span.find(deg);
        if (it == orbit_span.end()) return false;
        if (!it->second.contains(p)) return false;
    }
    return true;
}

std::unique_ptr<orbit_data> make_orbit_data(const generator_monoid& g, long long dim_cap)
{
    validate_monoid(g);
    auto od = std::make_unique<orbit_data>();
    od->g = g;
    od->L = build_lie_algebra(g.d);
    const lie_algebra& L = od->L;
    long long total = 0;
    for (const auto& lam : g.gens) {
        od->offset.push_back(int(total));
        od->mods.push_back(build_irreducible(L, lam, dim_cap));
        total += od->mods.back().dim();
        if (total > dim_cap) throw resource_error("ambient module dimension exceeds cap");
    }
    od->vdim = int(total);
    for (size_t i = 0; i < od->mods.size(); ++i)
        for (int j = 0; j < od->mods[i].dim(); ++j)
            od->degree.push_back(td_degree(g.d, g.gens[i], od->mods[i].weight(j)));

    std::vector<rat> v = od->base_vector();
    // root vectors in g_v: all e_beta, and f_beta exactly when f_beta v = 0
    for (int r = 0; r < L.nroots; ++r) od->gv_roots.push_back(L.e_index(r));
    for (int r = 0; r < L.nroots; ++r) {
        std::vector<rat> img = od->apply_algebra(L.f_index(r), v);
        bool zero = true;
        for (const rat& x : img)
            if (!is_zero(x)) zero = false;
        long long pair_sum = 0;
        for (const auto& lam : g.gens) pair_sum += std::abs(coroot_pairing(g.d, L.roots[r], lam));
        SPH_CHECK(zero == (pair_sum == 0), "f_beta v = 0 iff beta orthogonal to the monoid");
        if (zero)
            od->gv_roots.push_back(L.f_index(r));
        else {
            ivec deg = L.roots[r];  // T_ad degree of f_beta v
            auto it = od->orbit_span.find(deg);
            if (it == od->orbit_span.end())
                it = od->orbit_span.emplace(deg, echelon(od->vdim)).first;
            bool grew = it->second.add(img);
            SPH_CHECK(grew, "distinct f_beta v vectors have distinct degrees");
            ++od->orbit_dim;
        }
    }
    // toral part: kernel of h -> (lambda_i(h))_i
    mat pairings(int(g.gens.size()), g.d.rank);
    for (int i = 0; i < pairings.rows; ++i)
        for (int a = 0; a < g.d.rank; ++a) pairings(i, a) = to_rat(g.gens[i][a]);
    od->toral_span = echelon(g.d.rank, true);
    for (const auto& kerv : kernel_basis(pairings)) {
        od->gv_torals.push_back(kerv);
        od->toral_span.add(kerv);
    }
    // h part of g.v at degree zero
    {
        ivec zero_deg(g.d.rank, 0);
        echelon e(od->vdim);
        for (int a = 0; a < g.d.rank; ++a) {
            std::vector<rat> img = od->apply_algebra(L.h_index(a), v);
            if (e.add(img)) ++od->orbit_dim;
        }
        if (e.rank() > 0) od->orbit_span.emplace(zero_deg, std::move(e));
    }
    SPH_CHECK(od->orbit_dim + od->gv_dim() == L.dim(), "dim g.v + dim g_v = dim g");
    // g_v is bracket-closed: gv_bracket throws on violation
    for (int i = 0; i < od->gv_dim(); ++i)
        for (int j = 0; j < od->gv_dim(); ++j) od->gv_bracket(i, j);
    return od;
}

quotient_module make_quotient(const orbit_data& od)
{
    quotient_module q;
    // group V coordinates by degree in deterministic order
    std::map<ivec, std::vector<int>> by_degree;
    for (int j = 0; j < od.vdim; ++j) by_degree[od.degree[j]].push_back(j);
    for (const auto& [deg, coords] : by_degree) {
        auto it = od.orbit_span.find(deg);
        if (it == od.orbit_span.end()) {
            for (int c : coords) q.coords.push_back({deg, c});
            continue;
        }
        // free coordinates of the echelon, restricted to this degree block
        std::set<int> pivots(it->second.pivots.begin(), it->second.pivots.end());
        for (int c : coords)
            if (!pivots.count(c)) q.coords.push_back({deg, c});
    }
    q.mod.dim = int(q.coords.size());
    for (const auto& [deg, c] : q.coords) q.mod.degree.push_back(deg);
    q.mod.act.assign(od.gv_dim(), {});
    for (int i = 0; i < od.gv_dim(); ++i) {
        q.mod.act[i].resize(q.mod.dim);
        for (int k = 0; k < q.mod.dim; ++k) {
            std::vector<rat> unit(od.vdim, rat(0));
            unit[q.coords[k].second] = 1;
            q.mod.act[i][k] = q.project(od, od.apply_gv(i, unit));
        }
    }
    return q;
}

std::vector<rat> quotient_module::project(const orbit_data& od, const std::vector<rat>& full) const
{
    // reduce by every degree's span, then read the free coordinates
    std::map<ivec, std::vector<rat>> parts;
    for (int j = 0; j < od.vdim; ++j) {
        if (is_zero(full[j])) continue;
        auto& p = parts[od.degree[j]];
        if (p.empty()) p.assign(od.vdim, rat(0));
        p[j] = full[j];
    }
    std::vector<rat> out(mod.dim, rat(0));
    for (auto& [deg, p] : parts) {
        auto it = od.orbit_span.find(deg);
        std::vector<rat> red = (it == od.orbit_span.end()) ? p : it->second.reduce(p);
        for (int k = 0; k < mod.dim; ++k)
            if (coords[k].first == deg) out[k] = red[coords[k].second];
    }
    return out;
}

std::vector<rat> quotient_module::lift(const std::vector<rat>& qv, int vdim) const
{
    std::vector<rat> out(vdim, rat(0));
    for (int k = 0; k < mod.dim; ++k) out[coords[k].second] = qv[k];
    return out;
}

std::vector<ivec> tangent_report::weights() const
{
    std::vector<ivec> w;
    for (const auto& e : entries)
        if (e.in_lattice) w.push_back(e.gamma);
    std::sort(w.begin(), w.end());
    return w;
}

tangent_report tangent_space(const orbit_data& od)
{
    quotient_module q = make_quotient(od);
    tangent_report rep;
    // degrees present in the quotient
    std::vector<ivec> degs;
    for (const auto& [deg, c] : q.coords)
        if (degs.empty() || !(degs.back() == deg)) degs.push_back(deg);
    for (const ivec& deg : degs) {
        std::vector<int> idx;
        for (int k = 0; k < q.mod.dim; ++k)
            if (q.mod.degree[k] == deg) idx.push_back(k);
        // fixed classes at this degree: stack the g_v action
        std::vector<std::vector<rat>> rows;
        for (int i = 0; i < od.gv_dim(); ++i) {
            // an operator of ad-weight a shifts the T_ad degree by -a
            ivec tgt = ivec_sub(deg, od.gv_degree(i));
            std::vector<int> tgt_idx;
            for (int k = 0; k < q.mod.dim; ++k)
                if (q.mod.degree[k] == tgt) tgt_idx.push_back(k);
            if (tgt_idx.empty()) continue;
            for (int t : tgt_idx) {
                std::vector<rat> row(idx.size());
                for (size_t c = 0; c < idx.size(); ++c) row[c] = q.mod.act[i][idx[c]][t];
                rows.push_back(std::move(row));
            }
        }
        mat A(int(rows.size()), int(idx.size()));
        for (int r = 0; r < A.rows; ++r)
            for (int c = 0; c < A.cols; ++c) A(r, c) = rows[r][c];
        auto ker = kernel_basis(A);
        if (ker.empty()) continue;
        tangent_entry entry;
        entry.gamma = deg;
        entry.multiplicity = int(ker.size());
        entry.in_lattice = in_monoid_lattice(od.g, deg);
        // The fixed space must be spanned by classes that admit T-weight
        // homogeneous representatives in V.  Per weight block, solve for
        // fixed vectors supported in the block and collect their classes.
        {
            std::map<ivec, std::vector<int>> blocks;  // T-weight -> V coordinates
            for (int j = 0; j < od.vdim; ++j) {
                if (!(od.degree[j] == deg)) continue;
                int mi = 0;
                while (mi + 1 < int(od.offset.size()) && od.offset[mi + 1] <= j) ++mi;
                blocks[od.mods[mi].weight(j - od.offset[mi])].push_back(j);
            }
            echelon span(q.mod.dim);
            std::vector<std::vector<rat>> homreps;
            for (const auto& [mu, vcoords] : blocks) {
                // constraints: every g_v element must move u into g.v
                std::vector<std::vector<rat>> brows;
                for (int i = 0; i < od.gv_dim(); ++i) {
                    std::vector<std::vector<rat>> images;
                    for (int vc : vcoords) {
                        std::vector<rat> unit(od.vdim, rat(0));
                        unit[vc] = 1;
                        images.push_back(q.project(od, od.apply_gv(i, unit)));
                    }
                    for (int t = 0; t < q.mod.dim; ++t) {
                        std::vector<rat> row(vcoords.size());
                        bool nonzero = false;
                        for (size_t c = 0; c < vcoords.size(); ++c) {
                            row[c] = images[c][t];
                            if (!is_zero(row[c])) nonzero = true;
                        }
                        if (nonzero) brows.push_back(std::move(row));
                    }
                }
                mat B(int(brows.size()), int(vcoords.size()));
                for (int r = 0; r < B.rows; ++r)
                    for (int c = 0; c < B.cols; ++c) B(r, c) = brows[r][c];
                for (const auto& kv : kernel_basis(B)) {
                    std::vector<rat> u(od.vdim, rat(0));
                    for (size_t c = 0; c < vcoords.size(); ++c) u[vcoords[c]] = kv[c];
                    if (span.add(q.project(od, u))) homreps.push_back(std::move(u));
                }
            }
            SPH_CHECK(span.rank() == int(ker.size()),
                      "fixed space must be spanned by weight-homogeneous classes");
            entry.reps = std::move(homreps);
        }
        rep.lie_dim += entry.multiplicity;
        if (entry.in_lattice) rep.dim += entry.multiplicity;
        rep.entries.push_back(std::move(entry));
    }
    // component-group caveat: a generator that is a proper multiple of a color
    {
        auto catalog = spherical_root_catalog(od.g.d);
        std::vector<spherical_root> sigma;
        for (const auto& e : rep.entries) {
            if (!e.in_lattice) continue;
            const spherical_root* r = find_spherical_root(catalog, e.gamma);
            if (r) sigma.push_back(*r);
        }
        auto delta = colors_unchecked(od.g.d, sp_of_monoid(od.g), sigma);
        for (const auto& lam : od.g.gens)
            for (const auto& c : delta) {
                int j = -1;
                for (int i = 0; i < od.g.d.rank; ++i)
                    if (c.weight[i] != 0) { j = i; break; }
                if (j < 0) continue;
                rat a = to_rat(lam[j]) / to_rat(c.weight[j]);
                bool prop = true;
                for (int i = 0; i < od.g.d.rank; ++i)
                    if (to_rat(lam[i]) != a * to_rat(c.weight[i])) prop = false;
                if (prop && a > 1) rep.component_group_caveat = true;
            }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Lie algebra cohomology

h1_result h1_graded(const orbit_data& od, const gmodule& M)
{
    h1_result res;
    const int k = od.gv_dim();
    // candidate cochain degrees; a cochain supported on x_i with value of
    // degree d transforms under the monoid torus by adweight(x_i) + d
    std::set<ivec> degs;
    for (int i = 0; i < k; ++i) {
        ivec gi = od.gv_degree(i);
        for (int j = 0; j < M.dim; ++j) degs.insert(ivec_add(M.degree[j], gi));
    }
    std::vector<std::vector<int>> mcoords_by_gv;  // reused scratch
    for (const ivec& w : degs) {
        // unknown layout: for each gv index i, the coordinates of M at degree w + deg(x_i)
        std::vector<std::vector<int>> slot(k);
        std::vector<int> base(k + 1, 0);
        for (int i = 0; i < k; ++i) {
            ivec tgt = ivec_sub(w, od.gv_degree(i));
            for (int j = 0; j < M.dim; ++j)
                if (M.degree[j] == tgt) slot[i].push_back(j);
            base[i + 1] = base[i] + int(slot[i].size());
        }
        const int unknowns = base[k];
        if (unknowns == 0) continue;
        // cocycle conditions per pair i < j, valued in M at degree w + deg(x_i) + deg(x_j)
        std::vector<std::vector<rat>> rows;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<rat> br = od.gv_bracket(i, j);
                // every term lives in M at degree w - deg(x_i) - deg(x_j)
                ivec tgt = ivec_sub(w, ivec_add(od.gv_degree(i), od.gv_degree(j)));
                bool tgt_empty = true;
                for (int t = 0; t < M.dim; ++t)
                    if (M.degree[t] == tgt) tgt_empty = false;
                if (tgt_empty) continue;
                std::map<int, std::vector<rat>> row_map;  // M coordinate -> row
                auto row_for = [&](int t) -> std::vector<rat>& {
                    auto it = row_map.find(t);
                    if (it == row_map.end())
                        it = row_map.emplace(t, std::vector<rat>(unknowns, rat(0))).first;
                    return it->second;
                };
                // phi([x_i,x_j]) term
                for (int l = 0; l < k; ++l) {
                    if (is_zero(br[l])) continue;
                    for (size_t c = 0; c < slot[l].size(); ++c)
                        row_for(slot[l][c])[base[l] + int(c)] += br[l];
                }
                // - x_i phi(x_j) + x_j phi(x_i)
                for (size_t c = 0; c < slot[j].size(); ++c) {
                    const auto& column = M.act[i][slot[j][c]];
                    for (int t = 0; t < M.dim; ++t)
                        if (!is_zero(column[t])) row_for(t)[base[j] + int(c)] -= column[t];
                }
                for (size_t c = 0; c < slot[i].size(); ++c) {
                    const auto& column = M.act[j][slot[i][c]];
                    for (int t = 0; t < M.dim; ++t)
                        if (!is_zero(column[t])) row_for(t)[base[i] + int(c)] += column[t];
                }
                for (auto& [t, row] : row_map) rows.push_back(std::move(row));
            }
        mat A(int(rows.size()), unknowns);
        for (int r = 0; r < A.rows; ++r)
            for (int c = 0; c < A.cols; ++c) A(r, c) = rows[r][c];
        auto zbasis = kernel_basis(A);
        // coboundaries: m in M_w gives phi(x_i) = x_i m
        std::vector<int> wcoords;
        for (int j = 0; j < M.dim; ++j)
            if (M.degree[j] == w) wcoords.push_back(j);
        echelon bspan(unknowns);
        for (int m : wcoords) {
            std::vector<rat> row(unknowns, rat(0));
            for (int i = 0; i < k; ++i) {
                const auto& column = M.act[i][m];
                for (size_t c = 0; c < slot[i].size(); ++c) row[base[i] + int(c)] = column[slot[i][c]];
            }
            // a coboundary is always a cocycle
            std::vector<rat> img = A.apply(row);
            for (const rat& x : img) SPH_CHECK(is_zero(x), "B1 must be contained in Z1");
            bspan.add(std::move(row));
        }
        int z = int(zbasis.size()), b = bspan.rank();
        if (z == 0 && b == 0) continue;
        h1_component comp;
        comp.degree = w;
        comp.z = z;
        comp.b = b;
        comp.h = z - b;
        // representatives reduced against the coboundaries, re-embedded in
        // global cochain coordinates (gv index i, module coordinate j)
        echelon hspan = bspan;
        for (const auto& zv : zbasis) {
            if (!hspan.add(zv)) continue;
            std::vector<rat> global(size_t(k) * M.dim, rat(0));
            for (int i = 0; i < k; ++i)
                for (size_t c = 0; c < slot[i].size(); ++c)
                    global[size_t(i) * M.dim + slot[i][c]] = zv[base[i] + int(c)];
            comp.reps.push_back(std::move(global));
        }
        res.z_dim += z;
        res.b_dim += b;
        res.h_dim += comp.h;
        if (comp.h > 0 && in_monoid_lattice(od.g, w)) res.h_dim_lattice += comp.h;
        if (comp.h > 0) res.comps.push_back(std::move(comp));
    }
    return res;
}

h1_dims h1_ungraded(const std::vector<mat>& action,
                    const std::vector<std::vector<std::vector<rat>>>& brackets)
{
    const int k = int(action.size());
    SPH_CHECK(k > 0, "h1_ungraded needs a basis");
    const int m = action[0].rows;
    const int unknowns = k * m;
    std::vector<std::vector<rat>> rows;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            for (int t = 0; t < m; ++t) {
                std::vector<rat> row(unknowns, rat(0));
                for (int l = 0; l < k; ++l)
                    if (!is_zero(brackets[i][j][l])) row[l * m + t] += brackets[i][j][l];
                for (int s = 0; s < m; ++s) {
                    if (!is_zero(action[i](t, s))) row[j * m + s] -= action[i](t, s);
                    if (!is_zero(action[j](t, s))) row[i * m + s] += action[j](t, s);
                }
                rows.push_back(std::move(row));
            }
        }
    mat A(int(rows.size()), unknowns);
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) A(r, c) = rows[r][c];
    h1_dims out;
    out.z = unknowns - rank_of(A);
    echelon b(unknowns);
    for (int s = 0; s < m; ++s) {
        std::vector<rat> row(unknowns, rat(0));
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < m; ++t) row[i * m + t] = action[i](t, s);
        b.add(std::move(row));
    }
    out.b = b.rank();
    out.h = out.z - out.b;
    return out;
}

// ---------------------------------------------------------------------------
// obstruction space

namespace {

struct pair_block {
    int i, j;  // generator indices, i <= j
    product_space space;
    echelon cartan;                  // span of the Cartan component
    std::vector<int> free_coords;    // quotient coordinates (product coords)
    std::vector<ivec> free_degree;
    int qoffset = 0;                 // offset in the assembled gmodule
};

}  // namespace

obstruction_report obstruction(const orbit_data& od, long long dim_cap)
{
    const lie_algebra& L = od.L;
    const int s = int(od.mods.size());
    obstruction_report rep;

    // quotient of V by g.v and its cohomology
    quotient_module q = make_quotient(od);
    h1_result h1v = h1_graded(od, q.mod);
    rep.h1_dim = h1v.h_dim;
    rep.h1_dim_lattice = h1v.h_dim_lattice;
    for (const auto& comp : h1v.comps) {
        std::string desc = "degree(";
        for (size_t i = 0; i < comp.degree.size(); ++i) {
            if (i) desc += ",";
            desc += std::to_string(comp.degree[i]);
        }
        desc += ") dim " + std::to_string(comp.h);
        rep.cocycle_basis.push_back(desc);
    }

    // pair products modulo their Cartan components
    std::vector<pair_block> blocks;
    int qdim = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            pair_block blk;
            blk.i = i;
            blk.j = j;
            auto ck = cartan_kernel(od.mods[i], od.mods[j], i == j, dim_cap);
            blk.space = std::move(ck.space);
            blk.cartan = echelon(blk.space.dim);
            for (const auto& v : ck.cartan_basis) blk.cartan.add(v);
            std::set<int> pivots(blk.cartan.pivots.begin(), blk.cartan.pivots.end());
            for (int c = 0; c < blk.space.dim; ++c) {
                if (pivots.count(c)) continue;
                blk.free_coords.push_back(c);
                blk.free_degree.push_back(
                    td_degree(od.g.d, ivec_add(od.g.gens[i], od.g.gens[j]), blk.space.weight(c)));
            }
            blk.qoffset = qdim;
            qdim += int(blk.free_coords.size());
            blocks.push_back(std::move(blk));
        }

    gmodule M2;
    M2.dim = qdim;
    for (const auto& blk : blocks)
        for (const auto& deg : blk.free_degree) M2.degree.push_back(deg);
    M2.act.assign(od.gv_dim(), std::vector<std::vector<rat>>(qdim));
    for (int gvi = 0; gvi < od.gv_dim(); ++gvi) {
        for (const auto& blk : blocks) {
            for (size_t c = 0; c < blk.free_coords.size(); ++c) {
                std::vector<rat> unit(blk.space.dim, rat(0));
                unit[blk.free_coords[c]] = 1;
                std::vector<rat> img;
                if (gvi < int(od.gv_roots.size()))
                    img = blk.space.act(od.gv_roots[gvi], unit);
                else {
                    const auto& combo = od.gv_torals[gvi - od.gv_roots.size()];
                    img.assign(blk.space.dim, rat(0));
                    for (int a = 0; a < L.d.rank; ++a) {
                        if (is_zero(combo[a])) continue;
                        auto part = blk.space.act(L.h_index(a), unit);
                        for (int t = 0; t < blk.space.dim; ++t) img[t] += combo[a] * part[t];
                    }
                }
                std::vector<rat> red = blk.cartan.reduce(img);
                std::vector<rat> col(qdim, rat(0));
                for (size_t t = 0; t < blk.free_coords.size(); ++t)
                    col[blk.qoffset + int(t)] = red[blk.free_coords[t]];
                M2.act[gvi][blk.qoffset + int(c)] = std::move(col);
            }
        }
    }
    h1_result h1k = h1_graded(od, M2);
    rep.k_h1_dim = h1k.h_dim;

    // the multiplication map w -> sum_i w . v_{lambda_i}, reduced mod Cartans
    auto mmap = [&](const std::vector<rat>& w) {
        std::vector<rat> out(qdim, rat(0));
        for (int k = 0; k < s; ++k) {
            std::vector<rat> part(w.begin() + od.offset[k],
                                  w.begin() + od.offset[k] + od.mods[k].dim());
            bool zero = true;
            for (const rat& x : part)
                if (!is_zero(x)) zero = false;
            if (zero) continue;
            for (int i = 0; i < s; ++i) {
                const pair_block* blk = nullptr;
                for (const auto& b : blocks)
                    if (b.i == std::min(i, k) && b.j == std::max(i, k)) blk = &b;
                std::vector<rat> hw(od.mods[i].dim(), rat(0));
                hw[0] = 1;
                // block (min(i,k), max(i,k)): slot the factors accordingly
                std::vector<rat> prod =
                    (k <= i) ? blk->space.mul(part, hw) : blk->space.mul(hw, part);
                std::vector<rat> red = blk->cartan.reduce(prod);
                for (size_t t = 0; t < blk->free_coords.size(); ++t)
                    out[blk->qoffset + int(t)] += red[blk->free_coords[t]];
            }
        }
        return out;
    };
    // well-definedness on V/g.v: the span g.v maps into the Cartan components
    for (const auto& [deg, span] : od.orbit_span)
        for (const auto& row : span.rows) {
            std::vector<rat> img = mmap(row);
            for (const rat& x : img) SPH_CHECK(is_zero(x), "g.v must map into the Cartan parts");
        }
    // induced map on quotient coordinates
    std::vector<std::vector<rat>> mcols(q.mod.dim);
    for (int c = 0; c < q.mod.dim; ++c) {
        std::vector<rat> unit(od.vdim, rat(0));
        unit[q.coords[c].second] = 1;
        mcols[c] = mmap(unit);
    }

    // kernel of the induced map on H1, degree by degree
    const int k = od.gv_dim();
    for (const auto& comp : h1v.comps) {
        const ivec& w = comp.degree;
        // basis of Z1_w from comp.reps plus the coboundaries at w
        // unknowns: coefficients over comp.reps (h of them) + M2_w (for the
        // coboundary matching) ... solve {phi : m(phi) in B1_w(M2)}
        std::vector<int> m2w;
        for (int j = 0; j < qdim; ++j)
            if (M2.degree[j] == w) m2w.push_back(j);
        // cochain coordinates of m(phi) for phi = rep: apply mcols per gv slot
        auto push_cochain = [&](const std::vector<rat>& phi_global) {
            std::vector<rat> out(size_t(k) * qdim, rat(0));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < q.mod.dim; ++j) {
                    const rat& c = phi_global[size_t(i) * q.mod.dim + j];
                    if (is_zero(c)) continue;
                    for (int t = 0; t < qdim; ++t) out[size_t(i) * qdim + t] += c * mcols[j][t];
                }
            return out;
        };
        std::vector<std::vector<rat>> fimages;
        for (const auto& rep_phi : comp.reps) fimages.push_back(push_cochain(rep_phi));
        // B1_w(M2) span in the same cochain coordinates
        echelon b2(int(size_t(k) * qdim));
        for (int m : m2w) {
            std::vector<rat> row(size_t(k) * qdim, rat(0));
            for (int i = 0; i < k; ++i)
                for (int t = 0; t < qdim; ++t) row[size_t(i) * qdim + t] = M2.act[i][m][t];
            b2.add(std::move(row));
        }
        // combinations of fimages lying in B1(M2): reduce against its span,
        // the nullity of what is left is the kernel dimension at this degree
        std::vector<std::vector<rat>> reduced;
        for (const auto& fi : fimages) reduced.push_back(b2.reduce(fi));
        mat R(int(size_t(k) * qdim), int(fimages.size()));
        for (size_t c = 0; c < reduced.size(); ++c)
            for (size_t r = 0; r < reduced[c].size(); ++r) R(int(r), int(c)) = reduced[c][r];
        int ker = int(fimages.size()) - rank_of(R);
        rep.kernel_dim += ker;
        if (in_monoid_lattice(od.g, w)) rep.kernel_dim_lattice += ker;
    }
    rep.smooth = rep.kernel_dim_lattice == 0;
    return rep;
}

// ---------------------------------------------------------------------------
// cocycle basis verification

cocycle_report verify_cocycle_basis(const orbit_data& od, const tangent_report& tr)
{
    const lie_algebra& L = od.L;
    const dynkin& d = od.g.d;
    cocycle_report rep;
    quotient_module q = make_quotient(od);
    h1_result h1v = h1_graded(od, q.mod);
    rep.h_dim = h1v.h_dim;
    rep.h_dim_lattice = h1v.h_dim_lattice;

    auto project = [&](const std::vector<rat>& full) { return q.project(od, full); };

    std::vector<int> sp = sp_of_monoid(od.g);
    auto pos = positive_roots(d);
    std::set<ivec> rootset(pos.begin(), pos.end());

    struct source {
        ivec gamma;
        bool is_gen;
        int module;            // -1 for a mixed representative
        std::vector<rat> vec;  // representative in V
    };
    std::vector<source> sources;
    for (const auto& e : tr.entries) {
        if (!e.in_lattice) continue;
        const std::vector<rat>& rep = e.reps[0];
        // per-module representatives v_gamma in V(lambda_j)_{lambda_j - gamma}
        // of the same class, when they exist
        bool found_any = false;
        for (size_t j = 0; j < od.g.gens.size(); ++j) {
            ivec target_wt = ivec_sub(od.g.gens[j], root_to_weight(d, e.gamma));
            std::vector<int> wcoords;
            for (int c = 0; c < od.mods[j].dim(); ++c)
                if (od.mods[j].weight(c) == target_wt) wcoords.push_back(od.offset[j] + c);
            if (wcoords.empty()) continue;
            // solve u in span(wcoords) with u - rep in g.v
            auto it = od.orbit_span.find(e.gamma);
            std::vector<std::vector<rat>> span_rows;
            if (it != od.orbit_span.end()) span_rows = it->second.rows;
            mat A(od.vdim, int(wcoords.size() + span_rows.size()));
            for (size_t c = 0; c < wcoords.size(); ++c) A(wcoords[c], int(c)) = 1;
            for (size_t r = 0; r < span_rows.size(); ++r)
                for (int row = 0; row < od.vdim; ++row)
                    A(row, int(wcoords.size() + r)) = span_rows[r][row];
            std::vector<rat> x;
            if (!solve_linear(A, rep, x)) continue;
            std::vector<rat> u(od.vdim, rat(0));
            for (size_t c = 0; c < wcoords.size(); ++c) u[wcoords[c]] = x[c];
            bool zero = true;
            for (const rat& t : u)
                if (!is_zero(t)) zero = false;
            if (zero) continue;
            sources.push_back({e.gamma, false, int(j), std::move(u)});
            found_any = true;
        }
        if (!found_any) sources.push_back({e.gamma, false, -1, rep});
    }
    for (size_t i = 0; i < od.g.gens.size(); ++i) {
        std::vector<rat> v(od.vdim, rat(0));
        v[od.offset[i]] = 1;
        sources.push_back({od.g.gens[i], true, int(i), v});
    }

    const int k = od.gv_dim();
    echelon span(int(size_t(k) * q.mod.dim));
    // start with the coboundaries so span measures classes
    for (int m = 0; m < q.mod.dim; ++m) {
        std::vector<rat> row(size_t(k) * q.mod.dim, rat(0));
        for (int i = 0; i < k; ++i)
            for (int t = 0; t < q.mod.dim; ++t) row[size_t(i) * q.mod.dim + t] = q.mod.act[i][m][t];
        span.add(std::move(row));
    }
    const int bdim = span.rank();

    for (int alpha = 0; alpha < d.rank; ++alpha) {
        if (std::find(sp.begin(), sp.end(), alpha) != sp.end()) continue;
        int fa = L.f_index(simple_root_index(L, alpha));
        int gv_alpha = -1;
        int ea = L.e_index(simple_root_index(L, alpha));
        for (int i = 0; i < int(od.gv_roots.size()); ++i)
            if (od.gv_roots[i] == ea) gv_alpha = i;
        SPH_CHECK(gv_alpha >= 0, "X_alpha lies in g_v");
        for (const auto& src : sources) {
            cocycle_check chk;
            chk.alpha = alpha;
            chk.gamma = src.gamma;
            chk.gamma_is_generator = src.is_gen;
            chk.module = src.module;
            // r = max { i : X_{-alpha}^i v_gamma != 0 }
            std::vector<rat> cur = src.vec;
            long long r = 0;
            for (;;) {
                std::vector<rat> next = od.apply_algebra(fa, cur);
                bool zero = true;
                for (const rat& x : next)
                    if (!is_zero(x)) zero = false;
                if (zero) break;
                cur = std::move(next);
                ++r;
                SPH_CHECK(r <= od.vdim, "lowering power bounded by the module");
            }
            chk.r_max = r;
            if (src.is_gen) {
                chk.r_rule = pairing_weight(alpha, src.gamma);
            } else {
                bool in_supp = src.gamma[alpha] != 0;
                chk.r_rule = in_supp ? 0 : -pairing_root(d, alpha, src.gamma);
            }
            chk.rules_agree = chk.r_max == chk.r_rule;
            {
                ivec chi = src.is_gen ? src.gamma : root_to_weight(d, src.gamma);
                for (int b = 0; b < d.rank; ++b) chi[b] += (r + 1) * d.cartan[b][alpha];
                chk.character_in_lattice = weight_in_monoid_lattice(od.g, chi);
            }
            // phi(X_alpha) = class of X_{-alpha}^r v_gamma, zero elsewhere
            std::vector<rat> value = project(cur);
            std::vector<rat> phi(size_t(k) * q.mod.dim, rat(0));
            for (int t = 0; t < q.mod.dim; ++t) phi[size_t(gv_alpha) * q.mod.dim + t] = value[t];
            // cocycle identity
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j) {
                    std::vector<rat> br = od.gv_bracket(i, j);
                    std::vector<rat> lhs(q.mod.dim, rat(0));
                    if (!is_zero(br[gv_alpha]))
                        for (int t = 0; t < q.mod.dim; ++t) lhs[t] = br[gv_alpha] * value[t];
                    std::vector<rat> rhs(q.mod.dim, rat(0));
                    if (j == gv_alpha)
                        for (int t = 0; t < q.mod.dim; ++t) {
                            const auto& col = q.mod.act[i];
                            rat acc = 0;
                            for (int s2 = 0; s2 < q.mod.dim; ++s2) acc += col[s2][t] * value[s2];
                            rhs[t] += acc;
                        }
                    if (i == gv_alpha)
                        for (int t = 0; t < q.mod.dim; ++t) {
                            const auto& col = q.mod.act[j];
                            rat acc = 0;
                            for (int s2 = 0; s2 < q.mod.dim; ++s2) acc += col[s2][t] * value[s2];
                            rhs[t] -= acc;
                        }
                    for (int t = 0; t < q.mod.dim; ++t)
                        if (lhs[t] != rhs[t]) ok = false;
                }
            chk.is_cocycle = ok;
            if (ok) span.add(phi);
            rep.checks.push_back(std::move(chk));
        }
    }
    rep.span_dim = span.rank() - bdim;
    // do the candidate classes cover H1 (and its lattice-graded part)?
    rep.spans_all = true;
    rep.spans_lattice_part = true;
    for (const auto& comp : h1v.comps)
        for (const auto& z : comp.reps)
            if (!span.contains(z)) {
                rep.spans_all = false;
                if (in_monoid_lattice(od.g, comp.degree)) rep.spans_lattice_part = false;
            }
    return rep;
}

}  // namespace sph
