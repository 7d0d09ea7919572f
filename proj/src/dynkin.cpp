#include "sph/dynkin.hpp"

#include <algorithm>
#include <map>

namespace sph {

namespace {

void place_edge(std::vector<std::vector<long long>>& a, int i, int j, long long aij, long long aji)
{
    a[i][j] = aij;
    a[j][i] = aji;
}

// Fill the Cartan block of one irreducible component on nodes[0..rank-1].
void fill_component(std::vector<std::vector<long long>>& a, char letter, int rank,
                    const std::vector<int>& n)
{
    auto chain = [&](int from, int to) {
        for (int k = from; k < to; ++k) place_edge(a, n[k], n[k + 1], -1, -1);
    };
    switch (letter) {
        case 'A':
            chain(0, rank - 1);
            break;
        case 'B':  // alpha_rank short
            chain(0, rank - 2);
            place_edge(a, n[rank - 2], n[rank - 1], -1, -2);
            break;
        case 'C':  // alpha_rank long
            chain(0, rank - 2);
            place_edge(a, n[rank - 2], n[rank - 1], -2, -1);
            break;
        case 'D':
            chain(0, rank - 2);
            place_edge(a, n[rank - 3], n[rank - 1], -1, -1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-..., node 2 attached to 4
            place_edge(a, n[0], n[2], -1, -1);
            place_edge(a, n[1], n[3], -1, -1);
            for (int k = 2; k < rank - 1; ++k) place_edge(a, n[k], n[k + 1], -1, -1);
            break;
        case 'F':  // alpha_3, alpha_4 short
            place_edge(a, n[0], n[1], -1, -1);
            place_edge(a, n[1], n[2], -1, -2);
            place_edge(a, n[2], n[3], -1, -1);
            break;
        case 'G':  // alpha_1 short
            place_edge(a, n[0], n[1], -3, -1);
            break;
        default:
            throw input_error("unknown component type");
    }
}

void check_rank(char letter, int rank)
{
    bool ok = false;
    switch (letter) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 3; break;
        case 'D': ok = rank >= 4; break;
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: break;
    }
    if (!ok)
        throw input_error(std::string("rank out of range for type ") + letter +
                          std::to_string(rank));
    if (rank > 20) throw input_error("component rank too large");
}

}  // namespace

int dynkin::node_index(const std::string& name) const
{
    if (name.size() < 2 || name[0] != 'a') throw input_error("bad node name: " + name);
    int k = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') throw input_error("bad node name: " + name);
        k = 10 * k + (name[i] - '0');
    }
    if (k < 1 || k > rank) throw input_error("node out of range: " + name);
    return k - 1;
}

dynkin build_diagram(const std::string& spec)
{
    dynkin d;
    d.spec = spec;
    std::vector<std::string> tokens;
    size_t pos = 0;
    for (;;) {
        size_t x = spec.find('x', pos);
        tokens.push_back(spec.substr(pos, x == std::string::npos ? x : x - pos));
        if (x == std::string::npos) break;
        pos = x + 1;
    }
    for (const std::string& tok : tokens) {
        if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'G')
            throw input_error("malformed diagram spec: " + spec);
        int r = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9') throw input_error("malformed diagram spec: " + spec);
            r = 10 * r + (tok[i] - '0');
        }
        check_rank(tok[0], r);
        diagram_component c;
        c.letter = tok[0];
        c.rank = r;
        for (int i = 0; i < r; ++i) c.nodes.push_back(d.rank + i);
        d.rank += r;
        d.comps.push_back(std::move(c));
    }
    if (d.comps.empty()) throw input_error("empty diagram spec");
    if (d.rank > 24) throw input_error("total rank too large");
    d.cartan.assign(d.rank, std::vector<long long>(d.rank, 0));
    for (int i = 0; i < d.rank; ++i) d.cartan[i][i] = 2;
    for (const auto& c : d.comps) fill_component(d.cartan, c.letter, c.rank, c.nodes);
    // symmetrizer: propagate along edges, then normalize min = 1 per component
    d.dsym.assign(d.rank, 0);
    for (const auto& c : d.comps) {
        std::map<int, rat> val;
        val[c.nodes[0]] = 1;
        std::vector<int> todo{c.nodes[0]};
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j : c.nodes) {
                if (j == i || !d.adjacent(i, j) || val.count(j)) continue;
                val[j] = val[i] * to_rat(d.cartan[i][j]) / to_rat(d.cartan[j][i]);
                todo.push_back(j);
            }
        }
        rat mn = val[c.nodes[0]];
        for (int i : c.nodes) mn = std::min(mn, val[i]);
        for (int i : c.nodes) {
            rat v = val[i] / mn;
            SPH_CHECK(is_integer(v), "symmetrizer must be integral");
            d.dsym[i] = to_ll(v);
        }
    }
    return d;
}

std::string component_type_string(const diagram_component& c)
{
    return std::string(1, c.letter) + std::to_string(c.rank);
}

namespace {

// classify one connected induced component; nodes arrive sorted by ambient id
diagram_component classify_component(const dynkin& d, std::vector<int> nodes)
{
    const int n = int(nodes.size());
    diagram_component out;
    out.rank = n;
    auto deg = [&](int i) {
        int k = 0;
        for (int j : nodes)
            if (d.adjacent(i, j)) ++k;
        return k;
    };
    auto bond = [&](int i, int j) { return d.cartan[i][j] * d.cartan[j][i]; };
    if (n == 1) {
        out.letter = 'A';
        out.nodes = nodes;
        return out;
    }
    std::vector<int> forks;
    int max_bond = 1;
    for (int i : nodes) {
        if (deg(i) >= 3) forks.push_back(i);
        for (int j : nodes)
            if (i < j && d.adjacent(i, j)) max_bond = std::max<long long>(max_bond, bond(i, j));
    }
    if (!forks.empty()) {
        SPH_CHECK(forks.size() == 1 && max_bond == 1, "induced diagram must be of finite type");
        int f = forks[0];
        // walk the three branches away from the fork
        std::vector<std::vector<int>> branches;
        for (int j : nodes) {
            if (!d.adjacent(f, j)) continue;
            std::vector<int> br{j};
            int prev = f, cur = j;
            for (;;) {
                int next = -1;
                for (int k : nodes)
                    if (k != prev && d.adjacent(cur, k)) { next = k; break; }
                if (next < 0) break;
                br.push_back(next);
                prev = cur;
                cur = next;
            }
            branches.push_back(std::move(br));
        }
        SPH_CHECK(branches.size() == 3, "fork must have three branches");
        std::stable_sort(branches.begin(), branches.end(),
                         [](const auto& a, const auto& b) {
                             if (a.size() != b.size()) return a.size() < b.size();
                             return a[0] < b[0];
                         });
        size_t l0 = branches[0].size(), l1 = branches[1].size(), l2 = branches[2].size();
        if (l0 == 1 && l1 == 1 && l2 == 1) {
            out.letter = 'D';  // D4: leaves ascending, smallest becomes alpha_1
            out.nodes = {branches[0][0], f, branches[1][0], branches[2][0]};
        } else if (l0 == 1 && l1 == 1) {
            out.letter = 'D';
            // long branch reversed, then fork, then the two short leaves
            out.nodes.assign(branches[2].rbegin(), branches[2].rend());
            out.nodes.push_back(f);
            out.nodes.push_back(branches[0][0]);
            out.nodes.push_back(branches[1][0]);
        } else {
            SPH_CHECK(l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4, "E-type branch shape");
            out.letter = 'E';
            // Bourbaki: 1-3-4-5-..., 2 hangs off 4
            out.nodes.push_back(branches[1][1]);
            out.nodes.push_back(branches[0][0]);
            out.nodes.push_back(branches[1][0]);
            out.nodes.push_back(f);
            for (int x : branches[2]) out.nodes.push_back(x);
        }
        return out;
    }
    // path; find endpoints
    std::vector<int> ends;
    for (int i : nodes)
        if (deg(i) == 1) ends.push_back(i);
    SPH_CHECK(ends.size() == 2, "path must have two endpoints");
    auto path_from = [&](int start) {
        std::vector<int> p{start};
        int prev = -1, cur = start;
        while (int(p.size()) < n) {
            for (int k : nodes)
                if (k != prev && d.adjacent(cur, k)) {
                    p.push_back(k);
                    prev = cur;
                    cur = k;
                    break;
                }
        }
        return p;
    };
    if (max_bond == 1) {
        out.letter = 'A';
        out.nodes = path_from(std::min(ends[0], ends[1]));
        return out;
    }
    if (max_bond == 3) {
        SPH_CHECK(n == 2, "triple bond only in G2");
        out.letter = 'G';
        // alpha_1 short: a[short][long] = -3
        if (d.cartan[nodes[0]][nodes[1]] == -3)
            out.nodes = {nodes[0], nodes[1]};
        else
            out.nodes = {nodes[1], nodes[0]};
        return out;
    }
    // one double bond
    std::vector<int> p = path_from(std::min(ends[0], ends[1]));
    int db = -1;
    for (int k = 0; k + 1 < n; ++k)
        if (bond(p[k], p[k + 1]) == 2) {
            SPH_CHECK(db < 0, "at most one double bond");
            db = k;
        }
    SPH_CHECK(db >= 0, "double bond expected");
    if (db != 0 && db != n - 2) {
        SPH_CHECK(n == 4 && db == 1, "interior double bond means F4");
        out.letter = 'F';
        // orient: alpha_2 long, i.e. a[2][3] = -1 across the double bond
        if (d.cartan[p[1]][p[2]] == -1)
            out.nodes = p;
        else
            out.nodes = {p[3], p[2], p[1], p[0]};
        return out;
    }
    // double bond at an end; normalize path so the double bond is at the tail
    if (db == 0) { std::reverse(p.begin(), p.end()); db = n - 2; }
    int a = p[n - 2], b = p[n - 1];
    bool tail_short = d.cartan[b][a] == -2;  // short coroot pairs to -2 against long
    if (n == 2) {
        // B2 preferred over C2; Bourbaki B2 = (long, short)
        out.letter = 'B';
        out.nodes = tail_short ? std::vector<int>{a, b} : std::vector<int>{b, a};
        return out;
    }
    out.letter = tail_short ? 'B' : 'C';
    out.nodes = p;
    return out;
}

}  // namespace

std::vector<diagram_component> sub_diagram_type(const dynkin& d, const std::vector<int>& subset)
{
    std::vector<int> nodes = subset;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int i : nodes)
        if (i < 0 || i >= d.rank) throw input_error("node out of range in subset");
    std::vector<bool> seen(d.rank, false);
    std::vector<diagram_component> comps;
    for (int start : nodes) {
        if (seen[start]) continue;
        std::vector<int> comp{start};
        seen[start] = true;
        for (size_t q = 0; q < comp.size(); ++q)
            for (int j : nodes)
                if (!seen[j] && d.adjacent(comp[q], j)) {
                    seen[j] = true;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(classify_component(d, comp));
    }
    std::sort(comps.begin(), comps.end(), [](const diagram_component& a, const diagram_component& b) {
        return *std::min_element(a.nodes.begin(), a.nodes.end()) <
               *std::min_element(b.nodes.begin(), b.nodes.end());
    });
    return comps;
}

namespace {

void autos_rec(const dynkin& d, std::vector<int>& perm, std::vector<bool>& used, int i,
               std::vector<std::vector<int>>& out)
{
    if (i == d.rank) {
        out.push_back(perm);
        return;
    }
    for (int j = 0; j < d.rank; ++j) {
        if (used[j] || d.cartan[j][j] != d.cartan[i][i]) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (d.cartan[i][k] != d.cartan[j][perm[k]] || d.cartan[k][i] != d.cartan[perm[k]][j])
                ok = false;
        if (!ok) continue;
        perm[i] = j;
        used[j] = true;
        autos_rec(d, perm, used, i + 1, out);
        used[j] = false;
    }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const dynkin& d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> perm(d.rank, -1);
    std::vector<bool> used(d.rank, false);
    autos_rec(d, perm, used, 0, out);
    return out;
}

}  // namespace sph
