#include "sph/matrix.hpp"

namespace sph {

mat mat::identity(int n)
{
    mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

mat mat::operator*(const mat& o) const
{
    SPH_CHECK(cols == o.rows, "matrix product shape");
    mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const rat& x = (*this)(i, k);
            if (sph::is_zero(x)) continue;
            for (int j = 0; j < o.cols; ++j) {
                const rat& y = o(k, j);
                if (!sph::is_zero(y)) r(i, j) += x * y;
            }
        }
    return r;
}

mat mat::operator+(const mat& o) const
{
    SPH_CHECK(rows == o.rows && cols == o.cols, "matrix sum shape");
    mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

mat mat::operator-(const mat& o) const
{
    SPH_CHECK(rows == o.rows && cols == o.cols, "matrix diff shape");
    mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

mat mat::scaled(const rat& c) const
{
    mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
    return r;
}

bool mat::is_zero() const
{
    for (const rat& x : a)
        if (!sph::is_zero(x)) return false;
    return true;
}

std::vector<rat> mat::apply(const std::vector<rat>& v) const
{
    SPH_CHECK(int(v.size()) == cols, "matrix apply shape");
    std::vector<rat> r(rows);
    for (int i = 0; i < rows; ++i) {
        rat s = 0;
        for (int j = 0; j < cols; ++j) {
            const rat& x = (*this)(i, j);
            if (!sph::is_zero(x) && !sph::is_zero(v[j])) s += x * v[j];
        }
        r[i] = s;
    }
    return r;
}

std::vector<rat> mat::row(int i) const
{
    std::vector<rat> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<rat> echelon::reduce(std::vector<rat> v, std::vector<rat>* combo) const
{
    if (combo) combo->assign(inserted, rat(0));
    for (size_t r = 0; r < rows.size(); ++r) {
        const rat& c = v[pivots[r]];
        if (is_zero(c)) continue;
        rat f = c;
        for (int j = 0; j < cols; ++j)
            if (!is_zero(rows[r][j])) v[j] -= f * rows[r][j];
        if (combo)
            for (int k = 0; k < inserted; ++k)
                if (!is_zero(combos[r][k])) (*combo)[k] += f * combos[r][k];
    }
    return v;
}

bool echelon::add(std::vector<rat> v)
{
    SPH_CHECK(int(v.size()) == cols, "echelon width");
    std::vector<rat> combo;
    std::vector<rat>* cp = track ? &combo : nullptr;
    std::vector<rat> red = reduce(std::move(v), cp);
    int piv = -1;
    for (int j = 0; j < cols; ++j)
        if (!is_zero(red[j])) { piv = j; break; }
    if (track) {
        combo.resize(inserted + 1, rat(0));
        for (auto& c : combos) c.resize(inserted + 1, rat(0));
    }
    ++inserted;
    if (piv < 0) return false;
    rat lead = red[piv];
    for (auto& x : red) x /= lead;
    if (track) {
        // combo currently expresses the reducible part; the stored row is
        // (inserted - reduction) / lead.
        for (auto& c : combo) c = -c / lead;
        combo[inserted - 1] = rat(1) / lead;
    }
    // keep rows fully reduced against the new one
    for (size_t r = 0; r < rows.size(); ++r) {
        const rat c = rows[r][piv];
        if (is_zero(c)) continue;
        for (int j = 0; j < cols; ++j)
            if (!is_zero(red[j])) rows[r][j] -= c * red[j];
        if (track)
            for (int k = 0; k <= inserted - 1; ++k)
                if (!is_zero(combo[k])) combos[r][k] -= c * combo[k];
    }
    // insertion position: keep pivots sorted
    size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    rows.insert(rows.begin() + pos, std::move(red));
    pivots.insert(pivots.begin() + pos, piv);
    if (track) combos.insert(combos.begin() + pos, std::move(combo));
    return true;
}

bool echelon::contains(const std::vector<rat>& v) const
{
    std::vector<rat> red = reduce(v);
    for (const rat& x : red)
        if (!is_zero(x)) return false;
    return true;
}

bool echelon::express(const std::vector<rat>& v, std::vector<rat>& coeffs) const
{
    SPH_CHECK(track, "echelon::express needs combo tracking");
    std::vector<rat> combo;
    std::vector<rat> red = reduce(v, &combo);
    for (const rat& x : red)
        if (!is_zero(x)) return false;
    coeffs.assign(inserted, rat(0));
    for (int k = 0; k < int(combo.size()); ++k) coeffs[k] = combo[k];
    return true;
}

std::vector<int> echelon::free_columns() const
{
    std::vector<int> f;
    size_t r = 0;
    for (int j = 0; j < cols; ++j) {
        if (r < pivots.size() && pivots[r] == j)
            ++r;
        else
            f.push_back(j);
    }
    return f;
}

std::vector<std::vector<rat>> kernel_basis(const mat& A)
{
    // row reduce a copy, track pivot columns
    mat m = A;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m(i, c))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        rat lead = m(r, c);
        for (int j = 0; j < m.cols; ++j) m(r, j) /= lead;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            rat f = m(i, c);
            if (is_zero(f)) continue;
            for (int j = 0; j < m.cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<rat>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<rat> v(m.cols, rat(0));
        v[c] = 1;
        for (int i = 0; i < int(pivot_col.size()); ++i) v[pivot_col[i]] = -m(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of(mat A)
{
    echelon e(A.cols);
    for (int i = 0; i < A.rows; ++i) e.add(A.row(i));
    return e.rank();
}

bool solve_linear(const mat& A, const std::vector<rat>& b, std::vector<rat>& x)
{
    // solve via elimination on [A | b]
    mat m(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < A.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!is_zero(m(i, c))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j <= A.cols; ++j) std::swap(m(p, j), m(r, j));
        rat lead = m(r, c);
        for (int j = 0; j <= A.cols; ++j) m(r, j) /= lead;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            rat f = m(i, c);
            if (is_zero(f)) continue;
            for (int j = 0; j <= A.cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < m.rows; ++i)
        if (!is_zero(m(i, A.cols))) return false;
    x.assign(A.cols, rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = m(i, A.cols);
    return true;
}

}  // namespace sph
