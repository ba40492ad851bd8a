#pragma once

// Scalar-generic symmetric eigenvalue kernels used by the high-precision path:
// Givens band-to-tridiagonal reduction, Sturm-count bisection, and cyclic
// Jacobi. Instantiated with double in tests (checked against LAPACK) and with
// hp::Real for avoided-crossing gap work.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "drabi/errors.hpp"

namespace drabi::hp {

using std::abs;    // enable ADL for multiprecision scalars
using std::sqrt;

/// Symmetric band matrix with lower storage and one spare diagonal for the
/// reduction bulge: offsets 0..kd+1, element (j+i, j) at ab[i + j*(kd+2)].
template <class T>
struct SymBandT {
    int n = 0;
    int kd = 0;
    std::vector<T> ab;

    SymBandT(int n_, int kd_)
        : n(n_), kd(kd_), ab(static_cast<size_t>(kd_ + 2) * n_, T(0)) {}

    T& at(int i, int j) { return ab[(i - j) + static_cast<size_t>(j) * (kd + 2)]; }
    const T& at(int i, int j) const {
        return ab[(i - j) + static_cast<size_t>(j) * (kd + 2)];
    }
    T get(int i, int j) const {
        if (i < j) std::swap(i, j);
        if (i - j > kd + 1) return T(0);
        return at(i, j);
    }
    void set(int i, int j, const T& v) {
        if (i < j) std::swap(i, j);
        if (i - j <= kd + 1) at(i, j) = v;
        // writes beyond the spare diagonal only ever carry rounding residue
    }
};

namespace detail {

// Symmetric two-sided Givens rotation on index pair (p, q) = (q-1, q).
template <class T>
void apply_sym_rot(SymBandT<T>& A, int p, int q, const T& c, const T& s) {
    const int lo = std::max(0, p - (A.kd + 1));
    const int hi = std::min(A.n - 1, q + (A.kd + 1));
    const T app = A.get(p, p), aqq = A.get(q, q), apq = A.get(q, p);
    for (int k = lo; k <= hi; ++k) {
        if (k == p || k == q) continue;
        const T akp = A.get(k, p), akq = A.get(k, q);
        A.set(k, p, c * akp - s * akq);
        A.set(k, q, s * akp + c * akq);
    }
    A.set(p, p, c * c * app - T(2) * c * s * apq + s * s * aqq);
    A.set(q, q, s * s * app + T(2) * c * s * apq + c * c * aqq);
    A.set(q, p, c * s * (app - aqq) + (c * c - s * s) * apq);
}

template <class T>
void givens(const T& f, const T& g, T& c, T& s) {
    if (g == T(0)) { c = T(1); s = T(0); return; }
    const T r = sqrt(f * f + g * g);
    c = f / r;
    s = -g / r;
}

}  // namespace detail

/// Reduce a symmetric band matrix to tridiagonal (d, e) by Givens rotations,
/// eliminating the outermost diagonal first and chasing each bulge off the
/// band. O(n^2 kd) scalar operations; the input storage is consumed.
template <class T>
void band_to_tridiag(SymBandT<T>& A, std::vector<T>& d, std::vector<T>& e) {
    const int n = A.n;
    for (int bw = A.kd; bw >= 2; --bw) {
        for (int j = 0; j + bw < n; ++j) {
            // zero A(j+bw, j) against pivot A(j+bw-1, j)
            int r = j + bw;
            int col = j;
            T c, s;
            detail::givens(A.get(r - 1, col), A.get(r, col), c, s);
            // rotation maps row r component onto r-1: s chosen so new A(r,col)=0
            detail::apply_sym_rot(A, r - 1, r, c, s);
            A.set(r, col, T(0));
            // chase the bulge created at (r+bw, r-1); pivot A(br-1, bc) sits
            // at offset bw, the bulge one slot beyond it
            while (r + bw < n) {
                const int br = r + bw;
                const int bc = r - 1;
                detail::givens(A.get(br - 1, bc), A.get(br, bc), c, s);
                detail::apply_sym_rot(A, br - 1, br, c, s);
                A.set(br, bc, T(0));
                r = br;
            }
        }
    }
    d.resize(n);
    e.resize(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) d[i] = A.get(i, i);
    for (int i = 0; i + 1 < n; ++i) e[i] = A.get(i + 1, i);
}

/// Number of eigenvalues of the tridiagonal (d, e) strictly below x
/// (Sturm sequence via the shifted LDL^T recurrence).
template <class T>
int sturm_count_below(const std::vector<T>& d, const std::vector<T>& e, const T& x,
                      const T& pivot_floor) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    T t = d[0] - x;
    if (t < T(0)) ++count;
    for (int i = 1; i < n; ++i) {
        if (abs(t) < pivot_floor) t = (t < T(0)) ? -pivot_floor : pivot_floor;
        t = d[i] - x - e[i - 1] * e[i - 1] / t;
        if (t < T(0)) ++count;
    }
    return count;
}

/// Gershgorin bounds of the tridiagonal.
template <class T>
std::pair<T, T> gershgorin(const std::vector<T>& d, const std::vector<T>& e) {
    const int n = static_cast<int>(d.size());
    T lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        T r = T(0);
        if (i > 0) r += abs(e[i - 1]);
        if (i + 1 < n) r += abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    return {lo, hi};
}

/// k-th eigenvalue (0-based, ascending) of the tridiagonal by bisection,
/// resolved to absolute tolerance `tol`.
template <class T>
T tridiag_eigenvalue(const std::vector<T>& d, const std::vector<T>& e, int k,
                     const T& tol) {
    auto [lo, hi] = gershgorin(d, e);
    const T scale = std::max(abs(lo), abs(hi));
    const T floor_ = scale * std::numeric_limits<T>::epsilon() *
                     std::numeric_limits<T>::epsilon();
    T a = lo - tol, b = hi + tol;
    while (b - a > tol) {
        const T m = a + (b - a) / T(2);
        if (m <= a || m >= b) break;  // precision exhausted
        if (sturm_count_below(d, e, m, floor_) > k) b = m; else a = m;
    }
    return a + (b - a) / T(2);
}

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
/// Quadratically convergent; carries cleanly at any scalar width.
/// Eigenvalues ascending; optional accumulated eigenvectors (columns).
template <class T>
struct JacobiResult {
    std::vector<T> values;
    std::vector<T> vectors;  // column-major n*n when requested
    int sweeps = 0;
};

template <class T>
JacobiResult<T> jacobi_eigen(std::vector<T> a, int n, bool want_vectors,
                             int max_sweeps = 60) {
    auto A = [&](int i, int j) -> T& { return a[i + static_cast<size_t>(j) * n]; };
    std::vector<T> v;
    if (want_vectors) {
        v.assign(static_cast<size_t>(n) * n, T(0));
        for (int i = 0; i < n; ++i) v[i + static_cast<size_t>(i) * n] = T(1);
    }
    const T eps = std::numeric_limits<T>::epsilon();

    T norm = T(0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) norm += A(i, j) * A(i, j) * (i == j ? T(1) : T(2));
    norm = sqrt(norm);
    const T stop = norm * eps;

    JacobiResult<T> res;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        T off = T(0);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) off += A(i, j) * A(i, j);
        off = sqrt(T(2) * off);
        res.sweeps = sweep;
        if (off <= stop || n == 1) {
            res.values.resize(n);
            std::vector<int> order(n);
            for (int i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](int x, int y) { return A(x, x) < A(y, y); });
            for (int i = 0; i < n; ++i) res.values[i] = A(order[i], order[i]);
            if (want_vectors) {
                res.vectors.resize(static_cast<size_t>(n) * n);
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i)
                        res.vectors[i + static_cast<size_t>(j) * n] =
                            v[i + static_cast<size_t>(order[j]) * n];
            }
            return res;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const T apq = A(p, q);
                if (abs(apq) <= stop / T(n)) continue;
                const T tau = (A(q, q) - A(p, p)) / (T(2) * apq);
                T t;
                if (tau >= T(0)) t = T(1) / (tau + sqrt(T(1) + tau * tau));
                else t = T(-1) / (-tau + sqrt(T(1) + tau * tau));
                const T c = T(1) / sqrt(T(1) + t * t);
                const T s = t * c;
                for (int k = 0; k < n; ++k) {
                    const T akp = (k <= p) ? A(k, p) : A(p, k);
                    const T akq = (k <= q) ? A(k, q) : A(q, k);
                    if (k != p && k != q) {
                        if (k <= p) A(k, p) = c * akp - s * akq; else A(p, k) = c * akp - s * akq;
                        if (k <= q) A(k, q) = s * akp + c * akq; else A(q, k) = s * akp + c * akq;
                    }
                }
                const T app = A(p, p), aqq = A(q, q);
                A(p, p) = c * c * app - T(2) * c * s * apq + s * s * aqq;
                A(q, q) = s * s * app + T(2) * c * s * apq + c * c * aqq;
                A(p, q) = T(0);
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const T vkp = v[k + static_cast<size_t>(p) * n];
                        const T vkq = v[k + static_cast<size_t>(q) * n];
                        v[k + static_cast<size_t>(p) * n] = c * vkp - s * vkq;
                        v[k + static_cast<size_t>(q) * n] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    throw NoConvergence("jacobi_eigen: no convergence after " +
                        std::to_string(max_sweeps) + " sweeps");
}

}  // namespace drabi::hp
