#include "arborflow/matrix.hpp"

#include <optional>
#include <utility>

namespace arborflow {

BigInt det_bareiss_int(Matrix<BigInt> m) {
    if (!m.square()) throw std::invalid_argument("det: matrix must be square");
    const int n = m.rows();
    int sign = 1;
    BigInt prev(1); // pivot of the previous step; Bareiss divisor
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n && swap_row < 0; ++i)
                if (m(i, k) != 0) swap_row = i;
            if (swap_row < 0) return BigInt(0); // zero column below the diagonal
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    BigInt det = n == 0 ? BigInt(1) : m(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

Fp det_gauss_field(Matrix<Fp> m) {
    if (!m.square()) throw std::invalid_argument("det: matrix must be square");
    const int n = m.rows();
    Fp det(1ULL);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n && pivot < 0; ++i)
            if (!m(i, k).is_zero()) pivot = i;
        if (pivot < 0) return Fp(0ULL);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        det *= m(k, k);
        Fp inv = m(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            Fp factor = m(i, k) * inv;
            if (factor.is_zero()) continue;
            for (int j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

namespace {

/// Minor over "rows r.., columns outside mask" with r = popcount(mask); the
/// sign bookkeeping of the Leibniz expansion is carried by the caller.
Poly det_minor(const Matrix<Poly>& m, unsigned mask, const VarRegistry& reg,
               std::vector<std::optional<Poly>>& memo) {
    if (memo[mask]) return *memo[mask];
    const int n = m.rows();
    const int row = __builtin_popcount(mask);
    Poly acc = Poly::zero(reg);
    if (row == n) {
        acc = Poly::constant(reg, 1);
    } else {
        int parity = 0; // position of column j among the free columns
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) continue;
            const Poly& entry = m(row, j);
            if (!entry.is_zero()) {
                Poly sub = det_minor(m, mask | (1u << j), reg, memo);
                Poly contrib = entry * sub;
                acc = (parity % 2 == 0) ? acc + contrib : acc - contrib;
            }
            ++parity;
        }
    }
    memo[mask] = acc;
    return acc;
}

} // namespace

Poly det_expansion_poly(const Matrix<Poly>& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix must be square");
    const int n = m.rows();
    if (n > 8) throw std::invalid_argument("det_expansion_poly: guarded to dimension <= 8");
    if (n == 0) throw std::invalid_argument("det_expansion_poly: empty matrix has no registry");
    const VarRegistry* reg = nullptr;
    for (int i = 0; i < n && !reg; ++i)
        for (int j = 0; j < n && !reg; ++j) reg = m(i, j).registry();
    if (!reg) throw std::invalid_argument("det_expansion_poly: all entries uninitialized");
    std::vector<std::optional<Poly>> memo(1u << n);
    return det_minor(m, 0, *reg, memo);
}

} // namespace arborflow
