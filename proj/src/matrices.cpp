#include "arborflow/matrices.hpp"

namespace arborflow {

Matrix<BigInt> distance_matrix(const Tree& t) {
    const int n = t.vertex_count();
    Matrix<BigInt> m(n, n, BigInt(0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            BigInt d(t.distance(i, j));
            m(i - 1, j - 1) = d;
            m(j - 1, i - 1) = d;
        }
    return m;
}

Matrix<Poly> q_distance_matrix(const Tree& t, VarRegistry& reg) {
    reg.intern("q");
    const int n = t.vertex_count();
    Matrix<Poly> m(n, n, Poly::zero(reg));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly entry = q_integer(reg, t.distance(i, j));
            m(i - 1, j - 1) = entry;
            m(j - 1, i - 1) = entry;
        }
    return m;
}

Matrix<Fp> to_field(const Matrix<BigInt>& m) {
    Matrix<Fp> out(m.rows(), m.cols(), Fp(0ULL));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Fp(m(i, j));
    return out;
}

} // namespace arborflow
