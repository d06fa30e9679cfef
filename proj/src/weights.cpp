#include "arborflow/weights.hpp"

namespace arborflow {

namespace {

std::string bracket(const char* base, int i, int j) {
    return std::string(base) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

} // namespace

WeightAssignment<Poly> symbolic_weights(const Tree& t, VarRegistry& reg, WeightMode mode) {
    WeightAssignment<Poly> w;
    w.mode = mode;
    w.n = t.vertex_count();
    const int m = t.edge_count();
    w.x.resize(2 * m);
    w.y.resize(2 * m);
    w.z.resize(2 * m);
    w.alpha.resize(m);
    w.beta.resize(2 * m);
    // Fixed interning order keeps variable ids deterministic per tree.
    for (const Edge& e : t.edges()) {
        reg.intern(bracket("x", e.lo, e.hi));
        reg.intern(bracket("alpha", e.lo, e.hi));
        for (Arc a : {e.plus(), e.minus()}) {
            reg.intern(bracket("y", a.tail, a.head));
            reg.intern(bracket("z", a.tail, a.head));
            reg.intern(bracket("beta", a.tail, a.head));
        }
    }
    int qid = reg.intern("q");
    w.q = Poly::variable(reg, qid);
    w.zero = Poly::zero(reg);
    w.one = Poly::constant(reg, 1);

    for (const Edge& e : t.edges()) {
        int ei = t.edge_index(e);
        int xid = reg.id(bracket("x", e.lo, e.hi));
        w.alpha[ei] = Poly::variable(reg, reg.id(bracket("alpha", e.lo, e.hi)));
        w.x[2 * ei] = mode == WeightMode::CK ? w.one : Poly::variable(reg, xid);
        w.x[2 * ei + 1] = mode == WeightMode::CK ? w.one : Poly::variable(reg, xid, -1);
        for (Arc a : {e.plus(), e.minus()}) {
            int ai = t.arc_index(a);
            w.z[ai] = Poly::variable(reg, reg.id(bracket("z", a.tail, a.head)));
            w.beta[ai] = Poly::variable(reg, reg.id(bracket("beta", a.tail, a.head)));
            w.y[ai] = mode == WeightMode::Free
                          ? Poly::variable(reg, reg.id(bracket("y", a.tail, a.head)))
                          : w.alpha[ei] * (w.z[ai] - w.x[ai]);
        }
    }
    return w;
}

WeightAssignment<Fp> random_weights(const Tree& t, std::mt19937_64& rng, WeightMode mode) {
    WeightAssignment<Fp> w;
    w.mode = mode;
    w.n = t.vertex_count();
    const int m = t.edge_count();
    w.x.resize(2 * m);
    w.y.resize(2 * m);
    w.z.resize(2 * m);
    w.alpha.resize(m);
    w.beta.resize(2 * m);
    w.q = Fp::random(rng);
    w.zero = Fp(0ULL);
    w.one = Fp(1ULL);
    for (int ei = 0; ei < m; ++ei) {
        Fp xv = mode == WeightMode::CK ? w.one : Fp::random_nonzero(rng);
        w.x[2 * ei] = xv;
        w.x[2 * ei + 1] = xv.inverse();
        w.alpha[ei] = Fp::random(rng);
        for (int side = 0; side < 2; ++side) {
            int ai = 2 * ei + side;
            w.z[ai] = Fp::random(rng);
            w.beta[ai] = Fp::random(rng);
            w.y[ai] = mode == WeightMode::Free ? Fp::random(rng)
                                               : w.alpha[ei] * (w.z[ai] - w.x[ai]);
        }
    }
    return w;
}

} // namespace arborflow
