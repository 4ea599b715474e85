#include "vekua/dirac_bridge.hpp"

#include "vekua/pseudoanalytic.hpp"

namespace vekua {

QuatField assemble_quaternion(const BicomplexField& W, const BicomplexField& w) {
    QuatField q;
    q.h = std::min(W.h, w.h);
    q.value = [W, w](const Vec3& x) {
        const Point z{x.x2, x.x1};
        return assemble(W.value(z), w.value(z));
    };
    // 2-D partials through the z-plane dictionary; exact when the fields
    // carry exact closures, otherwise their own central differences
    q.partial = [W, w](const Vec3& x, int axis) {
        if (axis == 3) return Biquaternion{};
        const Point z{x.x2, x.x1};
        if (axis == 2) return assemble(partial_x(W, z), partial_x(w, z));
        return assemble(partial_y(W, z), partial_y(w, z));
    };
    return q;
}

SpinorField spinor_field(const QuatField& q) {
    SpinorField phi;
    phi.h = q.h;
    phi.value = [q](const Vec3& x) { return transform_Ainv(q.value(x)); };
    if (q.partial) {
        const auto qp = q.partial;
        phi.partial = [qp](const Vec3& x, int axis) { return transform_Ainv(qp(x, axis)); };
    }
    return phi;
}

GeneratingPair generating_pair_for_w(const PotentialModel& model) {
    return model.pair_tau_k();
}

} // namespace vekua
