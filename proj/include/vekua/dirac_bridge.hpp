#pragma once

#include "vekua/dirac_operators.hpp"
#include "vekua/potential.hpp"

namespace vekua {

/// Biquaternion field q(x1,x2) = W(z) + w(z) e2 from a solution W of the
/// outer-conjugated Vekua equation and a solution w of the plain one, with
/// the z-plane dictionary z = x + y k, x = x2, y = x1; constant in x3.
QuatField assemble_quaternion(const BicomplexField& W, const BicomplexField& w);

/// Spinor field Phi = A^-1[q]; the x3-reflection inside the transform is the
/// identity for these x3-independent fields.
SpinorField spinor_field(const QuatField& q);

/// Generating pair (e^tau k, -e^-tau) of the w-equation dbar w = b conj(w).
GeneratingPair generating_pair_for_w(const PotentialModel& model);

} // namespace vekua
