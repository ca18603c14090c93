#include "slagforge/model.hpp"

#include <map>

namespace slagforge {

namespace {

const char* kIwasawa = R"(name iwasawa
kind complex
dim 6
f 3 1 2 = -1
f 3 4 5 = 1
f 6 2 4 = 1
f 6 1 5 = -1
J 1>4 2>5 3>6
omega t[1,4] + t[2,5] + t[3,6]
Omega p[1]*p[2]*p[3]
h10 p[1]
h10 p[2]
)";

const char* kNakamuraCS = R"(name nakamura_cs
kind complex
dim 6
params lambda tau
f 2 1 2 = -lambda
f 3 1 3 = lambda
f 5 1 5 = -lambda
f 6 1 6 = lambda
J 1>4 2>5 3>6
direction x 1
direction y 4
omega t[1,4] + t[2,5] + t[3,6]
Omega p[1]*p[2]*p[3]
weights e(lambda*x) e(i*lambda*y)
h10 p[1]
h10 e(-i*lambda*y)*p[2]
h10 e(i*lambda*y)*p[3]

# coordinates (x, x1, x2, y, y1, y2); a acts by e^{±λa}, offsets come from rows of P
lattice M 2 3 1 2
tau unit=lambda q_tau=1
shift x
period y
coord x shift a
coord x1 torus 1 1 a
coord x2 torus -1 2 a
coord y shift b
coord y1 torus 1 1 b
coord y2 torus -1 2 b

foliation L123 1 2 3 transverse y y1 y2
foliation L156 1 5 6 transverse x1 x2 y
foliation L246 2 4 6 transverse x x2 y1
foliation L345 3 4 5 transverse x x1 y2
foliation L456 4 5 6 transverse x x1 x2
foliation L234 2 3 4 transverse x y1 y2 section
foliation L135 1 3 5 transverse x1 y y2
foliation L126 1 2 6 transverse x2 y y1
polarization fiber 2 3 4

# torus bundle over the section, fiber generators dθ̌ 1..3, dθ 4..6, dr 7..9
fiber_volume 1
flat_omega t[1,7] + e(-2*lambda*r0)*t[2,8] + e(2*lambda*r0)*t[3,9]
flat_direction r0 x
flat_dict 4 -t[4]
flat_dict 5 -e(-lambda*x)*t[3]
flat_dict 6 e(lambda*x)*t[2]
flat_dict 7 t[1]
flat_dict 8 -e(lambda*x)*t[5]
flat_dict 9 e(-lambda*x)*t[6]
dual nakamura_cs_mirror via L234
)";

const char* kNakamuraCSMirror = R"(name nakamura_cs_mirror
kind symplectic
dim 6
params lambda tau
f 2 1 2 = -lambda
f 3 1 3 = lambda
f 5 1 5 = -lambda
f 6 1 6 = lambda
J 1>4 3>5 2>6
direction x 1
direction y 4
omega t[1,4] + t[3,5] + t[2,6]
Omega i*(t[1]+i*t[4])*(t[3]+i*t[5])*(t[2]+i*t[6])
weights e(lambda*x) e(i*lambda*y)
h10 t[1]+i*t[4]
h10 e(-i*lambda*y)*(t[2]+i*t[5])
h10 e(i*lambda*y)*(t[3]+i*t[6])

# y-period τ⁻¹ with τ⁻¹λ = λ²/2π, not a rational multiple of 2π
lattice M 2 3 1 2
tau unit=lambda q_tau=1 q_inv=generic inverted
shift x
period y
foliation L234 2 3 4 transverse x y1 y2 section
polarization fiber 2 3 4
dual nakamura_cs via L234
)";

const char* kNakamuraCP = R"(name nakamura_cp
kind complex
dim 6
params tau
f 2 1 2 = -1
f 2 4 5 = 1
f 3 1 3 = 1
f 3 4 6 = -1
f 5 1 5 = -1
f 5 2 4 = 1
f 6 1 6 = 1
f 6 3 4 = -1
J 1>4 2>5 3>6
direction x 1
direction y 4
omega t[1,4] + t[2,5] + t[3,6]
Omega p[1]*p[2]*p[3]
weights e(x+i*y) e(x-i*y)
h10 p[1]
h10 e(x+i*y)*p[2]
h10 e(-x-i*y)*p[3]

# z1 ↦ z1 + 1 and z1 ↦ z1 + iτ; e^{2iy} is trivial iff τ ∈ πZ
lattice M 2 3 1 2
tau unit=2 q_tau=1
shift x
period y
coord x shift a
coord x1 torus 1 1 a
coord x2 torus -1 2 a
coord y shift b
coord y1 torus 1 1 b
coord y2 torus -1 2 b
foliation L123 1 2 3 transverse y y1 y2 section
polarization fiber 4 5 6

fiber_volume 1
flat_omega t[1,7] + e(-2*r0)*t[2,8] + e(2*r0)*t[3,9]
flat_direction r0 x
flat_dict 4 -t[4]
flat_dict 5 im(e(-x-i*y)*(t[3]+i*t[6]))
flat_dict 6 -im(e(x+i*y)*(t[2]+i*t[5]))
flat_dict 7 t[1]
flat_dict 8 re(e(x+i*y)*(t[2]+i*t[5]))
flat_dict 9 re(e(-x-i*y)*(t[3]+i*t[6]))
dual nakamura_cp_mirror via L123
)";

const char* kNakamuraCPMirror = R"(name nakamura_cp_mirror
kind symplectic
dim 6
params tau
f 2 1 2 = -1
f 2 4 5 = 1
f 3 1 3 = 1
f 3 4 6 = -1
f 5 1 5 = -1
f 5 2 4 = 1
f 6 1 6 = 1
f 6 3 4 = -1
J 1>4 3>5 6>2
direction x 1
direction y 4
omega t[1,4] + t[3,5] - t[2,6]
Omega (t[1]+i*t[4]) * (im(e(-i*y)*(t[3]+i*t[6])) + i*re(e(i*y)*(t[2]+i*t[5]))) * (re(e(-i*y)*(t[3]+i*t[6])) + i*im(e(i*y)*(t[2]+i*t[5])))
weights e(x+i*y) e(x-i*y)
h10 t[1]+i*t[4]

# z1 ↦ z1 + λ and z1 ↦ z1 + iτ⁻¹
lattice M 2 3 1 2
tau unit=2 q_tau=1 q_inv=generic inverted
shift x
period y
foliation L456 4 5 6 transverse x x1 x2 section
polarization fiber 4 5 6
dual nakamura_cp via L456
)";

const std::map<std::string, std::string>& sources() {
  static const std::map<std::string, std::string> s = {
      {"iwasawa", kIwasawa},
      {"nakamura_cs", kNakamuraCS},
      {"nakamura_cs_mirror", kNakamuraCSMirror},
      {"nakamura_cp", kNakamuraCP},
      {"nakamura_cp_mirror", kNakamuraCPMirror},
  };
  return s;
}

}  // namespace

const std::string& builtin_source(const std::string& name) {
  auto it = sources().find(name);
  if (it == sources().end()) throw UnknownModel("unknown model '" + name + "'");
  return it->second;
}

ModelManifold builtin(const std::string& name) { return ModelManifold::from_text(builtin_source(name)); }

std::vector<std::string> builtin_names() {
  return {"iwasawa", "nakamura_cs", "nakamura_cp", "nakamura_cs_mirror", "nakamura_cp_mirror"};
}

}  // namespace slagforge
