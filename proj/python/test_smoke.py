import json

import cogrowth

seq = cogrowth.sequence(cogrowth.cyclic_spec(2, 2), 8)
assert seq == [1, 0, 2, 0, 6, 0, 20, 0, 70], seq

spec = cogrowth.z2zn_spec(3)
assert cogrowth.sequence(spec, 7) == [1, 0, 1, 1, 1, 5, 2, 14]

mp = cogrowth.minimal_polynomial(cogrowth.cyclic_spec(2, 3))
assert mp["found"] and mp["divides_annihilator"], mp
assert mp["deg_z"] == 2

ann = cogrowth.annihilator(spec)
assert ann["deg_z"] >= 1

r = cogrowth.radius(cogrowth.cyclic_spec(2, 2))
assert abs(r["rho"] - 0.5) < 1e-9, r

r = cogrowth.radius(cogrowth.z2_free_spec(1, 1))
assert abs(r["rho"] - 0.35355339059) < 1e-9, r

g = json.loads(cogrowth.grammar(spec, "json"))
assert g["unknowns"] and g["equations"]

rep = json.loads(cogrowth.verify("thm12"))
assert rep["pass"], rep

try:
    cogrowth.sequence("not json {", 5)
    raise AssertionError("expected SpecError")
except ValueError:
    pass

try:
    cogrowth.sequence(cogrowth.cyclic_spec(3, 3), 30, state_cap=10)
    raise AssertionError("expected CapacityError")
except RuntimeError:
    pass

print("python smoke ok")
