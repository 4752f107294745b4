"""The registry of closed-form polynomial families.

Ten families, classified by how many of the three members are themselves
squares: exactly one (parmsol1-4), all three (allsq1-4 and Euler's 1779
family), or none (gensol1, whose members are sums of two nonzero squares).
"""

from squaretriads.families import (
    evaluate_family,
    family_to_json,
    get_family,
    pythagorean_substitute,
    registry,
    verify_family_symbolic,
)

print("registered families:")
for fam in registry():
    print("  %-10s params=(%s)  degree %-2d  %s" % (
        fam.name, ", ".join(fam.params), fam.a.total_degree(), fam.classification))

print()
fam = get_family("parmsol1")
print("parmsol1 members:")
print("  a =", fam.a)
print("  b =", fam.b)
print("  c =", fam.c)
f, g, h = fam.witnesses
print("its square witnesses are polynomials too:")
print("  f =", f)
print("  g =", g)
print("  h =", h)

print()
print("small evaluations (canonicalized):")
for name, params in [("parmsol1", (1, 2)), ("parmsol2", (1, 3)), ("gensol1", (1, 1)), ("euler1779", (2,))]:
    triad, cert = evaluate_family(name, params)
    print("  %-10s at %-7s -> %-22s f,g,h = %d, %d, %d" % (
        name, params, triad.members(), cert.f, cert.g, cert.h))

print()
print("symbolic verification (exact polynomial identities):")
for fam in registry():
    report = verify_family_symbolic(fam)
    print("  %-10s ok=%s square members=%d" % (fam.name, report.ok, report.square_members))

print()
print("specializing s = 2mn, t = m^2 - n^2 makes s^2 + t^2 = (m^2 + n^2)^2,")
print("turning each one-square family into its all-squares companion:")
out = pythagorean_substitute("parmsol2")
print("  parmsol2 ->", out.name)
print("  a =", out.a)
print("  b =", out.b)
print("  c =", out.c)

print()
print("JSON export of a family:")
import json

print(json.dumps(family_to_json(get_family("parmsol2")), indent=2))
