"""Infinitely many families from one elliptic curve over Q(m).

Writing t = ms, u = sU, v = s^2 V turns the quartic model into a curve
over the rational function field Q(m); a birational change of variables
puts it in short Weierstrass form carrying a point P of infinite order.
Every multiple kP pulls back to a new polynomial solution family.
"""

from fractions import Fraction

from squaretriads import ecurve as ec
from squaretriads.families import verify_family_symbolic
from squaretriads.multipoly import RatFunc, var

E = ec.ecweier()
P = ec.point_P()
print("curve over Q(m):  Y^2 = X^3 + A X + B with")
print("  A =", E.A)
print("  B =", E.B)
print("base point P:")
print("  X =", P.x)
print("  Y =", P.y)
print("  on curve:", E.contains(P))

print()
print("at m = 4 the curve has integer coefficients and P lands on it")
E4 = ec.specialize_curve(E, Fraction(4))
P4 = ec.specialize_point(P, Fraction(4))
print("  A, B =", E4.A, E4.B)
print("  P4 =", (P4.x, P4.y))
print("  certified of infinite order:", ec.infinite_order_screen(E4, P4))

print()
m = RatFunc(var("m"))
U, V = ec.xy_to_quartic(P.x, P.y, m)
print("P maps back to the quartic model at U =", U)
print("(exactly the constant-side ascent value after dehomogenization)")

print()
print("families from multiples of P:")
for k in (1, 2, 3):
    fam = ec.generate_family(k)
    report = verify_family_symbolic(fam)
    print("  k = %d: degree %-3d %-11s verified: %s" % (
        k, fam.a.total_degree(), fam.classification, report.ok))

fam3 = ec.generate_family(3)
print()
print("the k = 3 family (degree 40):")
print("  a =", fam3.a)
