"""Certifying triads: the basic objects.

A triad (a, b, c) of positive integers is a solution when its sum, its
pairwise-product sum and its product are all perfect squares.  The
certificate is the triple of square roots (f, g, h), and conversely
(a, b, c) are exactly the roots of x^3 - f^2 x^2 + g^2 x - h^2.
"""

from fractions import Fraction

from squaretriads.triads import (
    CubicSpec,
    Triad,
    canonicalize,
    elementary_symmetric,
    rational_roots_cubic,
    rational_to_integer_triad,
    verify_triad,
)

triad = Triad(45, 64, 180)
e1, e2, e3 = elementary_symmetric(triad)
print("triad:", triad.members())
print("  a+b+c      =", e1)
print("  ab+bc+ca   =", e2)
print("  abc        =", e3)
cert = verify_triad(triad)
print("  certificate: f = %d, g = %d, h = %d" % (cert.f, cert.g, cert.h))
print("  check: %d^2 = %d, %d^2 = %d, %d^2 = %d" % (cert.f, cert.f**2, cert.g, cert.g**2, cert.h, cert.h**2))

print()
print("the same triad recovered as the cubic's roots:")
print("  x^3 - %d x^2 + %d x - %d = 0 has roots" % (cert.f**2, cert.g**2, cert.h**2),
      rational_roots_cubic(CubicSpec(cert.f, cert.g, cert.h)))

print()
print("scaling by any square preserves everything; canonicalization undoes it:")
scaled = Triad(45 * 9, 64 * 9, 180 * 9)
print("  ", scaled.members(), "->", canonicalize(scaled).members())

print()
print("rational solutions scale to integer ones by a square:")
rational = (Fraction(45, 4), Fraction(16), Fraction(45))
print("  ", tuple(map(str, rational)), "->", rational_to_integer_triad(*rational).members())

print()
print("Euler's own numbers still check out instantly:")
for members in [(81, 784, 186624), (252782198228, 1633780814400, 3474741058973)]:
    c = verify_triad(Triad(*members))
    print("  %s: f=%d g=%d h=%d" % (members, c.f, c.g, c.h))
