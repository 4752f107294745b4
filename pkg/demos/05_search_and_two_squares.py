"""Exhaustive search and the two-squares structure of every solution.

The pruning: abc is a square iff c has the same squarefree kernel as ab,
so c only ranges over kernel(ab) * j^2.  Every member of every solution is
a sum of two rational squares, which the witnesses below exhibit.
"""

import time
from fractions import Fraction

from squaretriads.search import SearchConfig, naive_search, reproduce_table1, search_triads, verify_corpus
from squaretriads.triads import is_sum_two_rational_squares

t0 = time.perf_counter()
results = search_triads(SearchConfig(2000, primitive_only=True))
print("primitive triads up to 2000 (%.2f s):" % (time.perf_counter() - t0))
for triad, cert in results:
    print("  %-18s f,g,h = %d, %d, %d" % (triad.members(), cert.f, cert.g, cert.h))

print()
print("cross-check against the unpruned triple loop at bound 300:")
pruned = [t.members() for t, _ in search_triads(SearchConfig(300))]
naive = [t.members() for t in naive_search(300)]
print("  pruned:", pruned)
print("  naive: ", naive)
print("  equal: ", pruned == naive)

print()
report = reproduce_table1()
print("table regression: %d/%d rows matched in %.3f s" % (
    sum(r[-1] for r in report.rows), len(report.rows), report.elapsed))
corpus = verify_corpus()
print("corpus verification (incl. the 13-digit triad): ok =", corpus.ok)

print()
print("two-rational-squares witnesses for one solution's members:")
for x in (45, 64, 180):
    w = is_sum_two_rational_squares(Fraction(x))
    print("  %d = (%s)^2 + (%s)^2" % (x, w.p, w.q))
print("and a member that is not a sum of two squares cannot occur:")
print("  21 ->", is_sum_two_rational_squares(Fraction(21)))
