"""Registry of closed-form parametric families and their construction pipelines.

The registry polynomials are transcribed displays, not re-derived; the
derivation pipelines elsewhere in the package are tested against them.
Each family carries polynomial square-witnesses (f, g, h) for its three
elementary symmetric functions, a classification by how many members are
themselves polynomial squares, and the parameter loci excluded from
evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ExcludedLocusError, NoAscentError, VerificationError
from .multipoly import (
    Poly,
    RatFunc,
    canonical_sort_key,
    evaluate,
    poly_sqrt,
    substitute,
    var,
)
from .pipeline import canonical_triple, polynomialize_roots, square_witnesses
from .quartic import ascend_constant_side, second_root_vieta
from .triads import (
    SquareCertificate,
    Triad,
    canonicalize,
    is_sum_two_rational_squares,
    quad_in_x,
    rational_to_integer_triad,
    verify_triad,
)

__all__ = [
    "ParametricFamily",
    "FamilyReport",
    "registry",
    "get_family",
    "evaluate_family",
    "verify_family_symbolic",
    "pythagorean_substitute",
    "gensol1_pipeline",
    "gensol1_steps",
    "second_u_family",
    "family_to_json",
]

ONE_SQUARE = "one-square"
ALL_SQUARES = "all-squares"
NO_SQUARES = "no-squares"


@dataclass(frozen=True)
class ParametricFamily:
    """A polynomial solution triple in named parameters, with square witnesses."""

    name: str
    params: tuple[str, ...]
    a: Poly
    b: Poly
    c: Poly
    witnesses: tuple[Poly, Poly, Poly]
    constraints: tuple[Poly, ...]
    classification: str
    paper_eq: str

    def members(self) -> tuple[Poly, Poly, Poly]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of the symbolic verification of one family."""

    name: str
    ok: bool
    square_members: int
    classification_ok: bool
    messages: tuple[str, ...]


def _family(name, params, members, constraints, classification, source) -> ParametricFamily:
    a, b, c = members
    witnesses = square_witnesses(a, b, c)
    return ParametricFamily(
        name=name,
        params=params,
        a=a,
        b=b,
        c=c,
        witnesses=witnesses,
        constraints=tuple(constraints),
        classification=classification,
        paper_eq=source,
    )


@lru_cache(maxsize=1)
def registry() -> tuple[ParametricFamily, ...]:
    """All ten closed-form families, in a fixed order."""
    s, t = var("s"), var("t")
    m, n = var("m"), var("n")
    r = var("r")

    A6 = s**6 - s**4 * t**2 - 5 * s**2 * t**4 + t**6
    B6 = 3 * s**6 + s**4 * t**2 + s**2 * t**4 - t**6
    Q4 = m**4 - 6 * m**2 * n**2 + n**4
    P12 = (
        m**12 - 26 * m**10 * n**2 + 79 * m**8 * n**4 - 44 * m**6 * n**6
        + 79 * m**4 * n**8 - 26 * m**2 * n**10 + n**12
    )
    Q12 = (
        m**12 - 10 * m**10 * n**2 + 15 * m**8 * n**4 - 204 * m**6 * n**6
        + 15 * m**4 * n**8 - 10 * m**2 * n**10 + n**12
    )
    D6 = 5 * r**6 + 3 * r**4 * s**2 + 3 * r**2 * s**4 + s**6
    E8 = r**8 + 2 * r**6 * s**2 - 12 * r**4 * s**4 - 6 * r**2 * s**6 - s**8
    G12 = (
        r**12 + 6 * r**10 * s**2 + 87 * r**8 * s**4 + 108 * r**6 * s**6
        + 55 * r**4 * s**8 + 14 * r**2 * s**10 + s**12
    )
    tt = var("t")

    fams = (
        _family(
            "parmsol1",
            ("s", "t"),
            (
                t**2 * (s**2 - t**2) ** 2 * (s**2 + t**2),
                s**2 * (s**2 - t**2) ** 2 * (s**2 + t**2),
                4 * s**4 * t**4,
            ),
            (s, t, s**2 - t**2),
            ONE_SQUARE,
            "quartic ascent, constant side",
        ),
        _family(
            "parmsol2",
            ("s", "t"),
            (
                4 * s**4 * t**2 * (s**2 + t**2),
                4 * s**2 * t**4 * (s**2 + t**2),
                (s**4 - t**4) ** 2,
            ),
            (s, t, s**2 - t**2),
            ONE_SQUARE,
            "quartic ascent, leading side (Fauquembergue 1899)",
        ),
        _family(
            "parmsol3",
            ("s", "t"),
            (
                4 * s**4 * t**2 * (s**2 + t**2) * A6**2,
                (s**4 - t**4) ** 2 * A6**2,
                4 * s**2 * t**4 * (s**2 + t**2) * B6**2,
            ),
            (s, t, s**2 - t**2, A6),
            ONE_SQUARE,
            "composition of the trivial point with ascent branch 1",
        ),
        _family(
            "parmsol4",
            ("s", "t"),
            (
                t**2 * (s**2 - t**2) ** 2 * (s**2 + t**2) * B6**2,
                4 * s**4 * t**4 * B6**2,
                s**2 * (s**2 - t**2) ** 2 * (s**2 + t**2) * A6**2,
            ),
            (s, t, s**2 - t**2, B6),
            ONE_SQUARE,
            "composition of the trivial point with ascent branch 2",
        ),
        _family(
            "allsq1",
            ("m", "n"),
            (
                (m**4 - n**4) ** 2 * Q4**2,
                4 * m**2 * n**2 * (m**2 + n**2) ** 2 * Q4**2,
                64 * m**4 * n**4 * (m**2 - n**2) ** 4,
            ),
            (m, n, m**2 - n**2),
            ALL_SQUARES,
            "Pythagorean specialization of parmsol1",
        ),
        _family(
            "allsq2",
            ("m", "n"),
            (
                64 * m**4 * n**4 * (m**2 - n**2) ** 2,
                16 * m**2 * n**2 * (m**2 - n**2) ** 4,
                (m**2 + n**2) ** 2 * Q4**2,
            ),
            (m, n, m**2 - n**2),
            ALL_SQUARES,
            "Pythagorean specialization of parmsol2",
        ),
        _family(
            "allsq3",
            ("m", "n"),
            (
                64 * m**4 * n**4 * (m**2 - n**2) ** 2 * P12**2,
                (m**2 + n**2) ** 2 * Q4**2 * P12**2,
                16 * m**2 * n**2 * (m**2 - n**2) ** 4 * Q12**2,
            ),
            (m, n, m**2 - n**2, P12),
            ALL_SQUARES,
            "Pythagorean specialization of parmsol3",
        ),
        _family(
            "allsq4",
            ("m", "n"),
            (
                (m**4 - n**4) ** 2 * Q4**2 * Q12**2,
                64 * m**4 * n**4 * (m**2 - n**2) ** 4 * Q12**2,
                4 * m**2 * n**2 * (m**2 + n**2) ** 2 * Q4**2 * P12**2,
            ),
            (m, n, m**2 - n**2, Q12),
            ALL_SQUARES,
            "Pythagorean specialization of parmsol4",
        ),
        _family(
            "gensol1",
            ("r", "s"),
            (
                r**2 * (r**2 + s**2) * E8**2 * G12,
                s**2 * (r**2 + s**2) * D6**2 * E8**2,
                4 * r**4 * s**4 * D6**2 * G12,
            ),
            (r, s, E8),
            NO_SQUARES,
            "two-nonzero-squares pipeline",
        ),
        _family(
            "euler1779",
            ("t",),
            (
                (tt - 1) ** 2 * (tt + 1) ** 2 * (tt**2 + 5) ** 2 * (tt**4 - 10 * tt**2 + 5) ** 2,
                256 * tt**4 * (tt - 1) ** 2 * (tt + 1) ** 2 * (tt**2 - 3) ** 2,
                4 * tt**2 * (tt**2 - 3) ** 2 * (tt**4 - 10 * tt**2 + 5) ** 2,
            ),
            (tt, tt**2 - 1),
            ALL_SQUARES,
            "Euler's 1779 all-squares family",
        ),
    )
    return fams


def get_family(name: str) -> ParametricFamily:
    for fam in registry():
        if fam.name == name:
            return fam
    raise DomainError("unknown family %r" % name)


def evaluate_family(name: str, point) -> tuple[Triad, SquareCertificate]:
    """Evaluate a family at integer parameters; canonicalized triad + certificate.

    point is a mapping {param: int} or a sequence matching the family's
    parameter order.  Parameters on an excluded locus are rejected.
    """
    fam = get_family(name)
    if not isinstance(point, dict):
        values = list(point)
        if len(values) != len(fam.params):
            raise DomainError(
                "family %s expects %d parameters, got %d" % (name, len(fam.params), len(values))
            )
        point = dict(zip(fam.params, values))
    for p in fam.params:
        if p not in point:
            raise DomainError("missing parameter %r" % p)
    for cons in fam.constraints:
        if evaluate(cons, point) == 0:
            raise ExcludedLocusError(
                "parameters %s lie on the excluded locus %s = 0" % (dict(point), cons)
            )
    members = []
    for mp in fam.members():
        val = evaluate(mp, point)
        if val.denominator != 1 or val <= 0:
            raise ExcludedLocusError("member value %s is not a positive integer" % val)
        members.append(int(val))
    triad = canonicalize(Triad(*members))
    cert = verify_triad(triad)
    if cert is None:
        raise VerificationError("family %s failed verification at %s" % (name, dict(point)))
    return triad, cert


def _sample_points(fam: ParametricFamily, count: int):
    """Deterministic in-domain integer sample points for numeric spot checks."""
    out = []
    k = 1
    while len(out) < count:
        k += 1
        for a in range(1, k + 1):
            b = k + 1 - a
            point = dict(zip(fam.params, (a, b) if len(fam.params) == 2 else (a + b,)))
            if any(evaluate(c, point) == 0 for c in fam.constraints):
                continue
            if point not in out:
                out.append(point)
            if len(out) == count:
                break
    return out


def verify_family_symbolic(fam: ParametricFamily) -> FamilyReport:
    """Check the (f, g, h) witness identities and the family's classification.

    The witnesses must square exactly to the three symmetric functions.
    Classification counts members that are polynomial squares (3, exactly
    1, or 0); no-squares families additionally get numeric two-rational-
    squares spot checks at ten in-domain points.
    """
    msgs = []
    ok = True
    a, b, c = fam.members()
    f, g, h = fam.witnesses
    for w, val, label in ((f, a + b + c, "sum"), (g, a * b + b * c + c * a, "pairwise sum"), (h, a * b * c, "product")):
        if w * w != val:
            ok = False
            msgs.append("witness for %s does not square to it" % label)
    squares = sum(1 for mp in fam.members() if poly_sqrt(mp) is not None)
    expected = {ALL_SQUARES: 3, ONE_SQUARE: 1, NO_SQUARES: 0}[fam.classification]
    cls_ok = squares == expected
    if not cls_ok:
        msgs.append("expected %d square members, found %d" % (expected, squares))
    if fam.classification == NO_SQUARES and cls_ok:
        for point in _sample_points(fam, 10):
            for mp in fam.members():
                val = evaluate(mp, point)
                if val <= 0 or is_sum_two_rational_squares(val) is None:
                    cls_ok = False
                    msgs.append("member not a sum of two rational squares at %s" % point)
                    break
            if not cls_ok:
                break
    return FamilyReport(fam.name, ok and cls_ok, squares, cls_ok, tuple(msgs))


_PYTHAGOREAN_TARGET = {
    "parmsol1": "allsq1",
    "parmsol2": "allsq2",
    "parmsol3": "allsq3",
    "parmsol4": "allsq4",
}


def pythagorean_substitute(name: str) -> ParametricFamily:
    """Specialize a one-square family so that s^2 + t^2 becomes a square.

    Substitutes s = 2mn, t = m^2 - n^2 (so s^2 + t^2 = (m^2 + n^2)^2),
    then strips common square factors.  The result matches the registered
    all-squares family with the same index, slot by slot.
    """
    if name not in _PYTHAGOREAN_TARGET:
        raise DomainError("pythagorean_substitute applies to parmsol1..parmsol4")
    fam = get_family(name)
    m, n = var("m"), var("n")
    binding = {"s": 2 * m * n, "t": m**2 - n**2}
    members = tuple(substitute(mp, binding) for mp in fam.members())
    members = _canonical_keep_order(members)
    target = get_family(_PYTHAGOREAN_TARGET[name])
    return ParametricFamily(
        name=target.name,
        params=("m", "n"),
        a=members[0],
        b=members[1],
        c=members[2],
        witnesses=square_witnesses(*members),
        constraints=target.constraints,
        classification=ALL_SQUARES,
        paper_eq=target.paper_eq,
    )


def _canonical_keep_order(members: tuple[Poly, ...]) -> tuple[Poly, ...]:
    """canonical_triple's square-stripping without the final sort.

    Recovers the square scale by matching the first member against each
    canonical member; a candidate scale is accepted only when it divides
    all three and reproduces the canonical triple.
    """
    from .multipoly import canonical_sort_key, poly_divide_exact

    sorted_triple = canonical_triple(members)
    for cp in sorted_triple:
        q = poly_divide_exact(members[0], cp)
        if q is None or poly_sqrt(q) is None:
            continue
        scaled = []
        for mp in members:
            out = poly_divide_exact(mp, q)
            if out is None:
                break
            scaled.append(out)
        if len(scaled) == len(members) and tuple(sorted(scaled, key=canonical_sort_key)) == sorted_triple:
            return tuple(scaled)
    raise VerificationError("could not align canonical triple with original order")


# ---------------------------------------------------------------------------
# The two-nonzero-squares pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoSquaresPipelineSteps:
    """Intermediate values of the construction, for inspection and tests."""

    x_known: RatFunc
    t_value: RatFunc
    u_first: RatFunc
    u_second: RatFunc
    x_second: RatFunc
    family: ParametricFamily


def _psi_coeffs_in_t(S: RatFunc, x0: RatFunc):
    """psi(s, t, x0) as an even quartic in t: coefficients (c4, c2, c0)."""
    c4 = x0 * (S * S - x0)
    c2 = 2 * S**4 * x0
    c0 = S * S * x0 * (S**4 + S * S * x0 + x0 * x0)
    return c4, c2, c0


def _u_quadratic(S: RatFunc, T: RatFunc, x0: RatFunc):
    """The quadratic in u obtained by fixing x = x0 in the reduction quadratic."""
    A = T * T * (S * S + T * T) - S * S * x0
    B = 2 * S * x0 * (S * S + T * T)
    C = x0 * (T * T * x0 - S * S * (S * S + T * T))
    return A, B, C


@lru_cache(maxsize=4)
def _two_squares_chain(second_root: bool) -> TwoSquaresPipelineSteps:
    r, s = var("r"), var("s")
    R, S = RatFunc(r), RatFunc(s)
    x0 = S * S * (R * R + S * S) / (R * R)
    # psi(s, t, x0) is a quartic in t that is a square at t = r; shift the
    # anchor to the constant term and apply one Fermat step.
    c4, c2, c0 = _psi_coeffs_in_t(S, x0)
    d0 = c4 * R**4 + c2 * R * R + c0
    d1 = 4 * c4 * R**3 + 2 * c2 * R
    d2 = 6 * c4 * R * R + c2
    d3 = 4 * c4 * R
    tau = ascend_constant_side(c4, d3, d2, d1, d0)
    t_val = R + tau
    # the u-quadratic at (t, x0) now has a square discriminant
    A, B, C = _u_quadratic(S, t_val, x0)
    disc = B * B - 4 * A * C
    w = disc.sqrt()
    if w is None:
        raise VerificationError("u-discriminant failed to be a square")
    u_plus = (-B + w) / (2 * A)
    u_minus = (-B - w) / (2 * A)
    u_first, u_second = sorted((u_plus, u_minus), key=lambda f: f.total_degree())
    u_here = u_second if second_root else u_first
    # second x-root by Vieta on the x-quadratic
    Ax, Bx, Cx = quad_in_x(S, t_val, u_here)
    x2 = second_root_vieta(Ax, Bx, Cx, x0)
    roots = (S * S + t_val * t_val, x0, x2)
    members = polynomialize_roots(roots)
    squares = sum(1 for mp in members if poly_sqrt(mp) is not None)
    classification = {3: ALL_SQUARES, 1: ONE_SQUARE, 0: NO_SQUARES}.get(squares)
    if classification is None:
        raise VerificationError("unexpected number of square members: %d" % squares)
    fam = ParametricFamily(
        name="gensol1" if not second_root else "gensol2",
        params=("r", "s"),
        a=members[0],
        b=members[1],
        c=members[2],
        witnesses=square_witnesses(*members),
        constraints=(r, s, r**2 + s**2),
        classification=classification,
        paper_eq="two-nonzero-squares pipeline"
        if not second_root
        else "two-nonzero-squares pipeline, second u-root",
    )
    return TwoSquaresPipelineSteps(
        x_known=x0,
        t_value=t_val,
        u_first=u_first,
        u_second=u_second,
        x_second=x2,
        family=fam,
    )


def gensol1_steps() -> TwoSquaresPipelineSteps:
    """Symbolic intermediates of the two-nonzero-squares construction."""
    return _two_squares_chain(False)


def gensol1_pipeline(r_val: int | None = None, s_val: int | None = None):
    """Run the construction symbolically, or numerically at integer (r, s).

    Symbolic mode returns the ParametricFamily; numeric mode returns the
    canonicalized (Triad, SquareCertificate) built through the same steps.
    """
    if r_val is None and s_val is None:
        return gensol1_steps().family
    if r_val is None or s_val is None:
        raise DomainError("provide both r and s, or neither")
    return _numeric_two_squares(Fraction(r_val), Fraction(s_val), second_root=False)


def second_u_family() -> ParametricFamily:
    """The companion family from the other root of the u-quadratic."""
    return _two_squares_chain(True).family


def _numeric_two_squares(rv: Fraction, sv: Fraction, second_root: bool):
    if rv == 0 or sv == 0:
        raise ExcludedLocusError("r and s must be nonzero")
    x0 = sv * sv * (rv * rv + sv * sv) / (rv * rv)
    c4 = x0 * (sv * sv - x0)
    c2 = 2 * sv**4 * x0
    c0 = sv * sv * x0 * (sv**4 + sv * sv * x0 + x0 * x0)
    d0 = c4 * rv**4 + c2 * rv * rv + c0
    d1 = 4 * c4 * rv**3 + 2 * c2 * rv
    d2 = 6 * c4 * rv * rv + c2
    d3 = 4 * c4 * rv
    try:
        tau = ascend_constant_side(c4, d3, d2, d1, d0)
    except NoAscentError as exc:
        raise ExcludedLocusError("ascent step degenerated: %s" % exc) from exc
    t_val = rv + tau
    A = t_val * t_val * (sv * sv + t_val * t_val) - sv * sv * x0
    B = 2 * sv * x0 * (sv * sv + t_val * t_val)
    C = x0 * (t_val * t_val * x0 - sv * sv * (sv * sv + t_val * t_val))
    from .multipoly import exact_sqrt

    w = exact_sqrt(B * B - 4 * A * C)
    if w is None or A == 0:
        raise ExcludedLocusError("u-quadratic degenerated at these parameters")
    roots = sorted(((-B + w) / (2 * A), (-B - w) / (2 * A)))
    u_here = roots[1] if second_root else roots[0]
    # align the numeric branch with the symbolic one by degree-minimal choice:
    sym = _two_squares_chain(second_root)
    u_sym = evaluate(sym.u_second if second_root else sym.u_first, {"r": rv, "s": sv})
    u_here = u_sym if u_sym in roots else u_here
    Ax, Bx, Cx = quad_in_x(sv, t_val, u_here)
    x2 = second_root_vieta(Ax, Bx, Cx, x0)
    triple = (sv * sv + t_val * t_val, x0, x2)
    if any(v <= 0 for v in triple):
        raise ExcludedLocusError("construction produced a nonpositive root")
    triad = rational_to_integer_triad(*triple)
    cert = verify_triad(triad)
    if cert is None:
        raise VerificationError("pipeline triad failed verification")
    return triad, cert


def family_to_json(fam: ParametricFamily) -> dict:
    """JSON-ready description with canonical polynomial text."""
    f, g, h = fam.witnesses
    return {
        "name": fam.name,
        "params": list(fam.params),
        "a": fam.a.render(),
        "b": fam.b.render(),
        "c": fam.c.render(),
        "f": f.render(),
        "g": g.render(),
        "h": h.render(),
        "classification": fam.classification,
        "paper_eq": fam.paper_eq,
    }
