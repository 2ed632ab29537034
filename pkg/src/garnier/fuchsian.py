"""Local exponent data of scalar Fuchsian equations and its interaction with
orbifold weights and ramified coverings.

An exponent here is the difference of the two local exponents at a singular
point.  It is either an explicit rational or a formal positive multiple of a
generic symbol (used for one-parameter families of equations).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .orbifold import INF, CurvatureClass, OrbifoldStructure, classify


@dataclass(frozen=True)
class Exponent:
    rational: Fraction = Fraction(0)
    coeff: Fraction = Fraction(0)
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff != 0 and not self.label:
            raise ValueError("a generic exponent needs a symbol label")
        if self.coeff == 0 and self.label:
            object.__setattr__(self, "label", None)
        if self.coeff < 0:
            raise ValueError("generic coefficient must be >= 0")

    @classmethod
    def of(cls, value) -> "Exponent":
        return cls(Fraction(value))

    @classmethod
    def generic(cls, label: str = "theta", coeff=1) -> "Exponent":
        return cls(Fraction(0), Fraction(coeff), label)

    def is_rational(self) -> bool:
        return self.coeff == 0

    def scaled(self, k: int) -> "Exponent":
        return Exponent(k * self.rational, k * self.coeff, self.label)

    def __str__(self):
        if self.is_rational():
            return str(self.rational)
        gen = self.label if self.coeff == 1 else f"{self.coeff}{self.label}"
        if self.rational == 0:
            return gen
        return f"{self.rational}+{gen}"


@dataclass(frozen=True)
class SingularPoint:
    point_id: object
    exponent: Exponent
    logarithmic: bool = False

    def __post_init__(self):
        if self.logarithmic:
            e = self.exponent
            if not (e.is_rational() and e.rational.denominator == 1):
                raise ValueError("logarithmic points require an integer exponent")


@dataclass(frozen=True)
class FuchsianSignature:
    genus: int
    points: Tuple[SingularPoint, ...]

    def __init__(self, genus: int, points):
        pts = tuple(points)
        ids = [p.point_id for p in pts]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate singular point ids")
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "points", pts)


def hypergeometric_signature(e0, e1, einf) -> FuchsianSignature:
    """Genus-0 signature with singular points 0, 1, inf."""
    mk = lambda e: e if isinstance(e, Exponent) else Exponent.of(e)
    return FuchsianSignature(0, (
        SingularPoint("0", mk(e0)),
        SingularPoint("1", mk(e1)),
        SingularPoint("inf", mk(einf)),
    ))


def _weight_of_point(p: SingularPoint, underlying_weights: bool):
    e = p.exponent
    if p.logarithmic or not e.is_rational():
        return INF
    if e.rational == 0:
        # exponent difference zero without logarithm: still a weight-inf point,
        # the local monodromy cannot be of finite order independent of it
        return INF
    theta = abs(e.rational)
    if underlying_weights:
        return Fraction(theta.denominator)
    return 1 / theta


def orbifold_of(sig: FuchsianSignature) -> OrbifoldStructure:
    """Weight 1/|theta| at rational non-logarithmic points, inf elsewhere.

    Integer theta gives weight <= 1: such points are apparent and vanish
    from the support.
    """
    return OrbifoldStructure(sig.genus, tuple(
        (p.point_id, _weight_of_point(p, False)) for p in sig.points))


def underlying_orbifold_of(sig: FuchsianSignature) -> OrbifoldStructure:
    """Weight = denominator of theta in lowest terms, inf at generic or
    logarithmic points."""
    return OrbifoldStructure(sig.genus, tuple(
        (p.point_id, _weight_of_point(p, True)) for p in sig.points))


def normalize_exponent(e: Exponent) -> Exponent:
    """Reduce a rational exponent into [0, 1/2] by theta -> theta mod 1,
    then theta -> 1 - theta; these moves do not change the projective
    equivalence class of the local equation."""
    if not e.is_rational():
        return e
    t = e.rational % 1
    if t > Fraction(1, 2):
        t = 1 - t
    return Exponent(t)


@dataclass(frozen=True)
class PulledBackSignature:
    exponents: Tuple[Exponent, ...]
    apparent_count: int


def pullback_exponents(sig: FuchsianSignature,
                       partitions: Sequence[Sequence[int]]) -> PulledBackSignature:
    """Exponent data of the pullback along a covering with the given local
    indices over each singular point (partitions aligned with sig.points).

    A point of index k over exponent theta carries exponent k*theta; it is
    apparent exactly when that is a positive integer at a non-logarithmic
    point.  Apparent points are counted, not listed.
    """
    if len(partitions) != len(sig.points):
        raise ValueError("need one partition per singular point")
    degrees = {sum(parts) for parts in partitions}
    if len(degrees) != 1:
        raise ValueError("partitions have unequal sizes")
    kept = []
    apparent = 0
    for p, parts in zip(sig.points, partitions):
        for k in sorted(parts, reverse=True):
            if k < 1:
                raise ValueError(f"invalid local index {k}")
            e = p.exponent.scaled(k)
            if (not p.logarithmic and e.is_rational()
                    and e.rational.denominator == 1 and e.rational >= 1):
                apparent += 1
            else:
                kept.append(e)
    return PulledBackSignature(tuple(kept), apparent)


_LISTED = (
    (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
    (Fraction(1, 3), Fraction(2, 5), Fraction(1, 2)),
)


def is_listed_elementary(exponents: Sequence[Exponent]) -> Optional[bool]:
    """Membership of a rational exponent triple in the short list of
    hyperbolic hypergeometric equations with algebraic or elementary
    solutions; None when a generic symbol makes the question ill-posed."""
    if len(exponents) != 3:
        raise ValueError("expected a triple of exponents")
    if any(not e.is_rational() for e in exponents):
        return None
    vals = sorted(normalize_exponent(e).rational for e in exponents)
    if sum(1 for v in vals if v == Fraction(1, 2)) >= 2:
        return True
    return tuple(vals) in _LISTED


def is_elementary(sig: FuchsianSignature) -> bool:
    """True when the equation has no transcendental hypergeometric content:
    the underlying integral structure fails to be hyperbolic, or the triple
    is in the listed exceptional family."""
    if sig.genus != 0 or len(sig.points) != 3:
        raise ValueError("elementarity gate applies to three-point genus-0 data")
    if classify(underlying_orbifold_of(sig)) != CurvatureClass.HYPERBOLIC:
        return True
    listed = is_listed_elementary(tuple(p.exponent for p in sig.points))
    return bool(listed)
