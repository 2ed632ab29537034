"""Enumeration of branch data for coverings of the three-punctured line that
pull a hypergeometric equation back to an equation with few essential
singular points, together with the completeness bookkeeping (number of free
branch points vs. dimension of the deformation space) and the reproduction
of the classification tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .fuchsian import Exponent, hypergeometric_signature, is_elementary, pullback_exponents
from .orbifold import INF, _Infinity

DEFAULT_DMAX = 42


def _is_inf(p) -> bool:
    return isinstance(p, _Infinity)


def _entry_key(p):
    return (1, 0) if _is_inf(p) else (0, p)


def format_entry(p) -> str:
    return "inf" if _is_inf(p) else str(p)


@dataclass(frozen=True)
class TripleSpec:
    """Weights (p0 <= p1 <= pinf) of a hyperbolic genus-0 triple; entries are
    integers >= 2 or inf."""

    entries: Tuple[object, object, object]

    def __init__(self, p0, p1, pinf):
        es = sorted((p0, p1, pinf), key=_entry_key)
        recip = Fraction(0)
        for p in es:
            if _is_inf(p):
                continue
            if not isinstance(p, int) or p < 2:
                raise ValueError(f"weight must be an integer >= 2 or inf, got {p!r}")
            recip += Fraction(1, p)
        if recip >= 1:
            raise ValueError(f"triple {es} is not hyperbolic")
        object.__setattr__(self, "entries", tuple(es))

    @property
    def p0(self):
        return self.entries[0]

    @property
    def p1(self):
        return self.entries[1]

    @property
    def pinf(self):
        return self.entries[2]

    def __str__(self):
        return "(" + ",".join(format_entry(p) for p in self.entries) + ")"

    def sort_key(self):
        return tuple(_entry_key(p) for p in self.entries)


def floor_identity_holds(t: TripleSpec, d: int) -> bool:
    """d - sum of floor(d/p) = 1; floor(d/inf) = 0."""
    s = sum(0 if _is_inf(p) else d // p for p in t.entries)
    return d - s == 1


def chi_inequality_holds(t: TripleSpec, d: int, n: int) -> bool:
    """d * (-chi of the triple) <= 1 - n/pinf, reading n/inf as 0."""
    neg_chi = 1 - sum(Fraction(0) if _is_inf(p) else Fraction(1, p) for p in t.entries)
    rhs = Fraction(1) if _is_inf(t.pinf) else 1 - Fraction(n, t.pinf)
    return d * neg_chi <= rhs


def enumerate_candidates(n: int, d_max: int = DEFAULT_DMAX) -> List[Tuple[TripleSpec, int]]:
    """All canonical (triple, degree) pairs passing the two necessary
    conditions for an n-point pullback.

    Canonical means every finite entry is <= d: a branch point of weight
    p > d has no index-p preimage, so it acts exactly like weight inf and
    the triple is rewritten with inf there.
    """
    out = []
    for d in range(2, d_max + 1):
        pool = list(range(2, d + 1)) + [INF]
        for i, p0 in enumerate(pool):
            for j in range(i, len(pool)):
                p1 = pool[j]
                for k in range(j, len(pool)):
                    pinf = pool[k]
                    s = sum(0 if _is_inf(p) else d // p for p in (p0, p1, pinf))
                    if d - s != 1:
                        continue
                    recip = sum(Fraction(0) if _is_inf(p) else Fraction(1, p)
                                for p in (p0, p1, pinf))
                    if recip >= 1:
                        continue
                    t = TripleSpec(p0, p1, pinf)
                    if chi_inequality_holds(t, d, n):
                        out.append((t, d))
    out.sort(key=lambda e: (e[0].sort_key(), e[1]))
    return out


def partitions_of(r: int, max_part: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Partitions of r in descending-lex order; partition of 0 is ()."""
    if max_part is None:
        max_part = r
    if r == 0:
        return [()]
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions_of(r - first, first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class RamificationProfile:
    """Branch data over k >= 3 marked points plus free simple branch points.

    The free count N is pinned by the genus balance for a genus-0 cover of
    the line: N = sum(len) - (k-2)d - 2, and must be >= 0 for the profile
    to describe an actual covering.
    """

    degree: int
    partitions: Tuple[Tuple[int, ...], ...]

    def __init__(self, degree: int, partitions):
        parts = tuple(tuple(sorted(lam, reverse=True)) for lam in partitions)
        if len(parts) < 3:
            raise ValueError("need at least three marked fibers")
        for lam in parts:
            if not lam or any(k < 1 for k in lam):
                raise ValueError(f"invalid partition {lam}")
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} does not sum to {degree}")
        n_free = sum(len(lam) for lam in parts) - (len(parts) - 2) * degree - 2
        if n_free < 0:
            raise ValueError(f"free branch point count {n_free} is negative")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "partitions", parts)

    @property
    def free_points(self) -> int:
        return (sum(len(lam) for lam in self.partitions)
                - (len(self.partitions) - 2) * self.degree - 2)

    def __str__(self):
        return " ".join("[" + ",".join(str(k) for k in lam) + "]"
                        for lam in self.partitions)


def nonapparent_counts(weights: Sequence[object],
                       profile: RamificationProfile) -> Tuple[int, ...]:
    """Per-fiber counts of preimages carrying essential exponent data: parts
    not divisible by the finite weight, or every part over weight inf."""
    if len(weights) != len(profile.partitions):
        raise ValueError("need one weight per fiber")
    out = []
    for p, lam in zip(weights, profile.partitions):
        if _is_inf(p):
            out.append(len(lam))
        else:
            out.append(sum(1 for k in lam if k % p != 0))
    return tuple(out)


def _fiber_options(p, d: int):
    """(partition, nonapparent count) choices over one marked point.

    Finite weight p forces floor(d/p) index-p parts (these become apparent
    upstairs); the remainder r = d mod p splits arbitrarily, every such part
    being essential.  Weight inf allows any partition, all parts essential.
    """
    if _is_inf(p):
        return [(lam, len(lam)) for lam in partitions_of(d)]
    q, r = divmod(d, p)
    forced = (p,) * q
    return [(tuple(sorted(forced + lam, reverse=True)), len(lam))
            for lam in partitions_of(r)]


def enumerate_profiles(weights: Sequence[object], d: int,
                       n: Optional[int] = None) -> List[Tuple[RamificationProfile, int]]:
    """All realizable-by-count profiles over the given marked weights, with
    the essential-point total; optionally filtered to a fixed total."""
    options = [_fiber_options(p, d) for p in weights]
    out = []
    for combo in product(*options):
        lams = tuple(c[0] for c in combo)
        n_total = sum(c[1] for c in combo)
        if n is not None and n_total != n:
            continue
        n_free = sum(len(lam) for lam in lams) - (len(lams) - 2) * d - 2
        if n_free < 0:
            continue
        out.append((RamificationProfile(d, lams), n_total))
    out.sort(key=lambda e: e[0].partitions)
    return out


class VerdictKind(Enum):
    COMPLETE = "COMPLETE"
    PARTIAL = "PARTIAL"
    DEGENERATE_HYPERGEOMETRIC = "DEGENERATE_HYPERGEOMETRIC"
    IMPOSSIBLE = "IMPOSSIBLE"


@dataclass(frozen=True)
class CandidateVerdict:
    kind: VerdictKind
    deficit: Optional[int] = None

    def __str__(self):
        if self.kind is VerdictKind.PARTIAL:
            return f"PARTIAL(deficit={self.deficit})"
        return self.kind.value


def verdict(profile: RamificationProfile, n: int) -> CandidateVerdict:
    """Completeness of an n-essential-point profile: the deformation space
    has dimension n-3 and the free branch points supply N parameters."""
    if n <= 2:
        return CandidateVerdict(VerdictKind.IMPOSSIBLE)
    if n == 3:
        return CandidateVerdict(VerdictKind.DEGENERATE_HYPERGEOMETRIC)
    n_free = profile.free_points
    if n_free >= n - 3:
        return CandidateVerdict(VerdictKind.COMPLETE)
    return CandidateVerdict(VerdictKind.PARTIAL, deficit=(n - 3) - n_free)


def complete_profiles(n: int, d_max: int = DEFAULT_DMAX
                      ) -> List[Tuple[TripleSpec, int, RamificationProfile]]:
    out = []
    for t, d in enumerate_candidates(n, d_max):
        for profile, n_total in enumerate_profiles(t.entries, d, n):
            if verdict(profile, n_total).kind is VerdictKind.COMPLETE:
                out.append((t, d, profile))
    return out


@dataclass(frozen=True)
class IntermediateRow:
    """Upper-bound row for one candidate: the profile of maximal free count,
    which may be infeasible (N = -1), with its status toward a target
    essential-point total."""

    triple: TripleSpec
    degree: int
    partitions: Tuple[Tuple[int, ...], ...]
    n_points: int
    n_free: int
    status: str


def _max_free_row(t: TripleSpec, d: int, n_target: int) -> IntermediateRow:
    lams = []
    n_points = 0
    for p in t.entries:
        if _is_inf(p):
            lams.append((1,) * d)
            n_points += d
        else:
            q, r = divmod(d, p)
            lams.append((p,) * q + (1,) * r)
            n_points += r
    n_free = sum(len(lam) for lam in lams) - d - 2
    if n_points <= 2:
        status = "IMPOSSIBLE"
    elif n_points == 3:
        status = "DEGENERATE_HYPERGEOMETRIC"
    elif n_free < n_target - 3:
        status = f"PARTIAL(deficit={n_target - 3 - n_free})"
    else:
        status = "COMPLETE"
    return IntermediateRow(t, d, tuple(lams), n_points, n_free, status)


def intermediate_rows(n_target: int = 5, d_max: int = DEFAULT_DMAX,
                      infinite: Optional[bool] = None) -> List[IntermediateRow]:
    """One max-free-count row per candidate; infinite=True keeps triples
    containing inf, False keeps all-finite triples, None keeps both."""
    rows = []
    for t, d in enumerate_candidates(n_target, d_max):
        has_inf = any(_is_inf(p) for p in t.entries)
        if infinite is not None and has_inf != infinite:
            continue
        rows.append(_max_free_row(t, d, n_target))
    return rows


def _base_signature(t: TripleSpec, numerator: int = 1):
    """Hypergeometric data with exponent 1/p at finite-weight points and a
    generic symbol at weight inf; at a finite third point the exponent is
    numerator/pinf."""
    es = []
    for i, p in enumerate(t.entries):
        if _is_inf(p):
            es.append(Exponent.generic("theta"))
        elif i == 2:
            es.append(Exponent.of(Fraction(numerator, p)))
        else:
            es.append(Exponent.of(Fraction(1, p)))
    return hypergeometric_signature(*es)


def _exponent_numerators(q: int) -> List[int]:
    """Representatives k with k/q in lowest terms, normalized into (0, 1/2]."""
    return [k for k in range(1, q // 2 + 1) if gcd(k, q) == 1]


@dataclass(frozen=True)
class PullbackFamilyRow:
    """One degree in the classification of complete or partial pullback
    families: base data, branch profile, resulting exponent lists."""

    triple: TripleSpec
    degree: int
    profile: RamificationProfile
    variants: Tuple[Tuple[Tuple[Exponent, ...], Tuple[Exponent, ...], int], ...]
    n_points: int
    n_free: int
    verdict: CandidateVerdict


# Profiles defining the two partial rows of the five-point family table.
# They relax the forced-part rule over one finite fiber (keeping fewer
# apparent points than the maximum), so they are inputs here, not outputs
# of enumerate_profiles; everything about them is still recomputed.
_T2_EXTRA = (
    (3, ((2, 1), (1, 1, 1), (3,)), INF),
    (9, ((2, 2, 2, 2, 1), (3, 3, 1, 1, 1), (8, 1)), 8),
)


def t2_rows(d_max: int = DEFAULT_DMAX) -> List[PullbackFamilyRow]:
    """Five-point pullback families: the complete profiles from the
    enumeration plus the two partial ones, with exponent data."""
    items = []
    for t, d, profile in complete_profiles(5, d_max):
        items.append((d, t, profile))
    for d, lams, pinf in _T2_EXTRA:
        t = TripleSpec(2, 3, pinf)
        items.append((d, t, RamificationProfile(d, lams)))
    items.sort(key=lambda e: (e[0], e[1].sort_key()))
    rows = []
    for d, t, profile in items:
        if _is_inf(t.pinf):
            numerators = [1]
        else:
            numerators = _exponent_numerators(t.pinf)
        variants = []
        for k in numerators:
            sig = _base_signature(t, k)
            if is_elementary(sig):
                continue
            pulled = pullback_exponents(sig, profile.partitions)
            base = tuple(p.exponent for p in sig.points)
            variants.append((base, pulled.exponents, pulled.apparent_count))
        n_pts = sum(nonapparent_counts(t.entries, profile))
        rows.append(PullbackFamilyRow(t, d, profile, tuple(variants),
                                      n_pts, profile.free_points,
                                      verdict(profile, n_pts)))
    return rows


def t4_rows(d_max: int = DEFAULT_DMAX) -> List[PullbackFamilyRow]:
    """Six-point complete pullback families with exponent data."""
    rows = []
    for t, d, profile in complete_profiles(6, d_max):
        sig = _base_signature(t)
        if is_elementary(sig):
            continue
        pulled = pullback_exponents(sig, profile.partitions)
        base = tuple(p.exponent for p in sig.points)
        n_pts = sum(nonapparent_counts(t.entries, profile))
        rows.append(PullbackFamilyRow(t, d, profile,
                                      ((base, pulled.exponents, pulled.apparent_count),),
                                      n_pts, profile.free_points,
                                      verdict(profile, n_pts)))
    return rows


@dataclass(frozen=True)
class FamilyRow:
    """A one-parameter family of candidate triples (finite entries fixed,
    last entry a free symbol p) with the degrees passing both filters."""

    prefix: Tuple[int, ...]
    degrees: Tuple[int, ...]

    def family_name(self) -> str:
        parts = [str(q) for q in self.prefix] + ["p"] * (3 - len(self.prefix))
        return "(" + ",".join(parts) + ")"


def t3_rows(n: int = 6, d_max: int = DEFAULT_DMAX) -> List[FamilyRow]:
    """Candidates with an inf entry, grouped into symbolic families.

    Membership is recomputed with the symbol treated as larger than any
    degree in range, i.e. as inf in both filters, without canonicalizing.
    """
    prefixes = []
    for t, _ in enumerate_candidates(n, d_max):
        if not any(_is_inf(p) for p in t.entries):
            continue
        prefix = tuple(p for p in t.entries if not _is_inf(p))
        if prefix not in prefixes:
            prefixes.append(prefix)
    rows = []
    for prefix in sorted(prefixes):
        degrees = []
        for d in range(2, d_max + 1):
            s = sum(d // q for q in prefix)
            if d - s != 1:
                continue
            recip = sum(Fraction(1, q) for q in prefix)
            if recip >= 1:
                continue
            if d * (1 - recip) <= 1:
                degrees.append(d)
        rows.append(FamilyRow(prefix, tuple(degrees)))
    return rows


def n7_summary(n_low: int = 7, n_high: int = 12,
               d_max: int = DEFAULT_DMAX) -> List[Tuple[int, int]]:
    """(n, number of complete profiles) for each n in the range."""
    return [(n, len(complete_profiles(n, d_max))) for n in range(n_low, n_high + 1)]


def multipoint_bases(k: int, weight_cap: int = 12) -> List[Tuple[Tuple[object, ...], int]]:
    """Hyperbolic genus-0 bases with k marked points whose negative Euler
    characteristic leaves any degree budget at all: d <= 1/(-chi), so only
    -chi <= 1/2 survives.  Finite weights above the cap behave like inf at
    every admissible degree, so the pool is {2..cap, inf}."""
    pool = list(range(2, weight_cap + 1)) + [INF]
    out = []
    for combo in product(range(len(pool)), repeat=k):
        if any(combo[i] > combo[i + 1] for i in range(k - 1)):
            continue
        ws = tuple(pool[i] for i in combo)
        recip = sum(Fraction(0) if _is_inf(p) else Fraction(1, p) for p in ws)
        neg_chi = (k - 2) - recip
        if neg_chi <= 0:
            continue
        if neg_chi > Fraction(1, 2):
            continue
        out.append((ws, int(Fraction(1) / neg_chi)))
    return out


def multipoint_complete_search(k: int, weight_cap: int = 12
                               ) -> List[Tuple[Tuple[object, ...], int, RamificationProfile]]:
    """Exhaustive search for complete profiles over bases with more than
    three marked points; expected empty."""
    hits = []
    for ws, budget in multipoint_bases(k, weight_cap):
        for d in range(2, budget + 1):
            for profile, n_total in enumerate_profiles(ws, d):
                v = verdict(profile, n_total)
                if v.kind is VerdictKind.COMPLETE:
                    hits.append((ws, d, profile))
    return hits


@dataclass(frozen=True)
class Table:
    table_id: str
    title: str
    header: Tuple[str, ...]
    rows: Tuple[Tuple[str, ...], ...]


def _fmt_exps(exps: Sequence[Exponent]) -> str:
    return "(" + ",".join(str(e) for e in exps) + ")"


def reproduce_table(table_id: str, d_max: int = DEFAULT_DMAX) -> Table:
    tid = table_id.upper()
    if tid == "T1":
        rows = []
        for t, d, profile in complete_profiles(5, d_max):
            rows.append((str(t), str(d), str(profile),
                         f"N={profile.free_points}", "COMPLETE"))
        return Table("T1", "complete five-point pullback profiles",
                     ("triple", "d", "branch data", "free", "verdict"), tuple(rows))
    if tid == "T2":
        rows = []
        for r in t2_rows(d_max):
            for base, pulled, napp in r.variants:
                rows.append((str(r.triple), str(r.degree), str(r.profile),
                             _fmt_exps(base), _fmt_exps(pulled),
                             f"apparent={napp}", f"N={r.n_free}", str(r.verdict)))
        return Table("T2", "five-point pullback families with exponent data",
                     ("triple", "d", "branch data", "base exponents",
                      "exponents", "apparent", "free", "verdict"), tuple(rows))
    if tid == "T3":
        rows = [(fr.family_name(), ",".join(str(d) for d in fr.degrees))
                for fr in t3_rows(6, d_max)]
        return Table("T3", "six-point candidate families",
                     ("family", "degrees"), tuple(rows))
    if tid == "T4":
        rows = []
        for r in t4_rows(d_max):
            base, pulled, napp = r.variants[0]
            rows.append((str(r.triple), str(r.degree), str(r.profile),
                         _fmt_exps(base), _fmt_exps(pulled),
                         f"apparent={napp}", f"N={r.n_free}", str(r.verdict)))
        return Table("T4", "complete six-point pullback families",
                     ("triple", "d", "branch data", "base exponents",
                      "exponents", "apparent", "free", "verdict"), tuple(rows))
    if tid in ("N2A", "N2B"):
        rows = []
        for r in intermediate_rows(5, d_max, infinite=(tid == "N2A")):
            lams = " ".join("[" + ",".join(str(k) for k in lam) + "]"
                            for lam in r.partitions)
            rows.append((str(r.triple), str(r.degree), lams,
                         f"n={r.n_points}", f"N={r.n_free}", r.status))
        kind = "inf-weight" if tid == "N2A" else "finite-weight"
        return Table("N2a" if tid == "N2A" else "N2b",
                     f"five-point candidates over {kind} triples, maximal free count",
                     ("triple", "d", "branch data", "points", "free", "status"),
                     tuple(rows))
    if tid == "N7":
        rows = [(str(n), str(c), "none" if c == 0 else "") for n, c in n7_summary(7, 12, d_max)]
        return Table("N7", "complete profiles with seven or more points",
                     ("n", "complete profiles", "note"), tuple(rows))
    raise ValueError(f"unknown table id {table_id!r}")


def render_table(table: Table) -> str:
    lines = [f"# {table.table_id}: {table.title}", " | ".join(table.header)]
    for row in table.rows:
        lines.append(" | ".join(row))
    return "\n".join(lines) + "\n"
