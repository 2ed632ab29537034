"""Constructive realizability of branch data by permutation tuples.

A profile with partitions (lambda_1, ..., lambda_k) and N free simple branch
points is realizable by a genus-0 covering iff there are permutations
(s_1, ..., s_k, tau_1, ..., tau_N) of {1..d} with cycle types
(lambda_1, ..., lambda_k, [2,1,...], ...), product the identity, generating
a transitive subgroup.  This module searches for such tuples exactly.

Permutations are tuples of 0-based images; compose(p, q) applies p first.
The search normalizes away conjugation freedom: the largest class is frozen
to one representative, the next-largest is solved for from the group
relation, remaining classes run over explicit cosets (the first one only up
to the centralizer of the frozen element), and the transposition block runs
over products h of bounded Cayley norm, factored on demand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

Perm = Tuple[int, ...]

MAX_DEGREE = 16


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(*perms: Perm) -> Perm:
    """Apply left to right: compose(p, q)[i] = q[p[i]]."""
    if not perms:
        raise ValueError("compose needs at least one permutation")
    out = perms[0]
    for q in perms[1:]:
        out = tuple(q[i] for i in out)
    return out


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles_of(p: Perm) -> List[Tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> Tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles_of(p)), reverse=True))


def cayley_norm(p: Perm) -> int:
    return len(p) - len(cycles_of(p))


def conjugate(p: Perm, c: Perm) -> Perm:
    """The permutation sending c[i] to c[p[i]]; same cycle type as p."""
    out = [0] * len(p)
    for i in range(len(p)):
        out[c[i]] = c[p[i]]
    return tuple(out)


def canonical_perm(parts: Sequence[int]) -> Perm:
    """Representative with cycles on consecutive integers, largest first."""
    img = []
    base = 0
    for k in sorted(parts, reverse=True):
        img.extend([base + (i + 1) % k for i in range(k)])
        base += k
    return tuple(img)


def class_size(d: int, parts: Sequence[int]) -> int:
    counts: Dict[int, int] = {}
    for k in parts:
        counts[k] = counts.get(k, 0) + 1
    denom = 1
    for k, a in counts.items():
        denom *= k ** a * factorial(a)
    return factorial(d) // denom


def class_elements(d: int, parts: Sequence[int]) -> List[Perm]:
    """Every permutation of the given cycle type.

    The smallest unplaced point always opens the next cycle, once per
    distinct available length, so each permutation appears exactly once.
    """
    target: Dict[int, int] = {}
    for k in parts:
        target[k] = target.get(k, 0) + 1
    img = list(range(d))
    out: List[Perm] = []

    def place(remaining: Dict[int, int], unused: List[int]):
        if not unused:
            out.append(tuple(img))
            return
        start = unused[0]
        rest = unused[1:]
        for k in sorted(remaining):
            if remaining[k] == 0:
                continue
            remaining[k] -= 1
            if k == 1:
                img[start] = start
                place(remaining, rest)
            else:
                for body in combinations(range(len(rest)), k - 1):
                    chosen_sets = [rest[i] for i in body]
                    for order in permutations(chosen_sets):
                        cyc = (start,) + order
                        for a, b in zip(cyc, cyc[1:] + (start,)):
                            img[a] = b
                        leftover = [x for x in rest if x not in order]
                        place(remaining, leftover)
                    for x in chosen_sets:
                        img[x] = x
                img[start] = start
            remaining[k] += 1

    place(target, list(range(d)))
    return out


def centralizer_generators(p: Perm) -> List[Perm]:
    """Generators of the centralizer: one rotation per cycle plus swaps of
    adjacent equal-length cycles."""
    d = len(p)
    cycs = sorted(cycles_of(p), key=lambda c: (len(c), c))
    gens = []
    for c in cycs:
        if len(c) > 1:
            img = list(range(d))
            for a, b in zip(c, c[1:] + (c[0],)):
                img[a] = b
            gens.append(tuple(img))
    for c1, c2 in zip(cycs, cycs[1:]):
        if len(c1) == len(c2):
            img = list(range(d))
            for a, b in zip(c1, c2):
                img[a] = b
                img[b] = a
            gens.append(tuple(img))
    return gens


def orbit_reps(elements: Sequence[Perm], gens: Sequence[Perm]) -> List[Perm]:
    """Representatives of the orbits of conjugation by the group the
    generators produce (closure by breadth-first search)."""
    pool = set(elements)
    reps = []
    for e in elements:
        if e not in pool:
            continue
        reps.append(e)
        frontier = [e]
        pool.discard(e)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = conjugate(x, g)
                if y in pool:
                    pool.discard(y)
                    frontier.append(y)
    return reps


def transpositions(d: int) -> List[Perm]:
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            img = list(range(d))
            img[i], img[j] = j, i
            out.append(tuple(img))
    return out


def _partitions_bounded(r: int, max_part: int) -> List[Tuple[int, ...]]:
    if r == 0:
        return [()]
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in _partitions_bounded(r - first, first):
            out.append((first,) + rest)
    return out


def h_set(d: int, k: int) -> List[Perm]:
    """All permutations expressible as a product of exactly k transpositions:
    Cayley norm <= k with the same parity."""
    out = []
    for parts in _partitions_bounded(d, d):
        norm = d - len(parts)
        if norm <= k and (k - norm) % 2 == 0:
            out.extend(class_elements(d, parts))
    return out


def factor_into_transpositions(h: Perm, k: int) -> Optional[Tuple[Perm, ...]]:
    """Some (t_1, ..., t_k) with compose(t_1, ..., t_k) = h, or None."""
    d = len(h)
    taus = transpositions(d)
    acc: List[Perm] = []

    def rec(cur: Perm, left: int) -> bool:
        norm = cayley_norm(cur)
        if norm > left or (left - norm) % 2 != 0:
            return False
        if left == 0:
            return True
        for t in taus:
            acc.append(t)
            if rec(compose(cur, t), left - 1):
                return True
            acc.pop()
        return False

    # compose(h^-1, t_1, ..., t_k) = id exactly when the t's multiply to h
    if rec(inverse(h), k):
        return tuple(acc)
    return None


def is_transitive(perms: Sequence[Perm], d: int) -> bool:
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, j in enumerate(p):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return len({find(i) for i in range(d)}) == 1


@dataclass(frozen=True)
class PermutationTuple:
    degree: int
    perms: Tuple[Perm, ...]

    def to_text(self) -> str:
        return "\n".join(format_perm(p) for p in self.perms)


@dataclass(frozen=True)
class RealizabilityCertificate:
    exists: bool
    tuple_: Optional[PermutationTuple]
    stats: Dict[str, int] = field(default_factory=dict)
    reason: str = ""


def format_perm(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted."""
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")"
             for c in cycles_of(p) if len(c) > 1]
    return "".join(parts) if parts else "id"


def _is_identity_type(t: Tuple[int, ...]) -> bool:
    return all(k == 1 for k in t)


def _is_transposition_type(t: Tuple[int, ...]) -> bool:
    return t and t[0] == 2 and all(k == 1 for k in t[1:])


def _braid_left(perms: List[Perm], j: int):
    """Swap entries j-1, j keeping the ordered product: (a, b) becomes
    (a b a^-1, a)."""
    a, b = perms[j - 1], perms[j]
    perms[j - 1] = compose(a, b, inverse(a))
    perms[j] = a


def _reorder_to(perms: List[Perm], want_types: Sequence[Tuple[int, ...]]) -> List[Perm]:
    cur = list(perms)
    for pos, want in enumerate(want_types):
        src = None
        for j in range(pos, len(cur)):
            if cycle_type(cur[j]) == want:
                src = j
                break
        if src is None:
            raise AssertionError("braid reordering lost a cycle type")
        for j in range(src, pos, -1):
            _braid_left(cur, j)
    return cur


def verify_tuple(perms: Sequence[Perm], types: Sequence[Sequence[int]],
                 degree: int) -> bool:
    """Product identity, requested cycle types, transitivity."""
    if len(perms) != len(types):
        return False
    for p, t in zip(perms, types):
        if len(p) != degree or cycle_type(p) != tuple(sorted(t, reverse=True)):
            return False
    return compose(*perms) == identity(degree) and is_transitive(perms, degree)


def find_tuple(types: Sequence[Sequence[int]], degree: int) -> RealizabilityCertificate:
    """Search for a transitive tuple with the given cycle types and identity
    product.

    Soundness: any returned tuple is re-verified from scratch.  Completeness:
    global conjugation makes the canonical anchor representative free, and
    conjugating by the anchor's centralizer reduces the first remaining
    class to orbit representatives; the second-largest class never needs
    enumeration because the product relation determines it.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree > MAX_DEGREE:
        raise ValueError(f"degree {degree} above search cap {MAX_DEGREE}")
    norm_types = [tuple(sorted(t, reverse=True)) for t in types]
    for t in norm_types:
        if sum(t) != degree or any(k < 1 for k in t):
            raise ValueError(f"type {t} is not a partition of {degree}")
    stats = {"outer": 0, "h": 0, "typehits": 0}

    if sum(degree - len(t) for t in norm_types) % 2 != 0:
        return RealizabilityCertificate(False, None, stats,
                                        "odd total branching, no tuple has identity product")
    if degree == 1:
        tup = PermutationTuple(1, tuple((0,) for _ in norm_types))
        return RealizabilityCertificate(True, tup, stats)

    work = [(i, t) for i, t in enumerate(norm_types) if not _is_identity_type(t)]
    n_tau = sum(1 for _, t in work if _is_transposition_type(t))
    big = sorted((t for _, t in work
                  if not _is_transposition_type(t)),
                 key=lambda t: class_size(degree, t))

    found: Optional[List[Perm]] = None

    def try_h(prefix: List[Perm], h: Perm) -> Optional[List[Perm]]:
        stats["h"] += 1
        taus = factor_into_transpositions(h, n_tau)
        if taus is None:
            return None
        cand = prefix + list(taus)
        if not is_transitive(cand, degree):
            return None
        return cand

    if not big:
        # only transpositions (and identities): factor the identity itself
        for h in [identity(degree)]:
            if cayley_norm(h) <= n_tau and (n_tau - cayley_norm(h)) % 2 == 0:
                got = try_h([], h)
                if got is not None:
                    found = got
                    break
    elif len(big) == 1:
        anchor = canonical_perm(big[0])
        h = inverse(anchor)
        stats["outer"] += 1
        if cayley_norm(h) <= n_tau and (n_tau - cayley_norm(h)) % 2 == 0:
            got = try_h([anchor], h)
            if got is not None:
                found = got
    else:
        anchor_type = big[-1]
        derived_type = big[-2]
        middle_types = big[:-2]
        anchor = canonical_perm(anchor_type)
        h_pool = h_set(degree, n_tau)
        middle_pools: List[List[Perm]] = []
        for i, mt in enumerate(middle_types):
            elems = class_elements(degree, mt)
            if i == 0:
                elems = orbit_reps(elems, centralizer_generators(anchor))
            middle_pools.append(elems)

        def walk(i: int, prefix: List[Perm], prefix_prod: Perm) -> Optional[List[Perm]]:
            if i == len(middle_pools):
                inv_prefix = inverse(prefix_prod)
                for h in h_pool:
                    stats["outer"] += 1
                    derived = compose(inv_prefix, inverse(h))
                    if cycle_type(derived) != derived_type:
                        continue
                    stats["typehits"] += 1
                    got = try_h(prefix + [derived], h)
                    if got is not None:
                        return got
                return None
            for m in middle_pools[i]:
                got = walk(i + 1, prefix + [m], compose(prefix_prod, m))
                if got is not None:
                    return got
            return None

        found = walk(0, [anchor], anchor)

    if found is None:
        return RealizabilityCertificate(False, None, stats, "search space exhausted")

    # restore the requested order, then put identity entries back
    want_work = [t for _, t in work]
    ordered = _reorder_to(found, want_work)
    final: List[Perm] = []
    wi = 0
    for t in norm_types:
        if _is_identity_type(t):
            final.append(identity(degree))
        else:
            final.append(ordered[wi])
            wi += 1
    if not verify_tuple(final, norm_types, degree):
        raise AssertionError("internal error: candidate tuple failed re-verification")
    return RealizabilityCertificate(True, PermutationTuple(degree, tuple(final)), stats)


def realize_profile(profile) -> RealizabilityCertificate:
    """Certificate for a RamificationProfile, free points included as
    transpositions."""
    d = profile.degree
    types = list(profile.partitions)
    types += [tuple([2] + [1] * (d - 2))] * profile.free_points
    return find_tuple(types, d)


def split_disjoint(p: Perm, parts_a: Sequence[int],
                   parts_b: Sequence[int]) -> Tuple[Perm, Perm]:
    """Split a permutation into two commuting factors with the given types by
    distributing its disjoint cycles; the nontrivial cycle lengths of the
    two types must partition those of p."""
    d = len(p)
    need_a = sorted((k for k in parts_a if k > 1), reverse=True)
    need_b = sorted((k for k in parts_b if k > 1), reverse=True)
    have = sorted((c for c in cycles_of(p) if len(c) > 1),
                  key=len, reverse=True)
    if sorted(need_a + need_b, reverse=True) != [len(c) for c in have]:
        raise ValueError("cycle lengths do not split as requested")
    img_a = list(range(d))
    img_b = list(range(d))
    pool = list(have)
    for k in need_a:
        c = next(c for c in pool if len(c) == k)
        pool.remove(c)
        for x, y in zip(c, c[1:] + (c[0],)):
            img_a[x] = y
    for c in pool:
        for x, y in zip(c, c[1:] + (c[0],)):
            img_b[x] = y
    return tuple(img_a), tuple(img_b)
