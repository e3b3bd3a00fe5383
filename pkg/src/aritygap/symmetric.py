"""Symmetry testing, multiset representation, and normal-form constructors.

A function is symmetric when its table is invariant under every permutation
of its essential positions (fictive positions are exempt). A non-constant
function that is invariant under all of S_n is determined by one value per
size-n multiset over K; ``SymmetricSpec`` is that representation and drives
enumeration.

The constructors build the classified families:

* ``construct_gap_n``: value a0 on every point with a repeated coordinate,
  one value per n-element value set on the all-distinct points. Any such
  function with not-all-equal coefficients has all variables essential and
  gap equal to its essential arity.
* ``construct_gap2_ternary``: the two ternary gap-2 families. On a point
  with value pattern {c, c, d} the "minority" family reads its coefficient
  off the lone value d, the "majority" family off the doubled value c.
* ``construct_linear``: the table of a1*x1 + ... + an*xn + c mod k.
* ``recompose`` / ``extract_decomposition``: the pairwise-conjunction
  decomposition f = (sum over equal pairs i<j of g on the remaining
  coordinates) + h, with h vanishing on every repeated-coordinate point.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import (
    DecompositionError,
    DomainError,
    FiniteFunction,
    PreconditionError,
    index_of,
    is_all_distinct,
    iter_points,
)
from .minors import _essential_positions, essential_count, gap


def multisets(k: int, n: int) -> list[tuple[int, ...]]:
    """Size-n multisets over K as sorted tuples, lexicographically ordered."""
    return list(itertools.combinations_with_replacement(range(k), n))


def _swap_invariant(f: FiniteFunction, a: int, b: int) -> bool:
    # a, b are 0-based positions
    k, n, t = f.k, f.n, f.table
    step_a = k ** (n - 1 - a)
    step_b = k ** (n - 1 - b)
    for m in range(len(t)):
        ca = (m // step_a) % k
        cb = (m // step_b) % k
        if ca >= cb:
            continue
        swapped = m + (cb - ca) * step_a + (ca - cb) * step_b
        if t[m] != t[swapped]:
            return False
    return True


def is_symmetric(f: FiniteFunction) -> bool:
    """Invariance under all permutations of the essential positions."""
    ess = sorted(_essential_positions(f.k, f.n, f.table))
    for a, b in zip(ess, ess[1:]):
        if not _swap_invariant(f, a - 1, b - 1):
            return False
    return True


def is_totally_symmetric(f: FiniteFunction) -> bool:
    """Whether the table depends only on the multiset of coordinates."""
    k, n, t = f.k, f.n, f.table
    for m, p in enumerate(iter_points(k, n)):
        if t[m] != t[index_of(sorted(p), k)]:
            return False
    return True


@dataclass
class SymmetricSpec:
    """A symmetric function given by one value per size-n multiset over K."""

    k: int
    n: int
    values: dict[tuple[int, ...], int]

    def __post_init__(self):
        expected = multisets(self.k, self.n)
        if set(self.values) != set(expected):
            raise DomainError(
                f"spec must assign exactly the {len(expected)} size-{self.n} "
                f"multisets over 0..{self.k - 1}"
            )
        for v in self.values.values():
            if not 0 <= v < self.k:
                raise DomainError(f"value {v} outside 0..{self.k - 1}")

    def as_tuple(self) -> tuple[int, ...]:
        """Values in the canonical multiset order."""
        return tuple(self.values[m] for m in multisets(self.k, self.n))


def expand(spec: SymmetricSpec) -> FiniteFunction:
    """The value table assigning each point the value of its sorted multiset."""
    vals = spec.values
    return FiniteFunction(
        spec.k,
        spec.n,
        (vals[tuple(sorted(p))] for p in iter_points(spec.k, spec.n)),
    )


def compress(f: FiniteFunction) -> SymmetricSpec:
    """Inverse of :func:`expand`; requires a multiset-determined table."""
    if not is_totally_symmetric(f):
        raise PreconditionError(
            "table is not invariant under all coordinate permutations"
        )
    values = {m: f.table[index_of(m, f.k)] for m in multisets(f.k, f.n)}
    return SymmetricSpec(f.k, f.n, values)


def orbit_sum(n: int, alpha: Sequence[int], k: int) -> FiniteFunction:
    """Sum over all n! coordinate permutations of the indicator of alpha.

    Repeated entries of alpha make permutation terms coincide, so each point
    in the orbit receives the stabilizer size (product of multiplicity
    factorials) mod k.
    """
    if len(alpha) != n:
        raise DomainError(f"alpha has length {len(alpha)}, expected {n}")
    for c in alpha:
        if not 0 <= c < k:
            raise DomainError(f"alpha entry {c} outside 0..{k - 1}")
    key = tuple(sorted(alpha))
    weight = 1
    for c in Counter(alpha).values():
        weight *= math.factorial(c)
    weight %= k
    return FiniteFunction(
        k,
        n,
        (weight if tuple(sorted(p)) == key else 0 for p in iter_points(k, n)),
    )


def _normalize_coefficient_map(
    b: Mapping, k: int, size: int, what: str
) -> dict[frozenset[int], int]:
    out = {}
    for key, v in b.items():
        fs = frozenset(key)
        if len(fs) != size or any(not 0 <= c < k for c in fs):
            raise DomainError(
                f"{what} key {sorted(key)} is not a {size}-element subset of 0..{k - 1}"
            )
        if not 0 <= v < k:
            raise DomainError(f"{what} value {v} outside 0..{k - 1}")
        out[fs] = v
    for combo in itertools.combinations(range(k), size):
        out.setdefault(frozenset(combo), 0)
    return out


@dataclass
class GapNSpec:
    """Coefficients of the full-gap form: a0 plus one value per n-subset of K."""

    a0: int
    b: Mapping


def construct_gap_n(k: int, n: int, spec: GapNSpec) -> FiniteFunction:
    """Build the symmetric function with gap equal to its arity.

    Every repeated-coordinate point gets a0; an all-distinct point gets the
    coefficient of its value set. Unlisted subsets default to 0. At least
    two of the coefficients (a0 included) must differ, otherwise the result
    would be constant and is rejected.
    """
    if not 2 <= n <= k:
        raise DomainError(f"requires 2 <= n <= k, got n={n}, k={k}")
    if not 0 <= spec.a0 < k:
        raise DomainError(f"a0 value {spec.a0} outside 0..{k - 1}")
    b = _normalize_coefficient_map(spec.b, k, n, "subset coefficient")
    if all(v == spec.a0 for v in b.values()):
        raise PreconditionError(
            "at least two among a0 and the subset coefficients must be "
            "distinct (all equal would give a constant function)"
        )
    table = []
    for p in iter_points(k, n):
        if is_all_distinct(p):
            table.append(b[frozenset(p)])
        else:
            table.append(spec.a0)
    return FiniteFunction(k, n, table)


@dataclass
class TernaryGap2Spec:
    """Coefficients of a ternary gap-2 family member."""

    family: str
    a: Sequence[int]
    b: Mapping = field(default_factory=dict)


def construct_gap2_ternary(k: int, spec: TernaryGap2Spec) -> FiniteFunction:
    """Build a ternary symmetric function with gap 2.

    Diagonal points (i, i, i) get a_i. A point with pattern {c, c, d}
    (c != d) gets a_d under the minority family, a_c under the majority
    family. All-distinct points get the coefficient of their value set.
    At least two of the a_i must differ.
    """
    if k < 3:
        raise DomainError(f"requires k >= 3, got k={k}")
    if spec.family not in ("minority", "majority"):
        raise DomainError(f"unknown family {spec.family!r}")
    a = tuple(spec.a)
    if len(a) != k:
        raise DomainError(f"coefficient vector has {len(a)} entries, expected {k}")
    for v in a:
        if not 0 <= v < k:
            raise DomainError(f"coefficient {v} outside 0..{k - 1}")
    if len(set(a)) < 2:
        raise PreconditionError(
            "at least two among the diagonal coefficients a_i must be distinct"
        )
    b = _normalize_coefficient_map(spec.b, k, 3, "subset coefficient")
    lone = spec.family == "minority"
    table = []
    for p in iter_points(k, 3):
        counts = Counter(p)
        if len(counts) == 1:
            table.append(a[p[0]])
        elif len(counts) == 3:
            table.append(b[frozenset(p)])
        else:
            doubled, single = None, None
            for v, c in counts.items():
                if c == 2:
                    doubled = v
                else:
                    single = v
            table.append(a[single] if lone else a[doubled])
    return FiniteFunction(k, 3, table)


@dataclass
class LinearSpec:
    """Coefficients and constant of an affine map mod k."""

    coefficients: Sequence[int]
    constant: int = 0


def construct_linear(k: int, spec: LinearSpec) -> FiniteFunction:
    coeffs = tuple(spec.coefficients)
    for v in coeffs:
        if not 0 <= v < k:
            raise DomainError(f"coefficient {v} outside 0..{k - 1}")
    if not 0 <= spec.constant < k:
        raise DomainError(f"constant {spec.constant} outside 0..{k - 1}")
    n = len(coeffs)
    return FiniteFunction(
        k,
        n,
        (
            (sum(a * c for a, c in zip(coeffs, p)) + spec.constant) % k
            for p in iter_points(k, n)
        ),
    )


@dataclass(frozen=True)
class DecompositionPair:
    """The (g, h) pair of the pairwise-conjunction decomposition."""

    g: FiniteFunction
    h: FiniteFunction


def recompose(g: FiniteFunction, h: FiniteFunction) -> FiniteFunction:
    """f(p) = sum over pairs i<j with p_i = p_j of g(p minus i, j), plus h(p).

    Arithmetic is mod k; h must vanish on every repeated-coordinate point,
    so f agrees with h on all-distinct points.
    """
    if g.k != h.k:
        raise DomainError(f"radices differ: {g.k} vs {h.k}")
    if g.n != h.n - 2:
        raise DomainError(
            f"arities incompatible: need arity(g) = arity(h) - 2, "
            f"got {g.n} and {h.n}"
        )
    k, n = h.k, h.n
    for m, p in enumerate(iter_points(k, n)):
        if not is_all_distinct(p) and h.table[m] != 0:
            raise PreconditionError(
                f"h must vanish on repeated-coordinate points, h{p} = {h.table[m]}"
            )
    pairs = list(itertools.combinations(range(n), 2))
    table = []
    for p in iter_points(k, n):
        s = h.table[index_of(p, k)]
        for i, j in pairs:
            if p[i] == p[j]:
                rest = p[:i] + p[i + 1 : j] + p[j + 1 :]
                s += g.table[index_of(rest, k)]
        table.append(s % k)
    return FiniteFunction(k, n, table)


def _propagate(assign: dict, pending: list, k: int):
    """Forward-solve single-unknown equations with unit coefficients."""
    changed = True
    while changed:
        changed = False
        rest = []
        for coeffs, rhs in pending:
            live = {}
            r = rhs % k
            for idx, c in coeffs.items():
                c %= k
                if idx in assign:
                    r = (r - c * assign[idx]) % k
                elif c:
                    live[idx] = c
            if not live:
                if r:
                    return None
                continue
            if len(live) == 1:
                (idx, c), = live.items()
                g = math.gcd(c, k)
                if r % g:
                    return None
                if g == 1:
                    assign[idx] = (r * pow(c, -1, k)) % k
                    changed = True
                    continue
            rest.append((coeffs, rhs))
        pending = rest
    return pending


def _solutions(assign: dict, pending: list, k: int, total: int):
    """Yield every full assignment satisfying the equations, deterministically."""
    pending = _propagate(assign, pending, k)
    if pending is None:
        return
    if len(assign) == total:
        if not pending:
            yield dict(assign)
        return
    unassigned = sorted(
        {idx for coeffs, _ in pending for idx in coeffs if idx not in assign}
    )
    if not unassigned:
        # every unknown appears in some equation by construction
        return
    target = unassigned[0]
    for v in range(k):
        trial = dict(assign)
        trial[target] = v
        yield from _solutions(trial, list(pending), k, total)


def extract_decomposition(f: FiniteFunction) -> DecompositionPair:
    """Recover some (g, h) with recompose(g, h) = f.

    Requires a symmetric input with all variables essential, gap 2, and
    min(n, k) > 3. h is f on all-distinct points and 0 elsewhere; g is
    solved per multiset from the repeated-point equations
    sum_v C(mult(v), 2) * g(M - {v, v}) = f(M), by unit-coefficient
    propagation with a small backtracking search over the rest (Z_k has
    zero divisors, so plain elimination is not enough). Solutions are not
    unique; among the first few hundred the solver prefers one whose g has
    n - 2 essential variables and the gap matching the input's gap index
    (2 below index 3, full otherwise), falling back to any valid solution.
    Some class members have no solution at all (the diagonal equations can
    demand 2x = odd mod even k); those raise DecompositionError.
    """
    k, n = f.k, f.n
    if min(n, k) <= 3:
        raise PreconditionError(f"requires 3 < min(n, k), got n={n}, k={k}")
    if not is_symmetric(f):
        raise PreconditionError("input is not symmetric")
    if essential_count(f) != n:
        raise PreconditionError("input must depend on all of its variables")
    if gap(f) != 2:
        raise PreconditionError(f"input has gap {gap(f)}, expected 2")

    h = FiniteFunction(
        k, n, (v if is_all_distinct(p) else 0 for p, v in zip(iter_points(k, n), f.table))
    )
    unknowns = multisets(k, n - 2)
    unknown_index = {m: i for i, m in enumerate(unknowns)}
    equations = []
    for big in multisets(k, n):
        counts = Counter(big)
        if len(counts) == n:
            continue
        coeffs: dict[int, int] = {}
        for v, c in counts.items():
            if c >= 2:
                reduced = list(big)
                reduced.remove(v)
                reduced.remove(v)
                idx = unknown_index[tuple(reduced)]
                coeffs[idx] = coeffs.get(idx, 0) + math.comb(c, 2)
        equations.append((coeffs, f.table[index_of(big, k)]))

    from .minors import gap_index, gap_profile

    want_gap = 2 if gap_index(f) > 2 else n - 2

    def build(solution):
        return expand(
            SymmetricSpec(
                k, n - 2, {m: solution[i] for m, i in unknown_index.items()}
            )
        )

    g = None
    for count, solution in enumerate(_solutions({}, equations, k, len(unknowns))):
        candidate = build(solution)
        if g is None:
            g = candidate
        p = gap_profile(candidate)
        if p.ess == n - 2 and (p.ess < 2 or p.gap == want_gap):
            g = candidate
            break
        if count >= 500:
            break
    if g is None:
        raise DecompositionError(
            "no pairwise-conjunction decomposition exists for this table"
        )
    rebuilt = recompose(g, h)
    if rebuilt.table != f.table:
        raise DecompositionError("solver produced a non-reproducing pair")
    return DecompositionPair(g, h)


def diagonal_values(f: FiniteFunction) -> tuple[int, ...]:
    """The k values f(c, c, ..., c) for c in K."""
    if f.n == 0:
        return (f.table[0],) * f.k
    return tuple(f((c,) * f.n) for c in range(f.k))
