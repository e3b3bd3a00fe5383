"""Exhaustive enumeration of symmetric functions and the gap census.

The population is the multiset representation: a symmetric function of
arity n over K is one value per size-n multiset, so there are
k^C(k+n-1, n) of them. The census classifies every one by (essential
count, gap).

For a multiset-determined table the whole profile reduces to equality
patterns on the multiset vector:

* a non-constant multiset-determined function has every variable
  essential (changing one coordinate walks between any two multisets);
* all of its one-step identification minors agree up to relabeling, and
  the minor m(y, z_3, ..., z_n) = F({y, y, z_3, ..., z_n}) is symmetric
  in the z's, so its essential count is [y essential] + (n-2)*[z essential];
* y is fictive iff F is constant on {y, y} + alpha over y for each alpha,
  z is fictive iff F({y, y, z} + alpha) does not depend on z.

Both checks are finite lists of index groups computed once per (k, n),
which is what lets the scan over k^C(k+n-1, n) candidates run as batched
integer comparisons (numpy). The gap index of the few non-trivial-gap
functions is computed honestly by the generic minor closure. Equivalence
of the fast path with the generic profile is covered by tests.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb

import numpy as np

from .core import BudgetError, DomainError, FiniteFunction, iter_points
from .minors import GapProfile, gap_index, gap_profile
from .symmetric import SymmetricSpec, compress, expand, multisets

DEFAULT_BUDGET = 10**8
_BATCH = 1 << 18


@dataclass(frozen=True)
class SymmetryIndex:
    """Precomputed multiset bookkeeping for one (k, n)."""

    k: int
    n: int
    msets: tuple[tuple[int, ...], ...]
    index: dict
    y_groups: tuple[tuple[int, ...], ...]
    z_groups: tuple[tuple[int, ...], ...]
    orbit_of_point: tuple[int, ...]


@functools.lru_cache(maxsize=64)
def symmetry_index(k: int, n: int) -> SymmetryIndex:
    msets = tuple(multisets(k, n))
    index = {m: i for i, m in enumerate(msets)}
    y_groups = []
    if n >= 2:
        for alpha in multisets(k, n - 2):
            y_groups.append(
                tuple(index[tuple(sorted(alpha + (y, y)))] for y in range(k))
            )
    z_groups = []
    if n >= 3:
        for y in range(k):
            for alpha in multisets(k, n - 3):
                z_groups.append(
                    tuple(index[tuple(sorted(alpha + (y, y, z)))] for z in range(k))
                )
    orbit = tuple(index[tuple(sorted(p))] for p in iter_points(k, n))
    return SymmetryIndex(k, n, msets, index, tuple(y_groups), tuple(z_groups), orbit)


def symmetric_spec_count(k: int, n: int) -> int:
    return k ** comb(k + n - 1, n)


def spec_to_function(k: int, n: int, spec: tuple[int, ...]) -> FiniteFunction:
    """Expand a multiset value tuple (canonical order) to a full table."""
    orbit = symmetry_index(k, n).orbit_of_point
    return FiniteFunction(k, n, (spec[o] for o in orbit))


def spec_of_index(k: int, n: int, idx: int) -> tuple[int, ...]:
    m = comb(k + n - 1, n)
    digits = []
    for _ in range(m):
        idx, r = divmod(idx, k)
        digits.append(r)
    return tuple(reversed(digits))


def enumerate_symmetric(
    k: int,
    n: int,
    *,
    budget: int = DEFAULT_BUDGET,
    sample: int | None = None,
    seed: int | None = None,
):
    """Yield symmetric functions, each exactly once (or a seeded sample).

    Exhaustive mode refuses politely when the candidate count exceeds the
    budget; sampling mode requires an explicit seed and yields uniformly
    random multiset assignments.
    """
    m = comb(k + n - 1, n)
    if sample is not None:
        if seed is None:
            raise DomainError("sampling mode requires an explicit seed")
        import random

        for i in range(sample):
            rng = random.Random((seed << 24) ^ i)
            spec = tuple(rng.randrange(k) for _ in range(m))
            yield spec_to_function(k, n, spec)
        return
    total = symmetric_spec_count(k, n)
    if total > budget:
        raise BudgetError(total, budget)
    orbit = symmetry_index(k, n).orbit_of_point
    for spec in itertools.product(range(k), repeat=m):
        yield FiniteFunction(k, n, tuple(spec[o] for o in orbit))


def spec_ess_gap(k: int, n: int, spec: tuple[int, ...]) -> tuple[int, int | None]:
    """(essential count, gap) of the symmetric function with this spec."""
    first = spec[0]
    if all(v == first for v in spec):
        return 0, None
    if n < 2:
        return n, None
    idx = symmetry_index(k, n)
    y_ess = False
    for grp in idx.y_groups:
        v0 = spec[grp[0]]
        if any(spec[t] != v0 for t in grp[1:]):
            y_ess = True
            break
    z_ess = False
    for grp in idx.z_groups:
        v0 = spec[grp[0]]
        if any(spec[t] != v0 for t in grp[1:]):
            z_ess = True
            break
    minor_ess = (1 if y_ess else 0) + (n - 2) * (1 if z_ess else 0)
    return n, n - minor_ess


def symmetric_gap_profile(f: FiniteFunction) -> GapProfile:
    """Fast profile for multiset-determined tables (index computed honestly)."""
    spec = compress(f).as_tuple()
    ess, g = spec_ess_gap(f.k, f.n, spec)
    if ess < 2:
        return GapProfile(ess, None, None, None)
    ind = gap_index(f)
    label = (ess, g, f.k) if g >= 2 else None
    return GapProfile(ess, g, ind, label)


@dataclass
class Census:
    """Counts of symmetric functions per (essential count, gap) bucket."""

    k: int
    n: int
    population: int
    counts: dict
    ind_distribution: dict

    @property
    def nontrivial_count(self) -> int:
        return sum(
            c for (e, g), c in self.counts.items() if g is not None and g >= 2
        )

    def to_doc(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "population": self.population,
            "counts": [
                {"ess": e, "gap": g, "count": c}
                for (e, g), c in sorted(
                    self.counts.items(), key=lambda kv: (kv[0][0], kv[0][1] or 0)
                )
            ],
            "ind_distribution": [
                {"ind": i, "count": c}
                for i, c in sorted(self.ind_distribution.items())
            ],
            "nontrivial_count": self.nontrivial_count,
        }


def _scan_range(k: int, n: int, start: int, stop: int):
    """Bucket counts plus non-trivial-gap spec indices for one index range."""
    idx = symmetry_index(k, n)
    m = len(idx.msets)
    counts: Counter = Counter()
    nontrivial: list[int] = []
    weights = np.array([k ** (m - 1 - j) for j in range(m)], dtype=np.int64)
    for lo in range(start, stop, _BATCH):
        hi = min(lo + _BATCH, stop)
        a = np.arange(lo, hi, dtype=np.int64)
        v = ((a[:, None] // weights[None, :]) % k).astype(np.int8)
        const = np.all(v == v[:, :1], axis=1)
        if n < 2:
            nc = int(const.sum())
            counts[(0, None)] += nc
            counts[(n, None)] += len(a) - nc
            continue
        y_fict = np.ones(len(a), dtype=bool)
        for grp in idx.y_groups:
            g0 = v[:, grp[0]]
            for t in grp[1:]:
                y_fict &= v[:, t] == g0
        z_fict = np.ones(len(a), dtype=bool)
        for grp in idx.z_groups:
            g0 = v[:, grp[0]]
            for t in grp[1:]:
                z_fict &= v[:, t] == g0
        ess_n = ~const
        counts[(0, None)] += int(const.sum())
        for y_f, z_f in itertools.product((False, True), repeat=2):
            mask = ess_n & (y_fict == y_f) & (z_fict == z_f)
            c = int(mask.sum())
            if not c:
                continue
            minor_ess = (0 if y_f else 1) + (n - 2) * (0 if z_f else 1)
            g = n - minor_ess
            counts[(n, g)] += c
            if g >= 2:
                nontrivial.extend(int(i) for i in a[mask])
    return counts, nontrivial


def census(
    k: int,
    n: int,
    *,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
    override: bool = False,
) -> Census:
    """Classify every symmetric function of arity n over K by (ess, gap)."""
    total = symmetric_spec_count(k, n)
    if total > budget and not override:
        raise BudgetError(total, budget)
    if workers <= 1 or total < 4 * _BATCH:
        counts, nontrivial = _scan_range(k, n, 0, total)
    else:
        step = -(-total // workers)
        ranges = [(k, n, s, min(s + step, total)) for s in range(0, total, step)]
        counts = Counter()
        nontrivial = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part_counts, part_non in pool.map(_scan_worker, ranges):
                counts.update(part_counts)
                nontrivial.extend(part_non)
    ind_dist: Counter = Counter()
    for spec_idx in nontrivial:
        f = spec_to_function(k, n, spec_of_index(k, n, spec_idx))
        ind_dist[gap_index(f)] += 1
    return Census(k, n, total, dict(counts), dict(ind_dist))


def _scan_worker(args):
    return _scan_range(*args)


@functools.lru_cache(maxsize=8)
def _nontrivial_gap_specs_cached(k: int, n: int, budget: int):
    return tuple(_nontrivial_gap_specs_impl(k, n, budget))


def nontrivial_gap_specs(
    k: int, n: int, *, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    return list(_nontrivial_gap_specs_cached(k, n, budget))


def _nontrivial_gap_specs_impl(k: int, n: int, budget: int) -> list[tuple[int, ...]]:
    """Multiset specs of every symmetric function with gap at least 2.

    Scans the full spec space when that fits the budget. For n = 3 beyond
    the budget the class is enumerated structurally: gap >= 2 at n = 3
    means the one-step minor m(y, z) = F({y, y, z}) has at most one
    essential variable, i.e. F on repeated-value multisets is a function
    of the lone value only (phi) or of the doubled value only (psi); both
    branches plus free values on all-distinct multisets enumerate the
    class exactly, by the definition of the gap.
    """
    total = symmetric_spec_count(k, n)
    if total <= budget:
        _, nontrivial = _scan_range(k, n, 0, total)
        return [spec_of_index(k, n, i) for i in nontrivial]
    if n != 3:
        raise BudgetError(total, budget)
    idx = symmetry_index(k, 3)
    msets = idx.msets
    dis_positions = [i for i, m in enumerate(msets) if len(set(m)) == 3]
    out: set[tuple[int, ...]] = set()
    for by_lone in (True, False):
        for coeffs in itertools.product(range(k), repeat=k):
            base = [0] * len(msets)
            for i, m in enumerate(msets):
                counts = Counter(m)
                if len(counts) == 1:
                    base[i] = coeffs[m[0]]
                elif len(counts) == 2:
                    doubled = next(v for v, c in counts.items() if c == 2)
                    lone = next(v for v, c in counts.items() if c == 1)
                    base[i] = coeffs[lone] if by_lone else coeffs[doubled]
            for dis_vals in itertools.product(range(k), repeat=len(dis_positions)):
                spec = list(base)
                for pos, v in zip(dis_positions, dis_vals):
                    spec[pos] = v
                t = tuple(spec)
                ess, g = spec_ess_gap(k, 3, t)
                if g is not None and g >= 2:
                    out.add(t)
    return sorted(out)


def gap_n_images(k: int, n: int) -> set[tuple[int, ...]]:
    """Tables of every valid full-gap construction at (k, n), deduplicated."""
    from .symmetric import GapNSpec, construct_gap_n
    from .core import PreconditionError

    if not 2 <= n <= k:
        return set()
    subsets = list(itertools.combinations(range(k), n))
    images: set[tuple[int, ...]] = set()
    for a0 in range(k):
        for combo in itertools.product(range(k), repeat=len(subsets)):
            try:
                f = construct_gap_n(
                    k, n, GapNSpec(a0, dict(zip(subsets, combo)))
                )
            except PreconditionError:
                continue
            images.add(f.table)
    return images


def gap2_ternary_images(k: int) -> set[tuple[int, ...]]:
    """Tables of every valid ternary gap-2 construction, both families."""
    from .symmetric import TernaryGap2Spec, construct_gap2_ternary
    from .core import PreconditionError

    subsets = list(itertools.combinations(range(k), 3))
    images: set[tuple[int, ...]] = set()
    for family in ("minority", "majority"):
        for a in itertools.product(range(k), repeat=k):
            if len(set(a)) < 2:
                continue
            for combo in itertools.product(range(k), repeat=len(subsets)):
                f = construct_gap2_ternary(
                    k, TernaryGap2Spec(family, a, dict(zip(subsets, combo)))
                )
                images.add(f.table)
    return images
