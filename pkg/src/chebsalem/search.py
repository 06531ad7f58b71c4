"""Exhaustive search for monic hyperbolic polynomials of span < 4.

Candidates are Chebyshev coordinate vectors [c_0..c_{d-1}, 1] with the free
entries drawn from a finite coefficient set, enumerated in lexicographic
order.  Every filter is certified (Sturm counts and adaptive span
enclosures), so the emitted hit stream is reproducible bit for bit across
runs and thread counts.  Two fixture verifiers re-check the degree-8 table
and the degree-18 vector that motivated the search.
"""

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from multiprocessing import Pool
from typing import Optional

from .chebbasis import ChebCoords, IntPoly, from_cheb
from .errors import FixtureMismatch, SearchSpaceTooLarge, TooFewRealRoots
from .rootcert import (
    DEFAULT_REFINE,
    is_hyperbolic,
    is_kronecker,
    span,
    span_decide_less,
)

CANDIDATE_GUARD = 10**9


@dataclass(frozen=True)
class SearchConfig:
    """What to enumerate and which certified filters to apply.

    ``coeff_set`` feeds coordinates c_0..c_{degree-1}; the leading coordinate
    is pinned to 1.  ``prune_alternating``/``prune_monotone`` are empirical
    shortcuts (adjacent coordinates must not share a sign / absolute values
    must not increase); they are OFF by default because they can discard
    genuine hits, and results computed with them on are labeled pruned.
    """

    degree: int
    coeff_set: tuple
    require_hyperbolic: bool = True
    span_bound: Fraction = Fraction(4)
    kronecker_only: bool = False
    dedupe: bool = True
    prune_alternating: bool = False
    prune_monotone: bool = False

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        cs = tuple(sorted(set(int(c) for c in self.coeff_set)))
        if not cs:
            raise ValueError("coeff_set must be nonempty")
        object.__setattr__(self, "coeff_set", cs)
        object.__setattr__(self, "span_bound", Fraction(self.span_bound))
        if self.span_bound <= 0:
            raise ValueError("span_bound must be positive")

    @property
    def n_candidates(self) -> int:
        return len(self.coeff_set) ** self.degree

    @property
    def pruned(self) -> bool:
        return self.prune_alternating or self.prune_monotone


@dataclass(frozen=True)
class SearchHit:
    """One certified hit: coordinates, polynomial, span interval, dedupe key."""

    coords: ChebCoords
    poly: IntPoly
    span_enclosure: tuple
    kronecker: bool
    canonical_form: IntPoly

    def to_json(self) -> dict:
        lo, hi = self.span_enclosure
        return {
            "coords": list(self.coords),
            "poly": self.poly.to_json(),
            "span": [str(Fraction(lo)), str(Fraction(hi))],
            "kronecker": self.kronecker,
            "canonical": self.canonical_form.to_json(),
        }


def canonical_form(p: IntPoly) -> IntPoly:
    """Robinson-normal representative of p under x -> -x and integer shifts.

    Both p and its monic reflection are shifted so the average of roots lands
    in [0, 1); the representative whose average lies in [0, 1/2] wins, and
    exact ties keep the lexicographically smaller coefficient tuple.
    """
    d = len(p.coeffs) - 1
    if d < 1:
        return p
    if p.lead < 0:
        p = -p
    mean = Fraction(-p[d - 1], d)
    a = p.shift(math.floor(mean))
    mean_a = mean - math.floor(mean)
    q = p.reflect()
    if d % 2:
        q = -q
    mean_b = -mean - math.floor(-mean)
    b = q.shift(math.floor(-mean))
    half = Fraction(1, 2)
    a_ok = mean_a <= half
    b_ok = mean_b <= half
    if a_ok and b_ok:
        return a if a.coeffs <= b.coeffs else b
    return a if a_ok else b


def _passes_prune(coords, config: SearchConfig) -> bool:
    if config.prune_alternating:
        for x, y in zip(coords, coords[1:]):
            if x * y > 0:
                return False
    if config.prune_monotone:
        for x, y in zip(coords, coords[1:]):
            if abs(y) > abs(x):
                return False
    return True


def _certify_candidate(coords, config: SearchConfig) -> Optional[SearchHit]:
    """Runs the certified filter chain; None when any filter rejects."""
    if not _passes_prune(coords, config):
        return None
    p = from_cheb(coords)
    if config.require_hyperbolic and not is_hyperbolic(p):
        return None
    try:
        if span_decide_less(p, config.span_bound) is not True:
            return None
    except TooFewRealRoots:
        return None
    kron = is_kronecker(p)
    if config.kronecker_only and not kron:
        return None
    tol = DEFAULT_REFINE
    enclosure = span(p, tol)
    while not enclosure[1] < config.span_bound:
        tol /= 2**10
        enclosure = span(p, tol)
    return SearchHit(
        coords=tuple(coords),
        poly=p,
        span_enclosure=enclosure,
        kronecker=kron,
        canonical_form=canonical_form(p),
    )


def _enumerate_chunk(args):
    config, prefix = args
    free = config.degree - len(prefix)
    hits = []
    for suffix in product(config.coeff_set, repeat=free):
        coords = prefix + suffix + (1,)
        hit = _certify_candidate(coords, config)
        if hit is not None:
            hits.append(hit)
    return hits


def _thread_budget(threads: Optional[int]) -> int:
    if threads is None:
        threads = os.cpu_count() or 1
    cap = os.environ.get("CHEBSALEM_THREADS")
    if cap:
        threads = min(threads, max(1, int(cap)))
    return max(1, threads)


def enumerate_hits(config: SearchConfig, threads: Optional[int] = None):
    """All certified hits, in lexicographic coordinate order.

    The candidate count is guarded at 10^9.  Parallel runs split the space
    by coordinate prefix and merge chunks back in order, so the returned
    list is identical for every thread count; with ``dedupe`` only the
    lexicographically first representative of each canonical form survives.
    """
    if config.n_candidates > CANDIDATE_GUARD:
        raise SearchSpaceTooLarge(
            "%d candidates exceed the %d guard"
            % (config.n_candidates, CANDIDATE_GUARD)
        )
    threads = _thread_budget(threads)
    if threads == 1:
        chunks = [_enumerate_chunk((config, ()))]
    else:
        plen = 1
        while (
            len(config.coeff_set) ** plen < 4 * threads
            and plen < config.degree
        ):
            plen += 1
        jobs = [
            (config, prefix)
            for prefix in product(config.coeff_set, repeat=plen)
        ]
        with Pool(processes=threads) as pool:
            chunks = pool.map(_enumerate_chunk, jobs, chunksize=1)
    hits = []
    seen = set()
    for chunk in chunks:
        for hit in chunk:
            if config.dedupe:
                key = hit.canonical_form.coeffs
                if key in seen:
                    continue
                seen.add(key)
            hits.append(hit)
    return hits


# ----------------------------------------------------------------------
# Fixture tables
# ----------------------------------------------------------------------

# Degree-8 coordinate vectors, ordered by increasing span; the starred
# labels are the cosine-type (Kronecker) rows.
TABLE8 = (
    ("8a", (31, -30, 27, -22, 17, -11, 7, -4, 1), False),
    ("8b", (1, -1, 1, -1, 1, -1, 1, -1, 1), True),
    ("8c", (29, -27, 25, -20, 16, -11, 7, -4, 1), False),
    ("8d", (17, -16, 15, -12, 10, -7, 4, -3, 1), False),
    ("8e", (0, 0, 0, 0, 0, 0, 0, 0, 1), True),
    ("8f", (0, -1, 0, -1, 0, -1, 0, 0, 1), False),
    ("8g", (13, -12, 12, -10, 8, -6, 4, -3, 1), False),
    ("8h", (13, -13, 12, -10, 8, -6, 4, -3, 1), False),
    ("8i", (5, -5, 4, -4, 3, -3, 2, -2, 1), False),
    ("8j", (7, -6, 6, -5, 4, -4, 2, -2, 1), False),
    ("8k", (1, 0, 0, 0, -1, 0, 0, 0, 1), True),
    ("8l", (17, -16, 14, -12, 10, -7, 6, -4, 1), False),
    ("8m", (7, -6, 6, -6, 5, -3, 3, -3, 1), False),
    ("8n", (3, -3, 3, -3, 3, -3, 2, -2, 1), False),
    ("8o", (1, -4, 1, -3, 1, -2, 1, -1, 1), False),
    ("8p", (-1, 0, 0, 0, 0, 0, 0, 0, 1), True),
    ("8q", (11, -10, 10, -9, 8, -6, 4, -3, 1), False),
    ("8r", (-1, 0, -1, 0, 0, 0, 1, 0, 1), True),
    ("8s", (1, -2, 1, -2, 1, -2, 1, -1, 1), False),
    ("8t", (5, -3, 3, -3, 3, -2, 1, -2, 1), False),
    ("8u", (3, -5, 5, -2, 4, -3, 1, -2, 1), False),
    ("8v", (3, -4, 4, -3, 3, -2, 1, -2, 1), False),
    ("8w", (3, -1, 2, -2, 1, -2, 0, -1, 1), False),
    ("8x", (21, -20, 18, -15, 13, -10, 7, -4, 1), False),
    ("8y", (3, -4, 2, -4, 1, -3, 1, -1, 1), False),
    ("8z", (5, -5, 5, -3, 4, -3, 1, -2, 1), False),
)

DEGREE18 = (15, -15, 15, -14, 14, -13, 12, -11, 10, -9, 8, -7, 6, -5, 4, -3, 2, -2, 1)

SPAN_FLOOR = Fraction(1, 2**160)


@dataclass(frozen=True)
class FixtureRow:
    label: str
    coords: ChebCoords
    poly: IntPoly
    span_enclosure: tuple
    kronecker: bool

    def to_json(self) -> dict:
        lo, hi = self.span_enclosure
        return {
            "label": self.label,
            "coords": list(self.coords),
            "poly": self.poly.to_json(),
            "span": [str(Fraction(lo)), str(Fraction(hi))],
            "kronecker": self.kronecker,
        }


@dataclass(frozen=True)
class FixtureReport:
    rows: tuple
    ordered_by_span: bool

    def to_json(self) -> dict:
        return {
            "rows": [r.to_json() for r in self.rows],
            "ordered_by_span": self.ordered_by_span,
        }


def _check_row(label, coords, starred, degree) -> FixtureRow:
    p = from_cheb(coords)
    if len(p.coeffs) - 1 != degree or not p.is_monic:
        raise FixtureMismatch("%s: expected monic degree %d" % (label, degree))
    if not is_hyperbolic(p):
        raise FixtureMismatch("%s: not hyperbolic" % label)
    if span_decide_less(p, Fraction(4)) is not True:
        raise FixtureMismatch("%s: span not certified < 4" % label)
    kron = is_kronecker(p)
    if kron != starred:
        raise FixtureMismatch(
            "%s: kronecker=%s but fixture says %s" % (label, kron, starred)
        )
    return FixtureRow(label, tuple(coords), p, span(p), kron)


def _certify_increasing(rows):
    """Refine adjacent span enclosures until every pair is disjoint."""
    polys = [r.poly for r in rows]
    encl = [list(r.span_enclosure) for r in rows]
    for i in range(len(rows) - 1):
        tol = DEFAULT_REFINE
        while not encl[i][1] < encl[i + 1][0]:
            if tol < SPAN_FLOOR:
                raise FixtureMismatch(
                    "rows %s and %s: span order not separable"
                    % (rows[i].label, rows[i + 1].label)
                )
            tol /= 2**10
            encl[i] = list(span(polys[i], tol))
            encl[i + 1] = list(span(polys[i + 1], tol))
    return [
        replace(row, span_enclosure=(e[0], e[1])) for row, e in zip(rows, encl)
    ]


def verify_table8() -> FixtureReport:
    """Re-certify the 26 degree-8 rows: hyperbolic, span < 4 in increasing
    order, and Kronecker exactly on the starred rows.

    Raises FixtureMismatch naming the first failing row.
    """
    rows = [
        _check_row(label, coords, starred, 8)
        for label, coords, starred in TABLE8
    ]
    rows = _certify_increasing(rows)
    return FixtureReport(rows=tuple(rows), ordered_by_span=True)


def verify_degree18(width_bound: Fraction = Fraction(1, 10**10)) -> FixtureReport:
    """Certify the degree-18 vector: hyperbolic, span < 4 to within 1e-10,
    and not of cosine type."""
    row = _check_row("deg18", DEGREE18, False, 18)
    tol = DEFAULT_REFINE
    lo, hi = row.span_enclosure
    while hi - lo >= width_bound or not hi < 4:
        tol /= 2**10
        lo, hi = span(row.poly, tol)
    row = replace(row, span_enclosure=(lo, hi))
    return FixtureReport(rows=(row,), ordered_by_span=True)
