"""Factor-critical and near-factor-critical recognition.

Two independent routes decide near-factor-criticality (NFC):

* ``is_nfc_by_definition`` deletes each vertex in turn and asks the matching
  engine for a near-factor of what is left.
* ``is_nfc_by_theorem`` uses the structural characterisation. An even-order
  connected graph is NFC exactly when it has a perfect matching. A
  disconnected graph is NFC exactly when either every component is even and
  has a perfect matching, or there are exactly two components and both are
  factor-critical.

Every verdict carries a witness that can be re-checked without trusting
the code that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Optional, Union

from .graph import Graph, _bfs_components, _check_vertex_set, components, count_odd_components, delete_vertices
from .matching import (
    Matching,
    InvalidMatchingError,
    deficiency_barrier,
    find_near_factor,
    has_perfect_matching,
    max_matching,
    validate_matching,
)

__all__ = [
    "CaseTag",
    "StructuralCase",
    "FailingVertex",
    "ParityFailure",
    "TutteWitness",
    "Certificate",
    "CriticalityVerdict",
    "BoundExceededError",
    "Lemma1PreconditionError",
    "is_factor_critical",
    "is_nfc_by_definition",
    "is_nfc_by_theorem",
    "check_perfect_matching",
    "check_near_factor",
    "tutte_witness",
    "check_lemma1",
    "recheck",
    "DEFAULT_TUTTE_BOUND",
]

DEFAULT_TUTTE_BOUND = 20


class BoundExceededError(ValueError):
    """An exponential search was requested beyond its configured bound."""


class Lemma1PreconditionError(ValueError):
    pass


class CaseTag(str, Enum):
    CONNECTED_WITH_1_FACTOR = "connected-with-1-factor"
    ALL_EVEN_COMPONENTS = "all-even-components"
    TWO_FACTOR_CRITICAL_COMPONENTS = "two-factor-critical-components"


@dataclass(frozen=True)
class StructuralCase:
    tag: CaseTag

    def to_dict(self) -> dict:
        return {"kind": "structural-case", "tag": self.tag.value}


@dataclass(frozen=True)
class FailingVertex:
    """Deleting ``vertex`` leaves a graph without the required factor."""

    vertex: int

    def to_dict(self) -> dict:
        return {"kind": "failing-vertex", "vertex": self.vertex}


@dataclass(frozen=True)
class ParityFailure:
    n: int

    def to_dict(self) -> dict:
        return {"kind": "parity-failure", "n": self.n}


@dataclass(frozen=True)
class TutteWitness:
    """A vertex set ``s`` whose removal leaves ``odd_count`` odd components."""

    s: frozenset[int]
    odd_count: int

    def to_dict(self) -> dict:
        return {"kind": "tutte-set", "s": sorted(self.s), "odd_count": self.odd_count}


@dataclass(frozen=True)
class Certificate:
    """Positive evidence from a definitional check.

    ``matchings[v]`` is the factor found in ``G - v``, in the original vertex
    ids. For a perfect-matching or near-factor check the single entry is
    keyed by ``-1``.
    """

    matchings: dict[int, Matching] = field(hash=False)

    def to_dict(self) -> dict:
        return {
            "kind": "certificate",
            "matchings": {str(v): [list(e) for e in m.sorted_edges()] for v, m in sorted(self.matchings.items())},
        }


Witness = Union[StructuralCase, FailingVertex, ParityFailure, TutteWitness, Certificate]


@dataclass(frozen=True)
class CriticalityVerdict:
    property: str
    route: str
    holds: bool
    witness: Witness
    n: int
    m: int

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "witness": self.witness.to_dict(),
            "route": self.route,
            "n": self.n,
            "m": self.m,
        }

    def summary(self) -> str:
        """One line; witness values are left to ``to_dict``."""
        w = self.witness
        if isinstance(w, StructuralCase):
            detail = w.tag.value
        elif isinstance(w, Certificate):
            detail = f"certificate with {len(w.matchings)} matching(s)"
        else:
            detail = f"{w.to_dict()['kind']} witness"
        return f"{self.property}: {'holds' if self.holds else 'fails'} [{self.route}] {detail}"


def _fmt_set(s: Iterable[int]) -> str:
    s = sorted(s)
    return "{" + ", ".join(map(str, s)) + "}" if s else "∅"


def _verdict(g: Graph, prop: str, route: str, holds: bool, witness: Witness) -> CriticalityVerdict:
    return CriticalityVerdict(prop, route, holds, witness, g.n, g.m)


def _lift(m: Matching, mapping: dict[int, int]) -> Matching:
    back = {new: old for old, new in mapping.items()}
    return Matching.from_pairs((back[u], back[v]) for u, v in m.edges)


# --------------------------------------------------------------------------
# definitional recognisers


def is_factor_critical(g: Graph) -> CriticalityVerdict:
    """Check that ``g - v`` has a perfect matching for every vertex ``v``."""
    found: dict[int, Matching] = {}
    for v in range(g.n):
        sub, mapping = delete_vertices(g, (v,))
        m = max_matching(sub)
        if 2 * len(m) != sub.n:
            return _verdict(g, "factor-critical", "definition", False, FailingVertex(v))
        found[v] = _lift(m, mapping)
    return _verdict(g, "factor-critical", "definition", True, Certificate(found))


def _factor_critical_fast(g: Graph) -> Optional[int]:
    # Returns a failing vertex, or None when g is factor-critical.
    for v in range(g.n):
        if not has_perfect_matching(delete_vertices(g, (v,))[0]):
            return v
    return None


def is_nfc_by_definition(g: Graph) -> CriticalityVerdict:
    """Check that ``g - v`` has a near-factor for every vertex ``v``."""
    found: dict[int, Matching] = {}
    for v in range(g.n):
        sub, mapping = delete_vertices(g, (v,))
        nf = find_near_factor(sub)
        if nf is None:
            return _verdict(g, "nfc", "definition", False, FailingVertex(v))
        found[v] = _lift(nf.matching, mapping)
    return _verdict(g, "nfc", "definition", True, Certificate(found))


# --------------------------------------------------------------------------
# structural recogniser


def _induced(g: Graph, keep: frozenset[int]) -> tuple[Graph, dict[int, int]]:
    return delete_vertices(g, frozenset(range(g.n)) - keep)


def is_nfc_by_theorem(g: Graph) -> CriticalityVerdict:
    """Decide NFC from the component structure plus matching calls.

    Failures come with a failing vertex or Tutte set that the definitional
    checker can confirm.
    """
    if g.n % 2:
        return _verdict(g, "nfc", "theorem", False, ParityFailure(g.n))
    if g.n == 0:
        return _verdict(g, "nfc", "theorem", True, StructuralCase(CaseTag.ALL_EVEN_COMPONENTS))

    comps = components(g).components
    if len(comps) == 1:
        if has_perfect_matching(g):
            return _verdict(g, "nfc", "theorem", True, StructuralCase(CaseTag.CONNECTED_WITH_1_FACTOR))
        s, _ = deficiency_barrier(g)
        return _verdict(g, "nfc", "theorem", False, TutteWitness(s, count_odd_components(g, s)))

    even = [c for c in comps if len(c) % 2 == 0]
    odd = [c for c in comps if len(c) % 2]
    if even and odd:
        # An even component minus a vertex and any odd component each leave
        # a vertex exposed.
        return _verdict(g, "nfc", "theorem", False, FailingVertex(min(even[0])))

    if not odd:
        for i, c in enumerate(comps):
            sub, _ = _induced(g, c)
            if not has_perfect_matching(sub):
                other = comps[1] if i == 0 else comps[0]
                return _verdict(g, "nfc", "theorem", False, FailingVertex(min(other)))
        return _verdict(g, "nfc", "theorem", True, StructuralCase(CaseTag.ALL_EVEN_COMPONENTS))

    if len(odd) != 2:
        return _verdict(g, "nfc", "theorem", False, FailingVertex(min(comps[0])))
    for c in comps:
        sub, mapping = _induced(g, c)
        bad = _factor_critical_fast(sub)
        if bad is not None:
            back = {new: old for old, new in mapping.items()}
            return _verdict(g, "nfc", "theorem", False, FailingVertex(back[bad]))
    return _verdict(g, "nfc", "theorem", True, StructuralCase(CaseTag.TWO_FACTOR_CRITICAL_COMPONENTS))


# --------------------------------------------------------------------------
# matching existence checks with witnesses


def check_perfect_matching(g: Graph) -> CriticalityVerdict:
    """Perfect-matching verdict; failures carry a Tutte set or parity failure."""
    if g.n % 2:
        return _verdict(g, "perfect-matching", "definition", False, ParityFailure(g.n))
    m = max_matching(g)
    if 2 * len(m) == g.n:
        return _verdict(g, "perfect-matching", "definition", True, Certificate({-1: m}))
    s, _ = deficiency_barrier(g)
    return _verdict(g, "perfect-matching", "definition", False, TutteWitness(s, count_odd_components(g, s)))


def check_near_factor(g: Graph) -> CriticalityVerdict:
    """Near-factor verdict; a Tutte set with ``odd_count > |S| + 1`` rules one out."""
    if g.n % 2 == 0:
        return _verdict(g, "near-factor", "definition", False, ParityFailure(g.n))
    nf = find_near_factor(g)
    if nf is not None:
        return _verdict(g, "near-factor", "definition", True, Certificate({-1: nf.matching}))
    s, _ = deficiency_barrier(g)
    return _verdict(g, "near-factor", "definition", False, TutteWitness(s, count_odd_components(g, s)))


def tutte_witness(g: Graph, bound: int = DEFAULT_TUTTE_BOUND) -> Optional[TutteWitness]:
    """Smallest set S with more than |S| odd components in ``g - S``.

    Subsets are scanned by size, then lexicographically, so the answer is
    the minimal witness. Returns ``None`` when the Tutte condition holds.
    Raises :class:`BoundExceededError` if ``g.n > bound``.
    """
    if g.n > bound:
        raise BoundExceededError(f"exhaustive Tutte search refused for n={g.n} > bound {bound}")
    n = g.n
    # o(G - S) <= n - |S|, so only |S| < n/2 can violate.
    for k in range((n + 1) // 2):
        for s in combinations(range(n), k):
            odd = count_odd_components(g, s)
            if odd > k:
                return TutteWitness(frozenset(s), odd)
    return None


# --------------------------------------------------------------------------
# Lemma check


def check_lemma1(g: Graph, s: Iterable[int], h: Iterable[int], v: int, m: Matching) -> bool:
    """Does some edge of ``m`` join ``s`` to ``h``?

    Preconditions: ``g`` connected, ``h`` the vertex set of an odd component
    of ``g - s``, ``v`` outside ``h``, ``m`` a near-factor of ``g - v``
    (given in the ids of ``g``) whose exposed vertex is outside ``h``.
    Each violated precondition raises :class:`Lemma1PreconditionError`.
    """
    s = _check_vertex_set(g, s)
    h = _check_vertex_set(g, h)
    if not 0 <= v < g.n:
        raise Lemma1PreconditionError(f"vertex {v} out of range")
    adj = g.adjacency
    if g.n and len(_bfs_components(adj, g.n, frozenset())) != 1:
        raise Lemma1PreconditionError("graph is not connected")
    if len(h) % 2 == 0 or not h or h & s or not _is_component(adj, h, s):
        raise Lemma1PreconditionError(f"{_fmt_set(h)} is not an odd component of G - S")
    if v in h:
        raise Lemma1PreconditionError(f"vertex {v} lies in H")
    try:
        validate_matching(g, m)
    except InvalidMatchingError as exc:
        raise Lemma1PreconditionError(f"M is not a matching: {exc}") from None
    sat = m.saturated
    if v in sat:
        raise Lemma1PreconditionError(f"M covers the deleted vertex {v}")
    if len(sat) != g.n - 2:
        raise Lemma1PreconditionError(f"M leaves {g.n - 1 - len(sat)} vertices of G - v exposed, not one")
    exposed = next(x for x in range(g.n) if x != v and x not in sat)
    if exposed in h:
        raise Lemma1PreconditionError(f"u(M) = {exposed} lies in H")
    return any((a in s and b in h) or (a in h and b in s) for a, b in m.edges)


def _is_component(adj, h: frozenset[int], removed: frozenset[int]) -> bool:
    # h is connected in G - removed and has no edge leaving it there.
    start = next(iter(h))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in removed or y in seen:
                continue
            if y not in h:
                return False
            seen.add(y)
            stack.append(y)
    return len(seen) == len(h)


# --------------------------------------------------------------------------
# independent re-validation


def recheck(g: Graph, verdict: CriticalityVerdict) -> bool:
    """Confirm that a verdict's witness really supports its claim.

    Failing vertices are re-tested by direct deletion, Tutte sets by
    counting odd components, certificates by validating every matching and
    structural tags against the component structure.
    """
    w = verdict.witness
    prop = verdict.property
    if isinstance(w, ParityFailure):
        if verdict.holds or w.n != g.n:
            return False
        return {"nfc": g.n % 2 == 1, "factor-critical": g.n % 2 == 0,
                "perfect-matching": g.n % 2 == 1, "near-factor": g.n % 2 == 0}[prop]
    if isinstance(w, FailingVertex):
        if verdict.holds or not 0 <= w.vertex < g.n:
            return False
        sub, _ = delete_vertices(g, (w.vertex,))
        if prop == "nfc":
            return find_near_factor(sub) is None
        if prop == "factor-critical":
            return not has_perfect_matching(sub)
        return False
    if isinstance(w, TutteWitness):
        if verdict.holds or count_odd_components(g, w.s) != w.odd_count:
            return False
        k = len(w.s)
        if prop in ("perfect-matching", "factor-critical"):
            return w.odd_count > k
        if prop == "near-factor":
            return w.odd_count > k + 1
        if prop == "nfc":
            # a connected graph without a 1-factor is not NFC
            return len(components(g)) == 1 and w.odd_count > k
        return False
    if isinstance(w, Certificate):
        if not verdict.holds:
            return False
        return _recheck_certificate(g, prop, w)
    if isinstance(w, StructuralCase):
        if not verdict.holds or prop != "nfc":
            return False
        comps = components(g).components
        sizes = [len(c) for c in comps]
        if w.tag is CaseTag.CONNECTED_WITH_1_FACTOR:
            return len(comps) == 1 and has_perfect_matching(g)
        if w.tag is CaseTag.ALL_EVEN_COMPONENTS:
            return all(x % 2 == 0 and has_perfect_matching(_induced(g, c)[0]) for x, c in zip(sizes, comps))
        if w.tag is CaseTag.TWO_FACTOR_CRITICAL_COMPONENTS:
            return len(comps) == 2 and all(
                _factor_critical_fast(_induced(g, c)[0]) is None for c in comps
            )
    return False


def _recheck_certificate(g: Graph, prop: str, w: Certificate) -> bool:
    def exposed(m: Matching, removed: Optional[int]) -> list[int]:
        sat = m.saturated
        return [x for x in range(g.n) if x != removed and x not in sat]

    try:
        for m in w.matchings.values():
            validate_matching(g, m)
    except InvalidMatchingError:
        return False
    if prop in ("perfect-matching", "near-factor"):
        if set(w.matchings) != {-1}:
            return False
        want = 0 if prop == "perfect-matching" else 1
        return len(exposed(w.matchings[-1], None)) == want
    if set(w.matchings) != set(range(g.n)):
        return False
    want = 1 if prop == "nfc" else 0
    for v, m in w.matchings.items():
        if v in m.saturated or len(exposed(m, v)) != want:
            return False
    return True
