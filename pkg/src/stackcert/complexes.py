"""Simplicial complexes with a canonical facet-list representation.

Vertices are contiguous 0-based integers ``0..n-1``.  A complex is stored by
its facets (maximal faces) as sorted vertex tuples in sorted order, so
structural equality and hashing are decidable.  Faces are manipulated
internally as integer bitmasks.

Conventions:

* the empty complex ``{()}`` (single empty facet) has dimension -1 and is a
  legal value; the void complex (no faces at all) is rejected;
* a vertex slot ``v`` that appears in no face is allowed.  ``{v}`` is then a
  missing face (its only proper subset, the empty face, is present), so every
  ``delta_i`` excludes unused slots as well.
"""

from __future__ import annotations

import math
from functools import cached_property, lru_cache
from itertools import combinations

from .errors import InputError, ResourceBudgetError

Face = tuple[int, ...]

# Bitmask scans in delta_i are Theta(2^n * n); refuse inputs where that
# stops being a desk-scale computation.
_DELTA_I_MAX_VERTICES = 20


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _tuple_of(mask: int) -> Face:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _submasks(mask: int):
    """All submasks of ``mask``, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """Immutable simplicial complex; build instances via :func:`from_facets`."""

    def __init__(self, n: int, facets: tuple[Face, ...]):
        self.n = n
        self.facets = facets

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask_of(f) for f in self.facets)

    @cached_property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @cached_property
    def face_masks(self) -> frozenset[int]:
        out = set()
        for fm in self.facet_masks:
            out.update(_submasks(fm))
        return frozenset(out)

    def has_face(self, face) -> bool:
        return _mask_of(face) in self.face_masks

    def faces(self, card: int | None = None) -> list[Face]:
        """All faces as sorted tuples; restricted to cardinality ``card`` if given."""
        masks = self.face_masks
        if card is not None:
            masks = [m for m in masks if m.bit_count() == card]
        return sorted(_tuple_of(m) for m in masks)

    @cached_property
    def num_faces(self) -> int:
        return len(self.face_masks)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        return f"SimplicialComplex(n={self.n}, facets={list(self.facets)!r})"


def from_facets(n: int, faces) -> SimplicialComplex:
    """Build the complex generated by ``faces`` on vertex set ``0..n-1``.

    Non-maximal faces are absorbed.  Raises :class:`InputError` on vertex ids
    outside range, duplicate vertices inside a face, or an empty face list
    (the void complex is not representable).
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    masks = set()
    stated = list(faces)
    if not stated:
        raise InputError("no faces given; the void complex is not representable")
    for face in stated:
        vs = list(face)
        if len(set(vs)) != len(vs):
            raise InputError(f"duplicate vertex inside face {vs}")
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InputError(f"vertex id {v!r} out of range for n={n}")
        masks.add(_mask_of(vs))
    maximal = [
        m for m in masks if not any(m != o and m & o == m for o in masks)
    ]
    facets = tuple(sorted(_tuple_of(m) for m in maximal))
    return SimplicialComplex(n, facets)


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """Face counts ``(f_-1, f_0, ..., f_dim)`` with ``f_-1 = 1``."""
    counts = [0] * (delta.dim + 2)
    for m in delta.face_masks:
        counts[m.bit_count()] += 1
    return tuple(counts)


def h_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """Integer sequence ``(h_0, ..., h_d)`` with ``d = dim + 1``.

    ``h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_(j-1)``, evaluated exactly.
    """
    f = f_vector(delta)
    d = delta.dim + 1
    return tuple(
        sum(
            (-1) ** (i - j) * math.comb(d - j, i - j) * f[j]
            for j in range(i + 1)
        )
        for i in range(d + 1)
    )


def missing_faces(
    delta: SimplicialComplex, max_card: int | None = None
) -> list[Face]:
    """Minimal non-faces: subsets not in the complex all of whose proper
    subsets are faces.

    No missing face can have more than ``dim + 2`` vertices, so the unbounded
    call caps candidates there.  Candidates of higher cardinality are found by
    one-element extensions of existing faces.
    """
    cap = delta.dim + 2
    if max_card is not None:
        cap = min(cap, max_card)
    faces = delta.face_masks
    found = set()
    if cap >= 1:
        for v in range(delta.n):
            if (1 << v) not in faces:
                found.add(1 << v)
    for fm in faces:
        c = fm.bit_count()
        if c + 1 > cap or c + 1 < 2:
            continue
        for v in range(delta.n):
            bit = 1 << v
            if fm & bit:
                continue
            cand = fm | bit
            if cand in faces or cand in found:
                continue
            if all((cand ^ (1 << u)) in faces for u in _tuple_of(cand)):
                found.add(cand)
    return sorted((_tuple_of(m) for m in found), key=lambda t: (len(t), t))


def delta_i(delta: SimplicialComplex, i: int) -> SimplicialComplex:
    """The complex whose missing faces are those of ``delta`` with at most
    ``i + 1`` vertices.

    Equivalently: all vertex sets whose subsets of cardinality <= i+1 are all
    faces of ``delta``.
    """
    if i < 0:
        raise InputError(f"delta_i requires i >= 0, got {i}")
    n = delta.n
    if n > _DELTA_I_MAX_VERTICES:
        raise ResourceBudgetError(
            f"delta_i scans 2^n subsets; n={n} exceeds the cap of "
            f"{_DELTA_I_MAX_VERTICES}",
            budget=_DELTA_I_MAX_VERTICES,
            used=n,
        )
    blocked = {_mask_of(f) for f in missing_faces(delta, i + 1)}
    size = 1 << n
    free = bytearray(size)
    free[0] = 1
    for s in range(1, size):
        if s in blocked:
            continue
        m = s
        ok = True
        while m:
            bit = m & -m
            if not free[s ^ bit]:
                ok = False
                break
            m ^= bit
        free[s] = ok
    facets = []
    for s in range(size):
        if not free[s]:
            continue
        if any(
            not (s & (1 << v)) and free[s | (1 << v)] for v in range(n)
        ):
            continue
        facets.append(_tuple_of(s))
    return SimplicialComplex(n, tuple(sorted(facets)))


def link(
    delta: SimplicialComplex, face, return_map: bool = False
):
    """The link of ``face``: all G disjoint from it with ``face | G`` a face.

    The result is re-indexed over the vertices that actually appear; with
    ``return_map=True`` also returns the tuple mapping new ids to old ids.
    """
    fm = _mask_of(face)
    if fm not in delta.face_masks:
        raise InputError(f"{tuple(sorted(face))} is not a face")
    rest = [gm & ~fm for gm in delta.facet_masks if gm & fm == fm]
    support = 0
    for m in rest:
        support |= m
    vmap = _tuple_of(support)
    index = {v: k for k, v in enumerate(vmap)}
    facets = tuple(
        sorted(tuple(index[v] for v in _tuple_of(m)) for m in rest)
    )
    out = SimplicialComplex(len(vmap), facets)
    if return_map:
        return out, vmap
    return out


def skeleton(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    """All faces with at most ``k + 1`` vertices."""
    if k < 0:
        raise InputError(f"skeleton requires k >= 0, got {k}")
    if k >= delta.dim:
        return delta
    facets = [m for m in delta.face_masks if m.bit_count() == k + 1]
    facets += [
        m for m in delta.facet_masks if m.bit_count() <= k
    ]
    return SimplicialComplex(
        delta.n, tuple(sorted(_tuple_of(m) for m in facets))
    )


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; ``b``'s vertices are shifted by ``a.n``."""
    facets = set()
    for fa in a.facet_masks:
        for fb in b.facet_masks:
            facets.add(fa | (fb << a.n))
    return SimplicialComplex(
        a.n + b.n, tuple(sorted(_tuple_of(m) for m in facets))
    )


def cone(delta: SimplicialComplex) -> SimplicialComplex:
    """Cone over ``delta``; the apex is the new last vertex."""
    return join(delta, SimplicialComplex(1, ((0,),)))


def induced(delta: SimplicialComplex, vertices) -> SimplicialComplex:
    """Induced subcomplex on a vertex subset, re-indexed over that subset."""
    keep = _mask_of(vertices)
    vmap = _tuple_of(keep)
    index = {v: k for k, v in enumerate(vmap)}
    masks = [m for m in delta.face_masks if m & keep == m]
    maximal = [
        m for m in masks if not any(m != o and m & o == m for o in masks)
    ]
    facets = tuple(
        sorted(tuple(index[v] for v in _tuple_of(m)) for m in maximal)
    )
    if not facets:
        facets = ((),)
    return SimplicialComplex(len(vmap), facets)
