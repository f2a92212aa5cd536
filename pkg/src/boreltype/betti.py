"""Brute-force multigraded Betti numbers of monomial quotient rings.

For each multidegree a in the box below the lcm of the generators, the Betti
number of the ideal in homological position i at multidegree a is the rank of
the reduced simplicial homology, one dimension down, of the complex whose
faces are the variable subsets one can divide out of x^a while staying in the
ideal.  Homology ranks are exact: boundary matrices over the rationals with
fraction arithmetic, or over the field with two elements when requested.
The quotient ring's table is the ideal's table shifted one step, plus the free
rank one at the origin.  Regularity, projective dimension, and depth
(variables minus projective dimension) are read off the table.

This module is deliberately independent of the chain machinery: it is the
oracle the chain formula is checked against, so it shares no code path with
it beyond membership tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import GuardExceededError
from .monomial import Monomial, MonomialIdeal, ensure_box

DEFAULT_ORACLE_GUARD = 1 << 16


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex on a vertex subset of {1..n}.

    The empty complex (no faces at all) and the complex whose only face is the
    empty set are distinct: the former has no homology in any dimension, the
    latter has rank one in dimension -1.
    """

    vertices: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        object.__setattr__(self, "vertices", verts)
        faces = frozenset(frozenset(f) for f in self.faces)
        vertex_set = set(verts)
        for f in faces:
            if not f <= vertex_set:
                raise ValueError(f"face {sorted(f)} uses unknown vertices")
            for v in f:
                if f - {v} not in faces:
                    raise ValueError(
                        f"face {sorted(f)} present without its subface "
                        f"{sorted(f - {v})}"
                    )
        object.__setattr__(self, "faces", faces)

    def is_void(self) -> bool:
        return not self.faces

    def dim(self) -> int:
        if not self.faces:
            return -2
        return max(len(f) for f in self.faces) - 1


def upper_koszul_complex(ideal: MonomialIdeal, multidegree) -> SimplicialComplex:
    """Faces are the subsets of the support of a one can divide out of x^a
    while staying inside the ideal."""
    a = Monomial(tuple(multidegree))
    if a.nvars != ideal.nvars:
        raise ValueError("multidegree length does not match the variable count")
    verts = a.support()
    if not ideal.member(a):
        # dividing by more variables only divides further out of the ideal
        return SimplicialComplex(verts, frozenset())
    faces = []
    for k in range(len(verts) + 1):
        for subset in itertools.combinations(verts, k):
            divisor = Monomial(
                tuple(1 if i + 1 in subset else 0 for i in range(a.nvars))
            )
            if ideal.member(a.div(divisor)):
                faces.append(frozenset(subset))
    return SimplicialComplex(verts, frozenset(faces))


def _rank_rational(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = mat[row][col]
        for r in range(row + 1, nrows):
            if mat[r][col] != 0:
                factor = mat[r][col] / inv
                for c in range(col, ncols):
                    mat[r][c] -= factor * mat[row][c]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _rank_mod2(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    words = [sum((x & 1) << c for c, x in enumerate(row)) for row in rows]
    rank = 0
    for col in range(ncols):
        mask = 1 << col
        pivot = None
        for r in range(rank, len(words)):
            if words[r] & mask:
                pivot = r
                break
        if pivot is None:
            continue
        words[rank], words[pivot] = words[pivot], words[rank]
        for r in range(len(words)):
            if r != rank and words[r] & mask:
                words[r] ^= words[rank]
        rank += 1
    return rank


_RANK = {"q": _rank_rational, "f2": _rank_mod2}


def reduced_homology_ranks(complex_: SimplicialComplex, field: str = "q") -> dict:
    """Ranks of the reduced homology groups, indexed by dimension.

    Only nonzero ranks appear in the result.  The rank in dimension k is the
    face count minus the ranks of the boundary maps in and out (rank-nullity);
    the result does not depend on the face enumeration order because faces are
    sorted before the matrices are assembled.
    """
    if field not in _RANK:
        raise ValueError(f"unknown field {field!r}; use 'q' or 'f2'")
    rank_of = _RANK[field]
    if complex_.is_void():
        return {}
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in complex_.faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim)
    boundary_ranks = {}
    for k in range(0, top + 1):
        sources = by_dim.get(k, [])
        targets = by_dim.get(k - 1, [])
        if not sources or not targets:
            boundary_ranks[k] = 0
            continue
        index = {face: r for r, face in enumerate(targets)}
        rows = [[0] * len(sources) for _ in targets]
        for c, face in enumerate(sources):
            for j in range(len(face)):
                sub = face[:j] + face[j + 1 :]
                rows[index[sub]][c] = -1 if j % 2 else 1
        boundary_ranks[k] = rank_of(rows)
    out = {}
    for k in range(-1, top + 1):
        count = len(by_dim.get(k, []))
        rank_in = boundary_ranks.get(k + 1, 0)
        rank_out = boundary_ranks.get(k, 0) if k >= 0 else 0
        h = count - rank_in - rank_out
        if h:
            out[k] = h
    return out


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers of a quotient ring S/I.

    Entries are (homological index, multidegree, rank) with rank positive,
    sorted; the origin always carries the free rank one at index zero.
    """

    nvars: int
    entries: tuple[tuple[int, tuple[int, ...], int], ...]
    field: str = "q"

    def rank(self, index: int, multidegree) -> int:
        key = tuple(multidegree)
        for i, a, r in self.entries:
            if i == index and a == key:
                return r
        return 0

    def total_by_degree(self) -> dict:
        """Ranks aggregated over multidegrees with the same total degree."""
        out: dict[tuple[int, int], int] = {}
        for i, a, r in self.entries:
            key = (i, sum(a))
            out[key] = out.get(key, 0) + r
        return out

    def regularity(self) -> int:
        return max(sum(a) - i for i, a, _ in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    def depth(self) -> int:
        return self.nvars - self.projective_dimension()

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "field": self.field,
            "entries": [
                {"i": i, "degree": sum(a), "multidegree": list(a), "rank": r}
                for i, a, r in self.entries
            ],
            "regularity": self.regularity(),
            "projective_dimension": self.projective_dimension(),
            "depth": self.depth(),
        }


@lru_cache(maxsize=None)
def betti_table(
    ideal: MonomialIdeal, guard: int = DEFAULT_ORACLE_GUARD, field: str = "q"
) -> BettiTable:
    """Betti table of S/ideal by full enumeration of the lcm box.

    Every multidegree with exponents at most the componentwise max of the
    generators is visited; nothing is pruned, so the support restriction to
    joins of generators is a testable consequence, not an assumption.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("the Betti oracle needs a proper nonzero ideal")
    bounds = ideal.max_exponents()
    ensure_box(bounds, guard, "Betti oracle")
    entries = [(0, (0,) * ideal.nvars, 1)]
    for exps in itertools.product(*[range(b + 1) for b in bounds]):
        complex_ = upper_koszul_complex(ideal, exps)
        for hdim, rank in sorted(reduced_homology_ranks(complex_, field).items()):
            entries.append((hdim + 2, exps, rank))
    entries.sort()
    return BettiTable(ideal.nvars, tuple(entries), field)


def oracle_invariants(table: BettiTable) -> tuple[int, int, int]:
    """(regularity, projective dimension, depth) read off a Betti table."""
    return table.regularity(), table.projective_dimension(), table.depth()
