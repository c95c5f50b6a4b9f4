"""Reduced integral simplicial homology via Smith normal form.

Boundary matrices are eliminated over the integers with numpy int64 and a
guard against overflow; if entries grow past the guard the computation is
redone with Python big integers, so ranks and torsion are always exact.
The chain complex is augmented: the empty face sits in dimension -1, so
Betti vectors are reduced and the complex {<>} is the (-1)-sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

FACE_COUNT_CAP = 1 << 20

# entry bound beyond which int64 elimination escalates to big integers
_INT64_GUARD = 1 << 31

SNF_BACKEND = "numpy-int64 with checked escalation to Python big integers"


class FaceCountError(ValueError):
    """Raised when a complex exceeds the documented face-count cap."""


class _Escalate(Exception):
    """Internal: int64 elimination hit the overflow guard."""


def _snf_diagonal_int64(mat: np.ndarray) -> list[int]:
    a = mat.astype(np.int64, copy=True)
    m, n = a.shape
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        sub = a[t:, t:]
        nz = np.nonzero(sub)
        if len(nz[0]) == 0:
            break
        k = np.argmin(np.abs(sub[nz]))
        pi, pj = nz[0][k] + t, nz[1][k] + t
        if pi != t:
            a[[t, pi], :] = a[[pi, t], :]
        if pj != t:
            a[:, [t, pj]] = a[:, [pj, t]]
        while True:
            if np.abs(a).max() > _INT64_GUARD:
                raise _Escalate
            pivot = a[t, t]
            col = a[t + 1:, t]
            if col.any():
                q = col // pivot
                a[t + 1:, :] -= np.outer(q, a[t, :])
                if a[t + 1:, t].any():
                    # a remainder is strictly smaller: swap it up and repeat
                    i = t + 1 + int(np.nonzero(a[t + 1:, t])[0][0])
                    a[[t, i], :] = a[[i, t], :]
                    continue
            row = a[t, t + 1:]
            if row.any():
                q = row // a[t, t]
                a[:, t + 1:] -= np.outer(a[:, t], q)
                if a[t, t + 1:].any():
                    j = t + 1 + int(np.nonzero(a[t, t + 1:])[0][0])
                    a[:, [t, j]] = a[:, [j, t]]
                    continue
                continue  # row ops may have dirtied the column
            if a[t + 1:, t].any():
                continue
            break
        diag.append(abs(int(a[t, t])))
        t += 1
    return diag


def _snf_diagonal_bigint(mat: Sequence[Sequence[int]]) -> list[int]:
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def snf_diagonal(mat) -> list[int]:
    """Diagonal of an integer matrix after unimodular row/column elimination.

    The entries are nonnegative; their number of nonzeros is the rank and
    any entry larger than one witnesses torsion in the cokernel.  (The
    divisibility chain is not normalized; ranks and the torsion flag do
    not need it.)
    """
    arr = np.asarray(mat) if not isinstance(mat, np.ndarray) else mat
    if arr.size == 0:
        return []
    if arr.dtype != object and np.abs(arr).max() < _INT64_GUARD:
        try:
            return _snf_diagonal_int64(arr)
        except _Escalate:
            pass
    return _snf_diagonal_bigint(np.asarray(mat, dtype=object).tolist())


def matrix_rank_exact(mat) -> int:
    return sum(1 for d in snf_diagonal(mat) if d != 0)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers from dimension -1 upward, with torsion flags.

    ``betti[i]`` is the free rank in dimension i - 1; ``torsion[i]`` flags
    torsion there.  ``chi`` is the reduced Euler characteristic and
    ``total`` the total Betti number (torsion excluded from both).
    """

    betti: tuple[int, ...]
    torsion: tuple[bool, ...]

    def betti_in(self, dim: int) -> int:
        i = dim + 1
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    def torsion_in(self, dim: int) -> bool:
        i = dim + 1
        return self.torsion[i] if 0 <= i < len(self.torsion) else False

    @property
    def has_torsion(self) -> bool:
        return any(self.torsion)

    @property
    def chi(self) -> int:
        return sum(-b if (i - 1) % 2 else b for i, b in enumerate(self.betti))

    @property
    def total(self) -> int:
        return sum(self.betti)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i - 1, b) for i, b in enumerate(self.betti) if b]

    def to_dict(self) -> dict:
        return {
            "betti": {str(i - 1): b for i, b in enumerate(self.betti) if b},
            "torsion_dimensions": [i - 1 for i, t in enumerate(self.torsion) if t],
            "chi": self.chi,
            "total": self.total,
        }


@dataclass(frozen=True)
class HomologyClass:
    """Homology-level shadow of "contractible or a sphere"."""

    kind: str  # "sphere" | "trivial" | "other"
    dim: Optional[int] = None


def is_sphere_like(bv: BettiVector) -> HomologyClass:
    """Classify: single free rank 1 and no torsion, all zero, or other."""
    if bv.has_torsion:
        return HomologyClass("other")
    nonzero = bv.nonzero()
    if not nonzero:
        return HomologyClass("trivial")
    if len(nonzero) == 1 and nonzero[0][1] == 1:
        return HomologyClass("sphere", nonzero[0][0])
    return HomologyClass("other")


def _boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Boundary from dimension-d faces (``upper``) to dimension-(d-1) faces."""
    index = {mask: i for i, mask in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for col, mask in enumerate(upper):
        sign = 1
        rest = mask
        while rest:
            low = rest & -rest
            mat[index[mask ^ low], col] = sign
            sign = -sign
            rest ^= low
    return mat


def reduced_betti_from_masks(face_masks: Iterable[int]) -> BettiVector:
    """Reduced integral Betti vector of a complex given by bitmask faces.

    The empty face (mask 0) must be present unless the complex is void;
    a void complex (no faces at all) has all reduced Betti numbers zero.
    """
    by_dim: dict[int, list[int]] = {}
    count = 0
    for mask in face_masks:
        count += 1
        if count > FACE_COUNT_CAP:
            raise FaceCountError(f"face count exceeds cap {FACE_COUNT_CAP}")
        by_dim.setdefault(bin(mask).count("1") - 1, []).append(mask)
    if not by_dim:
        return BettiVector((), ())
    if -1 not in by_dim:
        raise ValueError("non-void complex must contain the empty face")
    top = max(by_dim)
    for d in by_dim.values():
        d.sort()
    ranks = [0] * (top + 3)  # ranks[d + 1] = rank of boundary from dim d
    torsion = [False] * (top + 2)
    for d in range(0, top + 1):
        upper = by_dim.get(d, [])
        lower = by_dim.get(d - 1, [])
        if not upper or not lower:
            continue
        diag = snf_diagonal(_boundary_matrix(lower, upper))
        ranks[d + 1] = sum(1 for x in diag if x != 0)
        if any(x not in (0, 1) for x in diag):
            torsion[d] = True  # torsion shows up one dimension below d
    betti = []
    for d in range(-1, top + 1):
        faces = len(by_dim.get(d, []))
        betti.append(faces - ranks[d + 1] - ranks[d + 2])
    return BettiVector(tuple(betti), tuple(torsion[:top + 2]))
