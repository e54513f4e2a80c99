"""Integer lattices H <= Z^J kept in row Hermite normal form."""
from __future__ import annotations

import itertools
from dataclasses import dataclass


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Lattice:
    ambient_rank: int
    basis: tuple[tuple[int, ...], ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return lattice_member(v, self)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.rank == self.ambient_rank and all(
            self.basis[i][i] == 1 for i in range(self.rank))

    def __repr__(self) -> str:
        rows = ",".join("(" + ",".join(map(str, r)) + ")" for r in self.basis)
        return f"Lattice<{self.ambient_rank}>[{rows}]"


def _check(rows, n):
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"row {tuple(r)} has length {len(r)}, expected {n}")


def hnf(rows, ambient_rank: int | None = None) -> Lattice:
    rows = [list(map(int, r)) for r in rows]
    if ambient_rank is None:
        if not rows:
            raise DimensionError("ambient rank needed for an empty row list")
        ambient_rank = len(rows[0])
    _check(rows, ambient_rank)
    rows = [r for r in rows if any(r)]
    out = []
    col = 0
    while rows and col < ambient_rank:
        live = [r for r in rows if r[col]]
        if not live:
            col += 1
            continue
        rest = [r for r in rows if not r[col]]
        # euclid on the column until a single row carries it
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        p = live[0]
        if p[col] < 0:
            p = [-x for x in p]
        for r in out:
            q = r[col] // p[col]
            if q:
                r[:] = [x - q * y for x, y in zip(r, p)]
        out.append(p)
        rows = [r for r in rest if any(r)]
        col += 1
    return Lattice(ambient_rank, tuple(tuple(r) for r in out))


def zero_lattice(n: int) -> Lattice:
    return Lattice(n, ())


def full_lattice(n: int) -> Lattice:
    return Lattice(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def lattice_member(v, L: Lattice) -> bool:
    v = list(map(int, v))
    if len(v) != L.ambient_rank:
        raise DimensionError(f"vector of length {len(v)} in rank {L.ambient_rank}")
    for row in L.basis:
        c = next(i for i, x in enumerate(row) if x)
        # entries left of the pivot must already be cleared
        if any(v[:c]):
            return False
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise DimensionError("ambient ranks differ")
    return hnf(L1.basis + L2.basis, L1.ambient_rank)


def lattice_equal(L1: Lattice, L2: Lattice) -> bool:
    if L1.ambient_rank != L2.ambient_rank:
        raise DimensionError("ambient ranks differ")
    return L1.basis == L2.basis


def lattice_le(L1: Lattice, L2: Lattice) -> bool:
    """L1 is a sublattice of L2."""
    return all(lattice_member(r, L2) for r in L1.basis)


def project(L: Lattice, coords) -> Lattice:
    """Image of L under the coordinate projection onto `coords`."""
    coords = list(coords)
    return hnf([[r[c] for c in coords] for r in L.basis], len(coords))


def image(matrix, L: Lattice) -> Lattice:
    """Image of L under v -> matrix.v (matrix is a list of rows)."""
    m = len(matrix)
    return hnf([[sum(a * b for a, b in zip(row, r)) for row in matrix] for r in L.basis], m)


def preimage(matrix, L: Lattice, source_rank: int) -> Lattice:
    """{v in Z^source_rank : matrix.v in L}."""
    m = len(matrix)
    if m != L.ambient_rank:
        raise DimensionError("matrix rows do not match the lattice rank")
    rows = []
    for k in range(source_rank):
        rows.append([matrix[i][k] for i in range(m)] + [int(j == k) for j in range(source_rank)])
    for b in L.basis:
        rows.append(list(b) + [0] * source_rank)
    big = hnf(rows, m + source_rank)
    return Lattice(source_rank, tuple(r[m:] for r in big.basis if not any(r[:m])))


def kernel(matrix, source_rank: int) -> Lattice:
    return preimage(matrix, zero_lattice(len(matrix)), source_rank)


def intersection(L1: Lattice, L2: Lattice) -> Lattice:
    n = L1.ambient_rank
    if n != L2.ambient_rank:
        raise DimensionError("ambient ranks differ")
    # v in L1 and v in L2  <=>  v = x.B1 with x.B1 in L2
    k = L1.rank
    if k == 0:
        return zero_lattice(n)
    cols = [[L1.basis[j][i] for j in range(k)] for i in range(n)]
    coeff = preimage(cols, L2, k)
    return hnf([[sum(c[j] * L1.basis[j][i] for j in range(k)) for i in range(n)]
                for c in coeff.basis], n)


def small_lattices(n: int, bound: int):
    """All lattices of Z^n whose HNF has pivots in [1, bound] and free entries in [-bound, bound]."""
    for r in range(n + 1):
        for pivots in itertools.combinations(range(n), r):
            slots = []
            for i, c in enumerate(pivots):
                choices = []
                for j in range(c, n):
                    if j == c:
                        choices.append(range(1, bound + 1))
                    elif j in pivots:
                        choices.append(None)  # reduced against a later pivot
                    else:
                        choices.append(range(-bound, bound + 1))
                slots.append((c, choices))
            yield from _fill(n, pivots, slots, bound)


def _fill(n, pivots, slots, bound):
    flat = []
    for i, (c, choices) in enumerate(slots):
        for off, ch in enumerate(choices):
            j = c + off
            if j == c:
                flat.append(("piv", i, j, ch))
            elif ch is None:
                flat.append(("red", i, j, pivots.index(j)))
            else:
                flat.append(("free", i, j, ch))
    rows = [[0] * n for _ in pivots]

    def rec(k):
        if k == len(flat):
            yield Lattice(n, tuple(tuple(r) for r in rows))
            return
        kind, i, j, ch = flat[k]
        if kind == "red":
            # entry above a later pivot: needs that pivot value, filled in order
            rng = range(0, rows[ch][j]) if rows[ch][j] else range(0)
        else:
            rng = ch
        for x in rng:
            rows[i][j] = x
            yield from rec(k + 1)
        rows[i][j] = 0

    # pivots of later rows must be set before reduced entries above them
    flat.sort(key=lambda t: (t[0] != "piv", t[1], t[2]))
    yield from rec(0)
