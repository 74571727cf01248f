"""Exact rational simplex method (Bland's rule) for feasibility and small LPs.

Systems have the form ``A x = b, x >= 0`` with rational data. Nothing here
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DomainError

Vector = Sequence  # of int | Fraction


@dataclass(frozen=True)
class LinearSystem:
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    n: int = field(default=-1)

    def __post_init__(self):
        A = tuple(tuple(Fraction(v) for v in row) for row in self.A)
        b = tuple(Fraction(v) for v in self.b)
        if len(A) != len(b):
            raise DomainError(f"A has {len(A)} rows but b has {len(b)} entries")
        n = self.n if self.n >= 0 else (len(A[0]) if A else 0)
        if any(len(row) != n for row in A):
            raise DomainError("rows of A have inconsistent lengths")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    @property
    def m(self) -> int:
        return len(self.b)


class Feasibility(NamedTuple):
    feasible: bool
    witness: tuple[Fraction, ...] | None
    certificate: tuple[Fraction, ...] | None

    def __bool__(self):
        return self.feasible


class Optimum(NamedTuple):
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    x: tuple[Fraction, ...] | None


class _Tableau:
    """Dense tableau with ``n`` structural and ``m`` artificial columns."""

    def __init__(self, system: LinearSystem):
        self.n, self.m = system.n, system.m
        self.signs = [-1 if bi < 0 else 1 for bi in system.b]
        self.rows: list[list[Fraction]] = []
        for i, (row, bi) in enumerate(zip(system.A, system.b)):
            s = self.signs[i]
            art = [Fraction(0)] * self.m
            art[i] = Fraction(1)
            self.rows.append([s * v for v in row] + art + [s * bi])
        self.basis = [self.n + i for i in range(self.m)]
        self.width = self.n + self.m

    def _pivot(self, r: int, c: int, obj: list[Fraction]) -> None:
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow = [v / p for v in prow]
            self.rows[r] = prow
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    for j, v in nz:
                        row[j] -= f * v
        f = obj[c]
        if f:
            for j, v in nz:
                obj[j] -= f * v
        self.basis[r] = c

    def _objective(self, cost: list[Fraction]) -> list[Fraction]:
        # reduced-cost row: obj[j] = c_j - c_B B^-1 A_j ; last entry = -c_B B^-1 b
        obj = list(cost) + [Fraction(0)]
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb:
                for j, v in enumerate(row):
                    if v:
                        obj[j] -= cb * v
        return obj

    def run(self, cost: list[Fraction], allowed: int) -> str:
        """Maximize ``cost . x`` over columns ``< allowed`` with Bland's rule."""
        obj = self._objective(cost)
        while True:
            enter = next((j for j in range(allowed) if obj[j] > 0), None)
            if enter is None:
                self.obj = obj
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                self.obj = obj
                return "unbounded"
            self._pivot(best[1], enter, obj)

    def value_of_basis(self) -> list[Fraction]:
        x = [Fraction(0)] * self.width
        for i, col in enumerate(self.basis):
            x[col] = self.rows[i][-1]
        return x

    def drop_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis; delete redundant rows."""
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.n:
                row = self.rows[i]
                col = next((j for j in range(self.n) if row[j] != 0), None)
                if col is None:
                    del self.rows[i]
                    del self.basis[i]
                    continue
                self._pivot(i, col, [Fraction(0)] * (self.width + 1))
            i += 1


def _as_system(sys_or_A, b=None) -> LinearSystem:
    if isinstance(sys_or_A, LinearSystem):
        return sys_or_A
    return LinearSystem(tuple(tuple(r) for r in sys_or_A), tuple(b))


def _phase_one(system: LinearSystem) -> tuple[_Tableau, Fraction]:
    tab = _Tableau(system)
    cost = [Fraction(0)] * system.n + [Fraction(-1)] * system.m
    tab.run(cost, tab.width)
    infeasibility = sum((tab.rows[i][-1] for i, c in enumerate(tab.basis) if c >= system.n), Fraction(0))
    return tab, infeasibility


def feasible(sys_or_A, b=None) -> Feasibility:
    """Decide ``A x = b, x >= 0``.

    Returns a rational witness ``x`` when feasible, otherwise a Farkas vector
    ``y`` with ``y^T A <= 0`` and ``y^T b > 0``.
    """
    system = _as_system(sys_or_A, b)
    tab, w = _phase_one(system)
    if w == 0:
        return Feasibility(True, tuple(tab.value_of_basis()[: system.n]), None)
    y = []
    for i in range(system.m):
        col = system.n + i
        yi = sum((tab.rows[r][col] for r, c in enumerate(tab.basis) if c >= system.n), Fraction(0))
        y.append(tab.signs[i] * yi)
    return Feasibility(False, None, tuple(y))


def maximize(sys_or_A, c: Vector, b=None) -> Optimum:
    """Maximize ``c . x`` subject to ``A x = b, x >= 0``."""
    system = _as_system(sys_or_A, b)
    tab, w = _phase_one(system)
    if w != 0:
        return Optimum("infeasible", None, None)
    tab.drop_artificials()
    cost = [Fraction(v) for v in c] + [Fraction(0)] * system.m
    status = tab.run(cost, system.n)
    if status == "unbounded":
        return Optimum("unbounded", None, None)
    x = tuple(tab.value_of_basis()[: system.n])
    return Optimum("optimal", sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)), x)


def in_hull(x: Vector, V: Sequence[Vector]) -> bool:
    """Whether ``x`` is a convex combination of the points ``V``."""
    if not V:
        raise DomainError("V must be nonempty")
    d = len(x)
    if any(len(v) != d for v in V):
        raise DomainError("dimension mismatch between x and V")
    A = [[v[i] for v in V] for i in range(d)] + [[1] * len(V)]
    return feasible(A, list(x) + [1]).feasible


def is_edge(u: Vector, v: Vector, V: Sequence[Vector]) -> bool:
    """Whether the segment ``[u, v]`` is a one-dimensional face of ``conv(V)``.

    Maximizes the weight that representations of the midpoint can put on
    points other than ``u`` and ``v``; the segment is an edge iff that is zero.
    """
    u, v = tuple(u), tuple(v)
    pts = list(dict.fromkeys(tuple(w) for w in V))
    if u == v:
        raise DomainError("u and v must differ")
    if u not in pts or v not in pts:
        raise DomainError("u and v must both belong to V")
    d = len(u)
    A = [[2 * w[i] for w in pts] for i in range(d)] + [[1] * len(pts)]
    rhs = [u[i] + v[i] for i in range(d)] + [1]
    cost = [0 if w in (u, v) else 1 for w in pts]
    res = maximize(A, cost, rhs)
    if res.status != "optimal":
        raise DomainError("midpoint system is not feasible; V does not contain u and v")
    return res.value == 0
