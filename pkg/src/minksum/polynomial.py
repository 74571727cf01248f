from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import zip_longest


@dataclass(frozen=True)
class FPolynomial:
    """Integer polynomial ``sum f_i q^i``; ``coeffs[i]`` counts i-dimensional faces.

    The zero polynomial (no coefficients) stands for an empty polytope.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(int(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def simplex(cls, size: int) -> "FPolynomial":
        """f-polynomial of a simplex with ``size`` vertices."""
        return cls(tuple(math.comb(size, i + 1) for i in range(size)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "FPolynomial") -> "FPolynomial":
        return FPolynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __neg__(self) -> "FPolynomial":
        return FPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "FPolynomial") -> "FPolynomial":
        return self + (-other)

    def __mul__(self, other: "FPolynomial") -> "FPolynomial":
        if not self.coeffs or not other.coeffs:
            return FPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return FPolynomial(tuple(out))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "q" if i == 1 else f"q^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"
