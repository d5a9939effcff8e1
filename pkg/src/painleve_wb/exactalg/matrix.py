"""2x2 matrices over rational functions."""

from __future__ import annotations

from typing import Callable, Iterable

from .poly import Ring
from .ratfunc import RatFunc, as_ratfunc


class Matrix2:
    """Immutable 2x2 matrix ``((a, b), (c, d))`` with :class:`RatFunc` entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d, ring: Ring | None = None):
        if ring is None:
            ring = next(x.ring for x in (a, b, c, d) if hasattr(x, "ring"))
        self.a = as_ratfunc(ring, a)
        self.b = as_ratfunc(ring, b)
        self.c = as_ratfunc(ring, c)
        self.d = as_ratfunc(ring, d)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ring: Ring | None = None) -> "Matrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, ring)

    @classmethod
    def zero(cls, ring: Ring) -> "Matrix2":
        return cls(0, 0, 0, 0, ring)

    @classmethod
    def identity(cls, ring: Ring) -> "Matrix2":
        return cls(1, 0, 0, 1, ring)

    @property
    def ring(self) -> Ring:
        return self.a.ring

    def entries(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return (self.a, self.b, self.c, self.d)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def map(self, f: Callable[[RatFunc], RatFunc]) -> "Matrix2":
        return Matrix2(*(f(x) for x in self.entries()), ring=self.ring)

    def __add__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(*(x + y for x, y in zip(self.entries(), other.entries())), ring=self.ring)

    def __sub__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(*(x - y for x, y in zip(self.entries(), other.entries())), ring=self.ring)

    def __neg__(self):
        return self.map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, Matrix2):
            a, b, c, d = self.entries()
            e, f, g, h = other.entries()
            return Matrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, ring=self.ring)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def commutator(self, other: "Matrix2") -> "Matrix2":
        """``self*other - other*self``."""
        return self * other - other * self

    def trace(self) -> RatFunc:
        return self.a + self.d

    def det(self) -> RatFunc:
        return self.a * self.d - self.b * self.c

    def diff(self, var: str) -> "Matrix2":
        return self.map(lambda x: x.diff(var))

    def subs(self, mapping) -> "Matrix2":
        return self.map(lambda x: x.subs(mapping))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    __hash__ = None

    def apply(self, v):
        """Matrix times a column vector given as a pair."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def evaluate(self, values):
        return [[x.evaluate(values) for x in row] for row in self.rows()]

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    __repr__ = __str__

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.rows()]


def mat2_ops(a: Matrix2, b: Matrix2, op: str) -> Matrix2:
    if op == "mul":
        return a * b
    if op == "commutator":
        return a.commutator(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown matrix operation {op!r}")
