"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a :class:`Ring`, a fixed, closed tuple of variable
names.  Terms are stored as a dict mapping dense exponent tuples to
:class:`fractions.Fraction` coefficients; zero coefficients are never stored.
Polynomials are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational
from typing import Callable, Iterable, Mapping

MAX_EXPONENT = 2**31 - 1


class Ring:
    """A closed set of variables; exponent vectors are dense over it."""

    __slots__ = ("name", "names", "index", "zero_exp")

    def __init__(self, name: str, names: Iterable[str]):
        self.name = name
        self.names = tuple(names)
        self.index = {v: i for i, v in enumerate(self.names)}
        self.zero_exp = (0,) * len(self.names)

    def __repr__(self):
        return f"Ring({self.name!r}, {self.names!r})"

    def __reduce__(self):
        return (_ring_by_name, (self.name,))

    def pos(self, var: str) -> int:
        try:
            return self.index[var]
        except KeyError:
            raise KeyError(f"variable {var!r} is not in ring {self.name}") from None

    def var(self, name: str) -> "Poly":
        e = [0] * len(self.names)
        e[self.pos(name)] = 1
        return Poly(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(v) for v in self.names)

    def const(self, c) -> "Poly":
        return Poly.const(self, c)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.zero_exp: Fraction(1)})


# z, p, q, t, theta_0, theta_1, theta_inf, plus dq standing for q' in
# second-order equations.
LAX = Ring("lax", ("z", "p", "q", "t", "th0", "th1", "thinf", "dq"))
# Cubic surfaces: coordinates x1..x3 and every parameter slot used by the
# ten monodromy surfaces.
CUBIC = Ring(
    "cubic",
    ("x1", "x2", "x3", "s0", "s1", "s2", "s3", "s4",
     "alpha", "beta", "s", "a1", "a2", "a3", "a4"),
)
_RINGS = {r.name: r for r in (LAX, CUBIC)}


def _ring_by_name(name: str) -> Ring:
    return _RINGS[name]


def register_ring(ring: Ring) -> Ring:
    _RINGS.setdefault(ring.name, ring)
    return _RINGS[ring.name]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class NotDivisible(ArithmeticError):
    pass


class Poly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, Fraction] | None = None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    # -- construction ---------------------------------------------------
    @classmethod
    def const(cls, ring: Ring, c) -> "Poly":
        c = _as_fraction(c)
        return cls(ring, {ring.zero_exp: c} if c else {})

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
            return other
        return Poly.const(self.ring, other)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(self.ring.zero_exp, Fraction(0))

    def free_of(self, var: str) -> bool:
        i = self.ring.pos(var)
        return all(e[i] == 0 for e in self.terms)

    def variables(self) -> tuple[str, ...]:
        used = [False] * len(self.ring.names)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.names, used) if u)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.name, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = -c
            else:
                v -= c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.ring, out)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            if not c:
                return Poly._raw(self.ring, {})
            return Poly._raw(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly._raw(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        for e in [e for e, c in out.items() if not c]:
            del out[e]
        for e in out:
            if max(e) > MAX_EXPONENT:
                raise OverflowError("exponent overflow")
        return Poly._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * _as_fraction(c)

    # -- structure ------------------------------------------------------
    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree when ``var`` is None); -1 for zero."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.pos(var)
        return max(e[i] for e in self.terms)

    def min_degree(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.pos(var)
        return min(e[i] for e in self.terms)

    def coeffs_in(self, var: str) -> dict[int, "Poly"]:
        """Split as ``sum_k coeff_k * var**k`` with each coeff free of ``var``."""
        i = self.ring.pos(var)
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            parts.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        return {k: Poly._raw(self.ring, d) for k, d in parts.items()}

    def coeff(self, var: str, k: int) -> "Poly":
        return self.coeffs_in(var).get(k, self.ring.zero())

    def diff(self, var: str) -> "Poly":
        i = self.ring.pos(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Poly._raw(self.ring, out)

    def lex_leading(self) -> tuple[tuple, Fraction]:
        e = max(self.terms)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return Fraction(0)
        nums = reduce(gcd, (c.numerator for c in self.terms.values()))
        dens = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.terms.values()))
        return Fraction(abs(nums), dens)

    def monomial_content(self) -> tuple:
        """Componentwise minimum exponent (the largest monomial dividing self)."""
        if not self.terms:
            return self.ring.zero_exp
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, k in enumerate(e):
                if k < m[i]:
                    m[i] = k
        return tuple(m)

    def shift_exponents(self, delta: tuple) -> "Poly":
        """Multiply by the monomial ``delta`` (entries may be negative if exact)."""
        out = {}
        for e, c in self.terms.items():
            ne = tuple(x + d for x, d in zip(e, delta))
            if min(ne) < 0:
                raise NotDivisible("negative exponent")
            out[ne] = c
        return Poly._raw(self.ring, out)

    def monomial(self, **exps) -> "Poly":
        e = [0] * len(self.ring.names)
        for v, k in exps.items():
            e[self.ring.pos(v)] = k
        return Poly._raw(self.ring, {tuple(e): Fraction(1)})

    # -- evaluation & substitution -------------------------------------
    def subs(self, mapping: Mapping[str, object]) -> "Poly":
        """Substitute polynomials (or exact scalars) for variables."""
        if not mapping:
            return self
        idx = []
        for v, val in mapping.items():
            idx.append((self.ring.pos(v), self._coerce(val)))
        powers: dict = {}

        def power(j, base, k):
            key = (j, k)
            if key not in powers:
                powers[key] = base ** k
            return powers[key]

        result: dict = {}
        for e, c in self.terms.items():
            rest = list(e)
            factor = None
            for j, base in idx:
                k = e[j]
                if k:
                    rest[j] = 0
                    pk = power(j, base, k)
                    factor = pk if factor is None else factor * pk
            mono = Poly._raw(self.ring, {tuple(rest): c})
            term = mono if factor is None else mono * factor
            for te, tc in term.terms.items():
                result[te] = result.get(te, 0) + tc
        return Poly(self.ring, result)

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at numeric (Fraction, int, float or complex) values.

        Every variable occurring in the polynomial must be given.
        """
        given = {self.ring.pos(v): x for v, x in values.items()}
        total = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    if i not in given:
                        raise KeyError(f"no value for {self.ring.names[i]}")
                    term = term * given[i] ** k
            total = total + term
        return total

    def compile(self, argnames: Iterable[str] | None = None) -> Callable:
        """Return a fast float/complex evaluator ``f(*args)``.

        ``argnames`` defaults to every variable of the ring.
        """
        names = tuple(argnames) if argnames is not None else self.ring.names
        pos = {self.ring.pos(n): n for n in names}
        pieces = []
        for e, c in self.terms.items():
            factors = [repr(float(c))]
            for i, k in enumerate(e):
                if not k:
                    continue
                if i not in pos:
                    raise KeyError(f"variable {self.ring.names[i]} is not an argument")
                factors.append(pos[i] if k == 1 else f"{pos[i]}**{k}")
            pieces.append("*".join(factors))
        body = " + ".join(pieces) if pieces else "0.0"
        src = f"lambda {', '.join(names)}: {body}"
        return eval(src, {"__builtins__": {}})  # noqa: S307 - generated from our own terms

    # -- exact division -------------------------------------------------
    def divexact(self, other: "Poly") -> "Poly":
        """Exact quotient; raises :class:`NotDivisible` when other does not divide self."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        if other.is_constant():
            return self * (1 / other.constant_value())
        if len(other.terms) == 1:
            (eb, cb), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                ne = tuple(x - y for x, y in zip(e, eb))
                if min(ne) < 0:
                    raise NotDivisible("monomial does not divide")
                out[ne] = c / cb
            return Poly._raw(self.ring, out)
        lb, cb = other.lex_leading()
        b_terms = list(other.terms.items())
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            le = max(rem)
            lc = rem[le]
            qe = tuple(x - y for x, y in zip(le, lb))
            if min(qe) < 0:
                raise NotDivisible("leading monomial does not divide")
            qc = lc / cb
            quot[qe] = qc
            for e, c in b_terms:
                ne = tuple(x + y for x, y in zip(e, qe))
                v = rem.get(ne, 0) - qc * c
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return Poly._raw(self.ring, quot)

    def divides(self, other: "Poly") -> bool:
        try:
            other.divexact(self)
        except NotDivisible:
            return False
        return True

    def div_linear(self, var: str, root: "Poly") -> tuple["Poly", "Poly"]:
        """Synthetic division by ``(var - root)`` with ``root`` free of ``var``.

        Returns ``(quotient, remainder)``; the remainder is ``self`` evaluated
        at ``var = root``.
        """
        root = self._coerce(root)
        if not root.free_of(var):
            raise ValueError("root must not involve the division variable")
        parts = self.coeffs_in(var)
        zero = self.ring.zero()
        if not parts:
            return zero, zero
        n = max(parts)
        x = self.ring.var(var)
        b = parts[n]
        quot = zero
        for k in range(n - 1, -1, -1):
            quot = quot + b * x**k
            b = parts.get(k, zero) + root * b
        return quot, b

    # -- printing & serialization ---------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-k for k in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring.names, e) if k
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [[list(e), [c.numerator, c.denominator]] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "Poly":
        if list(data["vars"]) != list(ring.names):
            raise ValueError("variable list does not match ring")
        return cls(ring, {tuple(e): Fraction(n, d) for e, (n, d) in data["terms"]})


def parse(ring: Ring, text: str) -> Poly:
    """Parse a polynomial written with ``+ - * ^ ( )``, integers and ring variables.

    Division by integer literals is allowed (``t/2``).  Used to keep the
    family tables readable.
    """
    return _Parser(ring, text).parse()


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.toks = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text):
        toks, i = [], 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("num", int(text[i:j])))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                toks.append(("name", text[i:j]))
                i = j
            elif ch in "+-*/^()":
                toks.append(("op", "^" if ch == "^" else ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in {text!r}")
        return toks

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing tokens in polynomial: {self.toks[self.i:]}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            p = p + rhs if op == "+" else p - rhs
        return p

    def term(self):
        p = self.unary()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                p = p * self.unary()
            elif tok == ("op", "/"):
                self.take()
                d = self.unary()
                if not d.is_constant() or d.is_zero():
                    raise ValueError("only division by nonzero constants")
                p = p * (1 / d.constant_value())
            elif tok[0] in ("name", "num") or tok == ("op", "("):
                p = p * self.unary()  # implicit multiplication
            else:
                return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer literal")
            base = base**val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Poly.const(self.ring, val)
        if kind == "name":
            return self.ring.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return p
        raise ValueError(f"unexpected token {val!r}")
