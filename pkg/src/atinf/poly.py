"""Exact multivariate polynomial arithmetic over the rationals.

A polynomial is a sparse map from exponent tuples to Fractions together with
an ordered tuple of variable names:

    x^2*y - 1/2  over (x, y)  ->  {(2, 1): Fraction(1), (0, 0): Fraction(-1, 2)}

Zero-coefficient terms are never stored; the zero polynomial has an empty
term map and degree NEG_INF (a sentinel distinct from every integer, so it
cannot collide with the dimension convention dim(empty variety) = -1).

Values are immutable after construction and all operations are pure, so
polynomials can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position + 1}")
        self.position = position


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    __slots__ = ("vars", "terms", "_deg")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: dict[tuple, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = _as_fraction(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise PolyError(f"bad exponent vector {exps} for {n} variables")
                clean[exps] = c
        self.terms = clean
        self._deg = max((sum(e) for e in clean), default=NEG_INF)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars)

    @classmethod
    def const(cls, vars: Sequence[str], c: Scalar) -> "Poly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise PolyError(f"unknown variable {name!r}")
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self):
        """Total degree, NEG_INF for the zero polynomial."""
        return self._deg

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self._deg == NEG_INF or self._deg == 0

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError("not a constant polynomial")
        return next(iter(self.terms.values()), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check_same_ring(self, other: "Poly") -> None:
        if self.vars != other.vars:
            raise PolyError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(self.vars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return Poly(self.vars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_same_ring(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = _as_fraction(c)
        if c == 0:
            return Poly.zero(self.vars)
        return Poly(self.vars, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise PolyError("negative power")
        result = Poly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_term(self, exps: tuple, c: Scalar) -> "Poly":
        c = _as_fraction(c)
        if c == 0:
            return Poly.zero(self.vars)
        return Poly(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): v * c for e, v in self.terms.items()},
        )

    # -- calculus and grading ----------------------------------------------

    def derivative(self, var: str) -> "Poly":
        """Formal partial derivative with respect to var."""
        if var not in self.vars:
            raise PolyError(f"unknown variable {var!r}")
        i = self.vars.index(var)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == 0:
                continue
            e = list(exps)
            e[i] -= 1
            e = tuple(e)
            out[e] = out.get(e, Fraction(0)) + c * exps[i]
        return Poly(self.vars, out)

    def graded_part(self, k: int) -> "Poly":
        """Sum of the terms of total degree exactly k."""
        if k < 0:
            raise PolyError("negative degree")
        return Poly(self.vars, {e: c for e, c in self.terms.items() if sum(e) == k})

    def homogenize(self, newvar: str, d: int) -> "Poly":
        """Multiply each term up to degree d with powers of a fresh variable."""
        if newvar in self.vars:
            raise PolyError(f"variable {newvar!r} already present")
        if self.terms and d < self._deg:
            raise PolyError(f"homogenization degree {d} below degree {self._deg}")
        vars2 = self.vars + (newvar,)
        return Poly(vars2, {e + (d - sum(e),): c for e, c in self.terms.items()})

    def dehomogenize(self, var: str, value: Scalar) -> "Poly":
        """Substitute var := value and drop it from the variable list."""
        if var not in self.vars:
            raise PolyError(f"unknown variable {var!r}")
        i = self.vars.index(var)
        value = _as_fraction(value)
        vars2 = self.vars[:i] + self.vars[i + 1 :]
        out: dict[tuple, Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[:i] + exps[i + 1 :]
            c = c * value ** exps[i]
            if c == 0:
                continue
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(vars2, out)

    # -- substitution ------------------------------------------------------

    def substitute(self, assignments: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Simultaneous substitution of variables by polynomials or scalars.

        Unassigned variables map to themselves; the resulting polynomial
        lives in the same ring.
        """
        images: list[Poly] = []
        for name in self.vars:
            img = assignments.get(name, None)
            if img is None:
                images.append(Poly.variable(self.vars, name))
            elif isinstance(img, Poly):
                self._check_same_ring(img)
                images.append(img)
            else:
                images.append(Poly.const(self.vars, img))
        powers: list[dict[int, Poly]] = [dict() for _ in self.vars]

        def power(i: int, k: int) -> Poly:
            if k not in powers[i]:
                powers[i][k] = images[i] ** k
            return powers[i][k]

        result = Poly.zero(self.vars)
        for exps, c in self.terms.items():
            term = Poly.const(self.vars, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def apply_change(self, change: "LinearChange") -> "Poly":
        """Substitute each variable by the linear form given by the change matrix."""
        n = len(self.vars)
        if len(change.matrix) != n:
            raise PolyError("dimension mismatch between polynomial and change")
        assignments = {}
        for i, name in enumerate(self.vars):
            row = change.matrix[i]
            assignments[name] = Poly(
                self.vars,
                {
                    tuple(1 if k == j else 0 for k in range(n)): row[j]
                    for j in range(n)
                    if row[j] != 0
                },
            )
        return self.substitute(assignments)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != len(self.vars):
            raise PolyError("point has wrong length")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(pt, exps):
                v *= x**e
            total += v
        return total

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # descending degrevlex for a stable, parseable form
        def key(e):
            return (sum(e), tuple(-x for x in reversed(e)))

        parts = []
        for exps in sorted(self.terms, key=key, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            coeff = abs(c)
            if mono and coeff == 1:
                body = mono
            elif mono:
                body = f"{coeff}*{mono}"
            else:
                body = str(coeff)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, vars={self.vars})"


class SingularMatrixError(PolyError):
    pass


def _identity_rows(n: int) -> tuple:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def _invert(rows: Sequence[Sequence[Scalar]]) -> tuple:
    n = len(rows)
    aug = [
        [_as_fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class LinearChange:
    """Invertible linear coordinate change, stored with its exact inverse."""

    __slots__ = ("matrix", "inverse")

    def __init__(self, matrix: Sequence[Sequence[Scalar]]):
        n = len(matrix)
        rows = tuple(tuple(_as_fraction(v) for v in row) for row in matrix)
        if any(len(row) != n for row in rows):
            raise PolyError("change matrix must be square")
        self.matrix = rows
        self.inverse = _invert(rows)

    @classmethod
    def identity(cls, n: int) -> "LinearChange":
        return cls(_identity_rows(n))

    def inverse_change(self) -> "LinearChange":
        inv = LinearChange.__new__(LinearChange)
        inv.matrix = self.inverse
        inv.inverse = self.matrix
        return inv

    def is_identity(self) -> bool:
        return self.matrix == _identity_rows(len(self.matrix))

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearChange({[[str(v) for v in row] for row in self.matrix]})"


def fresh_var(vars: Sequence[str], base: str) -> str:
    """A variable name based on `base` that does not collide with `vars`."""
    if base not in vars:
        return base
    k = 0
    while f"{base}{k}" in vars:
        k += 1
    return f"{base}{k}"


# -- parser ----------------------------------------------------------------
#
# expr     := ['+'|'-'] term (('+'|'-') term)*
# term     := factor ('*' factor)*
# factor   := base ('^' nat)?
# base     := rational | var | '(' expr ')'
# rational := int ('/' nat)?


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = tuple(vars)
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, min(self.pos, len(self.text)))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self) -> Poly:
        p = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.take("-"):
            sign = -1
        elif self.take("+"):
            pass
        p = self.term().scale(sign)
        while True:
            if self.take("+"):
                p = p + self.term()
            elif self.take("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Poly:
        p = self.factor()
        while self.take("*"):
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        p = self.base()
        if self.take("^"):
            return p ** self.nat()
        return p

    def base(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return p
        if ch.isdigit():
            num = self.int_digits()
            if self.take("/"):
                den = self.nat()
                return Poly.const(self.vars, Fraction(num, den))
            return Poly.const(self.vars, num)
        if ch.isalpha() or ch == "_":
            name = self.ident()
            if name not in self.vars:
                raise ParseError(
                    f"unknown variable {name!r}", self.pos - len(name)
                )
            return Poly.variable(self.vars, name)
        raise self.error("expected a number, variable or '('" if ch else "unexpected end of input")

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]

    def int_digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected digits")
        return int(self.text[start : self.pos])

    def nat(self) -> int:
        n = self.int_digits()
        if n < 1:
            raise self.error("expected a positive integer")
        return n


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse polynomial text over the declared, ordered variable list.

    Round-trips with str(): parse_poly(str(p), p.vars) == p.
    """
    if not vars:
        raise PolyError("variable list must not be empty")
    if len(set(vars)) != len(tuple(vars)):
        raise PolyError("duplicate variable names")
    return _Parser(text, vars).parse()
