"""Exact scalars and polynomials.

``Fraction`` is the scalar type throughout.  ``Poly`` is a dense univariate
polynomial, ``BiPoly`` a sparse polynomial in ``x`` and ``y``, and
``GaussianRational`` a complex number with rational parts.  All three are
immutable and canonical on construction, so ``==`` is semantic equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to ``Fraction``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rational_to_str(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        object.__setattr__(self, "re", as_rational(re))
        object.__setattr__(self, "im", as_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _coerce(cls, other) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conj()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}i"


I = GaussianRational(0, 1)


class Poly:
    """Dense polynomial in one variable with ``Fraction`` coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, z):
        """Horner evaluation; ``z`` may be a Fraction, int or GaussianRational."""
        acc = Fraction(0) if not isinstance(z, GaussianRational) else GaussianRational()
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def compose_affine(self, a: Scalar, b: Scalar) -> "Poly":
        """``p(a*x + b)``, expanded."""
        inner = Poly([b, a])
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_json(self, var: str = "x") -> dict:
        return {"var": var, "coeffs": [rational_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        return cls(Fraction(c) for c in data["coeffs"])

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


class BiPoly:
    """Sparse polynomial in ``x`` and ``y``: ``{(i, j): c}`` for ``c x^i y^j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_rational(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_poly(cls, p: Poly, var: str = "x") -> "BiPoly":
        if var == "x":
            return cls({(k, 0): c for k, c in enumerate(p.coeffs)})
        if var == "y":
            return cls({(0, k): c for k, c in enumerate(p.coeffs)})
        raise ValueError(f"unknown variable {var!r}")

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, Poly):
            return BiPoly.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, a: Scalar, b: Scalar) -> Fraction:
        return self.eval(a, b)

    def eval(self, a: Scalar, b: Scalar) -> Fraction:
        """Exact value at ``(x, y) = (a, b)``: Horner in y, then in x."""
        a, b = as_rational(a), as_rational(b)
        return self.as_poly_in_x_at_y(b)(a)

    def as_poly_in_x_at_y(self, b: Scalar) -> Poly:
        """Specialize ``y = b`` and return the resulting polynomial in x."""
        b = as_rational(b)
        cols: dict[int, Poly] = {}
        for (i, j), c in self.terms.items():
            cols.setdefault(i, {})[j] = c
        out = [Fraction(0)] * (self.degree_x + 1)
        for i, by_j in cols.items():
            out[i] = Poly([by_j.get(j, 0) for j in range(max(by_j) + 1)])(b)
        return Poly(out)

    def partial_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})

    def partial_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j > 0})

    def compose_x_affine(self, a: Scalar, b: Scalar) -> "BiPoly":
        """Substitute ``x -> a*x + b``."""
        a, b = as_rational(a), as_rational(b)
        out: dict[tuple[int, int], Fraction] = {}
        powers: dict[int, Poly] = {}
        for (i, j), c in self.terms.items():
            if i not in powers:
                powers[i] = Poly([b, a]) ** i
            for k, pc in enumerate(powers[i].coeffs):
                out[(k, j)] = out.get((k, j), 0) + c * pc
        return BiPoly(out)

    def reflect_y(self) -> "BiPoly":
        """Substitute ``y -> -y``."""
        return BiPoly({(i, j): -c if j % 2 else c for (i, j), c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "terms": [
                {"x": i, "y": j, "c": rational_to_str(c)}
                for (i, j), c in sorted(self.terms.items())
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BiPoly":
        return cls({(t["x"], t["y"]): Fraction(t["c"]) for t in data["terms"]})

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)})"

    def __str__(self):
        return format_bipoly(self)


# -- rendering ---------------------------------------------------------------


def _monomial(powers: list[tuple[str, int]], style: str) -> str:
    parts = []
    for var, k in powers:
        if k == 0:
            continue
        if k == 1:
            parts.append(var)
        elif style == "latex":
            parts.append(f"{var}^{{{k}}}")
        else:
            parts.append(f"{var}^{k}")
    return ("" if style == "latex" else "*").join(parts)


def _coefficient(c: Fraction, style: str) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if style == "latex":
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _join_terms(terms: list[tuple[Fraction, list[tuple[str, int]]]], style: str) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (c, powers) in enumerate(terms):
        mono = _monomial(powers, style)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = _coefficient(mag, style) + ("*" if style == "text" else " ") + mono
        else:
            body = _coefficient(mag, style)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def format_poly(p: Poly, var: str = "x", style: str = "text") -> str:
    """Render highest power first, e.g. ``x^3 + 3*x + 2``."""
    terms = [(c, [(var, k)]) for k, c in reversed(list(enumerate(p.coeffs))) if c != 0]
    return _join_terms(terms, style)


def format_bipoly(p: BiPoly, style: str = "text") -> str:
    """Render by descending total degree, then descending power of x."""
    keys = sorted(p.terms, key=lambda ij: (-(ij[0] + ij[1]), -ij[0]))
    terms = [(p.terms[k], [("x", k[0]), ("y", k[1])]) for k in keys]
    return _join_terms(terms, style)
