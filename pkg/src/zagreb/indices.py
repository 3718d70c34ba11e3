"""Degree-based topological indices as symmetric bivariate edge polynomials.

Every index is normalized to ``Q(G) = sum over edges uv of f(d(u), d(v))`` with
``f`` a symmetric polynomial with rational coefficients.  Vertex sums are
converted with ``sum_v d(v)^r = sum_{uv} (d(u)^(r-1) + d(v)^(r-1))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from zagreb.graph import Graph, GraphError

Rational = Fraction
Monomial = tuple[int, int]


class IndexSpecError(ValueError):
    """Unknown index name or invalid parameters."""


class _Bivariate:
    """Minimal bivariate polynomial arithmetic for building registry kernels."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c) -> _Bivariate:
        return cls({(0, 0): Fraction(c)})

    def _coerce(self, other) -> _Bivariate:
        return other if isinstance(other, _Bivariate) else _Bivariate.const(other)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in self._coerce(other).terms.items():
            out[k] = out.get(k, 0) + v
        return _Bivariate(out)

    __radd__ = __add__

    def __neg__(self):
        return _Bivariate({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Monomial, Fraction] = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a + a2, b + b2)
                out[key] = out.get(key, 0) + c * c2
        return _Bivariate(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = _Bivariate.const(1)
        for _ in range(e):
            result = result * self
        return result


X = _Bivariate({(1, 0): 1})
Y = _Bivariate({(0, 1): 1})


@dataclass(frozen=True)
class SymmetricPoly:
    """Symmetric polynomial ``f(x, y) = f(y, x)`` stored by exponent pairs ``a >= b``.

    A stored pair ``(a, b)`` with coefficient ``c`` stands for ``c * x^a y^b``
    when ``a == b`` and for ``c * (x^a y^b + x^b y^a)`` when ``a > b``.
    """

    coeffs: tuple[tuple[Monomial, Fraction], ...]

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, object]) -> SymmetricPoly:
        """Build from a full monomial expansion ``{(a, b): c}``; rejects asymmetric input."""
        full = {}
        for (a, b), c in terms.items():
            if a < 0 or b < 0 or int(a) != a or int(b) != b:
                raise IndexSpecError(f"exponents must be non-negative integers, got {(a, b)}")
            c = Fraction(c)
            if c:
                full[(int(a), int(b))] = full.get((int(a), int(b)), 0) + c
        full = {k: v for k, v in full.items() if v}
        for (a, b), c in full.items():
            if full.get((b, a), 0) != c:
                raise IndexSpecError(f"polynomial is not symmetric: x^{a}y^{b} has {c}, x^{b}y^{a} has {full.get((b, a), 0)}")
        stored = sorted(((a, b), c) for (a, b), c in full.items() if a >= b)
        return cls(tuple(stored))

    @classmethod
    def from_stored(cls, coeffs: Mapping[Monomial, object]) -> SymmetricPoly:
        full: dict[Monomial, Fraction] = {}
        for (a, b), c in coeffs.items():
            if a < b:
                a, b = b, a
            full[(a, b)] = full.get((a, b), 0) + Fraction(c)
            if a != b:
                full[(b, a)] = full.get((b, a), 0) + Fraction(c)
        return cls.from_terms(full)

    @classmethod
    def _from_bivariate(cls, p: _Bivariate) -> SymmetricPoly:
        return cls.from_terms(p.terms)

    @cached_property
    def terms(self) -> dict[Monomial, Fraction]:
        """Full monomial expansion ``{(a, b): c}`` meaning ``c * x^a * y^b``."""
        out: dict[Monomial, Fraction] = {}
        for (a, b), c in self.coeffs:
            out[(a, b)] = c
            if a != b:
                out[(b, a)] = c
        return out

    @property
    def max_deg_x(self) -> int:
        """Largest exponent of x (equal to that of y by symmetry); -1 for the zero polynomial."""
        return max((a for (a, _b), _c in self.coeffs), default=-1)

    @property
    def total_degree(self) -> int:
        return max((a + b for (a, b), _c in self.coeffs), default=-1)

    def has_monomial(self, a: int, b: int) -> bool:
        return (max(a, b), min(a, b)) in dict(self.coeffs)

    def __call__(self, x, y) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * x**a * y**b
        return total

    def __str__(self) -> str:
        out = ""
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(s for s in (_pw("x", a), _pw("y", b)) if s)
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}*{mono}" if mono else f"{mag}"
            if not out:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" + {body}" if c > 0 else f" - {body}"
        return out or "0"


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def vertex_index_to_edge_poly(r: int) -> SymmetricPoly:
    """Edge kernel of ``sum_v d(v)^r``: ``x^(r-1) + y^(r-1)``."""
    if r < 1:
        raise IndexSpecError("vertex-sum conversion needs r >= 1; R0_0 counts vertices")
    return SymmetricPoly._from_bivariate(X ** (r - 1) + Y ** (r - 1))


_FIXED = {
    "M1": lambda: X + Y,
    "F": lambda: X**2 + Y**2,
    "M2": lambda: X * Y,
    "RM2": lambda: (X - 1) * (Y - 1),
    "HM1": lambda: (X + Y) ** 2,
    "HM2": lambda: (X * Y) ** 2,
    "HF": lambda: (X**2 + Y**2) ** 2,
    "EM1": lambda: (X + Y - 2) ** 2,
    "B1": lambda: 3 * X + 3 * Y - 4,
    "B2": lambda: (X + Y - 2) * (X + Y),
}

_PARAM_ARITY = {"chi_r": 1, "R0_r": 1, "R_r": 1, "M_rs": 2}

INDEX_NAMES = tuple(_FIXED) + tuple(_PARAM_ARITY)


@dataclass(frozen=True)
class IndexDef:
    """A named index: its edge polynomial plus registry metadata.

    ``edge_poly`` is None only for ``R0_r`` with r = 0, whose value is the vertex count.
    """

    name: str
    params: tuple[int, ...] = ()
    edge_poly: SymmetricPoly | None = None
    registry: bool = True

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:{','.join(map(str, self.params))}"

    @property
    def counts_vertices(self) -> bool:
        return self.edge_poly is None

    @property
    def is_A0_member(self) -> bool:
        return self.registry

    @property
    def is_polynomial(self) -> bool:
        return self.edge_poly is not None

    @cached_property
    def monotone_on_positive_grid(self) -> bool:
        return self.edge_poly is not None and is_monotone_on_grid(self.edge_poly, 20)

    @property
    def per_variable_degree(self) -> int:
        return 0 if self.edge_poly is None else self.edge_poly.max_deg_x

    @property
    def has_x2y2(self) -> bool:
        return self.edge_poly is not None and self.edge_poly.has_monomial(2, 2)


def registry_lookup(name: str, params: Iterable[int] = ()) -> IndexDef:
    params = tuple(int(p) for p in params)
    if name in _FIXED:
        if params:
            raise IndexSpecError(f"{name} takes no parameters")
        return IndexDef(name, (), SymmetricPoly._from_bivariate(_FIXED[name]()))
    if name not in _PARAM_ARITY:
        raise IndexSpecError(f"unknown index {name!r}; known: {', '.join(INDEX_NAMES)}")
    if len(params) != _PARAM_ARITY[name]:
        raise IndexSpecError(f"{name} needs {_PARAM_ARITY[name]} integer parameter(s)")
    if any(p < 0 for p in params):
        raise IndexSpecError("exponents must be non-negative integers")
    if name == "chi_r":
        (r,) = params
        poly = (X + Y) ** r
    elif name == "R0_r":
        (r,) = params
        if r == 0:
            return IndexDef(name, params, None)
        return IndexDef(name, params, vertex_index_to_edge_poly(r))
    elif name == "R_r":
        (r,) = params
        poly = (X * Y) ** r
    else:
        r, s = params
        poly = X**r * Y**s + X**s * Y**r
    return IndexDef(name, params, SymmetricPoly._from_bivariate(poly))


def custom_index(poly: SymmetricPoly, name: str = "custom") -> IndexDef:
    return IndexDef(name, (), poly, registry=False)


def parse_poly(text: str) -> SymmetricPoly:
    """Parse a polynomial in ``x`` and ``y`` such as ``"x*y + (x+y)^2/2"``."""
    import sympy

    x, y = sympy.symbols("x y")
    try:
        expr = sympy.parse_expr(text.replace("^", "**"), local_dict={"x": x, "y": y}, evaluate=True)
        poly = sympy.Poly(sympy.expand(expr), x, y)
    except (sympy.SympifyError, sympy.PolynomialError, SyntaxError, TypeError) as exc:
        raise IndexSpecError(f"cannot parse polynomial {text!r}: {exc}") from exc
    if poly.free_symbols - {x, y}:
        raise IndexSpecError(f"polynomial {text!r} has symbols other than x and y")
    terms = {}
    for (a, b), c in poly.terms():
        if not c.is_Rational:
            raise IndexSpecError(f"coefficient {c} is not rational")
        terms[(a, b)] = Fraction(int(c.p), int(c.q))
    return SymmetricPoly.from_terms(terms)


def parse_index(text: str) -> IndexDef:
    """Parse CLI forms ``"M2"``, ``"chi_r:2"``, ``"M_rs:2,1"``, ``"R0_r:3"``, ``"poly:x*y+1"``."""
    text = text.strip()
    if text.startswith("poly:"):
        return custom_index(parse_poly(text[5:]), name=text)
    name, _, rest = text.partition(":")
    params: list[int] = []
    if rest:
        try:
            params = [int(p) for p in rest.split(",")]
        except ValueError as exc:
            raise IndexSpecError(f"index parameters must be integers: {text!r}") from exc
    return registry_lookup(name, params)


def standard_registry(max_param: int = 4) -> list[IndexDef]:
    """Every registry index with parameters in ``1..max_param`` (``M_rs`` with r >= s)."""
    out = [registry_lookup(name) for name in _FIXED]
    ps = range(1, max_param + 1)
    out += [registry_lookup("chi_r", [r]) for r in ps]
    out += [registry_lookup("R0_r", [r]) for r in ps]
    out += [registry_lookup("R_r", [r]) for r in ps]
    out += [registry_lookup("M_rs", [r, s]) for r in ps for s in ps if s <= r]
    return out


def eval_index(defn: IndexDef, g: Graph) -> Fraction:
    """``sum over edges uv of f(d(u), d(v))``, exactly; the vertex count for R0_0."""
    if defn.edge_poly is None:
        return Fraction(g.n)
    f = defn.edge_poly
    deg = g.degrees
    cache: dict[tuple[int, int], Fraction] = {}
    total = Fraction(0)
    for u, v in g.edges():
        key = (deg[u], deg[v]) if deg[u] >= deg[v] else (deg[v], deg[u])
        val = cache.get(key)
        if val is None:
            val = cache[key] = f(*key)
        total += val
    return total


def eval_on_degree_pairs(defn: IndexDef, pairs: Iterable[tuple[int, int, int]]) -> Fraction:
    """Index value from ``(d(u), d(v), multiplicity)`` edge classes (for graphs too big to build)."""
    if defn.edge_poly is None:
        raise IndexSpecError("R0_0 needs the vertex count, not edge degrees")
    return sum((mult * defn.edge_poly(a, b) for a, b, mult in pairs), Fraction(0))


def is_monotone_on_grid(f: SymmetricPoly, n: int) -> bool:
    """True iff ``f(x, y) <= f(x + 1, y)`` for all integers ``1 <= x, y <= n``."""
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if f(x, y) > f(x + 1, y):
                return False
    return True


def delta_remove_edge(defn: IndexDef, g: Graph, u: int, v: int) -> Fraction:
    """``Q(G) - Q(G - uv)`` computed from the edges at u and v only."""
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    if defn.edge_poly is None:
        return Fraction(0)
    f = defn.edge_poly
    deg = g.degrees
    du, dv = deg[u], deg[v]
    delta = f(du, dv)
    for w in g.neighbors(u):
        if w != v:
            delta += f(du, deg[w]) - f(du - 1, deg[w])
    for w in g.neighbors(v):
        if w != u:
            delta += f(dv, deg[w]) - f(dv - 1, deg[w])
    return delta


def fmt_rational(x: Fraction | int) -> str | int:
    """JSON form of an exact rational: an int when integral, else ``"p/q"``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
