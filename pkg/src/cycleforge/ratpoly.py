"""Sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` for exact work; float coefficients
are tolerated for numeric paths (Lyapunov sweeps over real parameters) but the
elimination primitives assume an exact domain.

Canonical text grammar (what :func:`poly_parse` reads and ``str`` writes)::

    poly     := term (('+' | '-') term)*
    term     := ['-'] factor ('*' factor)*      # '*' may be omitted
    factor   := rational | name ['^' int]
    rational := int ['/' int]

Serialization lists terms in graded-lex order with respect to the declared
variable order, so equal polynomials over the same variable list print
identically.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "MultiPoly",
    "UniView",
    "PolySyntaxError",
    "poly_parse",
    "poly_eval",
    "poly_arith",
    "derivative",
    "uniview",
    "pseudo_division",
    "resultant",
    "sylvester_matrix",
    "sturm_sequence",
    "sturm_count",
    "squarefree_part",
    "upoly_gcd",
]


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


def _as_exact(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return c


class MultiPoly:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple, object] | None = None, vars: Sequence[str] = ()):
        vars = tuple(vars)
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != len(vars):
                raise ValueError(f"exponent {e} does not match variables {vars}")
            if c != 0:
                clean[tuple(e)] = _as_exact(c)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c, vars: Sequence[str] = ()) -> "MultiPoly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] | None = None) -> "MultiPoly":
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            vars = vars + (name,)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls({e: 1}, vars)

    @classmethod
    def from_univariate(cls, coeffs: Sequence, name: str) -> "MultiPoly":
        """Dense ascending coefficient list -> polynomial in ``name``."""
        return cls({(i,): c for i, c in enumerate(coeffs)}, (name,))

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def free_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def with_vars(self, vars: Sequence[str]) -> "MultiPoly":
        """Re-express over ``vars`` (must include every variable actually used)."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = []
        for v in vars:
            idx.append(self.vars.index(v) if v in self.vars else None)
        for i, v in enumerate(self.vars):
            if v not in vars and any(e[i] for e in self.terms):
                raise ValueError(f"variable {v!r} is used but missing from {vars}")
        terms = {tuple(e[j] if j is not None else 0 for j in idx): c for e, c in self.terms.items()}
        return MultiPoly(terms, vars)

    def _align(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self, other
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(vars), other.with_vars(vars)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, Number):
            return MultiPoly.const(other, self.vars)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms, a.vars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.vars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(terms, a.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            other = _as_exact(other)
            return MultiPoly({e: c / other for e, c in self.terms.items()}, self.vars)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, MultiPoly) else other
        if other is NotImplemented:
            return False
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        p = self.with_vars(sorted(self.free_vars()))
        return hash((p.vars, frozenset(p.terms.items())))

    # -- calculus and evaluation -----------------------------------------
    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly({}, self.vars)
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MultiPoly(terms, self.vars)

    def eval(self, point: Mapping[str, object]):
        """Evaluate at a full assignment; exact when the inputs are exact."""
        missing = [v for v in self.free_vars() if v not in point]
        if missing:
            raise KeyError(f"unbound variable(s): {', '.join(missing)}")
        return self._eval_powers([_as_exact(point[v]) if v in point else 0 for v in self.vars])

    def _eval_powers(self, values):
        n = len(self.vars)
        maxdeg = [0] * n
        for e in self.terms:
            for i in range(n):
                if e[i] > maxdeg[i]:
                    maxdeg[i] = e[i]
        powers = []
        for i in range(n):
            row = [1]
            for _ in range(maxdeg[i]):
                row.append(row[-1] * values[i])
            powers.append(row)
        total = 0
        for e, c in self.terms.items():
            t = c
            for i in range(n):
                if e[i]:
                    t = t * powers[i][e[i]]
            total += t
        return Fraction(total) if isinstance(total, int) else total

    def subs(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Substitute numbers for some variables; those variables are dropped."""
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        drop = [(i, _as_exact(assignment[v])) for i, v in enumerate(self.vars) if v in assignment]
        vars = tuple(self.vars[i] for i in keep)
        terms: dict = {}
        for e, c in self.terms.items():
            t = c
            for i, val in drop:
                if e[i]:
                    t = t * val ** e[i]
            k = tuple(e[i] for i in keep)
            terms[k] = terms.get(k, 0) + t
        return MultiPoly(terms, vars)

    def compose(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Replace variables by polynomials (variables not in mapping stay)."""
        out_vars: list[str] = [v for v in self.vars if v not in mapping]
        for q in mapping.values():
            for v in q.vars:
                if v not in out_vars:
                    out_vars.append(v)
        out_vars_t = tuple(out_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                images.append(mapping[v].with_vars(out_vars_t))
            else:
                images.append(MultiPoly.var(v, out_vars_t))
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = images[i] ** k
            return cache[key]

        result = MultiPoly({}, out_vars_t)
        for e, c in self.terms.items():
            t = MultiPoly.const(c, out_vars_t)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result.with_vars(out_vars_t)

    def coeffs_in(self, var: str) -> list["MultiPoly"]:
        """Coefficients as polynomials in the remaining variables, index = degree."""
        if var not in self.vars:
            return [self]
        i = self.vars.index(var)
        rest = tuple(v for v in self.vars if v != var)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        d = max(buckets) if buckets else 0
        return [MultiPoly(buckets.get(k, {}), rest) for k in range(d + 1)]

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.vars)

    def split_signs(self) -> tuple["MultiPoly", "MultiPoly"]:
        """(positive-coefficient part, negative-coefficient part)."""
        pos = {e: c for e, c in self.terms.items() if c > 0}
        neg = {e: c for e, c in self.terms.items() if c < 0}
        return MultiPoly(pos, self.vars), MultiPoly(neg, self.vars)

    # -- exact division -------------------------------------------------
    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient when ``other`` divides ``self`` exactly; ValueError otherwise."""
        if isinstance(other, Number):
            return self / other
        a, b = self._align(other)
        if b.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if b.is_constant():
            return a / b.constant_value()
        lead_e = max(b.terms)
        lead_c = b.terms[lead_e]
        rem = dict(a.terms)
        quot: dict = {}
        while rem:
            e = max(rem)
            c = rem[e]
            d = tuple(x - y for x, y in zip(e, lead_e))
            if min(d) < 0:
                raise ValueError("inexact polynomial division")
            t = c / lead_c if isinstance(c, Fraction) or isinstance(lead_c, Fraction) else c / lead_c
            quot[d] = t
            for eb, cb in b.terms.items():
                k = tuple(x + y for x, y in zip(eb, d))
                v = rem.get(k, 0) - t * cb
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return MultiPoly(quot, a.vars)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def primitive(self) -> tuple[Fraction, "MultiPoly"]:
        """Split into (rational content, integer-coprime part with positive leading coeff)."""
        from math import gcd, lcm

        if not self.terms:
            return Fraction(0), self
        cs = [Fraction(c) for c in self.terms.values()]
        den = lcm(*(c.denominator for c in cs))
        num = 0
        for c in cs:
            num = gcd(num, c.numerator * (den // c.denominator))
        content = Fraction(num, den)
        lead = self.terms[self.sorted_exponents()[0]]
        if lead < 0:
            content = -content
        return content, self / content

    # -- ordering and text --------------------------------------------------
    def sorted_exponents(self) -> list[tuple]:
        """Graded-lex order, highest first."""
        return sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, vars={self.vars})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in self.sorted_exponents():
            c = self.terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k
            )
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{_fmt_coeff(mag)}*{mono}"
            else:
                body = _fmt_coeff(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(c)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def poly_parse(text: str, vars: Sequence[str] | None = None) -> MultiPoly:
    """Parse canonical polynomial text.

    With ``vars`` given, any other identifier is an error; otherwise variables
    are collected in order of first appearance.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(0).strip() == "":
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))

    declared = list(vars) if vars is not None else None
    seen: list[str] = list(vars) if vars is not None else []
    raw_terms: list[tuple[Fraction, dict]] = []
    i = 0

    def peek():
        return tokens[i]

    def expect_factor():
        nonlocal i
        kind, val, p = tokens[i]
        if kind == "num":
            i += 1
            num = val
            if tokens[i][0] == "op" and tokens[i][1] == "/":
                i += 1
                if tokens[i][0] != "num":
                    raise PolySyntaxError("expected denominator", tokens[i][2])
                den = tokens[i][1]
                if den == 0:
                    raise PolySyntaxError("zero denominator", tokens[i][2])
                i += 1
                return Fraction(num, den), None
            return Fraction(num), None
        if kind == "name":
            if declared is not None and val not in declared:
                raise PolySyntaxError(f"unknown variable {val!r}", p)
            if val not in seen:
                seen.append(val)
            i += 1
            k = 1
            if tokens[i][0] == "op" and tokens[i][1] == "^":
                i += 1
                if tokens[i][0] != "num":
                    raise PolySyntaxError("expected integer exponent", tokens[i][2])
                k = tokens[i][1]
                i += 1
            return None, (val, k)
        if kind == "op" and val == "(":
            raise PolySyntaxError("parentheses are not part of the canonical grammar", p)
        raise PolySyntaxError(f"unexpected {val!r}" if val else "unexpected end of input", p)

    sign = 1
    kind, val, p = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        mono: dict[str, int] = {}
        c, v = expect_factor()
        while True:
            if c is not None:
                coeff *= c
            else:
                mono[v[0]] = mono.get(v[0], 0) + v[1]
            kind, val, p = peek()
            if kind == "op" and val == "*":
                i += 1
                c, v = expect_factor()
                continue
            if kind in ("num", "name"):
                c, v = expect_factor()
                continue
            break
        raw_terms.append((coeff, mono))
        kind, val, p = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolySyntaxError(f"unexpected {val!r}", p)

    allvars = tuple(seen)
    terms: dict = {}
    for coeff, mono in raw_terms:
        e = tuple(mono.get(v, 0) for v in allvars)
        terms[e] = terms.get(e, 0) + coeff
    return MultiPoly(terms, allvars)


def poly_eval(p: MultiPoly, point: Mapping[str, object]):
    return p.eval(point)


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def derivative(p: MultiPoly, var: str) -> MultiPoly:
    return p.derivative(var)


# ---------------------------------------------------------------------------
# univariate views and elimination


@dataclass(frozen=True)
class UniView:
    """``base`` seen as a polynomial in ``main_var`` with polynomial coefficients."""

    base: MultiPoly
    main_var: str
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if not self.base.is_zero() else -1

    @property
    def lc(self) -> MultiPoly:
        return self.coeffs[-1]


def uniview(p: MultiPoly, var: str) -> UniView:
    cs = p.coeffs_in(var)
    while len(cs) > 1 and cs[-1].is_zero():
        cs.pop()
    return UniView(p, var, tuple(cs))


def _view(x, var: str | None) -> UniView:
    if isinstance(x, UniView):
        return x
    if var is None:
        fv = x.free_vars()
        if len(fv) != 1:
            raise ValueError("main variable must be given for multivariate input")
        var = fv[0]
    return uniview(x, var)


def _assemble(coeffs: Sequence[MultiPoly], var: str, rest_vars: Sequence[str]) -> MultiPoly:
    vars = tuple(rest_vars) + (var,) if var not in rest_vars else tuple(rest_vars)
    x = MultiPoly.var(var, vars)
    out = MultiPoly({}, vars)
    xp = MultiPoly.const(1, vars)
    for c in coeffs:
        out = out + c.with_vars(vars) * xp if not c.is_zero() else out
        xp = xp * x
    return out


def _trim(cs: list) -> list:
    while cs and _is_zero(cs[-1]):
        cs.pop()
    return cs


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, MultiPoly) else c == 0


def _prem_lists(a: list, b: list, one):
    """Pseudo-remainder on dense coefficient lists; returns (m, q, r)."""
    da, db = len(a) - 1, len(b) - 1
    lcb = b[-1]
    r = list(a)
    q = [one * 0] * (da - db + 1)
    e = da - db + 1
    m = e
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        lr = r[-1]
        q = [c * lcb for c in q]
        q[k] = q[k] + lr
        nr = [c * lcb for c in r]
        for j, cb in enumerate(b):
            nr[j + k] = nr[j + k] - lr * cb
        nr.pop()
        r = _trim(nr)
        e -= 1
    if e:
        f = lcb ** e
        q = [c * f for c in q]
        r = [c * f for c in r]
    return m, q, r


def pseudo_division(A, B, var: str | None = None):
    """Return ``(m, Q, R)`` with ``lc(B)^m * A = Q*B + R`` and deg R < deg B."""
    va, vb = _view(A, var), _view(B, var)
    if vb.base.is_zero():
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    if vb.main_var != va.main_var:
        raise ValueError("main variables differ")
    x = va.main_var
    base_a, base_b = va.base._align(vb.base)
    va, vb = uniview(base_a, x), uniview(base_b, x)
    rest = tuple(v for v in base_a.vars if v != x)
    if va.degree < vb.degree:
        return 0, MultiPoly({}, base_a.vars), base_a
    one = MultiPoly.const(1, rest)
    m, q, r = _prem_lists(list(va.coeffs), list(vb.coeffs), one)
    Q = _assemble(q, x, rest).with_vars(base_a.vars)
    R = _assemble(r, x, rest).with_vars(base_a.vars) if r else MultiPoly({}, base_a.vars)
    return m, Q, R


def _exquo(a, b):
    if isinstance(a, MultiPoly):
        return a.exact_div(b)
    return a / b


def _subresultant(a: list, b: list, one):
    """Resultant of dense coefficient lists over an integral domain.

    Subresultant PRS; the result equals the Sylvester determinant with the
    rows of ``a`` placed first.
    """
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    g = one
    h = one
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            break
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        _, _, r = _prem_lists(a, b, one)
        if not r:
            return one * 0
        a = b
        div = g * h ** delta
        b = [_exquo(c, div) for c in r]
        g = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _exquo(g ** delta, h ** (delta - 1))
    da = len(a) - 1
    lb = b[-1]
    if da == 0:
        res = one
    elif da == 1:
        res = lb
    else:
        res = _exquo(lb ** da, h ** (da - 1))
    return res * s


def resultant(A, B, var: str | None = None) -> MultiPoly:
    """Sylvester resultant in ``var`` (rows of A first)."""
    va, vb = _view(A, var), _view(B, var)
    x = va.main_var
    if vb.main_var != x:
        raise ValueError("main variables differ")
    base_a, base_b = va.base._align(vb.base)
    va, vb = uniview(base_a, x), uniview(base_b, x)
    if va.degree < 1 or vb.degree < 1:
        raise ValueError("resultant needs positive degree in the main variable")
    rest = tuple(v for v in base_a.vars if v != x)
    one = MultiPoly.const(1, rest)
    r = _subresultant(list(va.coeffs), list(vb.coeffs), one)
    return r


def sylvester_matrix(A, B, var: str | None = None) -> list[list[MultiPoly]]:
    va, vb = _view(A, var), _view(B, var)
    m, n = va.degree, vb.degree
    size = m + n
    zero = MultiPoly({}, ())
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(va.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(vb.coeffs)):
            row[i + j] = c
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (ascending coefficient lists of Fraction)


def _to_dense(p) -> list[Fraction]:
    if isinstance(p, UniView):
        cs = [c.constant_value() if not c.is_zero() else Fraction(0) for c in p.coeffs]
    elif isinstance(p, MultiPoly):
        fv = p.free_vars()
        if len(fv) > 1:
            raise ValueError("expected a univariate polynomial")
        if not fv:
            cs = [p.constant_value() if not p.is_zero() else Fraction(0)]
        else:
            cs = [c.constant_value() if not c.is_zero() else Fraction(0) for c in p.coeffs_in(fv[0])]
    else:
        cs = [Fraction(c) for c in p]
    return _trim([Fraction(c) for c in cs])


def _udiv(a: list, b: list):
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        t = a[-1] / lb
        q[k] = t
        for j, cb in enumerate(b):
            a[j + k] -= t * cb
        a.pop()
        _trim(a)
    return _trim(q), a


def _uderiv(a: list) -> list:
    return _trim([a[i] * i for i in range(1, len(a))])


def _monic(a: list) -> list:
    return [c / a[-1] for c in a] if a else a


def upoly_gcd(a, b) -> list[Fraction]:
    a, b = _to_dense(a), _to_dense(b)
    while b:
        _, r = _udiv(a, b)
        a, b = b, r
    return _monic(a)


def _ueval(a: list, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def _squarefree_dense(a: list) -> list:
    g = upoly_gcd(a, _uderiv(a))
    if len(g) <= 1:
        return _primitive_dense(a)
    q, r = _udiv(a, g)
    assert not r
    return _primitive_dense(q)


def _primitive_dense(a: list) -> list:
    from math import gcd, lcm

    if not a:
        return a
    den = lcm(*(c.denominator for c in a))
    ints = [c.numerator * (den // c.denominator) for c in a]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return [Fraction(v // g) for v in ints]


def squarefree_part(p, var: str | None = None) -> MultiPoly:
    """``p / gcd(p, p')`` with integer-coprime coefficients, positive leading term."""
    if isinstance(p, UniView):
        var = p.main_var
        base = p.base
    else:
        base = p
        fv = base.free_vars()
        if var is None:
            if len(fv) != 1:
                raise ValueError("squarefree_part works on univariate polynomials")
            var = fv[0]
    if base.is_zero():
        raise ValueError("zero polynomial")
    dense = _to_dense(base.with_vars((var,)) if set(base.free_vars()) <= {var} else base)
    return MultiPoly.from_univariate(_squarefree_dense(dense), var)


def sturm_sequence(p) -> list[list[Fraction]]:
    a = _to_dense(p)
    if not a:
        raise ValueError("zero polynomial")
    seq = [a, _uderiv(a)]
    while seq[-1]:
        _, r = _udiv(seq[-2], seq[-1])
        seq.append([-c for c in r])
    seq.pop()
    return seq


def _sign_changes(values) -> int:
    count = 0
    last = 0
    for v in values:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def _variations_at(seq, x) -> int:
    return _sign_changes(_ueval(c, x) for c in seq)


def _variations_at_infinity(seq, positive: bool) -> int:
    vals = []
    for c in seq:
        lead = c[-1]
        deg = len(c) - 1
        if not positive and deg % 2:
            lead = -lead
        vals.append(lead)
    return _sign_changes(vals)


def sturm_count(p, interval=(None, None), seq=None) -> int:
    """Number of distinct real roots in ``(lo, hi]``; ``None`` bounds mean infinity.

    The polynomial is squarefree-reduced first, so the half-open convention
    holds exactly even when an endpoint is a root.
    """
    a = _to_dense(p)
    if not a:
        raise ValueError("zero polynomial")
    if seq is None:
        seq = sturm_sequence(_squarefree_dense(a))
    lo, hi = interval
    vlo = _variations_at_infinity(seq, False) if lo is None else _variations_at(seq, Fraction(lo))
    vhi = _variations_at_infinity(seq, True) if hi is None else _variations_at(seq, Fraction(hi))
    return vlo - vhi
