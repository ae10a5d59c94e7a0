"""Sparse multivariate polynomials with coefficients in Z[Q/Z].

Exponents may go negative inside intermediate computations (substituting
u -> u^-1 and the like); the public ``substitute`` rejects results that are
not honest polynomials.  Polynomials over plain Z are the special case where
every coefficient only involves the class [0].
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import NonPolynomialResult
from .groupring import GroupRingElement, TorsionClass


class Polynomial:
    """A polynomial in a fixed ordered tuple of variables."""

    __slots__ = ("vars", "_terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = GroupRingElement.coerce(coeff)
                if coeff:
                    exp = tuple(int(e) for e in exp)
                    if len(exp) != len(self.vars):
                        raise ValueError("exponent arity mismatch")
                    prev = clean.get(exp)
                    coeff = coeff + prev if prev is not None else coeff
                    if coeff:
                        clean[exp] = coeff
                    else:
                        del clean[exp]
        object.__setattr__(self, "_terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables) -> "Polynomial":
        return Polynomial(variables)

    @staticmethod
    def constant(variables, value) -> "Polynomial":
        variables = tuple(variables)
        return Polynomial(variables, {(0,) * len(variables): GroupRingElement.coerce(value)})

    @staticmethod
    def one(variables) -> "Polynomial":
        return Polynomial.constant(variables, 1)

    @staticmethod
    def variable(variables, name, power: int = 1) -> "Polynomial":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = power
        return Polynomial(variables, {tuple(exp): GroupRingElement.one()})

    @staticmethod
    def monomial(variables, exp, coeff=1) -> "Polynomial":
        return Polynomial(variables, {tuple(exp): GroupRingElement.coerce(coeff)})

    # -- inspection ---------------------------------------------------------

    def items(self):
        """Terms sorted lexicographically by exponent."""
        return sorted(self._terms.items())

    def coefficient(self, exp) -> GroupRingElement:
        return self._terms.get(tuple(exp), GroupRingElement.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exp in self._terms for e in exp)

    def degree(self, name) -> int:
        """Largest exponent of the given variable (0 for the zero polynomial)."""
        i = self.vars.index(name)
        return max((exp[i] for exp in self._terms), default=0)

    def total_degrees(self):
        return sorted({sum(exp) for exp in self._terms})

    def coefficient_of(self, name, power: int) -> "Polynomial":
        """Coefficient of name**power, as a polynomial in the other variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        terms = {}
        for exp, c in self._terms.items():
            if exp[i] == power:
                key = tuple(e for j, e in enumerate(exp) if j != i)
                terms[key] = terms.get(key, GroupRingElement.zero()) + c
        return Polynomial(rest, terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.vars, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return Polynomial.constant(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            prev = out.get(exp)
            out[exp] = c + prev if prev is not None else c
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, GroupRingElement, TorsionClass, Fraction)):
            other = GroupRingElement.coerce(other)
            return Polynomial(self.vars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                prev = out.get(exp)
                out[exp] = prod + prev if prev is not None else prod
        return Polynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) == 1:
                return self._invert_monomial() ** (-n)
            raise NonPolynomialResult("negative power of a non-monomial")
        out = Polynomial.one(self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def _invert_monomial(self) -> "Polynomial":
        ((exp, coeff),) = self._terms.items()
        items = coeff.items()
        if len(items) != 1 or abs(items[0][1]) != 1:
            raise NonPolynomialResult("coefficient is not invertible")
        cls, c = items[0]
        inv = GroupRingElement.of_class(cls.conjugate(), c)
        return Polynomial(self.vars, {tuple(-e for e in exp): inv})

    # -- substitution ---------------------------------------------------------

    def laurent_substitute(self, mapping) -> "Polynomial":
        """Substitute without insisting the result is a polynomial.

        ``mapping`` sends variable names to Polynomials (or ints); unmapped
        variables map to themselves.  All substituted values must share one
        variable tuple, which becomes the variable tuple of the result.
        """
        values = {}
        target = None
        for name, val in mapping.items():
            if name not in self.vars:
                raise ValueError(f"unknown variable {name!r}")
            if isinstance(val, Polynomial):
                if target is not None and val.vars != target:
                    raise ValueError("substituted values disagree on variables")
                target = val.vars
            values[name] = val
        if target is None:
            target = self.vars
        for name in self.vars:
            if name not in values:
                if name not in target:
                    raise ValueError(f"variable {name!r} has no image")
                values[name] = Polynomial.variable(target, name)
            elif not isinstance(values[name], Polynomial):
                values[name] = Polynomial.constant(target, values[name])
        out = Polynomial.zero(target)
        for exp, coeff in self._terms.items():
            term = Polynomial.constant(target, coeff)
            for name, e in zip(self.vars, exp):
                if e:
                    term = term * values[name] ** e
            out = out + term
        return out

    def substitute(self, mapping) -> "Polynomial":
        out = self.laurent_substitute(mapping)
        if not out.is_polynomial():
            raise NonPolynomialResult("substitution produced negative exponents")
        return out

    def rename(self, mapping) -> "Polynomial":
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        return Polynomial(new_vars, dict(self._terms))

    def extend(self, variables) -> "Polynomial":
        """View in a larger variable tuple (new variables get exponent 0)."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        terms = {}
        for exp, c in self._terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = c
        return Polynomial(variables, terms)

    def at_ones(self) -> GroupRingElement:
        """Specialize every variable to 1."""
        out = GroupRingElement.zero()
        for c in self._terms.values():
            out = out + c
        return out

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.vars, {e: fn(c) for e, c in self._terms.items()})

    def conjugate(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.conjugate())

    def forget(self) -> "Polynomial":
        """Collapse coefficients to Z (kept as multiples of [0])."""
        return self.map_coefficients(lambda c: GroupRingElement.of_int(c.forget()))

    # -- exact division --------------------------------------------------------

    def divide_exact_monomial(self, exp) -> "Polynomial":
        exp = tuple(exp)
        out = {}
        for e, c in self._terms.items():
            q = tuple(x - y for x, y in zip(e, exp))
            if any(x < 0 for x in q):
                raise NonPolynomialResult("monomial division is not exact")
            out[q] = c
        return Polynomial(self.vars, out)

    def divide_exact_linear(self, name) -> "Polynomial":
        """Exact division by (x - 1) where x is the named variable."""
        i = self.vars.index(name)
        degree = self.degree(name)
        coeffs = [self.coefficient_of(name, k) for k in range(degree + 1)]
        rest = coeffs[0].vars
        quotient = [Polynomial.zero(rest) for _ in range(degree)]
        acc = Polynomial.zero(rest)
        # p = (x-1) q  =>  q_{k} = -(p_0 + ... + p_k) for ascending synthetic division
        for k in range(degree):
            acc = acc + coeffs[k]
            quotient[k] = -acc
        if acc + coeffs[degree] != Polynomial.zero(rest):
            raise NonPolynomialResult("division by (x - 1) leaves a remainder")
        out = Polynomial.zero(self.vars)
        for k, q in enumerate(quotient):
            out = out + q.extend(self.vars) * Polynomial.variable(self.vars, name, k)
        return out

    # -- encoding ----------------------------------------------------------------

    def to_json(self):
        return {
            "variables": list(self.vars),
            "terms": [{"exp": list(exp), "coeff": c.to_json()} for exp, c in self.items()],
        }

    @staticmethod
    def from_json(data) -> "Polynomial":
        return Polynomial(
            tuple(data["variables"]),
            {tuple(t["exp"]): GroupRingElement.from_json(t["coeff"]) for t in data["terms"]},
        )

    def pretty(self) -> str:
        """Canonical readable form, e.g. ``1 + 4*u + 2*[1/2]*u^2``."""
        if not self._terms:
            return "0"
        pieces = []
        for exp, coeff in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.vars, exp) if e
            )
            for cls, c in coeff.items():
                factors = []
                if abs(c) != 1 or (cls.is_zero() and not mono):
                    factors.append(str(abs(c)))
                if not cls.is_zero():
                    factors.append(str(cls))
                if mono:
                    factors.append(mono)
                if not factors:
                    factors.append("1")
                pieces.append((c < 0, "*".join(factors)))
        out = ""
        for i, (neg, text) in enumerate(pieces):
            if i == 0:
                out = ("-" if neg else "") + text
            else:
                out += (" - " if neg else " + ") + text
        return out

    def __str__(self):
        return self.pretty()

    __repr__ = __str__


_TOKEN = re.compile(r"\s*(\[\d+(?:/\d+)?\]|[A-Za-z_]\w*(?:\^-?\d+)?|\d+|[+\-*])")


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse the output of :meth:`Polynomial.pretty`."""
    variables = tuple(variables)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    out = Polynomial.zero(variables)
    sign = 1
    factors = []

    def flush():
        nonlocal factors, sign
        if not factors:
            return
        coeff = sign
        cls = None
        exp = [0] * len(variables)
        for tok in factors:
            if tok.isdigit():
                coeff *= int(tok)
            elif tok.startswith("["):
                body = tok[1:-1]
                f = Fraction(body) if "/" in body else Fraction(int(body))
                cls = TorsionClass.of(f) if cls is None else cls + TorsionClass.of(f)
            else:
                name, _, power = tok.partition("^")
                exp[variables.index(name)] += int(power) if power else 1
        gre = GroupRingElement.of_class(cls, coeff) if cls else GroupRingElement.of_int(coeff)
        nonlocal out
        out = out + Polynomial(variables, {tuple(exp): gre})
        factors = []
        sign = 1

    for tok in tokens:
        if tok == "+":
            flush()
        elif tok == "-":
            flush()
            sign = -1
        elif tok == "*":
            continue
        else:
            factors.append(tok)
    flush()
    return out


class FractionalPolynomial:
    """Finite sum of integer multiples of t^q with non-negative rational q."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for q, c in terms.items():
                q = Fraction(q)
                if q < 0:
                    raise ValueError("exponents must be non-negative")
                if c:
                    clean[q] = clean.get(q, 0) + c
                    if not clean[q]:
                        del clean[q]
        self._terms = clean

    def items(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        return isinstance(other, FractionalPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def is_palindromic(self, degree) -> bool:
        """Whether p(t) = t^degree * p(1/t)."""
        degree = Fraction(degree)
        return all(self._terms.get(degree - q, 0) == c for q, c in self._terms.items())

    def to_json(self):
        return [
            {"num": q.numerator, "den": q.denominator, "coeff": c} for q, c in self.items()
        ]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for q, c in self.items():
            if q == 0:
                parts.append(str(c))
                continue
            body = f"t^({q})" if q.denominator > 1 else (f"t^{q}" if q != 1 else "t")
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def fractional_from_hstar(h: Polynomial) -> FractionalPolynomial:
    """Re-encode a weighted h*-polynomial in one variable as t^(p+beta) terms.

    A term c*[k]*u^p with p >= 1 becomes c*t^(p-1+beta) where beta = k for
    k in (0,1) and beta = 1 for the class [0]; the constant term must be a
    plain integer and is kept at t^0.
    """
    if len(h.vars) != 1:
        raise ValueError("expected a univariate polynomial")
    terms = {}
    for (p,), coeff in h.items():
        for cls, c in coeff.items():
            if p == 0:
                if not cls.is_zero():
                    raise ValueError("constant term must be integral")
                terms[Fraction(0)] = terms.get(Fraction(0), 0) + c
                continue
            beta = cls.fraction if not cls.is_zero() else Fraction(1)
            q = p - 1 + beta
            terms[q] = terms.get(q, 0) + c
    return FractionalPolynomial(terms)
