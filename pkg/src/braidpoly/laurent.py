"""Exact sparse Laurent polynomials with integer coefficients.

Two flavours are needed: one variable (``A``) for bracket and Jones
values, and two variables (``a``, ``z``) for Kauffman-style values.
Terms are kept in a dict mapping exponents to nonzero ints, so all
arithmetic is exact at any size.

Rendering conventions, fixed once and relied on by the CLI tests:

* one variable: terms in descending exponent, ``A^-4 + A^-12 - A^-16``;
* two variables: grouped by ascending power of ``z``, descending ``a``
  inside each group, ``(a + a^-1) z^-1 - 1``;
* JSON: term lists in ascending exponent order (lexicographic for two
  variables), schemas below.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import BraidSyntaxError, NotDivisible, ZeroAssignment

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "LAURENT1_JSON_SCHEMA",
    "LAURENT2_JSON_SCHEMA",
]

LAURENT1_JSON_SCHEMA = {
    "type": "object",
    "properties": {
        "variable": {"const": "A"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "exp": {"type": "integer"},
                    "coeff": {"type": "integer"},
                },
                "required": ["exp", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["variable", "terms"],
    "additionalProperties": False,
}

LAURENT2_JSON_SCHEMA = {
    "type": "object",
    "properties": {
        "variables": {"const": ["a", "z"]},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "a": {"type": "integer"},
                    "z": {"type": "integer"},
                    "coeff": {"type": "integer"},
                },
                "required": ["a", "z", "coeff"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["variables", "terms"],
    "additionalProperties": False,
}


def _clean(terms: Mapping) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly1:
    """A Laurent polynomial in the single variable ``A``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if not isinstance(terms, Mapping):
            terms = dict(terms)
        self._terms = _clean(terms)

    @classmethod
    def zero(cls) -> "LaurentPoly1":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly1":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly1":
        """The monomial ``coeff * A^exp``."""
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out)

    def __sub__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        if not self._terms or not other._terms:
            return LaurentPoly1()
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly1(out)

    def __pow__(self, n: int) -> "LaurentPoly1":
        if n < 0:
            raise ValueError("negative powers only exist for unit monomials")
        out = LaurentPoly1.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mirror(self) -> "LaurentPoly1":
        """Substitute ``A -> A^-1`` (the value of the mirror diagram)."""
        return LaurentPoly1({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: "LaurentPoly1") -> "LaurentPoly1":
        """Exact division, raising :class:`NotDivisible` on any remainder.

        Units ``c * A^k`` with ``|c| = 1`` always divide; in general the
        quotient must again have integer coefficients.
        """
        if divisor.is_zero:
            raise NotDivisible("division by zero")
        if self.is_zero:
            return LaurentPoly1()
        shift_n = min(self._terms)
        shift_d = min(divisor._terms)
        rem = {e - shift_n: c for e, c in self._terms.items()}
        div = {e - shift_d: c for e, c in divisor._terms.items()}
        deg_d = max(div)
        lead_d = div[deg_d]
        quot: dict[int, int] = {}
        while rem:
            deg_r = max(rem)
            if deg_r < deg_d:
                raise NotDivisible("nonzero remainder")
            c, r = divmod(rem[deg_r], lead_d)
            if r != 0:
                raise NotDivisible("leading coefficient does not divide")
            e = deg_r - deg_d
            quot[e] = c
            for ed, cd in div.items():
                k = ed + e
                v = rem.get(k, 0) - c * cd
                if v:
                    rem[k] = v
                elif k in rem:
                    del rem[k]
        return LaurentPoly1({e + shift_n - shift_d: c for e, c in quot.items()})

    def evaluate(self, value: Fraction | int) -> Fraction:
        """Evaluate at a nonzero rational; exact by construction."""
        value = Fraction(value)
        if value == 0:
            raise ZeroAssignment("A = 0 is outside the Laurent domain")
        return sum((c * value**e for e, c in self._terms.items()), Fraction(0))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            parts.append(_join_sign(c, _monomial(abs(c), "A", e), first=not parts))
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "variable": "A",
            "terms": [
                {"exp": e, "coeff": self._terms[e]} for e in sorted(self._terms)
            ],
        }

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly1":
        """Parse the format emitted by :meth:`to_text`."""
        terms: dict[int, int] = {}
        for sign, body in _signed_chunks(text):
            coeff, exps = _parse_monomial(body, ("A",))
            e = exps["A"]
            terms[e] = terms.get(e, 0) + sign * coeff
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.to_text()!r})"


class LaurentPoly2:
    """A Laurent polynomial in the two variables ``a`` and ``z``."""

    __slots__ = ("_terms",)

    def __init__(
        self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()
    ):
        if not isinstance(terms, Mapping):
            terms = dict(terms)
        self._terms = _clean(terms)

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, a: int, z: int) -> "LaurentPoly2":
        """The monomial ``coeff * a^a_exp * z^z_exp``."""
        return cls({(a, z): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not self._terms or not other._terms:
            return LaurentPoly2()
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers only exist for unit monomials")
        out = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, a: Fraction | int, z: Fraction | int) -> Fraction:
        a = Fraction(a)
        z = Fraction(z)
        if a == 0 or z == 0:
            raise ZeroAssignment("a = 0 or z = 0 is outside the Laurent domain")
        return sum(
            (c * a**ea * z**ez for (ea, ez), c in self._terms.items()), Fraction(0)
        )

    def z_groups(self) -> Iterator[tuple[int, dict[int, int]]]:
        """Pairs (z exponent, {a exponent: coeff}) in ascending z order."""
        grouped: dict[int, dict[int, int]] = {}
        for (ea, ez), c in self._terms.items():
            grouped.setdefault(ez, {})[ea] = c
        for ez in sorted(grouped):
            yield ez, grouped[ez]

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for ez, group in self.z_groups():
            parts.append(_render_group(group, ez, first=not parts))
        return "".join(parts)

    def to_json(self) -> dict:
        return {
            "variables": ["a", "z"],
            "terms": [
                {"a": ea, "z": ez, "coeff": self._terms[(ea, ez)]}
                for ea, ez in sorted(self._terms)
            ],
        }

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Parse the format emitted by :meth:`to_text`."""
        terms: dict[tuple[int, int], int] = {}
        for sign, body in _signed_chunks(text):
            m = re.fullmatch(r"\((?P<inner>[^()]*)\)\s*(?P<zpart>z(\^-?\d+)?)?", body)
            if m:
                ez = _var_exp(m.group("zpart"), "z")
                for isign, ibody in _signed_chunks(m.group("inner")):
                    coeff, exps = _parse_monomial(ibody, ("a",))
                    k = (exps["a"], ez)
                    terms[k] = terms.get(k, 0) + sign * isign * coeff
            else:
                coeff, exps = _parse_monomial(body, ("a", "z"))
                k = (exps["a"], exps["z"])
                terms[k] = terms.get(k, 0) + sign * coeff
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()!r})"


# ---------------------------------------------------------------- rendering

def _monomial(coeff: int, var: str, exp: int) -> str:
    """Render ``coeff * var^exp`` with coeff > 0 and no leading sign."""
    if exp == 0:
        return str(coeff)
    head = "" if coeff == 1 else str(coeff)
    power = var if exp == 1 else f"{var}^{exp}"
    return head + power


def _join_sign(coeff: int, body: str, first: bool) -> str:
    if first:
        return body if coeff > 0 else "-" + body
    return f" + {body}" if coeff > 0 else f" - {body}"


def _render_group(group: dict[int, int], ez: int, first: bool) -> str:
    zpart = "" if ez == 0 else (" z" if ez == 1 else f" z^{ez}")
    if len(group) == 1:
        (ea, c), = group.items()
        body = _monomial(abs(c), "a", ea) + zpart
        # "1 z^2" would be noise; drop a unit coefficient before a z part
        if zpart and ea == 0 and abs(c) == 1:
            body = zpart.strip()
        return _join_sign(c, body, first)
    inner_parts: list[str] = []
    negate = all(c < 0 for c in group.values())
    for ea in sorted(group, reverse=True):
        c = -group[ea] if negate else group[ea]
        inner_parts.append(_join_sign(c, _monomial(abs(c), "a", ea), first=not inner_parts))
    body = f"({''.join(inner_parts)}){zpart}"
    return _join_sign(-1 if negate else 1, body, first)


# ------------------------------------------------------------------ parsing

def _signed_chunks(text: str) -> Iterator[tuple[int, str]]:
    """Split ``x + y - z`` into (sign, chunk) pairs, paren aware."""
    text = text.strip()
    if not text or text == "0":
        return
    pos = 0
    sign = 1
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        pos = 1
    depth = 0
    start = pos
    chunks: list[tuple[int, str]] = []
    while pos <= len(text):
        ch = text[pos] if pos < len(text) else None
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        boundary = ch is None or (
            depth == 0 and ch in "+-" and pos > start and text[pos - 1] == " "
        )
        if boundary:
            chunk = text[start:pos].strip()
            if not chunk:
                raise BraidSyntaxError(f"empty term in polynomial text: {text!r}")
            chunks.append((sign, chunk))
            if ch is None:
                break
            sign = -1 if ch == "-" else 1
            start = pos + 1
        pos += 1
    yield from chunks


def _var_exp(part: str | None, var: str) -> int:
    if not part:
        return 0
    if part == var:
        return 1
    return int(part[len(var) + 1 :])


def _parse_monomial(body: str, variables: tuple[str, ...]) -> tuple[int, dict[str, int]]:
    var_re = "".join(
        rf"\s*(?P<{v}>{v}(\^-?\d+)?)?" for v in variables
    )
    m = re.fullmatch(rf"(?P<coeff>\d+)?{var_re}", body.strip())
    if m is None:
        raise BraidSyntaxError(f"bad monomial: {body!r}")
    coeff = int(m.group("coeff")) if m.group("coeff") else 1
    exps = {v: _var_exp(m.group(v), v) for v in variables}
    if m.group("coeff") is None and all(m.group(v) is None for v in variables):
        raise BraidSyntaxError(f"bad monomial: {body!r}")
    return coeff, exps
