"""Exact sparse Laurent polynomials in the fixed variable set {L, M, x}.

Coefficients are arbitrary-precision integers and exponents may be negative.
Every value is kept in canonical form (no zero coefficients), so structural
equality is mathematical equality.  One fixed term order, lexicographic on
(expL, expM, expX), drives term enumeration, serialization, and the sign
convention of unit normalization.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

VARIABLES = ("L", "M", "x")
_VAR_INDEX = {"L": 0, "M": 1, "x": 2}


class Monomial(NamedTuple):
    """Exponent vector of one term; tuple order gives the canonical lex order."""

    expL: int
    expM: int
    expX: int


UNIT_MONOMIAL = Monomial(0, 0, 0)


def _checked_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{what} must be an int, got {type(value).__name__}")
    return value


def _as_monomial(key) -> Monomial:
    if isinstance(key, Monomial):
        return key
    if not isinstance(key, tuple) or len(key) != 3:
        raise TypeError(f"monomial key must be a 3-tuple, got {key!r}")
    return Monomial(*(_checked_int(e, "exponent") for e in key))


def _var_index(var: str) -> int:
    try:
        return _VAR_INDEX[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}, expected one of {VARIABLES}") from None


class LaurentPoly:
    """An integer Laurent polynomial in L, M, x.

    Instances are immutable by convention; every operation returns a new
    canonical value.  ints coerce to constant polynomials in mixed
    arithmetic and comparisons.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canonical: dict[Monomial, int] = {}
        for key, coeff in items:
            _checked_int(coeff, "coefficient")
            m = _as_monomial(key)
            total = canonical.get(m, 0) + coeff
            if total:
                canonical[m] = total
            else:
                canonical.pop(m, None)
        self._terms = canonical

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> "LaurentPoly":
        # trusted canonical dict, used by the arithmetic fast paths
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    # -- inspection ------------------------------------------------------

    def terms(self) -> tuple[tuple[Monomial, int], ...]:
        """All (monomial, coefficient) pairs in ascending canonical order."""
        return tuple(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, var: str) -> int:
        """Largest exponent of var across all terms (0 for unused variables)."""
        idx = _var_index(var)
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(m[idx] for m in self._terms)

    def min_exp(self, var: str) -> int:
        idx = _var_index(var)
        if not self._terms:
            raise ValueError("the zero polynomial has no exponents")
        return min(m[idx] for m in self._terms)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPoly._raw({UNIT_MONOMIAL: other}) if other else ZERO
        return None

    def __eq__(self, other) -> bool:
        coerced = LaurentPoly._coerce(other)
        if coerced is None:
            return NotImplemented
        return self._terms == coerced._terms

    __hash__ = None  # mutable-dict backed; equality with ints rules out hashing

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            total = out.get(m, 0) + c
            if total:
                out[m] = total
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = LaurentPoly._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = Monomial(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                total = out.get(key, 0) + c1 * c2
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k) -> "LaurentPoly":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structural operations -------------------------------------------

    def coeff(self, var: str, k: int) -> "LaurentPoly":
        """Coefficient of var**k: the matching terms with var removed."""
        idx = _var_index(var)
        _checked_int(k, "exponent")
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            if m[idx] == k:
                exps = list(m)
                exps[idx] = 0
                out[Monomial(*exps)] = c
        return LaurentPoly._raw(out)

    def substitute(self, var: str, value: "RationalExpr", clear_deg: int) -> "LaurentPoly":
        """Substitute num/den for var and clear denominators.

        Returns sum_k coeff(var, k) * num**k * den**(clear_deg - k), which
        equals self(var := num/den) * den**clear_deg.  Requires nonnegative
        exponents of var and clear_deg >= degree(var) so the result stays in
        the ring.
        """
        _var_index(var)
        _checked_int(clear_deg, "clear_deg")
        if clear_deg < 0:
            raise ValueError("clear_deg must be nonnegative")
        if not self._terms:
            return ZERO
        if self.min_exp(var) < 0:
            raise ValueError(f"cannot substitute into negative exponents of {var}")
        deg = self.degree(var)
        if clear_deg < deg:
            raise ValueError(f"clear_deg {clear_deg} is below the {var}-degree {deg}")
        num_pow = [ONE]
        for _ in range(deg):
            num_pow.append(num_pow[-1] * value.num)
        den_pow = [ONE]
        for _ in range(clear_deg):
            den_pow.append(den_pow[-1] * value.den)
        out = ZERO
        for k in range(deg + 1):
            part = self.coeff(var, k)
            if part.is_zero():
                continue
            out = out + part * num_pow[k] * den_pow[clear_deg - k]
        return out

    def normalize_unit(self) -> tuple["LaurentPoly", Monomial, int]:
        """Factor out the monomial content and a global sign.

        Returns (q, u, s) with self == s * u * q, where q has minimum
        exponent 0 in every variable and the coefficient of its
        lexicographically least term is positive.
        """
        if not self._terms:
            raise ValueError("cannot unit-normalize the zero polynomial")
        mins = tuple(min(m[i] for m in self._terms) for i in range(3))
        unit = Monomial(*mins)
        shifted = {
            Monomial(m[0] - mins[0], m[1] - mins[1], m[2] - mins[2]): c
            for m, c in self._terms.items()
        }
        sign = 1 if shifted[min(shifted)] > 0 else -1
        if sign < 0:
            shifted = {m: -c for m, c in shifted.items()}
        return LaurentPoly._raw(shifted), unit, sign

    # -- numeric evaluation ----------------------------------------------

    def eval_numeric(self, assign: Mapping[str, complex]) -> complex:
        """Evaluate at complex values by nested sparse Horner recursion.

        Variables that occur with a negative exponent must be assigned a
        nonzero value.  Variables that do not occur may be omitted.
        """
        if not self._terms:
            return 0j
        values: list[complex | None] = []
        for i, name in enumerate(VARIABLES):
            if all(m[i] == 0 for m in self._terms):
                values.append(None)
                continue
            if name not in assign:
                raise KeyError(f"no value assigned to variable {name}")
            z = complex(assign[name])
            if z == 0 and any(m[i] < 0 for m in self._terms):
                raise ZeroDivisionError(f"{name} = 0 but {name} occurs with negative exponents")
            values.append(z)
        return _horner(sorted(self._terms.items()), 0, values)

    # -- canonical JSON ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"l": m.expL, "m": m.expM, "x": m.expX, "c": str(c)} for m, c in self.terms()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, data) -> "LaurentPoly":
        if not isinstance(data, dict) or set(data) != {"terms"}:
            raise ValueError("polynomial JSON must be an object with the single key 'terms'")
        entries = data["terms"]
        if not isinstance(entries, list):
            raise ValueError("'terms' must be a list")
        out: dict[Monomial, int] = {}
        for entry in entries:
            if not isinstance(entry, dict) or set(entry) != {"l", "m", "x", "c"}:
                raise ValueError(f"term must have exactly the keys l, m, x, c: {entry!r}")
            exps = []
            for key in ("l", "m", "x"):
                e = entry[key]
                if isinstance(e, bool) or not isinstance(e, int):
                    raise ValueError(f"exponent {key}={e!r} is not an integer")
                exps.append(e)
            c = entry["c"]
            if not isinstance(c, str) or not re.fullmatch(r"-?[0-9]+", c):
                raise ValueError(f"coefficient {c!r} is not a decimal integer string")
            coeff = int(c)
            if coeff == 0:
                raise ValueError("zero coefficients are not part of the canonical form")
            key = Monomial(*exps)
            if key in out:
                raise ValueError(f"duplicate monomial {tuple(key)}")
            out[key] = coeff
        return cls._raw(out)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(data)

    # -- human-readable forms ----------------------------------------------

    def to_text(self) -> str:
        return _render(self, latex=False)

    def to_latex(self) -> str:
        return _render(self, latex=True)

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        return _parse(text, latex=False)

    @classmethod
    def from_latex(cls, text: str) -> "LaurentPoly":
        return _parse(text, latex=True)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


def _horner(items, axis, values):
    # items are (Monomial, coeff) pairs in ascending lex order, so grouping by
    # the current axis keeps each group contiguous and internally sorted.
    if axis == 3:
        return complex(items[0][1])
    groups = []
    start = 0
    while start < len(items):
        exp = items[start][0][axis]
        stop = start
        while stop < len(items) and items[stop][0][axis] == exp:
            stop += 1
        groups.append((exp, _horner(items[start:stop], axis + 1, values)))
        start = stop
    if len(groups) == 1 and groups[0][0] == 0:
        return groups[0][1]
    z = values[axis]
    groups.reverse()
    exp, acc = groups[0]
    for next_exp, val in groups[1:]:
        acc = acc * z ** (exp - next_exp) + val
        exp = next_exp
    if exp:
        acc = acc * z**exp
    return acc


@dataclass(frozen=True)
class RationalExpr:
    """A formal quotient num/den of Laurent polynomials with den nonzero."""

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if not isinstance(self.num, LaurentPoly) or not isinstance(self.den, LaurentPoly):
            raise TypeError("num and den must be LaurentPoly values")
        if self.den.is_zero():
            raise ValueError("denominator must be nonzero")


def mono(coeff: int, l: int = 0, m: int = 0, x: int = 0) -> LaurentPoly:
    """Single-term polynomial coeff * L**l * M**m * x**x."""
    return LaurentPoly({(l, m, x): coeff})


ZERO = LaurentPoly()
ONE = mono(1)


def _render(poly: LaurentPoly, latex: bool) -> str:
    if poly.is_zero():
        return "0"
    chunks = []
    for m, c in sorted(poly._terms.items(), reverse=True):
        factors = []
        for name, e in zip(VARIABLES, m):
            if e == 0:
                continue
            if e == 1:
                factors.append(name)
            elif latex:
                factors.append(f"{name}^{{{e}}}")
            else:
                factors.append(f"{name}^{e}")
        if abs(c) != 1 or not factors:
            factors.insert(0, str(abs(c)))
        body = (" " if latex else "*").join(factors)
        chunks.append(("-" if c < 0 else "+", body))
    sign, body = chunks[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


_TERM_SPLIT = re.compile(r" ([+-]) ")
_TEXT_FACTOR = re.compile(r"(L|M|x)(?:\^(-?[0-9]+))?\Z")
_LATEX_FACTOR = re.compile(r"(L|M|x)(?:\^\{(-?[0-9]+)\})?\Z")
_PLAIN_INT = re.compile(r"[0-9]+\Z")


def _parse(text: str, latex: bool) -> LaurentPoly:
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    pieces = _TERM_SPLIT.split(s)
    signed = [("+", pieces[0])]
    signed.extend(zip(pieces[1::2], pieces[2::2]))
    factor_re = _LATEX_FACTOR if latex else _TEXT_FACTOR
    sep = " " if latex else "*"
    acc: dict[Monomial, int] = {}
    for op, chunk in signed:
        sign = -1 if op == "-" else 1
        chunk = chunk.strip()
        if chunk.startswith("-"):
            sign = -sign
            chunk = chunk[1:].lstrip()
        if not chunk:
            raise ValueError(f"empty term in {text!r}")
        coeff = 1
        exps = [0, 0, 0]
        for pos, piece in enumerate(chunk.split(sep)):
            piece = piece.strip()
            if not piece:
                raise ValueError(f"malformed term {chunk!r}")
            if _PLAIN_INT.match(piece):
                if pos != 0:
                    raise ValueError(f"misplaced coefficient in term {chunk!r}")
                coeff = int(piece)
                continue
            matched = factor_re.match(piece)
            if not matched:
                raise ValueError(f"unrecognized factor {piece!r}")
            name, exp_text = matched.group(1), matched.group(2)
            exps[_VAR_INDEX[name]] += 1 if exp_text is None else int(exp_text)
        key = Monomial(*exps)
        acc[key] = acc.get(key, 0) + sign * coeff
    return LaurentPoly(acc)
