# -*- coding: utf-8 -*-
"""
Multivariate integer polynomials.

Text form: integer coefficients, variables ``x0, x1, ...`` (``x``, ``y``, ``z``
alias ``x0``, ``x1``, ``x2``), ``+ - *``, ``^`` (or ``**``) with a non-negative
integer exponent, and parentheses, e.g. ``x0^2 + x1^2 - 25`` or
``(x+1)^2 - y^2``. JSON form: ``{"arity": n, "terms": [[coeff, [e0, e1, ...]], ...]}``.
"""

import re
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

Exponents = Tuple[int, ...]
Term = Tuple[int, Exponents]

MAX_EXPONENT = 64
MAX_NESTING = 100
_ALIASES = {"x": 0, "y": 1, "z": 2}
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+|[xyz])(?![A-Za-z0-9_])|(?P<op>\*\*|[-+*^()]))")


@dataclass(frozen=True)
class DiophantinePolynomial:
    """Sum of coeff * prod(x_i ^ e_i); terms are unique by exponent vector and nonzero."""

    arity: int
    terms: Tuple[Term, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be positive, got {self.arity}")
        if not self.terms:
            raise ValueError("polynomial has no nonzero terms")
        seen = set()
        for coeff, exps in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficient stored")
            if len(exps) != self.arity or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not match arity {self.arity}")
            if max(exps) > MAX_EXPONENT:
                raise ValueError(f"exponent {max(exps)} exceeds {MAX_EXPONENT}")
            if exps in seen:
                raise ValueError(f"duplicate exponent vector {exps}")
            seen.add(exps)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Sequence[int]]], arity: Optional[int] = None) -> "DiophantinePolynomial":
        """Combine like terms, drop zeros, pad exponent vectors to ``arity``."""
        terms = [(int(c), tuple(int(e) for e in exps)) for c, exps in terms]
        width = max([len(_trim(exps)) for _, exps in terms] + [1])
        arity = arity or width
        if arity < width:
            raise ValueError(f"arity {arity} is smaller than the highest variable index + 1 ({width})")
        combined: Dict[Exponents, int] = {}
        for coeff, exps in terms:
            key = _pad(_trim(exps), arity)
            combined[key] = combined.get(key, 0) + coeff
        kept = tuple(sorted(((c, e) for e, c in combined.items() if c != 0), key=_term_order))
        if not kept:
            raise ValueError("polynomial is identically zero")
        return cls(arity, kept)

    @property
    def degree(self) -> int:
        return max(sum(exps) for _, exps in self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)

    def __call__(self, x: Sequence[int]) -> int:
        return eval_poly(self, x)

    def to_dict(self) -> Dict[str, Any]:
        return {"arity": self.arity, "terms": [[c, list(e)] for c, e in self.terms]}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "DiophantinePolynomial":
        return cls.from_terms(((c, e) for c, e in d["terms"]), d.get("arity"))

    def __str__(self) -> str:
        parts: List[str] = []
        for coeff, exps in self.terms:
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e]
            magnitude = abs(coeff)
            body = "*".join(([str(magnitude)] if magnitude != 1 or not factors else []) + factors)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)


def _trim(exps: Exponents) -> Exponents:
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def _pad(exps: Exponents, arity: int) -> Exponents:
    return exps + (0,) * (arity - len(exps))


def _term_order(term: Term):
    coeff, exps = term
    return (-sum(exps), tuple(-e for e in exps))


def eval_poly(D: DiophantinePolynomial, x: Sequence[int]) -> int:
    """Exact value of D at the point x."""
    if len(x) != D.arity:
        raise ValueError(f"point {tuple(x)} has {len(x)} coordinates, polynomial has arity {D.arity}")
    total = 0
    for coeff, exps in D.terms:
        v = coeff
        for xi, e in zip(x, exps):
            if e:
                v *= xi ** e
        total += v
    return total


# ── Parser ──

class _Parser:
    """Recursive descent over polynomial arithmetic; values are {exponents: coeff} maps."""

    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.depth = 0

    @staticmethod
    def _tokenize(text: str) -> List[Tuple[str, str]]:
        tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos}")
            kind = m.lastgroup
            tokens.append((kind, m.group(kind)))
            pos = m.end()
        return tokens

    def _peek(self) -> Optional[str]:
        return self.tokens[self.pos][1] if self.pos < len(self.tokens) else None

    def _take(self) -> Tuple[str, str]:
        if self.pos >= len(self.tokens):
            raise ValueError("unexpected end of polynomial")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Dict[Exponents, int]:
        if not self.tokens:
            raise ValueError("empty polynomial")
        value = self._sum()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self._peek()!r}")
        return value

    def _sum(self) -> Dict[Exponents, int]:
        sign = 1
        while self._peek() in ("+", "-"):
            sign *= -1 if self._take()[1] == "-" else 1
        acc = _scale(self._product(), sign)
        while self._peek() in ("+", "-"):
            sign = 1
            while self._peek() in ("+", "-"):
                sign *= -1 if self._take()[1] == "-" else 1
            acc = _add(acc, _scale(self._product(), sign))
        return acc

    def _product(self) -> Dict[Exponents, int]:
        acc = self._power()
        while self._peek() == "*":
            self._take()
            acc = _mul(acc, self._power())
        return acc

    def _power(self) -> Dict[Exponents, int]:
        base = self._atom()
        if self._peek() in ("^", "**"):
            self._take()
            kind, text = self._take()
            if kind != "int":
                raise ValueError(f"exponent must be a non-negative integer, got {text!r}")
            if int(text) > MAX_EXPONENT:
                raise ValueError(f"exponent {text} exceeds {MAX_EXPONENT}")
            result: Dict[Exponents, int] = {(): 1}
            for _ in range(int(text)):
                result = _mul(result, base)
            return result
        return base

    def _atom(self) -> Dict[Exponents, int]:
        kind, text = self._take()
        if kind == "int":
            return {(): int(text)}
        if kind == "var":
            index = _ALIASES[text] if text in _ALIASES else int(text[1:])
            return {(0,) * index + (1,): 1}
        if text == "(":
            self.depth += 1
            if self.depth > MAX_NESTING:
                raise ValueError(f"parentheses nested deeper than {MAX_NESTING}")
            inner = self._sum()
            if self._take()[1] != ")":
                raise ValueError("missing ')'")
            self.depth -= 1
            return inner
        raise ValueError(f"unexpected token {text!r}")


def _add(a: Dict[Exponents, int], b: Dict[Exponents, int]) -> Dict[Exponents, int]:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _scale(a: Dict[Exponents, int], k: int) -> Dict[Exponents, int]:
    return {e: c * k for e, c in a.items()}


def _mul(a: Dict[Exponents, int], b: Dict[Exponents, int]) -> Dict[Exponents, int]:
    out: Dict[Exponents, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            width = max(len(ea), len(eb))
            e = _trim(tuple(x + y for x, y in zip(_pad(ea, width), _pad(eb, width))))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def parse_polynomial(text: str, arity: Optional[int] = None) -> DiophantinePolynomial:
    """Parse the text form; arity defaults to the highest variable index + 1."""
    terms = _Parser(text).parse()
    return DiophantinePolynomial.from_terms(((c, e) for e, c in terms.items()), arity)
