"""Exact integer polynomial arithmetic.

`UniPoly` is dense (the univariate run polynomials have full support up to
degree ~n), `BiPoly` is sparse (the bivariate peak/valley support is a thin
band).  Coefficients are Python ints, so nothing here ever overflows or
rounds; signed sums are expected to cancel exactly.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import DomainError

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


class UniPoly:
    """Univariate polynomial; coefficient of t^k at index k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def term(cls, coeff: int, exp: int) -> "UniPoly":
        return cls((0,) * exp + (coeff,))

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "UniPoly":
        if not d:
            return cls()
        cs = [0] * (max(d) + 1)
        for e, c in d.items():
            cs[e] = c
        return cls(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly([other * c for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise DomainError("negative power")
        out, base = UniPoly.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class BiPoly:
    """Sparse polynomial in p, q; keys are exponent pairs (i, j)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] = ()):
        self.terms: dict[tuple[int, int], int] = {k: v for k, v in dict(terms).items() if v != 0}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, coeff: int, i: int, j: int) -> "BiPoly":
        return cls({(i, j): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({k: other * v for k, v in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise DomainError("negative power")
        out, base = BiPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def swap_vars(self) -> "BiPoly":
        """p <-> q."""
        return BiPoly({(j, i): v for (i, j), v in self.terms.items()})

    def substitute_diag(self) -> UniPoly:
        """Set p = q = t: the t^m coefficient collects all (i, j) with i+j = m."""
        out: dict[int, int] = {}
        for (i, j), v in self.terms.items():
            out[i + j] = out.get(i + j, 0) + v
        return UniPoly.from_dict(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = ("p" if i == 1 else f"p^{i}" if i else "") + ("q" if j == 1 else f"q^{j}" if j else "")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# ------------------------------------------------------ derived operations

def one_plus_t_multiplicity(f: UniPoly) -> int:
    """Largest m with (1+t)^m | f, by repeated exact synthetic division at -1.

    The zero polynomial has no finite multiplicity and is rejected.
    """
    if f.is_zero():
        raise DomainError("multiplicity of (1+t) in the zero polynomial is undefined")
    m = 0
    coeffs = list(f.coeffs)
    while True:
        if sum(c if e % 2 == 0 else -c for e, c in enumerate(coeffs)) != 0:
            return m
        # divide by (1+t): c_k = q_k + q_{k-1} with q of degree one less
        q = [0] * (len(coeffs) - 1)
        carry = 0
        for e in range(len(coeffs) - 1):
            q[e] = coeffs[e] - carry
            carry = q[e]
        coeffs = q
        m += 1
        if not any(coeffs):
            # f was a multiple of a power of (1+t) times 0; cannot happen for f != 0
            raise DomainError("division collapsed to zero")


def moment_check(f: UniPoly, k: int) -> bool:
    """True iff sum over odd s of s^k f_s equals the same sum over even s >= 2."""
    if k < 1:
        raise DomainError("moment order k must be >= 1")
    odd = sum(s**k * c for s, c in enumerate(f.coeffs) if s % 2 == 1)
    even = sum(s**k * c for s, c in enumerate(f.coeffs) if s % 2 == 0 and s >= 2)
    return odd == even


# ------------------------------------------------------ canonical JSON form
#
# Coefficients travel as decimal strings so arbitrary precision survives any
# JSON consumer; terms are sorted lexicographically by exponent vector.

def poly_to_json(f) -> dict:
    if isinstance(f, UniPoly):
        return {
            "vars": ["t"],
            "terms": [{"exp": [e], "coef": str(c)} for e, c in enumerate(f.coeffs) if c != 0],
        }
    if isinstance(f, BiPoly):
        return {
            "vars": ["p", "q"],
            "terms": [{"exp": [i, j], "coef": str(c)} for (i, j), c in sorted(f.terms.items())],
        }
    raise DomainError(f"not a polynomial: {f!r}")


def poly_from_json(d: Mapping):
    vars_ = list(d["vars"])
    if vars_ == ["t"]:
        return UniPoly.from_dict({t["exp"][0]: int(t["coef"]) for t in d["terms"]})
    if vars_ == ["p", "q"]:
        return BiPoly({(t["exp"][0], t["exp"][1]): int(t["coef"]) for t in d["terms"]})
    raise DomainError(f"unknown variable set {vars_}")
