"""Exact scalars: small cyclotomic fields and Laurent polynomials in t.

``CycScalar`` is an element of Q(zeta_n) for n in {1, 3, 5}, stored as the
coefficient vector of a polynomial in zeta_n of degree < phi(n).  For prime
n the cyclotomic polynomial is 1 + x + ... + x^(n-1), which makes the
reduction step a one-liner.

``ValScalar`` is a finite Laurent polynomial in the uniformizer t with
``CycScalar`` coefficients.  It models points of the valued field
Q(omega)((t)) whenever all the inputs happen to be polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Dict, Iterable, Union

PHI = {1: 1, 3: 2, 5: 4}


class ExactNumError(ArithmeticError):
    pass


class DivisionByZero(ExactNumError, ZeroDivisionError):
    pass


class IncompatibleOrders(ExactNumError):
    pass


class NonPolynomialQuotient(ExactNumError):
    pass


@total_ordering
class _Infinity:
    """Valuation of zero.  Larger than every integer; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("tropmoduli-infinity")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ExactNumError("INF - INF is undefined")
        return self


INF = _Infinity()


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational out of {type(x).__name__}")


class CycScalar:
    """Element of Q(zeta_n), n in {1,3,5}.

    >>> w = CycScalar.zeta(3)
    >>> w * w * w == 1
    True
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (0,), order: int = 1):
        if order not in PHI:
            raise ValueError(f"unsupported cyclotomic order {order}")
        cs = [_frac(c) for c in coeffs]
        d = PHI[order]
        if len(cs) > order:
            raise ValueError("too many coefficients")
        # reduce modulo x^n - 1 first, then kill the x^(n-1) term
        if len(cs) < order:
            cs = cs + [Fraction(0)] * (order - len(cs))
        if order > 1:
            top = cs[order - 1]
            if top:
                cs = [c - top for c in cs[: order - 1]]
            else:
                cs = cs[: order - 1]
        self.order = order
        self.coeffs = tuple(cs[:d])
        self._hash = None

    # constructors --------------------------------------------------------
    @classmethod
    def zeta(cls, n: int) -> "CycScalar":
        if n == 1:
            return cls((1,), 1)
        return cls([0, 1], n)

    @classmethod
    def rational(cls, x) -> "CycScalar":
        return cls((x,), 1)

    @staticmethod
    def coerce(x) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar((x,), 1)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")

    # helpers --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def embed(self, order: int) -> "CycScalar":
        """Embed a rational into Q(zeta_order); identity if orders match."""
        if order == self.order:
            return self
        if self.is_rational():
            return CycScalar((self.coeffs[0],), order)
        raise IncompatibleOrders(f"cannot move Q(zeta_{self.order}) element to order {order}")

    def _common(self, other) -> tuple:
        other = CycScalar.coerce(other)
        if self.order == other.order:
            return self, other, self.order
        if self.order == 1 or self.is_rational() and other.order != 1:
            return self.embed(other.order), other, other.order
        if other.order == 1 or other.is_rational():
            return self, other.embed(self.order), self.order
        raise IncompatibleOrders(f"orders {self.order} and {other.order} do not mix")

    def simplify(self) -> "CycScalar":
        """Drop to order 1 when the value is rational."""
        if self.order != 1 and self.is_rational():
            return CycScalar((self.coeffs[0],), 1)
        return self

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        return CycScalar([x + y for x, y in zip(a.coeffs, b.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar([-x for x in self.coeffs], self.order)

    def __sub__(self, other):
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        return CycScalar([x - y for x, y in zip(a.coeffs, b.coeffs)], n)

    def __rsub__(self, other):
        return CycScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            a, b, n = self._common(other)
        except TypeError:
            return NotImplemented
        if n == 1:
            return CycScalar((a.coeffs[0] * b.coeffs[0],), 1)
        # cyclic convolution modulo x^n - 1
        out = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    out[(i + j) % n] += x * y
        return CycScalar(out, n)

    __rmul__ = __mul__

    def conj_powers(self):
        """The Galois conjugates zeta -> zeta^k, k coprime to n (k > 1)."""
        n = self.order
        for k in range(2, n):
            out = [Fraction(0)] * n
            for i, x in enumerate(self.coeffs):
                out[(i * k) % n] += x
            yield CycScalar(out, n)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self
        for c in self.conj_powers():
            prod = prod * c
        assert prod.is_rational()
        return prod.coeffs[0]

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.order == 1:
            return CycScalar((1 / self.coeffs[0],), 1)
        # a^{-1} = (product of the other conjugates) / norm(a)
        rest = CycScalar((1,), self.order)
        for c in self.conj_powers():
            rest = rest * c
        nrm = (self * rest).coeffs[0]
        return CycScalar([x / nrm for x in rest.coeffs], self.order)

    def __truediv__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycScalar((1,), self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        try:
            a, b, _ = self._common(other)
        except (TypeError, IncompatibleOrders):
            return False
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            s = self.simplify()
            self._hash = hash((s.order, s.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.order == 1:
            return f"CycScalar({self.coeffs[0]})"
        return f"CycScalar({[str(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self):
        if self.order == 1:
            return str(self.coeffs[0])
        name = "w" if self.order == 3 else "z"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*{name}")
            else:
                parts.append(f"{c}*{name}^{i}")
        return " + ".join(parts) if parts else "0"


OMEGA = CycScalar.zeta(3)
SQRT_M3 = 2 * OMEGA + 1
ZETA5 = CycScalar.zeta(5)

Scalar = Union[int, Fraction, CycScalar]


def cyc_arith(a, b, op: str) -> CycScalar:
    """Functional entry point: op in {'add','sub','mul','div'}."""
    a = CycScalar.coerce(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if CycScalar.coerce(b).is_zero():
            raise DivisionByZero("division by zero in cyclotomic field")
        return a / b
    raise ValueError(f"unknown op {op!r}")


class ValScalar:
    """Finite Laurent polynomial sum_k c_k t^k with cyclotomic coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Scalar] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = CycScalar.coerce(c)
                if not c.is_zero():
                    clean[int(k)] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "ValScalar":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k: int) -> "ValScalar":
        return cls({k: c})

    @staticmethod
    def coerce(x) -> "ValScalar":
        if isinstance(x, ValScalar):
            return x
        return ValScalar({0: CycScalar.coerce(x)})

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self):
        if not self.terms:
            return INF
        return min(self.terms)

    def leading(self) -> CycScalar:
        """Coefficient of the lowest power of t (the initial form)."""
        if not self.terms:
            raise DivisionByZero("zero has no leading coefficient")
        return self.terms[min(self.terms)]

    def __add__(self, other):
        other = ValScalar.coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ValScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return ValScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ValScalar.coerce(other))

    def __rsub__(self, other):
        return ValScalar.coerce(other) - self

    def __mul__(self, other):
        other = ValScalar.coerce(other)
        out: Dict[int, CycScalar] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                out[k] = out[k] + a * b if k in out else a * b
        return ValScalar(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return ValScalar.const(1) / (self ** (-e))
        result = ValScalar.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        other = ValScalar.coerce(other)
        if other.is_zero():
            raise DivisionByZero("division of Laurent polynomials by zero")
        if len(other.terms) == 1:
            (k, c), = other.terms.items()
            inv = c.inverse()
            return ValScalar({i - k: a * inv for i, a in self.terms.items()})
        # exact long division from the lowest power upward
        rem = ValScalar(dict(self.terms))
        b0 = other.valuation()
        binv = other.terms[b0].inverse()
        btop = max(other.terms)
        quot: Dict[int, CycScalar] = {}
        while not rem.is_zero():
            r0 = rem.valuation()
            if max(rem.terms) - r0 < btop - b0:
                raise NonPolynomialQuotient("quotient is not a Laurent polynomial")
            q = rem.terms[r0] * binv
            quot[r0 - b0] = q
            rem = rem - ValScalar({r0 - b0: q}) * other
        return ValScalar(quot)

    def __rtruediv__(self, other):
        return ValScalar.coerce(other) / self

    def __eq__(self, other):
        try:
            other = ValScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "ValScalar(0)"
        parts = [f"({c})*t^{k}" for k, c in sorted(self.terms.items())]
        return "ValScalar(" + " + ".join(parts) + ")"


T = ValScalar.monomial(1, 1)


def laurent_arith(a, b, op: str) -> ValScalar:
    a = ValScalar.coerce(a)
    b = ValScalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def valuation(a) -> Union[int, _Infinity]:
    return ValScalar.coerce(a).valuation()


def val_quotient(a, b) -> int:
    """val(a/b) without forming the quotient."""
    va, vb = valuation(a), valuation(b)
    if vb is INF:
        raise DivisionByZero("valuation of a quotient by zero")
    return va - vb if va is not INF else INF
