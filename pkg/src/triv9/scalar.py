"""Exact arithmetic in the cyclotomic field Q(zeta12).

Every scalar in the toolkit lives here: rationals, the imaginary unit i,
sqrt(3), and a primitive cube root of unity z3 = (-1 + i*sqrt(3))/2.
Elements are stored in the power basis {1, z, z^2, z^3} of a fixed primitive
12th root of unity z, reduced modulo Phi_12(x) = x^4 - x^2 + 1.  A second
"display basis" {1, sqrt(3), i, i*sqrt(3)} is used for human-readable output.

Values are immutable and hashable.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, Tuple

Q4 = Tuple[Fraction, Fraction, Fraction, Fraction]

_ZERO4 = (Fraction(0),) * 4

# x^4 = x^2 - 1, x^5 = x^3 - x, x^6 = -1; powers 0..6 of z mod Phi_12.
_POW = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
)

# conj sends z -> z^11 = z - z^3; images of z^0..z^3 under conjugation.
_CONJ = (
    (1, 0, 0, 0),
    (0, 1, 0, -1),
    (1, 0, -1, 0),
    (0, 0, 0, -1),
)

_Z12_NUM = cmath.exp(1j * cmath.pi / 6)


class Cyc:
    """An element of Q(zeta12), exact."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs: Iterable[Fraction | int]):
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != 4:
            raise ValueError("Cyc needs 4 coordinates")
        self.c = c
        self._hash = None

    # -- constructors -------------------------------------------------
    @staticmethod
    def rational(a) -> "Cyc":
        return Cyc((Fraction(a), 0, 0, 0))

    @staticmethod
    def zeta12() -> "Cyc":
        return Cyc((0, 1, 0, 0))

    # -- ring/field structure -----------------------------------------
    def __add__(self, other) -> "Cyc":
        other = _coerce(other)
        a, b = self.c, other.c
        return Cyc((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        a = self.c
        return Cyc((-a[0], -a[1], -a[2], -a[3]))

    def __sub__(self, other) -> "Cyc":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Cyc":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Cyc":
        other = _coerce(other)
        a, b = self.c, other.c
        acc = [Fraction(0)] * 7
        for k in range(4):
            ak = a[k]
            if ak:
                for m in range(4):
                    if b[m]:
                        acc[k + m] += ak * b[m]
        out = [acc[0], acc[1], acc[2], acc[3]]
        for d in (4, 5, 6):
            v = acc[d]
            if v:
                pw = _POW[d]
                for j in range(4):
                    if pw[j]:
                        out[j] += v * pw[j]
        return Cyc(out)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta12)")
        # Norm trick: z |-> -z and conj generate the Galois group; the
        # product of the four conjugates is the rational norm.
        s1 = self.galois_neg()
        s2 = self.conj()
        s3 = s2.galois_neg()
        prod = s1 * s2 * s3
        norm = (self * prod).c
        assert norm[1] == 0 and norm[2] == 0 and norm[3] == 0
        n0 = norm[0]
        return Cyc(tuple(x / n0 for x in prod.c))

    def __truediv__(self, other) -> "Cyc":
        return self * _coerce(other).inv()

    def __rtruediv__(self, other) -> "Cyc":
        return _coerce(other) * self.inv()

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- Galois action -------------------------------------------------
    def conj(self) -> "Cyc":
        """Complex conjugation: z12 -> z12^(-1); fixes Q(sqrt 3), negates i."""
        a = self.c
        out = [Fraction(0)] * 4
        for k in range(4):
            if a[k]:
                im = _CONJ[k]
                for j in range(4):
                    if im[j]:
                        out[j] += a[k] * im[j]
        return Cyc(out)

    def galois_neg(self) -> "Cyc":
        """The automorphism z -> -z (an auxiliary Galois conjugate)."""
        a = self.c
        return Cyc((a[0], -a[1], a[2], -a[3]))

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def is_real(self) -> bool:
        a = self.c
        return a[2] == 0 and a[1] == -2 * a[3]

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational: {self}")
        return self.c[0]

    # -- display basis ----------------------------------------------------
    def display(self) -> Q4:
        """Coordinates (a, b, c, d) with value a + b*sqrt3 + c*i + d*i*sqrt3."""
        a0, a1, a2, a3 = self.c
        # invert: 1=(1,0,0,0), r3=(0,2,0,-1), i=(0,0,0,1), ir3=(-1,0,2,0)
        d = a2 / 2
        a = a0 + a2 / 2
        b = a1 / 2
        c = a3 + a1 / 2
        return (a, b, c, d)

    def complex_approx(self) -> complex:
        """Floating approximation, for reports only; never used in decisions."""
        return sum(float(x) * _Z12_NUM**k for k, x in enumerate(self.c))

    # -- plumbing ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyc({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc.rational(x)
    raise TypeError(f"cannot coerce {type(x)} to Cyc")


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)
I = Cyc((0, 0, 0, 1))
R3 = Cyc((0, 2, 0, -1))  # sqrt(3) = 2*z - z^3
Z3 = Cyc((-1, 0, 1, 0))  # primitive cube root of unity = z^2 - 1


class ScalarParseError(ValueError):
    """Syntax error in the scalar grammar, with position info."""

    def __init__(self, text: str, pos: int, msg: str):
        self.pos = pos
        super().__init__(f"{msg} at position {pos} in {text!r}")


class _Tok:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

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

    def expect(self, ch: str):
        if not self.take(ch):
            raise ScalarParseError(self.text, self.pos, f"expected {ch!r}")

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ScalarParseError(self.text, start, "expected a number")
        return int(self.text[start : self.pos])


def _parse_factor(tk: _Tok) -> Cyc:
    ch = tk.peek()
    if ch == "(":
        tk.take("(")
        v = _parse_scalar(tk)
        tk.expect(")")
        return v
    if ch == "i":
        tk.pos += 1
        return I
    if ch == "r":
        if tk.text[tk.pos : tk.pos + 2] == "r3":
            tk.pos += 2
            return R3
        raise ScalarParseError(tk.text, tk.pos, "unknown symbol")
    if ch == "z":
        if tk.text[tk.pos : tk.pos + 2] == "z3":
            tk.pos += 2
            return Z3
        raise ScalarParseError(tk.text, tk.pos, "unknown symbol")
    if ch.isdigit():
        num = tk.natural()
        save = tk.pos
        if tk.take("/"):
            if tk.peek().isdigit():
                den = tk.natural()
                return Cyc.rational(Fraction(num, den))
            tk.pos = save
        return Cyc.rational(num)
    raise ScalarParseError(tk.text, tk.pos, "expected a factor")


def _parse_term(tk: _Tok) -> Cyc:
    v = _parse_factor(tk)
    while True:
        if tk.take("*"):
            v = v * _parse_factor(tk)
        elif tk.peek() == "/":
            save = tk.pos
            tk.take("/")
            if tk.peek().isdigit():
                v = v / tk.natural()
            else:
                tk.pos = save
                break
        else:
            break
    return v


def _parse_scalar(tk: _Tok) -> Cyc:
    neg = False
    if tk.take("-"):
        neg = True
    elif tk.take("+"):
        pass
    v = _parse_term(tk)
    if neg:
        v = -v
    while True:
        if tk.take("+"):
            v = v + _parse_term(tk)
        elif tk.take("-"):
            v = v - _parse_term(tk)
        else:
            break
    return v


def parse_scalar(text: str) -> Cyc:
    """Parse the scalar grammar: rationals, i, r3, z3, + - * / ( )."""
    tk = _Tok(text)
    v = _parse_scalar(tk)
    tk.skip_ws()
    if tk.pos != len(tk.text):
        raise ScalarParseError(text, tk.pos, "trailing input")
    return v


def _fmt_frac(q: Fraction) -> str:
    return str(q)


def format_scalar(v: Cyc) -> str:
    """Emit in the display basis with lowest-terms rationals; parses back."""
    a, b, c, d = v.display()
    parts = []
    for coef, sym in ((a, ""), (b, "r3"), (c, "i"), (d, "i*r3")):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = -coef if coef < 0 else coef
        if sym == "":
            body = _fmt_frac(mag)
        elif mag == 1:
            body = sym
        elif mag.denominator == 1:
            body = f"{mag.numerator}*{sym}"
        elif mag.numerator == 1:
            body = f"{sym}/{mag.denominator}"
        else:
            body = f"{mag.numerator}*{sym}/{mag.denominator}"
        parts.append((sign, body))
    if not parts:
        return "0"
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += sign + body
    return out
