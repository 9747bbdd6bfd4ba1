"""Exact 2x2 integer matrices, SL(2,Z)/GL(2,Z) torsion classes and the
derived subgroup of SL(2,Z) with its free generators f_{-2}, f_{-1}.

Entries are Python ints, so there is no overflow.
"""
import enum
import json
import math

from .errors import NotInDerivedGroup, ParseError
from .words import FreeWord

__all__ = [
    "Mat2", "I", "A", "B", "S", "C", "M", "D", "SD", "mat_mul", "mat_inv", "mat_det",
    "order", "TorsionClassSL", "TorsionClassGL", "torsion_class_sl", "torsion_class_gl",
    "FWord", "f", "f_word_matrix", "derived_membership", "rewrite_in_f", "parse_matrix", "parse_fword",
]


class Mat2:
    """Integer matrix with rows (e, f) and (g, h)."""

    __slots__ = ("e", "f", "g", "h")

    def __init__(self, e, f, g, h):
        self.e, self.f, self.g, self.h = int(e), int(f), int(g), int(h)

    def __mul__(self, o):
        e, f, g, h = self.e, self.f, self.g, self.h
        return Mat2(e * o.e + f * o.g, e * o.f + f * o.h, g * o.e + h * o.g, g * o.f + h * o.h)

    __matmul__ = __mul__

    def __neg__(self):
        return Mat2(-self.e, -self.f, -self.g, -self.h)

    def __add__(self, o):
        return Mat2(self.e + o.e, self.f + o.f, self.g + o.g, self.h + o.h)

    def __pow__(self, n):
        base = self if n >= 0 else self.inv()
        out = I
        for _ in range(abs(n)):
            out = out * base
        return out

    def det(self):
        return self.e * self.h - self.f * self.g

    def trace(self):
        return self.e + self.h

    def inv(self):
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix {self} is not invertible over Z (det {d})")
        return Mat2(d * self.h, -d * self.f, -d * self.g, d * self.e)

    def apply(self, x, y):
        """Matrix times the column vector (x, y)."""
        return (self.e * x + self.f * y, self.g * x + self.h * y)

    def astuple(self):
        return (self.e, self.f, self.g, self.h)

    def __iter__(self):
        return iter((self.e, self.f, self.g, self.h))

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return self.e == o.e and self.f == o.f and self.g == o.g and self.h == o.h

    def __hash__(self):
        return hash((self.e, self.f, self.g, self.h))

    def __repr__(self):
        return f"Mat2({self.e}, {self.f}, {self.g}, {self.h})"

    def __str__(self):
        return f"[[{self.e},{self.f}],[{self.g},{self.h}]]"


I = Mat2(1, 0, 0, 1)
A = Mat2(1, -1, 0, 1)
B = Mat2(1, 0, 1, 1)
S = Mat2(0, -1, 1, 0)
C = Mat2(-1, 0, 0, -1)
M = Mat2(1, -1, 1, 0)
D = Mat2(0, 1, 1, 0)
SD = Mat2(-1, 0, 0, 1)


def mat_mul(x, y):
    return x * y


def mat_inv(m):
    return m.inv()


def mat_det(m):
    return m.det()


def order(m):
    """Order of m: the least k <= 12 with m^k = I, else ``math.inf``."""
    p = m
    for k in range(1, 13):
        if p == I:
            return k
        p = p * m
    return math.inf


class TorsionClassSL(enum.Enum):
    Id = "Id"
    MinusI = "MinusI"
    S = "S"
    Sinv = "Sinv"
    Msq = "Msq"
    Minvsq = "Minvsq"
    M = "M"
    Minv = "Minv"
    Infinite = "Infinite"

    @property
    def representative(self):
        return _SL_REPS[self]


class TorsionClassGL(enum.Enum):
    Id = "Id"
    MinusI = "MinusI"
    D = "D"
    SD = "SD"
    Msq = "Msq"
    S = "S"
    M = "M"
    Infinite = "Infinite"

    @property
    def representative(self):
        return _GL_REPS[self]


_SL_REPS = {
    TorsionClassSL.Id: I, TorsionClassSL.MinusI: C,
    TorsionClassSL.S: S, TorsionClassSL.Sinv: S.inv(),
    TorsionClassSL.Msq: M * M, TorsionClassSL.Minvsq: (M * M).inv(),
    TorsionClassSL.M: M, TorsionClassSL.Minv: M.inv(),
    TorsionClassSL.Infinite: None,
}
_GL_REPS = {
    TorsionClassGL.Id: I, TorsionClassGL.MinusI: C, TorsionClassGL.D: D,
    TorsionClassGL.SD: SD, TorsionClassGL.Msq: M * M, TorsionClassGL.S: S,
    TorsionClassGL.M: M, TorsionClassGL.Infinite: None,
}

# (order, abelianized braid exponent mod 12) -> class
_SL_BY_ORDER_EXP = {
    (1, 0): TorsionClassSL.Id, (2, 6): TorsionClassSL.MinusI,
    (4, 3): TorsionClassSL.S, (4, 9): TorsionClassSL.Sinv,
    (3, 4): TorsionClassSL.Msq, (3, 8): TorsionClassSL.Minvsq,
    (6, 2): TorsionClassSL.M, (6, 10): TorsionClassSL.Minv,
}


def _lift_exponent(m):
    from .braid3 import matrix_to_braid
    return matrix_to_braid(m).exponent_sum()


def torsion_class_sl(m):
    """Conjugacy class of m in SL(2,Z), from its order and its image in Z/12."""
    if m.det() != 1:
        raise ValueError("torsion_class_sl needs det = +1")
    k = order(m)
    if k == math.inf:
        return TorsionClassSL.Infinite
    return _SL_BY_ORDER_EXP[(k, _lift_exponent(m) % 12)]


def torsion_class_gl(m):
    """Conjugacy class of m in GL(2,Z).

    Orientation-reversing involutions split by reduction mod 2: the class
    of D is nontrivial mod 2, the class of SD is trivial mod 2.
    """
    d = m.det()
    if d not in (1, -1):
        raise ValueError("torsion_class_gl needs det = +-1")
    k = order(m)
    if d == -1:
        if k == math.inf:
            return TorsionClassGL.Infinite
        assert k == 2
        trivial_mod2 = (m.e % 2, m.f % 2, m.g % 2, m.h % 2) == (1, 0, 0, 1)
        return TorsionClassGL.SD if trivial_mod2 else TorsionClassGL.D
    return {
        1: TorsionClassGL.Id, 2: TorsionClassGL.MinusI, 3: TorsionClassGL.Msq,
        4: TorsionClassGL.S, 6: TorsionClassGL.M, math.inf: TorsionClassGL.Infinite,
    }[k]


# -- derived subgroup ------------------------------------------------------

class FWord(FreeWord):
    """Word in the free generators f_{-2} (letter 1) and f_{-1} (letter 2)."""

    __slots__ = ()
    alphabet = "xy"
    _names = {1: "f-2", -1: "f-2^-1", 2: "f-1", -2: "f-1^-1"}

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(self._names[x] for x in self.letters)


def _a_pow(k):
    return Mat2(1, -k, 0, 1)


def f(n):
    """f_n = A^-(n+3) S A^n."""
    return _a_pow(-(n + 3)) * S * _a_pow(n)


F_M2, F_M1 = f(-2), f(-1)


def f_word_matrix(w):
    out = I
    gens = {1: F_M2, -1: F_M2.inv(), 2: F_M1, -2: F_M1.inv()}
    for x in w.letters:
        out = out * gens[x]
    return out


def derived_membership(m):
    """True iff m lies in the commutator subgroup SL(2,Z)' (exponent = 0 mod 12)."""
    if m.det() != 1:
        raise ValueError("derived_membership needs det = +1")
    return _lift_exponent(m) % 12 == 0


def _schreier_table():
    # f_n as words in f_{-2}, f_{-1}, using f_{n-1} = f_{n+1}^-1 f_n.
    fw = {-2: FWord((1,)), -1: FWord((2,))}
    for n in range(-3, -8, -1):
        fw[n] = ~fw[n + 2] * fw[n + 1]
    # A^6 agrees with the inverse of [f_{-1}^-1, f_{-2}] up to sign.
    a6 = ~(fw[-1] * ~fw[-2] * ~fw[-1] * fw[-2])
    table = {}
    for e in range(6):
        table[(e, 2)] = fw[-e - 2] if e < 5 else fw[-7] * a6
        table[(e, 1)] = FWord(()) if e < 5 else a6
        table[(e, -1)] = FWord(()) if e > 0 else ~a6
    for e in range(6):
        table[(e, -2)] = ~table[((e - 1) % 6, 2)]
    return table


_SCHREIER = _schreier_table()


def rewrite_in_f(m):
    """Reduced word in f_{-2}, f_{-1} whose matrix product equals m.

    A braid lift of m is rewritten with the Schreier transversal
    {A^0, ..., A^5} (coset = exponent sum mod 6).
    """
    from .braid3 import matrix_to_braid
    if m.det() != 1:
        raise ValueError("rewrite_in_f needs det = +1")
    nf = matrix_to_braid(m)
    if nf.exponent_sum() % 12 != 0:
        raise NotInDerivedGroup(f"{m} has abelianized exponent {nf.exponent_sum() % 12} mod 12")
    out = FWord(())
    e = 0
    for x in nf.to_word().letters:
        out = out * _SCHREIER[(e, x)]
        e = (e + (1 if x > 0 else -1)) % 6
    assert e == 0
    prod = f_word_matrix(out)
    if prod != m:
        if prod == -m:
            raise NotInDerivedGroup(f"{m} is not in SL(2,Z)' (its negative is)")
        raise AssertionError(f"Schreier rewriting produced {prod} for {m}")
    return out


def parse_matrix(text):
    """Parse ``[[e,f],[g,h]]`` or flat ``e f g h``."""
    s = text.strip()
    try:
        if s.startswith("["):
            rows = json.loads(s)
            if (len(rows) != 2 or any(len(r) != 2 for r in rows)
                    or not all(isinstance(x, int) for r in rows for x in r)):
                raise ParseError(f"not a 2x2 integer matrix: {text!r}")
            return Mat2(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
        parts = s.replace(",", " ").split()
        if len(parts) != 4:
            raise ParseError(f"expected four integers: {text!r}")
        return Mat2(*(int(p) for p in parts))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"cannot parse matrix {text!r}: {exc}") from None


_FTOKEN = {"f-2": (1,), "f-2^-1": (-1,), "f-1": (2,), "f-1^-1": (-2,), "1": ()}


def parse_fword(text):
    """Parse the printed form of an FWord, e.g. ``f-2 f-1^-1`` (``1`` is empty)."""
    parts = text.split()
    if not parts:
        raise ParseError("empty f-word text (use '1' for the identity)")
    raw = []
    for p in parts:
        if p not in _FTOKEN:
            raise ParseError(f"unknown f-word token {p!r}")
        raw.extend(_FTOKEN[p])
    return FWord(raw)
