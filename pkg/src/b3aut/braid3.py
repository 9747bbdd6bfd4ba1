"""The braid group B3 = <a, b | aba = bab>.

sigma sends a, b to the parabolic matrices A, B of SL(2,Z) with kernel
<s^4>, where s = aba and c = s^2 generates the center. Every braid has a
writing s^nu1 W(a^-1, b) s^nu2 c^n with W a positive word in a^-1 and b;
it is unique off <s>, and computing it solves the word problem.
"""
from typing import NamedTuple

from .errors import InternalInconsistency, NonTermination, NoSignPattern
from .intmat import Mat2, S, torsion_class_sl
from .words import FreeWord, parse_word

__all__ = [
    "BraidWord", "BraidNormalForm", "ConjCase", "sigma", "exponent_sum", "matrix_to_braid",
    "normal_form", "braid_equal", "conj_min_form", "torsion_class_image", "parse_braid",
    "S_WORD", "C_WORD",
]

A_INV, B_POS = -1, 2  # the two letters allowed in the positive part W


class BraidWord(FreeWord):
    """Freely reduced word in a (letter 1) and b (letter 2)."""

    __slots__ = ()
    alphabet = "ab"


S_WORD = BraidWord((1, 2, 1))
C_WORD = S_WORD * S_WORD

_MACROS = {"s": (1, 2, 1), "c": (1, 2, 1) * 2, "S": (-1, -2, -1), "C": (-1, -2, -1) * 2}


def parse_braid(text):
    """Parse ``a b A B`` text; ``s`` and ``c`` expand to aba and ababab."""
    return parse_word(text, BraidWord, _MACROS)


def _fmt_positive(W):
    return "".join("A" if x == A_INV else "b" for x in W) or "1"


class BraidNormalForm(NamedTuple):
    """The writing s^nu1 W s^nu2 c^n, W a tuple over {-1 (a^-1), 2 (b)}.

    Elements of <s> are stored as (0, (), 0, k) for s^2k and
    (1, (), 0, k) for s^(2k+1).
    """

    nu1: int
    W: tuple
    nu2: int
    n: int

    def to_word(self):
        w = BraidWord(self.W)
        if self.nu1:
            w = S_WORD * w
        if self.nu2:
            w = w * S_WORD
        return w * C_WORD ** self.n

    def exponent_sum(self):
        e_w = sum(1 if x == B_POS else -1 for x in self.W)
        return 3 * self.nu1 + e_w + 3 * self.nu2 + 6 * self.n

    def size(self):
        """Normal size (2 nu1 + nu2, l(W)); elements of <s> use their shortest writing."""
        if not self.W:
            return ((self.nu1 + self.nu2) % 2, 0)
        return (2 * self.nu1 + self.nu2, len(self.W))

    def in_s_subgroup(self):
        return not self.W

    def __str__(self):
        return f"s^{self.nu1} {_fmt_positive(self.W)} s^{self.nu2} c^{self.n}"


def _canonical(nu1, W, nu2, n):
    if W:
        return BraidNormalForm(nu1, tuple(W), nu2, n)
    m = nu1 + nu2 + 2 * n
    return BraidNormalForm(m % 2, (), 0, m // 2)


def sigma(w):
    """Image of the braid word in SL(2,Z) (a -> A, b -> B)."""
    e, f, g, h = 1, 0, 0, 1
    for x in w.letters:
        if x == 1:
            f, h = f - e, h - g
        elif x == -1:
            f, h = f + e, h + g
        elif x == 2:
            e, g = e + f, g + h
        else:
            e, g = e - f, g - h
    return Mat2(e, f, g, h)


def exponent_sum(w):
    return sum(1 if x > 0 else -1 for x in w.letters)


_S_INV = S.inv()
# (nu0, nu1, nu2) in lexicographic order
_SIGN_PATTERNS = [(n0, n1, n2) for n0 in (0, 1) for n1 in (0, 1) for n2 in (0, 1)]


def _positive_part(m):
    """Find the first sign pattern making S^-nu1 m S^-nu2 C^-nu0 nonnegative."""
    for nu0, nu1, nu2 in _SIGN_PATTERNS:
        N = m
        if nu1:
            N = _S_INV * N
        if nu2:
            N = N * _S_INV
        if nu0:
            N = -N
        if N.e >= 0 and N.f >= 0 and N.g >= 0 and N.h >= 0:
            return (nu0, nu1, nu2), N
    raise NoSignPattern(f"no sign pattern makes {m} nonnegative")


def _subtract_rows(N):
    """Row-subtraction loop reducing a nonnegative det-1 matrix to I."""
    e, f, g, h = N.e, N.f, N.g, N.h
    limit = e + f + g + h
    W = []
    while not (e == 1 and f == 0 and g == 0 and h == 1):
        if e > g or (e == g and f > h):
            e, f = e - g, f - h  # left-multiply by A
            W.append(A_INV)
        elif e < g or (e == g and f < h):
            g, h = g - e, h - f  # left-multiply by B^-1
            W.append(B_POS)
        else:
            raise InternalInconsistency(f"e = g and f = h in {N}; impossible for det 1")
        if len(W) > limit:
            raise NonTermination(f"row subtraction on {N} exceeded {limit} steps")
    return tuple(W)


def matrix_to_braid(m):
    """A braid lift of m in normal shape, with central exponent nu0 in {0, 1}."""
    if m.det() != 1:
        raise ValueError(f"matrix_to_braid needs det = +1, got {m}")
    (nu0, nu1, nu2), N = _positive_part(m)
    return _canonical(nu1, _subtract_rows(N), nu2, nu0)


def normal_form(w):
    """The normal form of a braid word; two words are equal in B3 iff their forms agree."""
    lift = matrix_to_braid(sigma(w))
    d = exponent_sum(w) - lift.exponent_sum()
    if d % 12:
        raise InternalInconsistency(f"exponent discrepancy {d} for {w} is not a multiple of 12")
    return lift._replace(n=lift.n + 2 * (d // 12))


def braid_equal(w1, w2):
    return normal_form(w1) == normal_form(w2)


class ConjCase(NamedTuple):
    """Minimal conjugacy representative.

    tag is one of ``Central`` (c^n), ``CyclicW`` (W c^n, W the least
    rotation), ``OddCenter`` (s^(2n+1)) or ``ShortTorsion`` (x s^(2n+1) with
    word = (x,), x in {a^-1, b}).
    """

    tag: str
    n: int
    word: tuple = ()

    def representative(self):
        if self.tag == "Central":
            return BraidNormalForm(0, (), 0, self.n)
        if self.tag == "OddCenter":
            return BraidNormalForm(1, (), 0, self.n)
        if self.tag == "CyclicW":
            return BraidNormalForm(0, self.word, 0, self.n)
        return BraidNormalForm(0, self.word, 1, self.n)

    def __str__(self):
        if self.tag in ("Central", "OddCenter"):
            return f"{self.tag}(n={self.n})"
        return f"{self.tag}(W={_fmt_positive(self.word)}, n={self.n})"


def _least_rotation(W):
    return min(W[k:] + W[:k] for k in range(len(W)))


def conj_min_form(w):
    """Conjugate w down to a representative of minimal normal size."""
    nf = w if isinstance(w, BraidNormalForm) else normal_form(w)
    nu1, W, nu2, n = nf
    while True:
        if not W:
            m = nu1 + nu2 + 2 * n
            return ConjCase("Central", m // 2) if m % 2 == 0 else ConjCase("OddCenter", m // 2)
        if nu1:
            # conjugating s W s^nu2 c^n by s gives W s^(nu2+1) c^n
            nu1, nu2, n = 0, (1 if nu2 == 0 else 0), (n if nu2 == 0 else n + 1)
            continue
        if nu2 == 0:
            return ConjCase("CyclicW", n, _least_rotation(W))
        if len(W) == 1:
            return ConjCase("ShortTorsion", n, W)
        first, mid, last = W[0], W[1:-1], W[-1]
        if first == A_INV and last == A_INV:
            W, nu2 = mid + (B_POS,), 0
        elif first == B_POS and last == B_POS:
            W, nu2, n = mid + (A_INV,), 0, n + 1
        else:
            W = mid


def torsion_class_image(w):
    """Conjugacy class in SL(2,Z) of the image of w."""
    return torsion_class_sl(sigma(w))
