"""Endomorphisms and automorphisms of F2 = <u, v>.

An endomorphism is stored as the pair (X1, X2) of images of u and v.
Composition follows functions: compose(x, y) = x o y, so psi of a
product is the composite of the factors in the same order.
"""
import collections
import enum
import math
import re
from fractions import Fraction
from typing import NamedTuple

from .braid3 import BraidWord, normal_form
from .errors import NotAutomorphism, NotTorsion, ParseError, SearchExhausted
from .intmat import I, M, Mat2, TorsionClassGL, TorsionClassSL, order, torsion_class_gl, torsion_class_sl
from .words import FreeWord, abelianize, commutator, is_conjugate, iter_words, parse_word

__all__ = [
    "EndoF2", "CommutatorVerdict", "NielsenDecomposition", "TorsionClassAut",
    "IDENTITY", "ALPHA", "ALPHA_INV", "BETA", "BETA_INV", "S_AUT", "DELTA", "SIGMA", "IOTA", "ZETA",
    "inner", "apply", "compose", "power", "psi", "phi_dihedral", "rho", "is_direct",
    "commutator_condition", "is_automorphism", "nielsen_decompose", "invert", "order_aut",
    "torsion_class_aut", "order6_obstruction_check", "parse_endo", "parse_dihedral",
]

_U = FreeWord((1,))
_V = FreeWord((2,))
_UV_COMM = commutator(_U, _V)  # [u, v] = u^-1 v^-1 u v


class EndoF2(NamedTuple):
    """Endomorphism u -> X1, v -> X2."""

    X1: FreeWord
    X2: FreeWord

    def size(self):
        return len(self.X1) + len(self.X2)

    def __call__(self, w):
        return apply(self, w)

    def __str__(self):
        return f"u->{self.X1} ; v->{self.X2}"


def _e(x1, x2):
    return EndoF2(parse_word(x1), parse_word(x2))


IDENTITY = _e("u", "v")
ALPHA = _e("u", "Uv")
ALPHA_INV = _e("u", "uv")
BETA = _e("vu", "v")
BETA_INV = _e("Vu", "v")
S_AUT = _e("Uvu", "U")
DELTA = _e("v", "u")
SIGMA = _e("U", "V")
IOTA = _e("v", "U")
ZETA = _e("v", "VU")


def inner(g):
    """phi_g : y -> g y g^-1."""
    gi = ~g
    return EndoF2(g * _U * gi, g * _V * gi)


def apply(x, w):
    """Substitute X1 for u and X2 for v in w and reduce."""
    a, b = x.X1.letters, x.X2.letters
    im = {1: a, 2: b, -1: tuple(-t for t in reversed(a)), -2: tuple(-t for t in reversed(b))}
    out = []
    for t in w.letters:
        chunk = im[t]
        # chunks are reduced, so cancellation only happens at the junction
        k, n = 0, len(chunk)
        while k < n and out and out[-1] == -chunk[k]:
            out.pop()
            k += 1
        out.extend(chunk[k:] if k else chunk)
    return FreeWord._from_reduced(tuple(out))


def compose(x, y):
    """x o y."""
    return EndoF2(apply(x, y.X1), apply(x, y.X2))


def power(x, k):
    if k < 0:
        return power(invert(x), -k)
    out = IDENTITY
    for _ in range(k):
        out = compose(out, x)
    return out


_BRAID_GEN = {1: ALPHA, -1: ALPHA_INV, 2: BETA, -2: BETA_INV}


def psi(w):
    """Action of the braid word w on F2 (a -> alpha, b -> beta)."""
    x = IDENTITY
    for t in w.letters:
        x = compose(x, _BRAID_GEN[t])
    return x


_DIHEDRAL_GEN = dict(_BRAID_GEN)
_DIHEDRAL_GEN[3] = DELTA
_DIHEDRAL_GEN[-3] = DELTA
_DTOKEN = re.compile(r"\s*([abABd1])(?:\^(-?\d+))?")


def parse_dihedral(text):
    """Parse a word over a, b, A, B, d into a tuple of letters (d is 3)."""
    s = text.strip()
    if not s:
        raise ParseError("empty dihedral word text (use '1' for the identity)")
    out, pos = [], 0
    table = {"a": 1, "A": -1, "b": 2, "B": -2, "d": 3}
    while pos < len(s):
        m = _DTOKEN.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        if m.group(1) == "1":
            continue
        t = table[m.group(1)]
        k = int(m.group(2)) if m.group(2) is not None else 1
        seq = [t] if k >= 0 else [-t if t != 3 else 3]
        out.extend(seq * abs(k))
    return tuple(out)


def phi_dihedral(w):
    """Action of a dihedral braid word; ``w`` is text or a letter tuple (3 = d)."""
    if isinstance(w, str):
        w = parse_dihedral(w)
    x = IDENTITY
    for t in w:
        x = compose(x, _DIHEDRAL_GEN[t])
    return x


def rho(x):
    """Abelianization: the columns are the exponent sums of X1 and X2."""
    e1, g1 = abelianize(x.X1)
    e2, g2 = abelianize(x.X2)
    return Mat2(e1, e2, g1, g2)


def is_direct(x):
    return rho(x).det() > 0


class CommutatorVerdict(NamedTuple):
    """tag in {C1, Cw, C1inv, Cwinv, Fail}; witness w with [X1, X2] = w^-1 [u,v]^(+-1) w."""

    tag: str
    witness: FreeWord = None

    def holds(self):
        return self.tag != "Fail"


def commutator_condition(x):
    K = commutator(x.X1, x.X2)
    if K == _UV_COMM:
        return CommutatorVerdict("C1", FreeWord(()))
    w = is_conjugate(_UV_COMM, K)
    if w is not None:
        return CommutatorVerdict("Cw", w)
    inv = ~_UV_COMM
    if K == inv:
        return CommutatorVerdict("C1inv", FreeWord(()))
    w = is_conjugate(inv, K)
    if w is not None:
        return CommutatorVerdict("Cwinv", w)
    return CommutatorVerdict("Fail")


def is_automorphism(x):
    return commutator_condition(x).holds()


# -- Nielsen decomposition -------------------------------------------------

class NielsenDecomposition(NamedTuple):
    """x = phi_inner o psi(braid) o delta^dihedral."""

    inner: FreeWord
    braid: object
    dihedral: int

    def recompose(self):
        x = compose(inner(self.inner), psi(self.braid.to_word()))
        return compose(x, DELTA) if self.dihedral else x

    def __str__(self):
        return f"inner={self.inner} braid={self.braid} dihedral={self.dihedral}"


# direct automorphisms of size 2, written phi_w o psi(b)
_TERMINALS = {
    IDENTITY: (FreeWord(()), ()),
    SIGMA: (parse_word("vu"), (1, 2, 1, 1, 2, 1)),
    IOTA: (_U, (1, 2, 1)),
    _e("V", "u"): (_V, (-1, -2, -1)),
}

# right moves z -> z o psi(h), recorded by the braid word h^-1
_RIGHT = [
    (ALPHA, (-1,)), (ALPHA_INV, (1,)), (BETA, (-2,)), (BETA_INV, (2,)),
    (S_AUT, (-1, -2, -1)), (compose(compose(ALPHA_INV, BETA_INV), ALPHA_INV), (1, 2, 1)),
]
_LETTERS = [FreeWord((t,)) for t in (1, -1, 2, -2)]


def _conj(z, t):
    ti = ~t
    return EndoF2(t * z.X1 * ti, t * z.X2 * ti)


def _moves(z):
    """Yield (z', g_factor, braid_factor) with z = phi_g_factor o z' o psi(braid_factor)."""
    for h, hb in _RIGHT:
        yield compose(z, h), None, hb
    for t in _LETTERS:
        yield _conj(z, t), ~t, ()
    # composite moves phi_U^-1 o z o psi(h) with U an image word
    for U in (z.X1, ~z.X1, z.X2, ~z.X2):
        if not U.letters:
            continue
        Ui = ~U
        for h, hb in _RIGHT[:4]:
            yield _conj(compose(z, h), Ui), U, hb


def _step(g, b, gf, bf):
    if gf is not None:
        g = g * gf
    return g, bf + b


def _bfs(z, g, b, max_states):
    """Search moves of size <= |z| for a strictly smaller or terminal state."""
    bound = z.size()
    seen = {z}
    queue = collections.deque([(z, g, b)])
    while queue:
        cur, cg, cb = queue.popleft()
        for nz, gf, bf in _moves(cur):
            s = nz.size()
            if s > bound or nz in seen:
                continue
            ng, nb = _step(cg, cb, gf, bf)
            if s < bound or nz in _TERMINALS:
                return nz, ng, nb
            seen.add(nz)
            if len(seen) > max_states:
                raise SearchExhausted(f"move search from {z} exceeded {max_states} states")
            queue.append((nz, ng, nb))
    return None


def nielsen_decompose(x, check=True, max_states=200_000):
    """Write an automorphism as phi_w o psi(b) o delta^d.

    Greedy descent on |z| using right moves by alpha, beta, s (and inverses),
    conjugation by a letter, and the composite moves phi_U^-1 o z o psi(h)
    with U an image word; a size-bounded breadth-first search takes over
    whenever no move decreases the size. With ``check=False`` the
    commutator test is skipped and failure of the search is reported as
    NotAutomorphism.
    """
    if check:
        if not is_automorphism(x):
            raise NotAutomorphism(f"{x} is not an automorphism")
    elif abs(rho(x).det()) != 1:
        raise NotAutomorphism(f"{x} has det(rho) = {rho(x).det()}")
    d = 0 if rho(x).det() > 0 else 1
    z = compose(x, DELTA) if d else x
    g, b = FreeWord(()), ()
    while z not in _TERMINALS:
        if not z.X1.letters or not z.X2.letters:
            raise NotAutomorphism(f"{x} reduces to the non-injective {z}")
        size = z.size()
        best = None
        for nz, gf, bf in _moves(z):
            key = (nz.size(), len(g) + (len(gf) if gf is not None else 0))
            if key[0] < size and (best is None or key < best[0]):
                best = (key, nz, gf, bf)
        if best is not None:
            _, z, gf, bf = best
            g, b = _step(g, b, gf, bf)
            continue
        found = _bfs(z, g, b, max_states)
        if found is None:
            if check:
                raise SearchExhausted(f"no decreasing move from {z}")
            raise NotAutomorphism(f"{x}: no decreasing move from {z}")
        z, g, b = found
    tw, tb = _TERMINALS[z]
    dec = NielsenDecomposition(g * tw, normal_form(BraidWord(tb + b)), d)
    if dec.recompose() != x:
        raise SearchExhausted(f"decomposition of {x} failed to recompose")
    return dec


def invert(x):
    """Inverse automorphism, read off the Nielsen decomposition."""
    dec = nielsen_decompose(x)
    y = compose(psi(~dec.braid.to_word()), inner(~dec.inner))
    return compose(DELTA, y) if dec.dihedral else y


# -- torsion ---------------------------------------------------------------

def order_aut(x):
    """Order of an automorphism: 1, 2, 3, 4 or ``math.inf``."""
    if not is_automorphism(x):
        raise NotAutomorphism(f"{x} is not an automorphism")
    k = order(rho(x))
    if k == math.inf:
        return math.inf
    # ker rho consists of inner automorphisms, which are torsion free
    return k if power(x, k) == IDENTITY else math.inf


class TorsionClassAut(enum.Enum):
    Id = "Id"
    Sigma = "Sigma"
    Iota = "Iota"
    IotaInv = "IotaInv"
    Zeta = "Zeta"
    ZetaInv = "ZetaInv"
    Delta = "Delta"
    IotaDelta = "IotaDelta"
    Infinite = "Infinite"

    @property
    def representative(self):
        return _AUT_REPS[self]


_AUT_REPS = {
    TorsionClassAut.Id: IDENTITY, TorsionClassAut.Sigma: SIGMA,
    TorsionClassAut.Iota: IOTA, TorsionClassAut.IotaInv: _e("V", "u"),
    TorsionClassAut.Zeta: ZETA, TorsionClassAut.ZetaInv: _e("VU", "u"),
    TorsionClassAut.Delta: DELTA, TorsionClassAut.IotaDelta: compose(IOTA, DELTA),
    TorsionClassAut.Infinite: None,
}

_BY_SL = {
    TorsionClassSL.Id: TorsionClassAut.Id, TorsionClassSL.MinusI: TorsionClassAut.Sigma,
    TorsionClassSL.S: TorsionClassAut.Iota, TorsionClassSL.Sinv: TorsionClassAut.IotaInv,
    TorsionClassSL.Msq: TorsionClassAut.Zeta, TorsionClassSL.Minvsq: TorsionClassAut.ZetaInv,
}
_BY_GL = {TorsionClassGL.D: TorsionClassAut.Delta, TorsionClassGL.SD: TorsionClassAut.IotaDelta}


def torsion_class_aut(x):
    """Conjugacy class of a finite-order automorphism, read off rho(x).

    Direct classes are classes of Aut+(F2); conjugating by an indirect
    automorphism exchanges Iota with IotaInv and Zeta with ZetaInv.
    """
    k = order_aut(x)
    if k == math.inf:
        raise NotTorsion(f"{x} has infinite order")
    m = rho(x)
    if m.det() > 0:
        return _BY_SL[torsion_class_sl(m)]
    return _BY_GL[torsion_class_gl(m)]


def order6_obstruction_check(max_len=8):
    """No automorphism of order 6 over the matrix M.

    An order-6 lift phi_x o beta alpha would need (I + M) X = e1 over Z,
    whose only rational solution is (1/3, -1/3); and for every x of
    length <= max_len the word x . beta alpha(x) . u^-1 is nontrivial.
    """
    N = I + M
    det = N.det()
    if det != 3:
        return False
    sol = (Fraction(N.h, det), Fraction(-N.g, det))  # adj(N) e1 / det
    if all(q.denominator == 1 for q in sol):
        return False
    ba = compose(BETA, ALPHA)
    ui = ~_U
    for w in iter_words(max_len):
        if (w * apply(ba, w) * ui).is_identity():
            return False
    return True


_ENDO = re.compile(r"^\s*u\s*->\s*(.+?)\s*[;,]\s*v\s*->\s*(.+?)\s*$")


def parse_endo(text):
    """Parse ``u->WORD ; v->WORD``."""
    m = _ENDO.match(text)
    if not m:
        raise ParseError(f"expected 'u->WORD ; v->WORD', got {text!r}")
    return EndoF2(parse_word(m.group(1)), parse_word(m.group(2)))
