"""Semidirect products amalgamated over a common subgroup.

Generic part: K x| L with law (k, l)(k', l') = (k psi(l)(k'), l l'),
the map mu(m) = (kappa(m)^-1, lambda(m)) and the strong interiority
conditions that make mu(M) a normal subgroup. Two finite instances are
small enough to check everything exhaustively.

Concrete part: direct automorphisms of F2 as pairs (w, b) standing for
phi_w o psi(b), modulo s^4 = phi_[u,v]. The canonical representative
keeps the braid's central exponent in {0, 1}.
"""
import itertools
from typing import NamedTuple

from .autf2 import compose, inner, is_direct, nielsen_decompose, psi, apply
from .braid3 import BraidNormalForm, BraidWord, normal_form
from .errors import AmalgDataInvalid, NotAutomorphism
from .words import FreeWord, commutator

__all__ = [
    "SemidirectProduct", "Amalgamation", "sdp_mul", "sdp_inv", "toy_cyclic", "toy_s4",
    "perm_mul", "perm_inv", "AutAmalgElem", "canonicalize", "aut_mul", "aut_inv", "aut_equal",
    "aut_mu", "from_endo",
]


class SemidirectProduct:
    """K x|_psi L; ``action(l, k)`` is psi(l)(k)."""

    def __init__(self, k_mul, k_inv, k_one, l_mul, l_inv, l_one, action):
        self.k_mul, self.k_inv, self.k_one = k_mul, k_inv, k_one
        self.l_mul, self.l_inv, self.l_one = l_mul, l_inv, l_one
        self.action = action

    @property
    def one(self):
        return (self.k_one, self.l_one)

    def mul(self, x, y):
        (k, l), (k2, l2) = x, y
        return (self.k_mul(k, self.action(l, k2)), self.l_mul(l, l2))

    def inv(self, x):
        k, l = x
        li = self.l_inv(l)
        return (self.action(li, self.k_inv(k)), li)


def sdp_mul(x, y, sdp):
    return sdp.mul(x, y)


def sdp_inv(x, sdp):
    return sdp.inv(x)


class Amalgamation:
    """Data (K x| L, kappa, lambda) over M; ``validate`` checks the hypotheses."""

    def __init__(self, sdp, kappa, lam, m_mul, m_one=None):
        self.sdp, self.kappa, self.lam, self.m_mul = sdp, kappa, lam, m_mul
        self.m_one = m_one

    def mu(self, m):
        return (self.sdp.k_inv(self.kappa(m)), self.lam(m))

    def validate(self, ks, ls, ms):
        """Raise AmalgDataInvalid unless the hypotheses hold on the given samples."""
        sd = self.sdp
        lam_image = {self.lam(m): m for m in ms}
        kap = [self.kappa(m) for m in ms]
        if len(lam_image) != len(ms) or len(set(kap)) != len(ms):
            raise AmalgDataInvalid("kappa and lambda must be injective")
        for l in ls:
            for m in ms:
                conj = sd.l_mul(sd.l_mul(l, self.lam(m)), sd.l_inv(l))
                if conj not in lam_image:
                    raise AmalgDataInvalid(f"lambda(M) is not normal in L at l={l}, m={m}")
                # psi restricted to kappa(M) is conjugation transported through lambda
                if sd.action(l, self.kappa(m)) != self.kappa(lam_image[conj]):
                    raise AmalgDataInvalid(f"psi is not strongly inner on M at l={l}, m={m}")
        for m in ms:
            km, kmi = self.kappa(m), sd.k_inv(self.kappa(m))
            for k in ks:
                if sd.action(self.lam(m), k) != sd.k_mul(sd.k_mul(km, k), kmi):
                    raise AmalgDataInvalid(f"psi(lambda(m)) is not conjugation by kappa(m) at m={m}")


# -- finite instances --------------------------------------------------------

def toy_cyclic():
    """K = L = Z/4 with trivial action, amalgamated over M = 2Z/4 (M = Z/2).

    Returns (amalgamation, K, L, M) as element lists.
    """
    add = lambda a, b: (a + b) % 4
    neg = lambda a: (-a) % 4
    sdp = SemidirectProduct(add, neg, 0, add, neg, 0, lambda l, k: k)
    am = Amalgamation(sdp, lambda m: 2 * m % 4, lambda m: 2 * m % 4, lambda a, b: (a + b) % 2, 0)
    return am, list(range(4)), list(range(4)), [0, 1]


def perm_mul(p, q):
    """(p q)(i) = p(q(i))."""
    return tuple(p[i] for i in q)


def perm_inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, n = i, 0
        while j not in seen:
            seen.add(j)
            j, n = p[j], n + 1
        s *= -1 if n % 2 == 0 else 1
    return s


def toy_s4():
    """K = A4 and L = <(0 1 2 3)> inside S4, acting by conjugation, over M = K n L.

    Returns (amalgamation, K, L, M, p) with p(k, l) = k l in S4.
    """
    e = (0, 1, 2, 3)
    K = [p for p in itertools.permutations(range(4)) if _sign(p) == 1]
    r = (1, 2, 3, 0)
    L = [e]
    while perm_mul(L[-1], r) != e:
        L.append(perm_mul(L[-1], r))
    kset = set(K)
    M = [x for x in L if x in kset]
    conj = lambda l, k: perm_mul(perm_mul(l, k), perm_inv(l))
    sdp = SemidirectProduct(perm_mul, perm_inv, e, perm_mul, perm_inv, e, conj)
    ident = lambda m: m
    am = Amalgamation(sdp, ident, ident, perm_mul, e)
    return am, K, L, M, lambda x: perm_mul(x[0], x[1])


# -- direct automorphisms of F2 ---------------------------------------------

_UV = commutator(FreeWord((1,)), FreeWord((2,)))


class AutAmalgElem(NamedTuple):
    """phi_inner o psi(braid) with a braid normal form."""

    inner: FreeWord
    braid: BraidNormalForm

    def to_endo(self):
        return compose(inner(self.inner), psi(self.braid.to_word()))

    def __str__(self):
        return f"({self.inner}, {self.braid})"


def canonicalize(x):
    """Move c^(2q) = s^(4q) = phi_[u,v]^q into the inner part, leaving n in {0, 1}.

    Every braid fixes [u, v], so the transferred factor commutes past psi(b).
    """
    q, r = divmod(x.braid.n, 2)
    if q == 0:
        return x
    return AutAmalgElem(x.inner * _UV ** q, x.braid._replace(n=r))


def aut_mul(x, y):
    """(phi_x s)(phi_y t) = phi_(x s(y)) s t."""
    w = x.inner * apply(psi(x.braid.to_word()), y.inner)
    b = normal_form(x.braid.to_word() * y.braid.to_word())
    return canonicalize(AutAmalgElem(w, b))


def aut_inv(x):
    bi = ~x.braid.to_word()
    return canonicalize(AutAmalgElem(apply(psi(bi), ~x.inner), normal_form(bi)))


def aut_equal(x, y):
    return canonicalize(x) == canonicalize(y)


def aut_mu(k):
    """mu(s^4k) = (phi_[u,v]^-k, s^4k), stored as ([v,u]^k, NF(c^2k))."""
    return AutAmalgElem((~_UV) ** k, normal_form(BraidWord((1, 2, 1) * 4) ** k))


def from_endo(x):
    """Canonical element for a direct automorphism given by its images."""
    if not is_direct(x):
        raise NotAutomorphism(f"{x} is not a direct automorphism")
    dec = nielsen_decompose(x)
    return canonicalize(AutAmalgElem(dec.inner, dec.braid))
