import collections
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from b3aut.autf2 import (
    ALPHA, ALPHA_INV, BETA, BETA_INV, DELTA, IDENTITY, IOTA, S_AUT, SIGMA, ZETA, EndoF2,
    TorsionClassAut as TA, apply, commutator_condition, compose, inner, invert, is_automorphism,
    is_direct, nielsen_decompose, order6_obstruction_check, order_aut, parse_dihedral, parse_endo,
    phi_dihedral, power, psi, rho, torsion_class_aut,
)
from b3aut.braid3 import BraidNormalForm, normal_form, parse_braid
from b3aut.errors import NotAutomorphism, NotTorsion, ParseError
from b3aut.intmat import A, I, M, Mat2
from b3aut.verify import random_aut
from b3aut.words import ONE, FreeWord, commutator, iter_words, parse_word
from strategies import braid_words, free_words

pw, pb = parse_word, parse_braid
u, v = pw("u"), pw("v")


def E(x1, x2):
    return EndoF2(pw(x1), pw(x2))


def endos(max_size):
    by_len = collections.defaultdict(list)
    for w in iter_words(max_size):
        by_len[len(w)].append(w)
    for l1 in range(max_size + 1):
        for l2 in range(max_size + 1 - l1):
            for a in by_len[l1]:
                for b in by_len[l2]:
                    yield EndoF2(a, b)


def test_psi_examples():
    assert psi(pb("a")) == E("u", "Uv")
    assert psi(pb("aba")) == E("Uvu", "U")
    assert psi(pb("s^4")) == inner(commutator(u, v))


def test_dihedral_examples():
    assert phi_dihedral("d") == E("v", "u")
    assert phi_dihedral("d a d") == E("Vu", "v") == BETA_INV
    assert phi_dihedral("d d") == IDENTITY
    assert phi_dihedral("d b d") == ALPHA_INV
    assert parse_dihedral("a d^2 B^-1") == (1, 3, 3, 2)
    with pytest.raises(ParseError):
        parse_dihedral("a x")


def test_apply_examples():
    assert apply(ALPHA, pw("uv")) == v
    assert apply(ZETA, ONE) == ONE
    assert apply(inner(u), v) == pw("uvU")


def test_compose_examples():
    assert compose(ALPHA, ALPHA_INV) == IDENTITY
    assert compose(compose(BETA, ALPHA), BETA) == compose(compose(ALPHA, BETA), ALPHA)
    assert power(ZETA, 3) == IDENTITY


@given(braid_words(20), braid_words(20))
def test_psi_homomorphism(x, y):
    assert psi(x * y) == compose(psi(x), psi(y))


@settings(max_examples=200)
@given(braid_words(40))
def test_psi_faithful(w):
    assert (psi(w) == IDENTITY) == (normal_form(w) == BraidNormalForm(0, (), 0, 0))


def test_psi_kernel_words():
    assert psi(pb("abaBAB")) == IDENTITY
    assert psi(pb("c^2")) != IDENTITY


def test_center():
    # s^2 is (u, v) -> (u^-1, v^-1) conjugated by vu, s^4 is conjugation by [u, v]
    assert psi(pb("c")) == compose(inner(pw("UV")), SIGMA)
    assert psi(pb("c^2")) == inner(pw("UVuv"))


def test_dihedral_relations():
    assert compose(DELTA, DELTA) == IDENTITY
    assert compose(compose(DELTA, ALPHA), DELTA) == BETA_INV
    assert compose(compose(DELTA, BETA), DELTA) == ALPHA_INV


def test_rho_examples():
    assert rho(ALPHA) == A
    assert rho(ZETA) == Mat2(0, -1, 1, -1) == M * M
    assert rho(E("u", "u")) == Mat2(1, 1, 0, 0)
    assert rho(E("u", "u")).det() == 0


@given(free_words(8), free_words(8), free_words(8), free_words(8))
def test_rho_functorial(a, b, c, d):
    x, y = EndoF2(a, b), EndoF2(c, d)
    assert rho(compose(x, y)) == rho(x) * rho(y)


def test_commutator_condition_examples():
    assert commutator_condition(BETA).tag == "C1"
    v_ = commutator_condition(inner(u))
    assert v_.tag == "Cw" and v_.witness == pw("U")
    assert commutator_condition(DELTA).tag == "C1inv"
    assert commutator_condition(E("u", "u")).tag == "Fail"


@given(free_words(6), free_words(6))
def test_commutator_witness(a, b):
    x = EndoF2(a, b)
    cv = commutator_condition(x)
    if cv.holds():
        k = commutator(u, v)
        k = k if cv.tag in ("C1", "Cw") else ~k
        assert commutator(a, b) == ~cv.witness * k * cv.witness


def test_is_automorphism_examples():
    assert is_automorphism(ALPHA) and is_direct(ALPHA)
    assert not is_automorphism(E("u", "u"))
    assert is_automorphism(ZETA) and is_direct(ZETA)
    assert is_automorphism(DELTA) and not is_direct(DELTA)


def _inverse_oracle(max_inv):
    """Brute-force: x is invertible iff some y with |y| <= max_inv has x o y = y o x = id."""
    by_ab = collections.defaultdict(list)
    for w in iter_words(max_inv):
        e = [0, 0]
        for t in w.letters:
            e[abs(t) - 1] += 1 if t > 0 else -1
        by_ab[tuple(e)].append(w)

    def invertible(x):
        m = rho(x)
        if m.det() not in (1, -1):
            return False
        mi = m.inv()
        c1 = [w for w in by_ab[mi.apply(1, 0)] if apply(x, w) == u]
        c2 = [w for w in by_ab[mi.apply(0, 1)] if apply(x, w) == v]
        return any(len(a) + len(b) <= max_inv and compose(EndoF2(a, b), x) == IDENTITY
                   for a in c1 for b in c2)
    return invertible


def test_commutator_test_matches_inverse_search():
    invertible = _inverse_oracle(6)
    for x in endos(4):
        assert is_automorphism(x) == invertible(x), x


def test_decompose_examples():
    d = nielsen_decompose(SIGMA)
    assert d.inner == pw("vu") and d.braid == normal_form(pb("s^2")) and d.dihedral == 0
    d = nielsen_decompose(IOTA)
    assert d.inner == u and d.braid == normal_form(pb("s"))
    k = commutator(u, v)
    x = inner(k)
    d = nielsen_decompose(x)
    assert d.recompose() == x
    d = nielsen_decompose(DELTA)
    assert d.dihedral == 1 and d.recompose() == DELTA
    with pytest.raises(NotAutomorphism):
        nielsen_decompose(E("u", "u"))
    with pytest.raises(NotAutomorphism):
        nielsen_decompose(E("uu", "v"), check=False)


@settings(max_examples=150)
@given(free_words(10), braid_words(16), st.booleans())
def test_decomposition_soundness(w, b, ind):
    x = compose(inner(w), psi(b))
    if ind:
        x = compose(x, DELTA)
    d = nielsen_decompose(x)
    assert d.recompose() == x
    assert d.dihedral == int(ind)
    # the braid part is determined modulo s^4 by rho
    assert rho(psi(d.braid.to_word())) == rho(psi(b))


@settings(max_examples=100)
@given(free_words(6), braid_words(10))
def test_invert(w, b):
    x = compose(inner(w), psi(b))
    y = invert(x)
    assert compose(x, y) == IDENTITY == compose(y, x)


def test_kernel_of_rho_is_inner():
    inner_set = {inner(g) for g in iter_words(6)}
    found = 0
    for x in endos(6):
        if rho(x) == I and is_automorphism(x):
            assert x in inner_set
            found += 1
    assert found > 1
    rng = random.Random(5)
    for _ in range(200):
        g = FreeWord([rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 12))])
        assert rho(inner(g)) == I


def test_named_automorphism_identities():
    assert IOTA == compose(inner(u), S_AUT)
    assert compose(IOTA, IOTA) == SIGMA
    assert SIGMA == compose(inner(pw("vu")), psi(pb("s^2")))
    assert ZETA == compose(inner(u), compose(BETA, S_AUT))
    assert invert(ZETA) == E("VU", "u")
    # zeta^sigma = phi_v zeta and sigma^(zeta^-1) = phi_v^-1 sigma
    assert compose(compose(invert(SIGMA), ZETA), SIGMA) == compose(inner(v), ZETA)
    zi = invert(ZETA)
    assert compose(compose(ZETA, SIGMA), zi) == compose(inner(pw("V")), SIGMA)


def test_orders():
    assert order_aut(IOTA) == 4
    assert order_aut(ZETA) == 3
    assert order_aut(SIGMA) == 2
    assert order_aut(DELTA) == 2
    assert order_aut(IDENTITY) == 1
    assert order_aut(psi(pb("ba"))) == math.inf
    assert power(psi(pb("ba")), 6) != IDENTITY
    assert order_aut(ALPHA) == math.inf
    with pytest.raises(NotAutomorphism):
        order_aut(E("u", "u"))


def test_torsion_examples():
    assert torsion_class_aut(compose(inner(v), ZETA)) is TA.Zeta
    assert torsion_class_aut(SIGMA) is TA.Sigma
    assert torsion_class_aut(DELTA) is TA.Delta
    assert torsion_class_aut(compose(IOTA, DELTA)) is TA.IotaDelta
    assert torsion_class_aut(invert(IOTA)) is TA.IotaInv
    with pytest.raises(NotTorsion):
        torsion_class_aut(ALPHA)
    for cls in TA:
        if cls is not TA.Infinite:
            assert torsion_class_aut(cls.representative) is cls


@settings(max_examples=80)
@given(st.sampled_from([c for c in TA if c is not TA.Infinite]), st.integers(0, 10 ** 6))
def test_torsion_class_conjugation_invariant(cls, seed):
    g = random_aut(random.Random(seed), indirect=True)
    x = compose(compose(invert(g), cls.representative), g)
    if is_direct(g):
        assert torsion_class_aut(x) is cls
    else:
        # an indirect conjugator swaps iota with iota^-1 and zeta with zeta^-1
        swap = {TA.Iota: TA.IotaInv, TA.IotaInv: TA.Iota, TA.Zeta: TA.ZetaInv, TA.ZetaInv: TA.Zeta}
        assert torsion_class_aut(x) is swap.get(cls, cls)
    assert order_aut(x) == order_aut(cls.representative)


def test_order6_obstruction():
    assert order6_obstruction_check()
    N = I + M
    assert N.det() == 3
    assert N.apply(1, -1) == (3, 0)


def test_parse_endo():
    assert parse_endo("u->v ; v->VU") == ZETA
    assert parse_endo("u -> uvU;v->1") == E("uvU", "1")
    assert parse_endo(str(ZETA)) == ZETA
    for bad in ("u->v", "v->u ; u->v", "u->x ; v->v", "u-> ; v->v"):
        with pytest.raises(ParseError):
            parse_endo(bad)
