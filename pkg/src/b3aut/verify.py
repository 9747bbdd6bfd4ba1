"""Identity suites behind ``b3aut verify``, plus random samplers shared by tests.

Constants are looked up on their modules at call time, so a corrupted
constant shows up as a failing check.
"""
import random
from typing import NamedTuple

from . import amalg, autf2, braid3, intmat
from .words import FreeWord, parse_word

__all__ = [
    "CheckResult", "random_free_word", "random_braid_word", "random_aut", "random_aut_pair",
    "check_presentation", "check_action_formulas", "check_f_recursion", "check_formulas",
    "check_amalg_toy", "check_order6", "run_all",
]


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def random_free_word(rng, max_len, cls=FreeWord):
    return cls([rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, max_len))])


def random_braid_word(rng, max_len):
    return random_free_word(rng, max_len, braid3.BraidWord)


def random_aut(rng, inner_len=4, braid_len=8, indirect=False):
    """phi_w o psi(b), optionally composed with delta on the right."""
    x = autf2.compose(autf2.inner(random_free_word(rng, inner_len)),
                      autf2.psi(random_braid_word(rng, braid_len)))
    if indirect and rng.random() < 0.5:
        x = autf2.compose(x, autf2.DELTA)
    return x


def random_aut_pair(rng, inner_len=4, braid_len=8, indirect=True):
    """A random automorphism together with its inverse, both built from factors."""
    w, b = random_free_word(rng, inner_len), random_braid_word(rng, braid_len)
    x = autf2.compose(autf2.inner(w), autf2.psi(b))
    xi = autf2.compose(autf2.psi(~b), autf2.inner(~w))
    if indirect and rng.random() < 0.5:
        x, xi = autf2.compose(x, autf2.DELTA), autf2.compose(autf2.DELTA, xi)
    return x, xi


def check_presentation(rng, samples=2000):
    """Artin relations for the constant matrices, and ker sigma = <s^4> on samples."""
    m = intmat
    A, B, I = m.A, m.B, m.I
    if A * B * A != B * A * B:
        return CheckResult("presentation", False, "ABA != BAB")
    if (A * B) ** 6 != I:
        return CheckResult("presentation", False, "(ABABAB)^2 != I")
    if m.S != A * B * A or m.C != m.S * m.S or m.M != B * A:
        return CheckResult("presentation", False, "S, C or M disagrees with A, B")
    w = braid3.parse_braid
    if braid3.sigma(w("a")) != A or braid3.sigma(w("b")) != B:
        return CheckResult("presentation", False, "sigma(a), sigma(b) disagree with A, B")
    for _ in range(samples):
        x = random_braid_word(rng, 40)
        nf = braid3.normal_form(x)
        central_even = not nf.W and nf.nu1 == 0 and nf.n % 2 == 0
        if (braid3.sigma(x) == I) != central_even:
            return CheckResult("presentation", False, f"kernel test fails on {x}")
    return CheckResult("presentation", True, f"relations and {samples} kernel samples")


def check_action_formulas():
    """alpha^-1, beta^-1, s, s^2, s^4 act on (u, v) by their closed formulas."""
    a = autf2
    pw, pb = parse_word, braid3.parse_braid
    u, v = pw("u"), pw("v")
    uv = pw("UVuv")
    checks = {
        "alpha^-1": (a.psi(pb("A")), a.EndoF2(u, pw("uv"))),
        "beta^-1": (a.psi(pb("B")), a.EndoF2(pw("Vu"), v)),
        "s": (a.psi(pb("s")), a.EndoF2(pw("Uvu"), pw("U"))),
        "s^2": (a.psi(pb("s^2")), a.compose(a.inner(pw("UV")), a.SIGMA)),
        "s^4": (a.psi(pb("s^4")), a.inner(uv)),
        "braid relation": (a.psi(pb("aba")), a.psi(pb("bab"))),
    }
    bad = [k for k, (x, y) in checks.items() if x != y]
    return CheckResult("action formulas", not bad, ", ".join(bad) or "all formulas hold")


def check_f_recursion(n_range=20):
    f, A, S = intmat.f, intmat.A, intmat.S
    a6s2 = A ** -6 * S * S
    for n in range(-n_range, n_range + 1):
        if f(n + 1) * f(n - 1) != f(n):
            return CheckResult("f-recursion", False, f"f({n + 1}) f({n - 1}) != f({n})")
        if a6s2 != f(n - 1) * f(n - 2).inv() * f(n - 1).inv() * f(n - 2):
            return CheckResult("f-recursion", False, f"A^-6 S^2 != [f({n - 1})^-1, f({n - 2})]")
    return CheckResult("f-recursion", True, f"n in [{-n_range}, {n_range}]")


def check_formulas(rng, samples=1000, braid_len=6):
    """sigma phi_x = phi_sigma(x) sigma and its two consequences, on random data."""
    a = autf2
    for _ in range(samples):
        s, _ = random_aut_pair(rng, braid_len=braid_len)
        t, ti = random_aut_pair(rng, braid_len=braid_len)
        x, y = random_free_word(rng, 6), random_free_word(rng, 6)
        px, py = a.inner(x), a.inner(y)
        if a.compose(s, px) != a.compose(a.inner(a.apply(s, x)), s):
            return CheckResult("formulas", False, f"i fails for {s}, {x}")
        lhs = a.compose(a.compose(px, s), a.compose(py, t))
        if lhs != a.compose(a.inner(x * a.apply(s, y)), a.compose(s, t)):
            return CheckResult("formulas", False, f"ii fails for {s}, {t}, {x}, {y}")
        g = a.compose(py, t)
        gi = a.compose(ti, a.inner(~y))
        conj = a.compose(a.compose(gi, a.compose(px, s)), g)
        rhs = a.compose(a.inner(a.apply(ti, ~y * x * a.apply(s, y))), a.compose(a.compose(ti, s), t))
        if conj != rhs:
            return CheckResult("formulas", False, f"iii fails for {s}, {t}, {x}, {y}")
    return CheckResult("formulas", True, f"{samples} samples")


def _mu_normal_hom(am, ks, ls, ms):
    sd = am.sdp
    for m in ms:
        for m2 in ms:
            if sd.mul(am.mu(m), am.mu(m2)) != am.mu(am.m_mul(m, m2)):
                return f"mu is not a homomorphism at {m}, {m2}"
    image = {am.mu(m) for m in ms}
    for k in ks:
        for l in ls:
            g = (k, l)
            gi = sd.inv(g)
            for x in image:
                if sd.mul(sd.mul(g, x), gi) not in image:
                    return f"mu(M) is not normal at {g}"
    return None


def check_amalg_toy():
    am, K, L, M = amalg.toy_cyclic()
    am.validate(K, L, M)
    err = _mu_normal_hom(am, K, L, M)
    if err:
        return CheckResult("amalgam", False, "Z/4: " + err)
    image = {am.mu(m) for m in M}
    cosets = {frozenset(am.sdp.mul((k, l), x) for x in image) for k in K for l in L}
    if len(cosets) != 8:
        return CheckResult("amalgam", False, f"Z/4 quotient has order {len(cosets)}")
    am, K, L, M, p = amalg.toy_s4()
    am.validate(K, L, M)
    err = _mu_normal_hom(am, K, L, M)
    if err:
        return CheckResult("amalgam", False, "S4: " + err)
    G = [(k, l) for k in K for l in L]
    e = tuple(range(4))
    for g in G:
        for h in G:
            if p(am.sdp.mul(g, h)) != amalg.perm_mul(p(g), p(h)):
                return CheckResult("amalgam", False, "p is not a homomorphism")
    if {g for g in G if p(g) == e} != {am.mu(m) for m in M}:
        return CheckResult("amalgam", False, "ker p != mu(K n L)")
    return CheckResult("amalgam", True, "Z/4 and S4 instances")


def check_order6():
    ok = autf2.order6_obstruction_check()
    return CheckResult("order-6 obstruction", ok, "no order-6 lift of M" if ok else "obstruction failed")


def run_all(seed=0, max_size=20):
    """Run every suite; exceptions count as failures. ``max_size`` bounds the f sweep."""
    rng = random.Random(seed)
    suites = [
        lambda: check_presentation(rng), check_action_formulas, lambda: check_f_recursion(max_size),
        lambda: check_formulas(rng), check_amalg_toy, check_order6,
    ]
    names = ["presentation", "action formulas", "f-recursion", "formulas", "amalgam", "order-6 obstruction"]
    out = []
    for name, suite in zip(names, suites):
        try:
            out.append(suite())
        except Exception as exc:  # a crash is a failed check, not a crashed command
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
    return out
