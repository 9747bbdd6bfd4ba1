"""
Automorphisms of the free group of rank two
===========================================

An endomorphism of F2 = <u, v> is an automorphism exactly when it sends
the commutator [u, v] to a conjugate of [u, v] or of its inverse. An
automorphism then splits as an inner automorphism, a braid acting
through alpha, beta, and possibly the swap delta.
"""
from b3aut.autf2 import (
    commutator_condition, compose, inner, nielsen_decompose, order_aut, parse_endo, psi,
    torsion_class_aut,
)
from b3aut.braid3 import parse_braid
from b3aut.words import parse_word

x = compose(inner(parse_word("uvU")), psi(parse_braid("a b b A b")))
print("x =", x)
print("commutator test:", commutator_condition(x))
d = nielsen_decompose(x)
print("decomposition:", d)
print("recomposes:", d.recompose() == x)

for text in ("u->v ; v->VU", "u->U ; v->V", "u->v ; v->U", "u->v ; v->u", "u->vu ; v->v", "u->uu ; v->v"):
    y = parse_endo(text)
    cv = commutator_condition(y)
    if not cv.holds():
        print(f"{text:<16} not an automorphism")
        continue
    k = order_aut(y)
    cls = torsion_class_aut(y).name if k != float("inf") else "-"
    print(f"{text:<16} order {k}, class {cls}")

# beta alpha acts on Z^2 with order 6, yet has infinite order on F2
ba = psi(parse_braid("ba"))
print("order of beta alpha:", order_aut(ba))
