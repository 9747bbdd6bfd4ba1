"""
Amalgamated semidirect products
===============================

A semidirect product K x| L with a common subgroup M is quotiented by
the pairs (m^-1, m). On A4 and a cyclic subgroup of S4 the quotient is
S4 itself; for automorphisms of F2 the common subgroup is generated by
s^4, which acts as conjugation by [u, v].
"""
from b3aut.amalg import AutAmalgElem, aut_equal, aut_mul, canonicalize, toy_s4
from b3aut.braid3 import normal_form, parse_braid
from b3aut.words import parse_word

am, K, L, M, p = toy_s4()
am.validate(K, L, M)
G = [(k, l) for k in K for l in L]
kernel = [g for g in G if p(g) == (0, 1, 2, 3)]
print(f"|K x| L| = {len(G)}, |image| = {len({p(g) for g in G})}, kernel = {kernel}")
print("kernel is mu(M):", set(kernel) == {am.mu(m) for m in M})

x = AutAmalgElem(parse_word("u"), normal_form(parse_braid("s^8 a")))
print("\nx           =", x)
print("canonical x =", canonicalize(x))
y = AutAmalgElem(parse_word("u UVuv UVuv"), normal_form(parse_braid("a")))
print("same automorphism as", y, ":", aut_equal(x, y), x.to_endo() == y.to_endo())
print("x * y =", aut_mul(x, y))
