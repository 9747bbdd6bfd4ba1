"""
The commutator subgroup of SL(2,Z)
==================================

The matrices f_n = A^-(n+3) S A^n satisfy f_(n+1) f_(n-1) = f_n, and
f_-2, f_-1 freely generate the commutator subgroup (up to sign).
Rewriting a member as a word in them goes through a braid lift.
"""
from b3aut.intmat import A, S, derived_membership, f, f_word_matrix, rewrite_in_f

for n in range(-4, 3):
    print(f"f_{n:<3} = {f(n)}")

print("f_0 f_-2 == f_-1 ?", f(0) * f(-2) == f(-1))
print("A^-6 S^2 == [f_-1^-1, f_-2] ?", A ** -6 * S * S == f(-1) * f(-2).inv() * f(-1).inv() * f(-2))

m = f(3) * f(-5).inv() * f(1)
print("\nm =", m, "in the commutator subgroup:", derived_membership(m))
w = rewrite_in_f(m)
print("as a word:", w)
print("check:", f_word_matrix(w) == m)
print("A in the commutator subgroup:", derived_membership(A))
