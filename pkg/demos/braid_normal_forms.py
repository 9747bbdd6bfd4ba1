"""
Braid normal forms
==================

Every braid on three strands has a writing s^nu1 W s^nu2 c^n where W is a
positive word in a^-1 and b. Comparing these writings decides equality.
"""
from b3aut.braid3 import braid_equal, conj_min_form, normal_form, parse_braid, sigma

# the two sides of the braid relation give the same normal form
for text in ("aba", "bab", "a", "A", "c^2 a"):
    w = parse_braid(text)
    print(f"{text:>8}  ->  {normal_form(w)}   sigma = {sigma(w)}")

# sigma kills c^2, but the braid c^2 is not trivial
print(sigma(parse_braid("c^2")), normal_form(parse_braid("c^2")))
print("c^2 == 1 in B3?", braid_equal(parse_braid("c^2"), parse_braid("1")))

# conjugacy: minimal representatives
for text in ("b A b a", "bbAA", "s^3", "s b", "bAbbA"):
    print(f"{text:>8}  ~  {conj_min_form(parse_braid(text))}")
