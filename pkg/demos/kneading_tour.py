"""A walk through the maps x -> beta*x + alpha mod 1 for the golden mean.

Run:  python demos/kneading_tour.py
"""
from fractions import Fraction

from betashift import Params, kneading_pair, multinacci, project, tau_expansion
from betashift.words import star

beta = multinacci(2)
print(f"beta = {beta.approx(15)}  (root of {beta.defining})")

# The greedy map (alpha = 0) and its mirror image, the lazy map.
for alpha in ("0", "2-b", "1-b/2", "5-3*b"):
    params = Params(beta, alpha)
    minus, plus = kneading_pair(params)
    print(f"alpha = {alpha:6}  p = {float(params.p):.6f}  "
          f"tau- = {minus.text():10}  tau+ = {plus.text():10}")

# alpha and 2 - beta - alpha swap the two words and flip every bit.
params = Params(beta, "5-3*b")
m1, p1 = kneading_pair(params)
m2, p2 = kneading_pair(params.mirror())
print("\nmirror symmetry:", m1.word == star(p2.word) and p1.word == star(m2.word))

# Points of Q(beta) have eventually periodic expansions that project back exactly.
params = Params(beta, Fraction(1, 4))
for x in (Fraction(1, 3), Fraction(2, 7), Fraction(1, 2)):
    res = tau_expansion(params, x, "plus")
    print(f"x = {x}: tau+ = {res.word}, projects back to {project(params, res.word)}")
