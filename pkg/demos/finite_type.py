"""When is the symbolic space a shift of finite type?

Periodic kneading words give a finite list of forbidden words; an
eventually periodic one does not.  For a rational beta such as 9/5 the
orbit of the discontinuity never repeats, and the verdict stays open.

Run:  python demos/finite_type.py
"""
from fractions import Fraction

from betashift import AlgebraicReal, Params, classify, multinacci
from betashift.spectra import finite_type_witness_check, pm1_witness_search
from betashift.words import bits_to_str

golden = multinacci(2)
for alpha in ("0", "2-b", "1-b/2", "5-3*b"):
    c = classify(Params(golden, alpha))
    forb = sorted(bits_to_str(w) for w in c.forbidden) if c.forbidden else None
    print(f"golden, alpha = {alpha:6} -> {c.verdict.value:8} forbidden = {forb}")

# Finite type forces beta to be a root of a polynomial with coefficients in {-1, 0, 1}.
report = finite_type_witness_check(Params(golden, "1-b/2"))
print(f"\nkneading polynomial {report.kneading_polynomial}, witness {report.witness}")

beta = Fraction(9, 5)
c = classify(Params(beta, Fraction(1, 17)), max_iter=2000)
print(f"\nbeta = 9/5, alpha = 1/17 -> {c.verdict.value}({c.depth})")

print("{-1,0,1} witness up to degree 12:", pm1_witness_search(AlgebraicReal.from_rational(beta), 12))
