"""The family beta_{n,k}, alpha = 1 - beta/2 of finite type but not transitive.

beta_{n,k} is the 2^k-th root of the n-bonacci number.  The kneading words
have period (n+1)2^k, the shift is of finite type, and the parameters fall
in the region D_{1,2}, so the maps are not transitive.  The quartic
x^4 - x^2 - 1 has the conjugate -beta, so beta_{2,1} is not a Perron number.

Run:  python demos/family.py
"""
from betashift import FamilyIndex, classify, family_params, transitivity_verdict, xi_word
from betashift.constructions import family_polynomial, verify_projection_half
from betashift.spectra import perron_check, pisot_check

for n in (2, 3):
    for k in (1, 2):
        idx = FamilyIndex(n, k)
        params = family_params(idx)
        word = xi_word(idx)
        tv = transitivity_verdict(params)
        print(f"(n,k) = ({n},{k})  beta = {params.beta.approx(10)}  xi- = {word}")
        print(f"    period {len(word.per)}, {classify(params).verdict.value}, "
              f"transitive: {tv.transitive} ({tv.witness}), pi(xi) = 1/2: {verify_projection_half(idx)}")

quartic = family_polynomial(2, 1)
print(f"\n{quartic}: {pisot_check(quartic).verdict.value}, {perron_check(quartic).verdict.value}")
for reason in perron_check(quartic).reasons:
    print("   ", reason)
