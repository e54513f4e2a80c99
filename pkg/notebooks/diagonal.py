"""The diagonal A1 -> A2 on both spaces."""
from f1cong import congruence as cg
from f1cong import spectra as sp
from f1cong.monoid import FreeMonomialMonoid, MonoidHom

A2, A1 = FreeMonomialMonoid(2, names=("t1", "t2")), FreeMonomialMonoid(1, names=("t",))
f = MonoidHom(A2, A1, [(1,), (1,)])

M2 = sp.symbolic_mspec(A2)
image = {M2.index(sp.symbolic_pullback_ideal(f, I)) for I in sp.symbolic_prime_ideals(A1)}
print("image in MSpec(A2):", sorted(M2.labels[i] for i in image))
print("closure adds:", sorted(M2.labels[i] for i in M2.closure(image) - image))

pair = (A2.var(0), A2.var(1))
for p in cg.enumerate_symbolic_primes(A2, 1):
    print(f"  {p.label():24s} in image: {cg.symbolic_in_pullback_image(f, p)!s:5s}  contains (t1,t2): {cg.symbolic_member(pair, p)}")
