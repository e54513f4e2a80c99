"""MSpec and Cong of {0, e, 1}, and the projection between them."""
from f1cong import congruence as cg
from f1cong import corpus
from f1cong import spectra as sp

E = corpus.e_monoid()
M, C = sp.mspec(E), sp.cong_space(E)
print("MSpec:", M.labels, "closed:", [M.labels[i] for i in M.closed_points()])
print("Cong: ", C.labels, "discrete:", C.is_discrete())
pi = sp.projection_pi(E, C, M)
print("pi bijective:", pi.is_bijective(), " open:", pi.is_open_map())

t = cg.trivial(E)
print("trivial congruence weak prime:", cg.is_weak_prime(E, t), " prime:", cg.is_prime(E, t))
