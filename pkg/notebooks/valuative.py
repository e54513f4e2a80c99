"""Valuative checks on A1 and P1 over F1."""
from f1cong import scheme as sc
from f1cong import valuation as va

for name, X in (("A1", sc.affine_space(1)), ("P1", sc.projective_line())):
    phi = sc.structure_morphism(X)
    for check in (va.check_universally_closed, va.check_separated_valuative, va.check_proper):
        rep = check(phi, radius=3)
        print(f"{name} {rep['property']:18s} {rep['verdict']:24s} {rep['diagrams']} diagrams")
        if rep["verdict"] == "counterexample":
            print("    witness:", rep["witness"]["eta"], "lifts:", rep["lifts"])
