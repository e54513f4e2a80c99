"""Both characterizations of closed immersions and separatedness over the shipped suite."""
from f1cong import corpus
from f1cong import properties as pr

for s in corpus.morphism_suite():
    d = pr.is_closed_immersion_def(s.phi)
    top = pr.closed_immersion_report(s.phi)["verdict"]
    sep = pr.separated_report(s.phi)
    print(f"{s.name:32s} closed immersion {d!s:5s}/{top!s:5s}  separated {sep['definition']!s:5s}/{sep['topological']}")
