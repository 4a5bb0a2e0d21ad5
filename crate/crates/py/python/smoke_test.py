"""Smoke test for the tarlab extension module."""

import tarlab

assert len(tarlab.kinds()) == 10

fh = tarlab.Graph.family("fullhouse")
assert (fh.order(), fh.size()) == (5, 8)
assert tarlab.parameter_values("skew", fh) == (1, 3)
assert tarlab.extremal_sets("skew", fh) == [[3], [4], [0, 1, 2]]
assert tarlab.is_feasible("skew", fh, [3])

k45 = tarlab.TarGraph("dom", tarlab.Graph.family("complete_bipartite:4,5"))
profile = k45.connectivity_profile()
assert (profile["extreme"], profile["threshold"]) == (3, 6)
assert k45.degree_stats()[0] == 9

c5 = tarlab.TarGraph("dom", tarlab.Graph.family("cycle:5"))
verdict, witness = c5.hamilton("path")
assert verdict == "yes" and len(witness) == c5.order()
assert tarlab.TarGraph("dom", tarlab.Graph.family("cycle:4")).hamilton("path")[0] == "no"

k33 = tarlab.Graph.family("complete_bipartite:3,3")
prism = tarlab.Graph.family("cartesian(complete:3;complete:2)")
assert tarlab.tar_isomorphic("dom", k33, prism)
assert tarlab.tar_isomorphic("dom", k33, prism, method="direct")

p4 = tarlab.Graph(4, [(0, 1), (1, 2), (2, 3)])
assert p4.graph6() == tarlab.Graph.family("path:4").graph6()
assert tarlab.Graph.from_graph6(p4.graph6()) == p4

row = tarlab.run_census("psd", 5)
assert (row["universe"], row["unique"]) == (23, 10)

report = tarlab.verify(["d0-K3P3", "fullhouse-minsets"])
assert report["passed"] == 2 and report["failed"] == 0, report["text"]

try:
    tarlab.parameter_values("nope", p4)
except ValueError:
    pass
else:
    raise AssertionError("unknown kind accepted")

print("smoke test passed")
