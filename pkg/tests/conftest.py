"""Shared corpus lists.

The two named negative controls are the only non-Clifford members; the
small list is what the exhaustive no-pruning cone oracle can afford.
"""

from sgcones.builders import FIXTURES, fixture

ALL_FIXTURES = sorted(FIXTURES)
NONCLIFFORD_FIXTURES = ["b2", "lz2"]
CLIFFORD_FIXTURES = [n for n in ALL_FIXTURES if n not in NONCLIFFORD_FIXTURES]
SEMILATTICE_FIXTURES = ["c2", "chain1", "chain2", "chain3", "chain4", "diamond"]
SMALL_FIXTURES = [n for n in ALL_FIXTURES if fixture(n).order <= 6]
