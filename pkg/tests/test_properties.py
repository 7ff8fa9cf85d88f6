import random

import pytest

from hyperlat import properties


def test_random_even_lattice_is_even():
    rng = random.Random(5)
    for _ in range(20):
        assert properties.random_even_lattice(rng, max_rank=4).is_even


@pytest.mark.parametrize("law", ["overlattice_laws", "milgram_on_catalog", "eichler_laws",
                                 "torsion_bounds"])
def test_law_checker_small_run(law):
    assert getattr(properties, law)(random.Random(1), 10) == []
