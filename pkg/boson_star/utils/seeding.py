# This code is part of boson-star.
#
# (C) Copyright the boson-star developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""One seed, many reproducible random streams."""

from typing import List

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    """A generator driven by ``SeedSequence(seed)``."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_generators(seed: int, count: int) -> List[np.random.Generator]:
    """``count`` independent generators split from one seed.

    The i-th generator depends only on ``seed`` and ``i``, so adding consumers at the end does
    not change the streams of the existing ones.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]
