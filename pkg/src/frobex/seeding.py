"""Deterministic sub-seed derivation.

Every randomized routine takes one integer seed and derives per-task seeds
by hashing a path of labels, so runs are reproducible regardless of
execution order or parallel scheduling.
"""

from __future__ import annotations

import hashlib
import random


def derive_seed(seed: int, *path) -> int:
    text = str(int(seed)) + "/" + "/".join(str(part) for part in path)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def rng_for(seed: int, *path) -> random.Random:
    return random.Random(derive_seed(seed, *path))
