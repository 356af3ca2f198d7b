"""Shared plumbing: derived RNG streams and resource-cap signalling."""

import hashlib
import random


class CapExceeded(RuntimeError):
    """A configured resource cap (table size, scan budget, input bound) was hit.

    The CLI maps this to exit code 2 so callers can tell "too big" apart from
    "wrong" (exit 3) and "bad invocation" (exit 1).
    """


def derive_int(seed, *labels) -> int:
    """Deterministic 64-bit child seed for the stream named by `labels`."""
    tag = repr(int(seed)) + "".join("|" + repr(x) for x in labels)
    return int.from_bytes(hashlib.sha256(tag.encode("ascii")).digest()[:8], "big")


def derive_rng(seed, *labels):
    """Deterministic child RNG for the stream named by `labels`.

    All randomness in the package flows from one user seed.  Each consumer
    derives its own stream by hashing (seed, label path) with SHA-256, so
    adding or reordering consumers never perturbs unrelated streams, and the
    same (seed, labels) pair gives byte-identical draws on every platform.
    """
    return random.Random(derive_int(seed, *labels))
