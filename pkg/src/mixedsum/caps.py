"""Resource caps. The CLI overrides these through ``--cap-*`` flags."""

from dataclasses import dataclass


@dataclass
class Caps:
    ideal_gens: int = 2 ** 16
    lattice_gens: int = 24
    lattice_size: int = 200_000
    taylor_gens: int = 16
    subset_verify: int = 20
    closure_box: int = 200_000
    solve_size: int = 10 ** 6


CAPS = Caps()


def set_caps(**kwargs):
    for key, value in kwargs.items():
        if not hasattr(CAPS, key):
            raise KeyError(key)
        if value is not None:
            if value <= 0:
                raise ValueError(f"cap {key} must be positive")
            setattr(CAPS, key, int(value))
