"""Small numeric helpers for the complex-arithmetic identity evaluators."""

from __future__ import annotations

from .errors import ImaginaryResidueError

# exact integer powers of i; complex exponentiation would round them
I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


def i_power(k: int) -> complex:
    return I_POWERS[k % 4]


def checked_real(val: complex, *, bound: float = 1e-9, context: str = "") -> float:
    """Real part of ``val`` after asserting the imaginary residue is negligible."""
    if abs(val.imag) > bound * (1.0 + abs(val.real)):
        raise ImaginaryResidueError(
            f"imaginary residue {val.imag!r} too large relative to {val.real!r}"
            + (f" in {context}" if context else "")
        )
    return val.real
