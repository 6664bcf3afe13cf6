from __future__ import annotations

from dataclasses import dataclass

from orderchain.polytopes import GammaKind


@dataclass(frozen=True)
class RunConfig:
    kind: GammaKind = GammaKind.ORDER_MINUS_CHAIN
    nmax: int = 3  # normality checked for N = 2..nmax
    hilbert_depth: int = 3  # Hilbert cross-check for degrees 0..hilbert_depth
    tie_break: str = "a"
    corrupt: str | None = None  # "swap" or "drop": negative-control mode
    timings: bool = False  # wall times make reports non-reproducible

    def __post_init__(self):
        object.__setattr__(self, "kind", GammaKind.parse(self.kind))
        if self.nmax < 1 or self.hilbert_depth < 0:
            raise ValueError("nmax must be >= 1 and hilbert_depth >= 0")
        if self.tie_break not in ("a", "b"):
            raise ValueError("tie_break must be 'a' or 'b'")
        if self.corrupt not in (None, "swap", "drop"):
            raise ValueError("corrupt must be 'swap' or 'drop'")


@dataclass(frozen=True)
class SweepConfig:
    d: int
    kind: GammaKind = GammaKind.ORDER_MINUS_CHAIN
    max_d: int = 4
    nmax: int = 3
    groebner: bool = True
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", GammaKind.parse(self.kind))
