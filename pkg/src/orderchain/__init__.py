"""Order/chain polytope workbench: Ehrhart data and toric Groebner checks."""

from orderchain.poset import Poset

__all__ = ["Poset"]
