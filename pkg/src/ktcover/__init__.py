"""K_t clique covers: exact oracles, optimal weighted covers on semichordal graphs, bounds and a hardness gadget."""

__version__ = "0.1.0"
