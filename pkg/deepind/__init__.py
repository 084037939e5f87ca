"""
deepind
Deep induction rules, predicate liftings and soundness witnesses for GADTs.
"""

__version__ = "0.1.0"
