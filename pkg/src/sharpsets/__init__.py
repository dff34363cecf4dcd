"""Toolkit for certifying nonexistence of sharply transitive permutation sets.

Subpackages: perm (permutations and groups), gf (GF(2^m)), geometry
(symplectic spaces), designs (Witt design, McLaughlin graph, symmetric
designs), certify (divisibility certificates and case runners),
sharp_search (exact-cover oracle), linsys (exact linear systems), cli.
"""

__version__ = "0.1.0"
