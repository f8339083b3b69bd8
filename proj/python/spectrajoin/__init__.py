"""Spectra and cospectrality of NS and NNS graph joins."""

from ._spectrajoin import (
    Graph,
    are_cospectral,
    are_isomorphic,
    charpoly,
    closed_form_spectrum,
    join,
    nics,
    regular_cospectral_pairs,
    spectrum,
    verify_identity,
)

__all__ = [
    "Graph",
    "are_cospectral",
    "are_isomorphic",
    "charpoly",
    "closed_form_spectrum",
    "join",
    "nics",
    "regular_cospectral_pairs",
    "spectrum",
    "verify_identity",
]
