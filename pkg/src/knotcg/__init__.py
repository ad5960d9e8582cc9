"""Exact-arithmetic knot concordance invariants.

Seifert forms, Tristram-Levine signature profiles, branched-cover
homology, genus-one Casson-Gordon signatures and obstruction verdicts
for twisted doubles.
"""

from . import (
    branched_covers,
    casson_gordon,
    core_forms,
    linalg,
    polynomials,
    signature_profiles,
    torus_signatures,
    twisted_doubles,
)
from .core_forms import SeifertForm, alexander, validate_seifert
from .errors import KnotCGError
from .signature_profiles import SignatureProfile, profile_from_seifert

__version__ = "0.1.0"

__all__ = [
    "branched_covers",
    "casson_gordon",
    "core_forms",
    "linalg",
    "polynomials",
    "signature_profiles",
    "torus_signatures",
    "twisted_doubles",
    "SeifertForm",
    "SignatureProfile",
    "KnotCGError",
    "alexander",
    "profile_from_seifert",
    "validate_seifert",
]
