"""Concrete right LCM semigroups."""
from .builtins import (free_abelian_monoid, free_monoid, modified_odometer, odometer,
                       parse_instance)
from .free import FreeAbelianMonoid, FreeMonoid
from .selfsimilar import (MSFResult, SelfSimilarSpec, ZappaSzepMonoid, act,
                          build_self_similar, msf_enumerate, pseudo_free_faithful_probe,
                          restrict, strongly_fixed, verify_zs_axioms)
from .specfile import parse_spec

__all__ = [
    "FreeAbelianMonoid", "FreeMonoid", "MSFResult", "SelfSimilarSpec", "ZappaSzepMonoid",
    "act", "build_self_similar", "free_abelian_monoid", "free_monoid", "modified_odometer",
    "msf_enumerate", "odometer", "parse_instance", "parse_spec", "pseudo_free_faithful_probe",
    "restrict", "strongly_fixed", "verify_zs_axioms",
]
