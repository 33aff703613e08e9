"""Right LCM semigroups, their inverse hulls, boundaries and germ groupoids."""
from .errors import ConstructionError, SpecParseError, UsageError
from .hull import ZERO, InverseHull, Pair
from .semigroup import DISJOINT, Meet, SemigroupInstance
from .verdict import Status, Verdict, conjunction

__version__ = "0.1.0"

__all__ = ["ConstructionError", "DISJOINT", "InverseHull", "Meet", "Pair", "SemigroupInstance",
           "SpecParseError", "Status", "UsageError", "Verdict", "ZERO", "conjunction"]
