"""Constants and enumerations for oddcolor-lab."""

from enum import Enum
from fractions import Fraction


class ColorMode(Enum):
    """Coloring conditions understood by the verifier and the solver."""

    PROPER = "proper"
    ODD = "odd"
    PCF = "pcf"
    SEMI_PCF = "semi-pcf"
    SEMI_ODD = "semi-odd"


class LemmaKind(Enum):
    """Residue formulas of the extension lemmas."""

    PCF = "pcf"
    PCF3 = "pcf3"
    ODD = "odd"


class TheoremContext(Enum):
    """Contexts whose reducible configurations the detectors know."""

    PCF_C = "pcf"
    ODD_MAD_C = "odd-mad"
    ODD4 = "odd4"
    PLANAR_ODD6 = "planar6"


class RuleSetId(Enum):
    """Named discharging rule sets."""

    ODD4_TWO_NINTHS = "odd4"
    PCF_C5 = "pcf5"
    PCF_C6PLUS = "pcf6plus"
    ODD_APP_B = "oddb"
    PLANAR_ODD6 = "planar6"


class AuditScope(Enum):
    """Which ledger entities an audit inspects."""

    VERTICES = "vertices"
    FACES = "faces"
    ALL = "all"


class TheoremId(Enum):
    """Campaigns runnable by ``verify``."""

    ODD4 = "thm-odd4"
    PCF = "thm-pcf"
    ODD_MAD = "thm-odd-mad"
    PLANAR6 = "thm-planar6"
    LEMMA_PCF = "lemma-pcf"
    LEMMA_PCF3 = "lemma-pcf3"
    LEMMA_ODD = "lemma-odd"


# mad threshold of the odd 4-coloring theorem
ODD4_MAD_BOUND = Fraction(22, 9)

MAX_CYCLE_LENGTH = 12
MAX_BRUTE_MAD_VERTICES = 20
MAX_BRUTE_COLORINGS = 10**8
MAX_GRAPH6_VERTICES = 62
MAX_RANDOM_VERTICES = 64

PLANEGRAPH_HEADER = "planegraph"

FAMILY_PATTERNS = {
    "sk": r"^sk:(\d+)$",
    "ht": r"^ht:(\d+(?:,\d*)*)$",
    "cycle": r"^cycle:(\d+)$",
    "rand": r"^rand:(\d+):(\d+(?:/\d+)?):(\d+)$",
    "gnm": r"^gnm:(\d+):(\d+):(\d+)$",
    "subdiv": r"^subdiv:(.+)$",
    "odd4x": r"^odd4x:(\d+)$",
    "plane": r"^plane:([a-z0-9_-]+)$",
}

MULTIGRAPH_PATTERNS = {
    "reg": r"^reg(\d+)x(\d+)$",
    "complete": r"^k(\d+)$",
    "regmulti": r"^regmulti:(\d+):(\d+):(\d+)$",
}
