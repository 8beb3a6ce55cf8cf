import difflib
import logging
from typing import Optional

from app.net.base import NetFamily

logger = logging.getLogger(__name__)


class FamilyNormalizer:
    """
    Suggests the canonical net family for a tag the schema rejects.

    Family tags are never rewritten: a file must name its family exactly,
    and near misses only produce a "did you mean" hint.
    """

    # Alias -> canonical tag
    ALIAS_MAP = {
        "spin_chain": NetFamily.SPIN_CHAIN,
        "spinchain": NetFamily.SPIN_CHAIN,
        "chain": NetFamily.SPIN_CHAIN,
        "constant_commutative": NetFamily.CONSTANT_COMMUTATIVE,
        "constant": NetFamily.CONSTANT_COMMUTATIVE,
        "commutative": NetFamily.CONSTANT_COMMUTATIVE,
        "global_qubit": NetFamily.GLOBAL_QUBIT,
        "qubit": NetFamily.GLOBAL_QUBIT,
        "shared_qubit": NetFamily.GLOBAL_QUBIT,
        "custom": NetFamily.CUSTOM,
    }

    def suggest(self, tag: str) -> Optional[NetFamily]:
        """
        Closest canonical family for a tag that is not itself canonical.
        1. Alias match (case-insensitive, '-' and ' ' read as '_')
        2. Fuzzy match against known aliases
        """
        if not tag or tag in {f.value for f in NetFamily}:
            return None

        cleaned = tag.lower().strip().replace("-", "_").replace(" ", "_")

        if cleaned in self.ALIAS_MAP:
            return self.ALIAS_MAP[cleaned]

        matches = difflib.get_close_matches(cleaned, list(self.ALIAS_MAP), n=1, cutoff=0.8)
        if matches:
            canonical = self.ALIAS_MAP[matches[0]]
            logger.info(f"Family '{tag}' is close to '{canonical.value}' (via '{matches[0]}')")
            return canonical

        logger.warning(f"No family close to tag: '{tag}'")
        return None
