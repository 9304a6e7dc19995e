"""Exception hierarchy for hyperrig.

Every failure mode raises a subclass of VsaError so callers (and the CLI)
can distinguish configuration mistakes, dimension mismatches, carrier-domain
violations, and unsupported algebra operations.
"""


class VsaError(Exception):
    """Base class for all hyperrig errors."""


class ConfigError(VsaError):
    """Invalid AlgebraParams or BraidRole configuration."""


class DimensionError(VsaError):
    """Operands disagree on params or dimension tag."""


class DomainError(VsaError):
    """Payload leaves the carrier domain an operation requires."""


class UnsupportedOperation(VsaError):
    """The algebra does not provide this operation (e.g. BSDC-CDT inverse)."""


class SimilarityUndefined(VsaError):
    """Similarity has no value (zero vector under cosine, two empty sparse sets)."""


class EmptyMemoryError(VsaError):
    """Cleanup was queried against an empty item memory."""


class DuplicateNameError(VsaError):
    """An item memory insert reused an existing symbol name."""


class CodebookFormatError(VsaError):
    """A codebook / report file does not match the documented schema."""
