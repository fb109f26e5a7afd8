"""Shared error types.

Every operation that rejects its input raises one of these instead of
returning a sentinel, so callers (and the CLI) can map failures to a
structured kind plus a witness.
"""


class PlanarBlocksError(Exception):
    """Base class; ``kind`` is a stable machine-readable tag."""

    kind = "error"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

    def payload(self):
        out = {"kind": self.kind, "message": str(self)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class MalformedInput(PlanarBlocksError):
    kind = "malformed-input"


class NotConnected(PlanarBlocksError):
    kind = "not-connected"


class PreconditionViolated(PlanarBlocksError):
    kind = "precondition-violated"


class NotNested(PlanarBlocksError):
    """A pair of family elements fails the nesting condition."""

    kind = "not-nested"


class NoSeparationExists(PlanarBlocksError):
    kind = "no-separation-exists"


class HingeVertex(PlanarBlocksError):
    """Torso requested at a tree vertex that is a cut-point class."""

    kind = "hinge-vertex"


class NotAnAutomorphism(PlanarBlocksError):
    kind = "not-an-automorphism"


class TooLarge(PlanarBlocksError):
    kind = "too-large"


class BadExponent(PlanarBlocksError):
    kind = "bad-exponent"


class Overflow(PlanarBlocksError):
    """Coset enumeration exceeded its table limit."""

    kind = "overflow"
