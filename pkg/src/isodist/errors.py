"""Exception hierarchy shared by all isodist engines.

The CLI maps these onto its exit-code contract: InputError -> 2,
ComputationLimitError -> 3.  CapabilityError is a species of input
problem (the data lacks what the operation needs) and also maps to 2.
"""


class IsodistError(Exception):
    pass


class InputError(IsodistError):
    """Malformed or inconsistent input data."""


class CapabilityError(InputError):
    """The input lacks data required by the operation (e.g. no composition table)."""


class ComputationLimitError(IsodistError):
    """A configured resource cap was exceeded."""
