"""Exception types shared across the package."""

from __future__ import annotations


class StarwebError(Exception):
    pass


class DegenerateConstruction(StarwebError):
    """A witness construction step has no solution at this finite dimension.

    ``lemma`` names the construction step whose infinite-dimension
    hypothesis is failing; the CLI prints it alongside the error name.
    """

    lemma = ""

    def __init__(self, message: str, *, detail=None):
        super().__init__(message)
        self.detail = detail


class BoxInsideZ(DegenerateConstruction):
    lemma = "Lemma 2"


class SingletonUnfixable(DegenerateConstruction):
    lemma = "Lemma 1"


class InvalidCover(StarwebError):
    def __init__(self, certificate):
        super().__init__(f"cover misses point {certificate}")
        self.certificate = certificate


class HorizonTooSmall(StarwebError):
    pass


class ParseError(StarwebError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
