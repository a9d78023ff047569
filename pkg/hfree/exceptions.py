#!/usr/bin/python3
# -*- coding: utf-8 -*-

"""
Error taxonomy shared by the library and the command line.

The command line maps each family to an exit code: InputError -> 2,
PreconditionError and SamplerExhausted -> 3, InconsistencyError -> 4.
"""


class HFreeError(Exception):
    """Base class for all errors raised by hfree."""


class InputError(HFreeError, ValueError):
    """Malformed input (graph6 text, edge lists, pattern names)."""


class Graph6Error(InputError):
    """Base class for graph6 decoding errors."""


class Graph6HeaderError(Graph6Error):
    """The size header is missing or not a valid graph6 header byte."""


class Graph6LengthError(Graph6Error):
    """The body does not have the length the header announces."""


class Graph6CharacterError(Graph6Error):
    """A body byte lies outside the printable range 63..126."""


class Graph6PaddingError(Graph6Error):
    """The padding bits after the last upper-triangle bit are not zero."""


class CapacityError(InputError):
    """The vertex count exceeds what the bitset representation supports."""


class PreconditionError(HFreeError, ValueError):
    """An operation was called outside its domain."""


class NoInitialStateError(PreconditionError):
    """No H-free starting graph with the requested edge count could be built."""


class SamplerExhausted(HFreeError):
    """The rejection sampler gave up after its maximum number of tries."""


class InconsistencyError(HFreeError, RuntimeError):
    """Two independent computations disagree."""
