"""Single-photon optical mode space, linear elements, and netlists.

A mode is one place a single photon can be: a path index, optionally paired
with a polarization (H or V). With polarization in use, mode index
m = path*2 + pol where pol is 0 for H and 1 for V; without it, m = path.
Path bits are ordered most significant first, so path 2 of a 2-bit space is
the path labeled "10".

Element conventions (pinned, every consumer relies on them):

  - BEAMSPLITTER(theta) acts on one path pair, identically on both
    polarizations, with matrix [[cos t, i sin t], [i sin t, cos t]];
    theta = pi/4 is the 50/50 splitter and reflection carries phase i.
  - PHASESHIFTER multiplies the matching modes of one path by exp(i*phi);
    pol_filter selects "H", "V", or "both".
  - ROTATOR exchanges H and V on one path (an exact polarization flip).
  - POLARIZING BEAMSPLITTER passes H straight through on both paths and
    applies [[0, i], [i, 0]] to the two V modes.
  - CROSSING permutes whole paths (both polarizations) with unit
    coefficients; map[p] is the output path for input path p.

A netlist is an ordered list of layers; elements within one layer must act
on disjoint mode sets. An optional output relabeling (a path permutation
applied after the last layer) models rerouting that is realized by renaming
output ports instead of physically crossing beams.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np


class NetlistError(ValueError):
    """Element or netlist inconsistent with its mode space."""


POL_H = "H"
POL_V = "V"
POL_BOTH = "both"
_POL_FILTERS = (POL_H, POL_V, POL_BOTH)


@dataclass(frozen=True)
class ModeSpace:
    """All modes reachable by one photon: 2^n_loc paths, optionally x2 pols."""

    n_loc: int
    uses_pol: bool = False

    def __post_init__(self):
        if self.n_loc < 0:
            raise NetlistError("negative location qubit count")

    @property
    def n_paths(self) -> int:
        return 1 << self.n_loc

    @property
    def dim(self) -> int:
        return self.n_paths * (2 if self.uses_pol else 1)

    def mode_of(self, location_bits: str | Sequence[int], pol: str | None = None) -> int:
        """Mode index of a path bitstring plus (iff polarized) an H/V flag."""
        bits = "".join(str(int(b)) for b in location_bits)
        if len(bits) != self.n_loc or any(c not in "01" for c in bits):
            raise NetlistError(f"location bits {location_bits!r} do not fit {self.n_loc} bit(s)")
        path = int(bits, 2) if bits else 0
        if self.uses_pol:
            if pol not in (POL_H, POL_V):
                raise NetlistError("polarized space needs pol 'H' or 'V'")
            return path * 2 + (0 if pol == POL_H else 1)
        if pol is not None:
            raise NetlistError("space has no polarization modes")
        return path

    def path_of(self, mode: int) -> int:
        self._check_mode(mode)
        return mode >> 1 if self.uses_pol else mode

    def pol_of(self, mode: int) -> str | None:
        self._check_mode(mode)
        if not self.uses_pol:
            return None
        return POL_V if mode & 1 else POL_H

    def path_modes(self, path: int) -> tuple[int, ...]:
        self._check_path(path)
        if self.uses_pol:
            return (path * 2, path * 2 + 1)
        return (path,)

    def mode_label(self, mode: int) -> str:
        self._check_mode(mode)
        bits = format(self.path_of(mode), f"0{self.n_loc}b") if self.n_loc else ""
        return f"{bits},{self.pol_of(mode)}" if self.uses_pol else bits

    def _check_mode(self, mode: int) -> None:
        if not 0 <= mode < self.dim:
            raise NetlistError(f"mode {mode} out of range for dim {self.dim}")

    def _check_path(self, path: int) -> None:
        if not 0 <= path < self.n_paths:
            raise NetlistError(f"path {path} out of range for {self.n_paths} path(s)")


@dataclass(frozen=True)
class BeamSplitter:
    path_a: int
    path_b: int
    theta: float = math.pi / 4


@dataclass(frozen=True)
class PhaseShifter:
    path: int
    phi: float
    pol_filter: str = POL_BOTH


@dataclass(frozen=True)
class Rotator:
    path: int


@dataclass(frozen=True)
class PolarizingBeamSplitter:
    path_a: int
    path_b: int


@dataclass(frozen=True)
class Crossing:
    path_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "path_map", tuple(int(p) for p in self.path_map))


OpticalElement = Union[BeamSplitter, PhaseShifter, Rotator, PolarizingBeamSplitter, Crossing]


def _validate_element(element: OpticalElement, space: ModeSpace) -> None:
    if isinstance(element, BeamSplitter):
        space._check_path(element.path_a)
        space._check_path(element.path_b)
        if element.path_a == element.path_b:
            raise NetlistError("beam splitter needs two distinct paths")
        if not math.isfinite(element.theta):
            raise NetlistError("beam splitter angle must be finite")
    elif isinstance(element, PhaseShifter):
        space._check_path(element.path)
        if element.pol_filter not in _POL_FILTERS:
            raise NetlistError(f"bad pol filter {element.pol_filter!r}")
        if element.pol_filter != POL_BOTH and not space.uses_pol:
            raise NetlistError("pol-filtered phase shifter needs a polarized space")
        if not math.isfinite(element.phi):
            raise NetlistError("phase shift must be finite")
    elif isinstance(element, Rotator):
        if not space.uses_pol:
            raise NetlistError("rotator needs a polarized space")
        space._check_path(element.path)
    elif isinstance(element, PolarizingBeamSplitter):
        if not space.uses_pol:
            raise NetlistError("polarizing beam splitter needs a polarized space")
        space._check_path(element.path_a)
        space._check_path(element.path_b)
        if element.path_a == element.path_b:
            raise NetlistError("polarizing beam splitter needs two distinct paths")
    elif isinstance(element, Crossing):
        if sorted(element.path_map) != list(range(space.n_paths)):
            raise NetlistError("crossing map must permute all path indices")
    else:
        raise NetlistError(f"unknown element {element!r}")


def element_modes(element: OpticalElement, space: ModeSpace) -> frozenset[int]:
    """The modes an element occupies (its full device footprint)."""
    if isinstance(element, BeamSplitter):
        return frozenset(space.path_modes(element.path_a) + space.path_modes(element.path_b))
    if isinstance(element, PhaseShifter):
        modes = space.path_modes(element.path)
        if element.pol_filter == POL_BOTH or not space.uses_pol:
            return frozenset(modes)
        return frozenset({modes[0] if element.pol_filter == POL_H else modes[1]})
    if isinstance(element, Rotator):
        return frozenset(space.path_modes(element.path))
    if isinstance(element, PolarizingBeamSplitter):
        return frozenset(space.path_modes(element.path_a) + space.path_modes(element.path_b))
    if isinstance(element, Crossing):
        moved: set[int] = set()
        for src, dst in enumerate(element.path_map):
            if src != dst:
                moved.update(space.path_modes(src))
        return frozenset(moved)
    raise NetlistError(f"unknown element {element!r}")


def element_unitary(element: OpticalElement, space: ModeSpace) -> np.ndarray:
    """Dense unitary of one element on the full mode space."""
    _validate_element(element, space)
    u = np.eye(space.dim, dtype=complex)
    if isinstance(element, BeamSplitter):
        ct, st = math.cos(element.theta), math.sin(element.theta)
        for ia, ib in zip(space.path_modes(element.path_a), space.path_modes(element.path_b)):
            u[ia, ia] = ct
            u[ib, ib] = ct
            u[ia, ib] = 1j * st
            u[ib, ia] = 1j * st
    elif isinstance(element, PhaseShifter):
        factor = cmath.exp(1j * element.phi)
        for m in sorted(element_modes(element, space)):
            u[m, m] = factor
    elif isinstance(element, Rotator):
        mh, mv = space.path_modes(element.path)
        u[mh, mh] = u[mv, mv] = 0.0
        u[mh, mv] = u[mv, mh] = 1.0
    elif isinstance(element, PolarizingBeamSplitter):
        va = space.path_modes(element.path_a)[1]
        vb = space.path_modes(element.path_b)[1]
        u[va, va] = u[vb, vb] = 0.0
        u[va, vb] = u[vb, va] = 1j
    elif isinstance(element, Crossing):
        u = np.zeros((space.dim, space.dim), dtype=complex)
        for src, dst in enumerate(element.path_map):
            for offset, m in enumerate(space.path_modes(src)):
                u[space.path_modes(dst)[offset], m] = 1.0
    return u


@dataclass(eq=False)
class ModeAmplitudes:
    """Complex amplitude per mode. Norm 1 for a single-photon state; the
    same linear propagation applies to unnormalized classical amplitudes."""

    space: ModeSpace
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if self.amplitudes.shape != (self.space.dim,):
            raise NetlistError(
                f"expected {self.space.dim} amplitudes, got {self.amplitudes.shape[0]}"
            )

    @classmethod
    def basis(cls, space: ModeSpace, mode: int) -> ModeAmplitudes:
        space._check_mode(mode)
        amps = np.zeros(space.dim, dtype=complex)
        amps[mode] = 1.0
        return cls(space, amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


Layer = tuple[OpticalElement, ...]


@dataclass(frozen=True)
class OpticalNetlist:
    """Layered element list over one mode space.

    source_gates holds one annotation string per layer (which gate produced
    it); output_relabel, when set, renames output path p to
    output_relabel[p] after the last layer.
    """

    space: ModeSpace
    layers: tuple[Layer, ...]
    source_gates: tuple[str, ...] = ()
    output_relabel: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(tuple(layer) for layer in self.layers))
        if not self.source_gates:
            object.__setattr__(self, "source_gates", ("",) * len(self.layers))
        else:
            object.__setattr__(self, "source_gates", tuple(self.source_gates))
        if len(self.source_gates) != len(self.layers):
            raise NetlistError("source_gates must annotate each layer")
        for layer in self.layers:
            seen: set[int] = set()
            for element in layer:
                _validate_element(element, self.space)
                modes = element_modes(element, self.space)
                if seen & modes:
                    raise NetlistError("elements within a layer must act on disjoint modes")
                seen |= modes
        if self.output_relabel is not None:
            relabel = tuple(int(p) for p in self.output_relabel)
            if sorted(relabel) != list(range(self.space.n_paths)):
                raise NetlistError("output relabeling must permute all path indices")
            object.__setattr__(self, "output_relabel", relabel)

    @property
    def n_elements(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def elements(self) -> Iterable[OpticalElement]:
        for layer in self.layers:
            yield from layer


def _permute_paths(vec: np.ndarray, path_map: Sequence[int], space: ModeSpace) -> None:
    src = vec.copy()
    for p, dst in enumerate(path_map):
        if p == dst:
            continue
        for offset, m in enumerate(space.path_modes(p)):
            vec[space.path_modes(dst)[offset]] = src[m]


def _apply_element(vec: np.ndarray, element: OpticalElement, space: ModeSpace) -> None:
    if isinstance(element, BeamSplitter):
        ct, st = math.cos(element.theta), math.sin(element.theta)
        for ia, ib in zip(space.path_modes(element.path_a), space.path_modes(element.path_b)):
            va, vb = vec[ia], vec[ib]
            vec[ia] = ct * va + 1j * st * vb
            vec[ib] = 1j * st * va + ct * vb
    elif isinstance(element, PhaseShifter):
        factor = cmath.exp(1j * element.phi)
        for m in element_modes(element, space):
            vec[m] *= factor
    elif isinstance(element, Rotator):
        mh, mv = space.path_modes(element.path)
        vec[mh], vec[mv] = vec[mv], vec[mh]
    elif isinstance(element, PolarizingBeamSplitter):
        va = space.path_modes(element.path_a)[1]
        vb = space.path_modes(element.path_b)[1]
        vec[va], vec[vb] = 1j * vec[vb], 1j * vec[va]
    elif isinstance(element, Crossing):
        _permute_paths(vec, element.path_map, space)
    else:
        raise NetlistError(f"unknown element {element!r}")


def propagate(netlist: OpticalNetlist, amplitudes: ModeAmplitudes) -> ModeAmplitudes:
    """Stream the amplitude vector through the netlist layer by layer.

    Never materializes the netlist unitary; agreement with netlist_unitary
    is a standing cross-check in the test suite.
    """
    if amplitudes.space != netlist.space:
        raise NetlistError("amplitude vector and netlist live on different mode spaces")
    vec = amplitudes.amplitudes.copy()
    for layer in netlist.layers:
        for element in layer:
            _apply_element(vec, element, netlist.space)
    if netlist.output_relabel is not None:
        _permute_paths(vec, netlist.output_relabel, netlist.space)
    return ModeAmplitudes(netlist.space, vec)


def netlist_unitary(netlist: OpticalNetlist) -> np.ndarray:
    """Dense unitary of the whole netlist, output relabeling included."""
    u = np.eye(netlist.space.dim, dtype=complex)
    for layer in netlist.layers:
        for element in layer:
            u = element_unitary(element, netlist.space) @ u
    if netlist.output_relabel is not None:
        u = element_unitary(Crossing(netlist.output_relabel), netlist.space) @ u
    return u
