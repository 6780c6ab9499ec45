"""Dimension bookkeeping for symplectic nilpotent orbits and flag components.

The image of each partial-flag component under the moment map is the
closure of a Richardson orbit, computed here as the type-C collapse of the
dual of the sorted composition.  Its dimension must equal twice the flag
variety dimension (computed independently from the isotropic-Grassmannian
fibration), so the two formulas check each other on every call.

Top Borel-Moore homology sits in real degree 2c where c is the semismall
bound (image dimension minus orbit dimension, halved).  The predicted
dimension of that group, orbit by orbit and component by component, comes
from the graded isotypic multiplicities of the dual bipartitions in the
tensor bimodule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .limits import DEFAULT_MAX_CELLS
from .partitions import (
    Partition,
    SymComposition,
    dominance_leq,
    enumerate_sym_compositions,
    gl_dim,
    is_type_c,
    type_c_collapse,
)
from .springer import orbit_fiber
from .tensor import graded_multiplicity


@dataclass(frozen=True)
class OrbitInfo:
    partition: Partition
    ambient_2d: int
    dim: int


@dataclass(frozen=True)
class ComponentGeometry:
    dcomp: SymComposition
    flag_dim: int
    image_dim: int
    richardson: Partition


def orbit_dim(a: Partition) -> int:
    """Complex dimension of the nilpotent symplectic orbit of the partition a.

    dim sp_{2d} minus the centralizer dimension
    (sum of squared dual parts + number of odd parts) / 2.
    """
    if not is_type_c(a):
        raise ValueError(f"{a} is not a type-C partition")
    two_d = a.size()
    ambient = two_d * (two_d + 1) // 2
    dual = a.dual()
    odd = sum(1 for part in a if part % 2)
    centralizer = (sum(x * x for x in dual) + odd) // 2
    return ambient - centralizer


def orbit_info(a: Partition) -> OrbitInfo:
    return OrbitInfo(a, a.size(), orbit_dim(a))


def flag_dim(dcomp: SymComposition) -> int:
    """Complex dimension of the isotropic partial flag variety of one component.

    The flag is determined by its isotropic half (cumulative dimensions
    m_1 <= ... <= m_k from the first n entries), which fibers over the
    isotropic Grassmannian of m_k-planes in C^{2d} with partial-flag fibers:

        dim = m_k(2d - m_k) - m_k(m_k - 1)/2 + sum_i m_i (m_{i+1} - m_i).
    """
    n = dcomp.n
    two_d = dcomp.total
    cum = []
    run = 0
    for entry in dcomp.entries[:n]:
        run += entry
        cum.append(run)
    if not cum:
        return 0
    last = cum[-1]
    dim = last * (two_d - last) - last * (last - 1) // 2
    for i in range(len(cum) - 1):
        dim += cum[i] * (cum[i + 1] - cum[i])
    return dim


def richardson(dcomp: SymComposition) -> Partition:
    """The dense orbit in the moment-map image of the component.

    Computed as the type-C collapse of the dual of the sorted entries; the
    result is cross-checked against the independent flag-dimension formula
    (orbit dimension must be exactly twice the flag dimension).
    """
    sorted_parts = Partition(sorted(dcomp.entries, reverse=True))
    orbit = type_c_collapse(sorted_parts.dual())
    if orbit_dim(orbit) != 2 * flag_dim(dcomp):
        raise ArithmeticError(
            f"self-check failed for {dcomp}: orbit {orbit} has dim "
            f"{orbit_dim(orbit)} but the flag variety has dim {flag_dim(dcomp)}"
        )
    return orbit


def component_geometry(dcomp: SymComposition) -> ComponentGeometry:
    rich = richardson(dcomp)
    fd = flag_dim(dcomp)
    return ComponentGeometry(dcomp, fd, 2 * fd, rich)


def component_nonempty(a: Partition, dcomp: SymComposition) -> bool:
    """Whether the orbit meets the closure of the component image."""
    if a.size() != dcomp.total:
        raise ValueError(f"|{a}| = {a.size()} != component total {dcomp.total}")
    return dominance_leq(a, richardson(dcomp))


def top_degree(a: Partition, dcomp: SymComposition) -> int:
    """Real Borel-Moore degree 2c of the top homology over this component.

    c is the semismall bound (image_dim - orbit_dim)/2; requires the orbit
    to meet the component image.
    """
    if not component_nonempty(a, dcomp):
        raise ValueError(f"orbit {a} does not meet the image of component {dcomp}")
    c = (2 * flag_dim(dcomp) - orbit_dim(a)) // 2
    return 2 * c


@dataclass(frozen=True)
class HtopReport:
    """Predicted top Borel-Moore homology dimensions for one orbit."""

    orbit: Partition
    contributing: tuple  # (rho, rho_dual, dim of the dual isotypic piece)
    per_component: dict
    degrees: dict  # component -> degree, or None when the fiber is empty
    total: int

    def to_json_dict(self) -> dict:
        return {
            "orbit": str(self.orbit),
            "contributing": [
                {"rho": str(rho), "rho_dual": str(dual), "dim": dim}
                for rho, dual, dim in self.contributing
            ],
            "components": [
                {
                    "d": str(dcomp),
                    "degree": self.degrees[dcomp],
                    "htop": mult,
                }
                for dcomp, mult in self.per_component.items()
            ],
            "total": self.total,
        }


def htop_report(
    a: Partition, n: int, d: int, max_cells: int = DEFAULT_MAX_CELLS
) -> HtopReport:
    """Top-homology dimensions of the fiber over the orbit a, per component.

    Contributions come from the bipartitions mapping to a; each contributes
    the graded multiplicities of its dual.  The per-component sum must
    agree with the closed-form total gl_dim(dual.first, n+1) *
    gl_dim(dual.second, n), and components whose image closure misses the
    orbit must come out exactly zero.
    """
    if a.size() != 2 * d:
        raise ValueError(f"|{a}| = {a.size()} but expected {2 * d}")
    if not is_type_c(a):
        raise ValueError(f"{a} is not a type-C partition")
    fiber = orbit_fiber(a, d)
    contributing = []
    graded = []
    for rho in fiber:
        dual = rho.dual()
        closed_dim = gl_dim(dual.first, n + 1) * gl_dim(dual.second, n)
        contributing.append((rho, dual, closed_dim))
        graded.append(graded_multiplicity(dual, n, d, max_cells))
    components = enumerate_sym_compositions(n, 2 * d)
    per_component = {}
    degrees = {}
    for dcomp in components:
        value = sum(g.per_weight[dcomp] for g in graded)
        nonempty = component_nonempty(a, dcomp)
        if not nonempty and value != 0:
            raise ArithmeticError(
                f"component {dcomp} misses orbit {a} but carries multiplicity {value}"
            )
        per_component[dcomp] = value
        degrees[dcomp] = top_degree(a, dcomp) if nonempty else None
    total_graded = sum(per_component.values())
    total_closed = sum(dim for _, _, dim in contributing)
    if total_graded != total_closed:
        raise ArithmeticError(
            f"orbit {a}: graded total {total_graded} != closed-form total {total_closed}"
        )
    return HtopReport(a, tuple(contributing), per_component, degrees, total_closed)
